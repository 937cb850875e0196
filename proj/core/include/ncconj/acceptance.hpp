#pragma once

#include <string>
#include <vector>

namespace ncconj::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // filled on failure or for notable outcomes
};

/// Run the acceptance criteria. suite is "all", "golden" (paper-value
/// comparisons, needs the golden directory) or "properties" (structural and
/// exhaustive checks).
std::vector<CriterionResult> run(const std::string& suite, const std::string& golden_dir);

/// One "[PASS]/[FAIL] criterion k: name" line per result.
std::string report(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ncconj::acceptance

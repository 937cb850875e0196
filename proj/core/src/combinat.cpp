#include "ncconj/combinat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncconj {

int weight(const Composition& I) { return std::accumulate(I.begin(), I.end(), 0); }

std::vector<int> descents(const Composition& I) {
    std::vector<int> D;
    int s = 0;
    for (size_t k = 0; k + 1 < I.size(); ++k) {
        s += I[k];
        D.push_back(s);
    }
    return D;
}

Composition composition_from_descents(int n, const std::vector<int>& D) {
    Composition I;
    int prev = 0;
    for (int d : D) {
        if (d <= prev || d >= n) throw std::invalid_argument("descent out of range");
        I.push_back(d - prev);
        prev = d;
    }
    I.push_back(n - prev);
    return I;
}

Composition conjugate(const Composition& I) {
    const int n = weight(I);
    if (n == 0) return {};
    std::set<int> excluded;
    for (int d : descents(I)) excluded.insert(n - d);
    std::vector<int> D;
    for (int i = 1; i < n; ++i)
        if (!excluded.count(i)) D.push_back(i);
    return composition_from_descents(n, D);
}

long long maj(const Composition& I) {
    long long m = 0;
    for (int d : descents(I)) m += d;
    return m;
}

std::vector<Composition> coarsenings(const Composition& I) {
    std::vector<Composition> out;
    if (I.empty()) {
        out.push_back({});
        return out;
    }
    const size_t bars = I.size() - 1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << bars); ++mask) {
        Composition J;
        int acc = I[0];
        for (size_t k = 0; k < bars; ++k) {
            if (mask & (uint64_t(1) << k)) {  // keep the bar
                J.push_back(acc);
                acc = I[k + 1];
            } else {
                acc += I[k + 1];
            }
        }
        J.push_back(acc);
        out.push_back(std::move(J));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_coarsening_of(const Composition& K, const Composition& I) {
    // K coarsens I iff descents(K) is a subset of descents(I)
    if (weight(K) != weight(I)) return false;
    auto dK = descents(K);
    auto dI = descents(I);
    return std::includes(dI.begin(), dI.end(), dK.begin(), dK.end());
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (uint64_t mask = 0; mask < (uint64_t(1) << (n - 1)); ++mask) {
        Composition I;
        int acc = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (mask & (uint64_t(1) << k)) {
                I.push_back(acc);
                acc = 1;
            } else {
                ++acc;
            }
        }
        I.push_back(acc);
        out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Composition strip_zeros(const PseudoComposition& J) {
    Composition I;
    for (int e : J)
        if (e != 0) I.push_back(e);
    if (I.empty() && !J.empty())
        throw std::invalid_argument("strip_zeros: all entries are zero");
    return I;
}

bool is_schroder_code(const PseudoComposition& J, int* violation) {
    if (violation) *violation = 0;
    if (J.empty()) {
        if (violation) *violation = 0;
        return false;
    }
    long long budget = 1;
    for (size_t k = 0; k < J.size(); ++k) {
        if (J[k] < 0 || budget < 1) {
            if (violation) *violation = static_cast<int>(k) + 1;
            return false;
        }
        // entry e >= 1 opens a vertex with e+1 children: b <- b - 1 + (e+1)
        if (J[k] >= 1)
            budget += J[k];
        else
            budget -= 1;
    }
    if (budget != 0) {
        if (violation) *violation = 0;
        return false;
    }
    return true;
}

long long inversions(const Permutation& sigma) {
    long long inv = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inv;
    return inv;
}

long long inv_restricted(const Permutation& sigma, const std::set<int>& D) {
    long long inv = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j] && D.count(static_cast<int>(j) + 1)) ++inv;
    return inv;
}

Permutation inverse_permutation(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[static_cast<size_t>(sigma[i]) - 1] = static_cast<int>(i) + 1;
    return inv;
}

std::vector<Permutation> permutations_of(int n) {
    Permutation p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

// Preorder shape code of the decreasing binary tree of the word w
// (distinct letters): root at the maximum, 1 = node, 0 = empty slot.
void decreasing_shape(const std::vector<int>& w, size_t lo, size_t hi, std::vector<int>& code) {
    if (lo >= hi) {
        code.push_back(0);
        return;
    }
    size_t m = lo;
    for (size_t i = lo + 1; i < hi; ++i)
        if (w[i] > w[m]) m = i;
    code.push_back(1);
    decreasing_shape(w, lo, m, code);
    decreasing_shape(w, m + 1, hi, code);
}

}  // namespace

std::vector<int> sylvester_shape(const Permutation& sigma) {
    Permutation w = inverse_permutation(sigma);
    std::vector<int> code;
    decreasing_shape(w, 0, w.size(), code);
    return code;
}

std::vector<SylvesterClass> sylvester_classes(int n) {
    if (n < 0 || n > 10) throw std::invalid_argument("sylvester_classes: n out of range (0..10)");
    std::map<std::vector<int>, std::vector<Permutation>> fibers;
    for (auto& sigma : permutations_of(n)) fibers[sylvester_shape(sigma)].push_back(sigma);
    std::vector<SylvesterClass> out;
    for (auto& [shape, members] : fibers) {
        SylvesterClass cls;
        cls.shape = shape;
        cls.members = members;
        long long best = -1;
        for (const auto& sigma : members) {
            long long inv = inversions(sigma);
            if (best < 0 || inv < best) {
                best = inv;
                cls.top = sigma;
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::string composition_str(const Composition& I) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) os << ",";
        os << I[i];
    }
    os << ")";
    return os.str();
}

}  // namespace ncconj

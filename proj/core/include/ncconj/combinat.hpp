#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ncconj {

/// Composition of n: sequence of positive parts. Weight |I| = sum of parts.
using Composition = std::vector<int>;

/// Pseudocomposition: sequence of nonnegative entries. Used both as NSym key
/// with an S_0 symbol and as Polish code of a Schroeder tree.
using PseudoComposition = std::vector<int>;

/// Permutation of {1..n} in one-line notation, 1-based values.
using Permutation = std::vector<int>;

int weight(const Composition& I);

/// Descent set {i1, i1+i2, ..., i1+...+i_{r-1}} as a subset of {1..n-1}.
std::vector<int> descents(const Composition& I);
Composition composition_from_descents(int n, const std::vector<int>& D);

/// Conjugate composition I~: descents(I~) = {1..n-1} \ {n-d : d in descents(I)}.
Composition conjugate(const Composition& I);

/// maj(I) = sum of the descents = (r-1)i1 + (r-2)i2 + ... + i_{r-1}.
long long maj(const Composition& I);

/// All 2^{l(I)-1} compositions obtained by summing consecutive parts,
/// including I itself and (|I|). Deterministic order.
std::vector<Composition> coarsenings(const Composition& I);

/// True if K is a coarsening of I (obtained by summing consecutive parts).
bool is_coarsening_of(const Composition& K, const Composition& I);

std::vector<Composition> compositions_of(int n);

/// Remove zero entries; throws std::invalid_argument on all-zero input.
Composition strip_zeros(const PseudoComposition& J);

/// Validity of J as the Polish code of a Schroeder tree (prefix budget scan).
/// On failure, *violation (when non-null) receives the 1-based position of
/// the first violation, or 0 when the code ends with leftover budget.
bool is_schroder_code(const PseudoComposition& J, int* violation = nullptr);

long long inversions(const Permutation& sigma);
/// Inverted pairs (i<j) with sigma_i > sigma_j and j in D (1-based positions).
long long inv_restricted(const Permutation& sigma, const std::set<int>& D);

Permutation inverse_permutation(const Permutation& sigma);
std::vector<Permutation> permutations_of(int n);

/// Shape of the decreasing binary tree of sigma^{-1}, encoded as a preorder
/// 1/0 code over internal(1)/empty(0) slots. Shapes are equal iff the
/// sylvester classes coincide.
std::vector<int> sylvester_shape(const Permutation& sigma);

struct SylvesterClass {
    std::vector<int> shape;            // binary shape code
    std::vector<Permutation> members;  // lexicographic order
    Permutation top;                   // unique inversion-minimizing member
};

/// All sylvester classes of S_n; guarded to n <= 10.
std::vector<SylvesterClass> sylvester_classes(int n);

std::string composition_str(const Composition& I);

}  // namespace ncconj

#pragma once

#include "ncconj/nsym.hpp"
#include "ncconj/trees.hpp"

#include <map>
#include <vector>

namespace ncconj {

/// Solution of the noncommutative conjugacy equation, stored degree by
/// degree in the cleared form tg_n = (q)_n g_n (polynomial coefficients).
/// Tree-resolved series carry the S_0 symbol: keys are Schroeder
/// pseudocompositions instead of compositions.
struct ConjugacySeries {
    int degree = 0;
    bool tree_resolved = false;
    std::vector<NSymElement> tg;  // index n = 0..degree, S basis

    const NSymElement& tg_at(int n) const { return tg.at(static_cast<size_t>(n)); }
    /// g_n = tg_n / (q)_n.
    NSymElement g(int n) const;
    /// Set S_0 = 1: collapse pseudocomposition keys (identity when already
    /// composition-keyed).
    ConjugacySeries collapsed() const;
};

/// Degree-by-degree solution of (q^n - 1) g_n = sum_k S_k (g^{k+1})_{n-k}.
ConjugacySeries poincare_triangular(int N);

/// Closed-form tree expansion g = sum_I m_I(q) S^I over Schroeder
/// pseudocompositions, m_I = prod_v 1/q_{phi(v)-1}; tree-resolved.
ConjugacySeries poincare_tree(int N);

/// Iteration of the quadratic fixed point g = 1 + Bq(g, g).
ConjugacySeries poincare_quadratic(int N, bool tree_resolved = false);

/// Bq(S^I, S^J) = (S^{1IJ} + q_{|I|} Omega S^{IJ}) / q_{|I|+|J|+1}, bilinear;
/// |.| is the weight (pseudocomposition keys allowed, S_0 has weight 0).
NSymElement Bq(const NSymElement& a, const NSymElement& b);
/// q_{|I|+|J|+1} * Bq: the numerator form, polynomial in polynomial inputs.
NSymElement Bq_cleared(const NSymElement& a, const NSymElement& b);

// ---- Ribbon machinery ----

/// tg_0..tg_N on the ribbon basis.
std::vector<NSymElement> ribbon_expansion(int N);

/// Exponent e with C_I(sigma) = q^e: e = inv(sigma) - inv(top) +
/// inv(top, D) where top is the inversion-minimizing member of sigma's
/// sylvester class and D marks the positions after the descents of I~.
long long c_exponent(const Permutation& sigma, const Permutation& top, const Composition& I);

/// c_I(q) = sum over S_n of C_I(sigma); n <= 8.
IntPoly ribbon_coeff(const Composition& I);

struct RibbonTableRow {
    Permutation sigma;
    Permutation top;
    std::vector<long long> exponents;  // one per column composition
};
struct RibbonTable {
    int n = 0;
    std::vector<Composition> columns;  // compositions of n, table order
    std::vector<RibbonTableRow> rows;  // grouped by sylvester class
};
/// The C_I(sigma) table for S_n, grouped by sylvester classes.
RibbonTable ribbon_table(int n);

/// Coefficient of R_K in (q)_n P_t for a binary tree t, by the coarsest
/// anti-refinement rule: (q)_n m_I q^{d_I - d_J}; zero when no contraction
/// of t matches K.
QRat ribbon_from_tree(const BinaryTree& t, const Composition& K);

// ---- Schroeder's equation and the mould variant ----

/// L(S^I) = S_{i1}(A) S_{i2}((i1+1)A) ... , linearly extended.
NSymElement L_op(const NSymElement& a);

/// S_n(A/(1-q)) = sum_I q^{maj(I)} / prod_k (1 - q^{i1+...+ik}) S^I.
NSymElement s_over_one_minus_q(int n);

/// q-Klyachko element K_n(q) = sum_{I |= n} q^{maj(I)} R_I.
NSymElement klyachko(int n);

/// f_0..f_N with f_n = L(S_n(A/(1-q))).
std::vector<NSymElement> schroder_f(int N);
/// Independent route: (1-q^n) f_n = sum_{k<n} q^k f_k S_{n-k}((k+1)A).
std::vector<NSymElement> schroder_f_recurrence(int N);

/// Mould variant: (1-q^n) F_n = sum_{k<n} q^k S_{n-k}((k+1)A) F_k.
std::vector<NSymElement> mould_F(int N);
/// Closed form of the same: bar(L(S^{bar I})) summed with the Klyachko
/// coefficients.
std::vector<NSymElement> mould_F_closed(int N);

// ---- Numeric specializations ----

/// Per-degree alphabet specialization of a series, as rational functions of q.
std::vector<QRat> specialize_series(const std::vector<NSymElement>& per_degree, Alphabet alph);
/// Same, evaluated exactly at q = q0 (throws on a vanishing denominator).
std::vector<Rational> specialize_series_at(const std::vector<NSymElement>& per_degree,
                                           Alphabet alph, const Rational& q0);

/// Scalar logistic recurrence (1-q^n) g_n = sum_{k} g_k g_{n-1-k}; returns
/// g_0..g_N as rational functions of q.
std::vector<QRat> logistic_recurrence(int N);

/// Taylor coefficients g_n of the exact closed-form solutions h(z) = z g(z)
/// of the logistic conjugacy at q0 in {-2, 2, 4}; all rational.
std::vector<Rational> logistic_oracle(const Rational& q0, int N);

}  // namespace ncconj

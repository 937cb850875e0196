#pragma once

#include "ncconj/qfield.hpp"
#include "ncconj/trees.hpp"

#include <map>
#include <vector>

namespace ncconj {

/// Element of the completed Schroeder operad, graded by gr(t) = leaves - 1.
/// Group elements have coefficient 1 on the bare leaf.
struct TreeSeries {
    int degree = 0;                            // truncation by grading
    std::map<PseudoComposition, QRat> terms;   // keyed by Polish code

    QRat coeff(const PseudoComposition& code) const;
    void add(const PseudoComposition& code, const QRat& c);
    bool is_group_element() const;
    friend bool operator==(const TreeSeries& a, const TreeSeries& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

/// The identity series (the bare leaf).
TreeSeries leaf_series(int N);

/// Substitute ts (one per leaf, left to right) into the leaves of t0.
SchroederTree compose(const SchroederTree& t0, const std::vector<SchroederTree>& ts);

/// All decompositions t = t0 o (t1, ..., tn): each is the antichain of
/// subtree roots covering every leaf; reported as (trunk, ordered forest).
struct Decomposition {
    PseudoComposition trunk;
    std::vector<PseudoComposition> forest;
};
std::vector<Decomposition> decompositions(const SchroederTree& t);

/// Group law: (p o r)_t = sum over decompositions of p_{t0} r_{t1} ... r_{tn}.
TreeSeries group_compose(const TreeSeries& p, const TreeSeries& r);

/// Inverse in the group: solves p o x = leaf degree by degree.
TreeSeries group_inverse(const TreeSeries& p);

/// f_c = leaf + all corollas.
TreeSeries corolla_series(int N);

/// f_L = (1 + sum_n S_n S_0^n)^{-1} S_0 (multiplicative inverse of a power
/// series in noncommuting variables, then right multiplication by S_0).
TreeSeries fL_series(int N);

/// Coproduct of H_PT: Delta(t) = sum over admissible cuts of trunk x pruning,
/// with bare-leaf factors dropped from the pruning (leaf = unit). Pairs carry
/// integer multiplicities.
using PTForest = std::vector<PseudoComposition>;  // nonleaf trees, left-right order
std::map<std::pair<PseudoComposition, PTForest>, long long> coproduct_PT(const SchroederTree& t);

/// Multiplicative extension to forests; both legs are leaf-free forests.
std::map<std::pair<PTForest, PTForest>, long long> coproduct_PT_forest(const PTForest& f);

/// Character of H_PT attached to a series: multiplicative over forests.
QRat pt_character(const TreeSeries& p, const PTForest& forest);

/// Convolution of the characters of p and r against Delta_PT, evaluated on t.
QRat pt_convolution(const TreeSeries& p, const TreeSeries& r, const SchroederTree& t);

/// Solution of q^Y g = g_c o g: the conjugacy character, by the recursion
/// (q^{gr(t)} - 1) c_t = prod over root subtrees of c_{t_i}.
TreeSeries conjugacy_character(int N);

/// Closed form c_t = prod_v 1/(q^{phi(v)-1} - 1).
QRat c_closed(const SchroederTree& t);

}  // namespace ncconj

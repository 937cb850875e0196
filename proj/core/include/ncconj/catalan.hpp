#pragma once

#include "ncconj/operad.hpp"
#include "ncconj/qfield.hpp"
#include "ncconj/trees.hpp"

#include <map>
#include <vector>

namespace ncconj {

/// Element of the completed Catalan operad on general plane trees, graded by
/// gr(t) = vertices - 1; keyed by Polish codes (vertex with k children
/// emits k).
struct PlaneTreeSeries {
    int degree = 0;
    std::map<std::vector<int>, QRat> terms;

    QRat coeff(const std::vector<int>& code) const;
    void add(const std::vector<int>& code, const QRat& c);
    bool is_group_element() const;
    friend bool operator==(const PlaneTreeSeries& a, const PlaneTreeSeries& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

PlaneTreeSeries cat_identity(int N);  // the single vertex S_0

/// Group law of G_Cat: substitution of the whole series into the S_0 slots
/// (leaves are identified with the roots of the substituted trees).
PlaneTreeSeries cat_compose(const PlaneTreeSeries& p, const PlaneTreeSeries& r);
PlaneTreeSeries cat_inverse(const PlaneTreeSeries& p);

/// Solver for g = sum_{n>=0} S_n g^n by fixed-point iteration.
PlaneTreeSeries lagrange_solve(int N);

/// f = S_0 - sum_{n>=1} S^{n 0^n}: the series whose group inverse is the
/// Lagrange solution.
PlaneTreeSeries lagrange_inverse_input(int N);

/// Group morphism alpha: G_ncdiff -> G_Cat. Trees whose internal vertices
/// all have a rightmost leaf child map by deleting those leaves; all other
/// trees map to 0.
PlaneTreeSeries alpha(const TreeSeries& p);

/// The rotation correspondence: plane trees on n+1 vertices <-> binary trees
/// with n internal vertices, via the unique decomposition
/// S^I = Omega(S^{I1}) S^{I2}.
BinaryTree rotation(const PlaneTree& t);

/// X_1..X_N of the generic autonomous ODE: X_n = sum over plane trees on n
/// vertices of c_t S^t, c_t = multinomial * prod c_{t_i}.
std::vector<PlaneTreeSeries> ode_solve(int N);

/// Second route through the quadratic form X_k = sum C(k-1, n-1) Omega(X_n) X_m.
std::vector<PlaneTreeSeries> ode_solve_quadratic(int N);

/// |t|! / prod_v h_v, as an exact integer.
long long hook_count(const PlaneTree& t);

/// Brute-force count of decreasing labelings (labels decrease away from the
/// root); n <= 8 vertices.
long long decreasing_labelings(const PlaneTree& t);

}  // namespace ncconj

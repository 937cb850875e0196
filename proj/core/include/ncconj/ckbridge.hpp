#pragma once

#include "ncconj/operad.hpp"
#include "ncconj/qfield.hpp"
#include "ncconj/series.hpp"
#include "ncconj/trees.hpp"

#include <cstdint>
#include <map>

namespace ncconj {

/// (trunk, pruning) pairs with integer multiplicities.
using CKPair = std::pair<CKForest, CKForest>;
using CKCoproduct = std::map<CKPair, long long>;

/// Coproduct of the N*-decorated Connes-Kreimer algebra, trunk x pruning
/// orientation: Delta(B_n+(F)) = empty x B_n+(F) + (B_n+ x id) Delta(F).
CKCoproduct ck_coproduct(const DecoratedTree& T);
CKCoproduct ck_coproduct_forest(const CKForest& F);

/// Character of H_CK: a finite table on trees up to a weight bound, extended
/// multiplicatively to forests (1 on the empty forest).
class CKCharacter {
public:
    explicit CKCharacter(int weight_bound) : bound_(weight_bound) {}
    int weight_bound() const { return bound_; }
    void set(const DecoratedTree& T, QRat v);
    QRat on_tree(const DecoratedTree& T) const;  // throws beyond the table
    QRat on_forest(const CKForest& F) const;

private:
    int bound_;
    std::map<DecoratedTree, QRat> table_;
};

/// theta(T) = prod_v 1/(q^{|T_v|} - 1): the arborified conjugacy character.
CKCharacter theta(int weight_bound);

/// phi_0: 1 on the empty forest and single vertices, 0 otherwise.
CKCharacter phi0(int weight_bound);

/// Convolution (a * b)(F) against the CK coproduct.
QRat ck_convolve(const CKCharacter& a, const CKCharacter& b, const CKForest& F);

/// The arborified monomial A_T(z) for exact rational u-coefficients
/// (u[n-1] = u_n); truncated at z^N.
TruncSeries<QRat> arborified_monomial(const DecoratedTree& T, const std::vector<Rational>& u,
                                      int N);

/// rho_u(phi)(z) = z + sum over nonempty decorated trees of phi(T) A_T(z).
TruncSeries<QRat> rho_u(const CKCharacter& phi, const std::vector<Rational>& u, int N);

/// sk*(phi): the tree series with coefficient phi(sk(t)) on every Schroeder t.
TreeSeries sk_star(const CKCharacter& phi, int N);

/// alpha_u: S_0 -> z, S_n -> u_n; sends a tree series to a power series.
TruncSeries<QRat> alpha_u(const TreeSeries& p, const std::vector<Rational>& u);

/// Commuting diagram alpha_u(sk*(phi)) = rho_u(phi) up to z^{N+1}.
bool diagram_check(const CKCharacter& phi, const std::vector<Rational>& u, int N);

/// Seeded random data for property checks.
CKCharacter random_character(int weight_bound, uint64_t seed);
std::vector<Rational> random_u(int count, uint64_t seed);

}  // namespace ncconj

#pragma once

#include "ncconj/combinat.hpp"
#include "ncconj/qfield.hpp"

#include <map>
#include <string>

namespace ncconj {

enum class Basis { S, R };

enum class Alphabet { ONE, MINUS_ONE, EXP, GENERIC };

/// Finite linear combination of basis monomials with QRat coefficients.
/// Keys are compositions, or pseudocompositions when the S_0 symbol is in
/// play (tree-resolved series). All keys of an element share one basis tag;
/// the empty key is the unit in either basis. Zero coefficients are never
/// stored.
class NSymElement {
public:
    explicit NSymElement(Basis basis = Basis::S) : basis_(basis) {}
    static NSymElement unit(Basis basis = Basis::S);
    static NSymElement zero(Basis basis = Basis::S) { return NSymElement(basis); }
    /// Single monomial c * X^I.
    static NSymElement monomial(Basis basis, PseudoComposition key, QRat coeff = QRat(1));

    Basis basis() const { return basis_; }
    const std::map<PseudoComposition, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QRat coeff(const PseudoComposition& key) const;
    void add_term(const PseudoComposition& key, const QRat& c);

    NSymElement& operator+=(const NSymElement& b);
    NSymElement& operator-=(const NSymElement& b);
    friend NSymElement operator+(NSymElement a, const NSymElement& b) { return a += b; }
    friend NSymElement operator-(NSymElement a, const NSymElement& b) { return a -= b; }
    friend NSymElement operator*(const QRat& c, const NSymElement& a);
    friend bool operator==(const NSymElement& a, const NSymElement& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NSymElement& a, const NSymElement& b) { return !(a == b); }

    std::string str() const;
    std::string latex() const;

private:
    Basis basis_;
    std::map<PseudoComposition, QRat> terms_;
};

/// Free product in the S basis: bilinear concatenation of keys.
NSymElement product_S(const NSymElement& a, const NSymElement& b);

/// Ribbon product: R_I R_J = R_{I.J} + R_{I |> J}, bilinear.
NSymElement product_R(const NSymElement& a, const NSymElement& b);

/// Basis changes: S^I = sum over coarsenings J of I of R_J; to_S is the
/// triangular inverse of to_R. Composition keys only.
NSymElement to_R(const NSymElement& a);
NSymElement to_S(const NSymElement& a);

/// Omega: S^{(i1, i2, ..)} -> S^{(i1+1, i2, ..)}, linearly.  Throws on the
/// unit key.
NSymElement omega(const NSymElement& a);

/// Bar involution: mirrors every key.  S basis.
NSymElement bar(const NSymElement& a);

/// S_n(mA): coefficient of t^n in (sum_k S_k t^k)^m = sum_{I |= n} C(m, l(I)) S^I.
NSymElement s_of_mA(int n, int m);

/// Collapse pseudocomposition keys by S_0 = 1 (strip zeros, merge terms).
NSymElement collapse_s0(const NSymElement& a);

/// Apply an alphabet character degree by degree; returns one QRat per
/// degree 0..max_degree. Works on either basis (converts R keys via to_S).
std::vector<QRat> specialize(const NSymElement& a, Alphabet alph, int max_degree);

/// Character value on a single S-basis key.
QRat alphabet_value(const PseudoComposition& key, Alphabet alph);

}  // namespace ncconj

#pragma once

#include "ncconj/nsym.hpp"
#include "ncconj/trees.hpp"

#include <map>
#include <set>
#include <string>

namespace ncconj {

/// Segmented nondecreasing parking function: values a_1 <= ... <= a_r with
/// a_k <= k, and bars between strictly different adjacent values. The empty
/// quasi-ribbon is the unit.
class QuasiRibbon {
public:
    QuasiRibbon() = default;
    QuasiRibbon(std::vector<int> values, std::set<int> bars);
    static QuasiRibbon parse(const std::string& text);  // "11|244|5566|8"

    const std::vector<int>& values() const { return values_; }
    const std::set<int>& bars() const { return bars_; }  // bar after position p (1-based)
    int length() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int max_value() const;  // 1 for the empty word, by convention

    /// Lengths of the factors between bars.
    Composition bar_composition() const;

    std::string str() const;

    friend bool operator==(const QuasiRibbon& a, const QuasiRibbon& b) {
        return a.values_ == b.values_ && a.bars_ == b.bars_;
    }
    friend bool operator!=(const QuasiRibbon& a, const QuasiRibbon& b) { return !(a == b); }
    friend bool operator<(const QuasiRibbon& a, const QuasiRibbon& b) {
        if (a.values_ != b.values_) return a.values_ < b.values_;
        return std::lexicographical_compare(a.bars_.begin(), a.bars_.end(), b.bars_.begin(),
                                            b.bars_.end());
    }

private:
    std::vector<int> values_;
    std::set<int> bars_;
};

// ---- The bijections phi / psi ----

/// phi on Schroeder trees: expand to a binary tree with two-colored left
/// edges, collect vertex values right-left-root, bar the second-color
/// separations. Binary trees give barless words.
QuasiRibbon phi(const SchroederTree& t);
QuasiRibbon phi(const BinaryTree& t);

/// Inverse bijection.
SchroederTree psi(const QuasiRibbon& p);

/// One step of the psi recursion on a nondecreasing parking function:
/// returns (l, right word a_1..a_l, left word (a_{l+1}..a_{r-1}) shifted
/// down by a_l - 1).
struct PsiSplit {
    int l = 0;
    std::vector<int> right;
    std::vector<int> left;
};
PsiSplit psi_split(const std::vector<int>& parking);

// ---- Triduplicial structure ----

enum class Tridup { Prec, Circ, Succ };  // <, o, >

/// The three operations on quasi-ribbons; both operands nonempty.
QuasiRibbon tridup(Tridup op, const QuasiRibbon& a, const QuasiRibbon& b);

/// Same operations on Schroeder pseudocompositions.
PseudoComposition tridup_codes(Tridup op, const PseudoComposition& I, const PseudoComposition& J);

// ---- PS basis linear algebra ----

/// Linear combination of PS_alpha with QRat coefficients.
class PSElement {
public:
    PSElement() = default;
    static PSElement unit() { return monomial(QuasiRibbon()); }
    static PSElement monomial(QuasiRibbon a, QRat c = QRat(1));

    const std::map<QuasiRibbon, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const QuasiRibbon& key, const QRat& c);
    QRat coeff(const QuasiRibbon& key) const;

    PSElement& operator+=(const PSElement& b);
    friend PSElement operator+(PSElement a, const PSElement& b) { return a += b; }
    friend PSElement operator*(const QRat& c, const PSElement& a);
    friend bool operator==(const PSElement& a, const PSElement& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<QuasiRibbon, QRat> terms_;
};

/// PS_alpha PS_beta = PS_{alpha | beta'} + PS_{alpha . beta'}, beta' = beta
/// shifted by |alpha|; bilinear.
PSElement ps_product(const PSElement& a, const PSElement& b);

/// Upper covers in the quasi-ribbon order (bar a junction, shifting the
/// suffix by one when the junction values are equal; covers that would break
/// the parking condition do not exist).
std::vector<QuasiRibbon> order_covers(const QuasiRibbon& a);
bool order_le(const QuasiRibbon& a, const QuasiRibbon& b);

/// S^alpha = sum of PS_beta over beta >= alpha.
PSElement s_basis(const QuasiRibbon& a);

/// chi(PS_alpha) = R_{I~} with I the bar composition of alpha; algebra
/// morphism onto NSym.
NSymElement chi(const PSElement& x);

/// The lifted quadratic map B_q = q_{m+n+1} Bq on the PS basis; unit
/// operands take the degenerate tree-recursion values.
PSElement bq_ps(const QuasiRibbon& a, const QuasiRibbon& b);
PSElement bq_ps(const PSElement& a, const PSElement& b);

/// All parking quasi-ribbons of length n.
std::vector<QuasiRibbon> quasi_ribbons(int n);

}  // namespace ncconj

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncconj {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer polynomial in the formal variable q.
/// Invariant: no trailing zero coefficient; zero polynomial = empty vector.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long long c) { if (c != 0) coeffs_.emplace_back(c); }
    IntPoly(Int c) { if (c != 0) coeffs_.push_back(std::move(c)); }
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        for (auto c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    /// c * q^k
    static IntPoly monomial(Int c, int k);
    /// q^n - 1
    static IntPoly qn(int n);
    /// (q)_n = (q^n-1)(q^{n-1}-1)...(q-1); (q)_0 = 1
    static IntPoly q_pochhammer(int n);
    /// (1-q)(1-q^2)...(1-q^n) = (-1)^n (q)_n
    static IntPoly one_minus_q_pochhammer(int n);
    /// Gaussian binomial [n choose k]_q, a polynomial in q.
    static IntPoly q_binomial(int n, int k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int k) const {
        if (k < 0 || k > degree()) return Int(0);
        return coeffs_[static_cast<size_t>(k)];
    }
    const Int& leading() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& b) { *this = *this + b; return *this; }
    IntPoly& operator-=(const IntPoly& b) { *this = *this - b; return *this; }
    IntPoly& operator*=(const IntPoly& b) { *this = *this * b; return *this; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
    friend bool operator<(const IntPoly& a, const IntPoly& b);  // arbitrary total order for maps

    /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
    Int content() const;
    IntPoly primitive_part() const;
    /// Primitive polynomial gcd over Z (subresultant-free primitive PRS).
    /// The integer content of the inputs is ignored; result is primitive
    /// with positive leading coefficient, or zero if both inputs are zero.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);
    /// Exact division; throws std::domain_error if b does not divide a.
    static IntPoly divexact(const IntPoly& a, const IntPoly& b);

    Rational eval(const Rational& q0) const;

    /// "q^3-2q+1" style rendering, constant "0"/"1" etc.
    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

/// Exact rational function in q: fraction of integer polynomials.
/// Canonical form: gcd(num, den) = 1 over Q, joint integer content of
/// (num, den) is 1, and den has positive leading coefficient. Structural
/// equality of canonical forms is semantic equality.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long long c) : num_(c), den_(1) {}
    QRat(Int c) : num_(std::move(c)), den_(1) {}
    QRat(IntPoly p) : num_(std::move(p)), den_(1) {}
    QRat(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat operator-() const;
    QRat& operator+=(const QRat& b) { *this = *this + b; return *this; }
    QRat& operator-=(const QRat& b) { *this = *this - b; return *this; }
    QRat& operator*=(const QRat& b) { *this = *this * b; return *this; }
    QRat& operator/=(const QRat& b) { *this = *this / b; return *this; }
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    QRat inv() const;

    /// Exact value at q = q0; throws std::domain_error naming q0 when the
    /// denominator vanishes there.
    Rational eval_at(const Rational& q0) const;

    std::string str() const;

private:
    void normalize();
    IntPoly num_, den_;
};

inline QRat q_monomial(int k) { return QRat(IntPoly::monomial(1, k)); }

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace ncconj

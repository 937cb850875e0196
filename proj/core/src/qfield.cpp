#include "ncconj/qfield.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace ncconj {

namespace {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace

IntPoly IntPoly::monomial(Int c, int k) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::qn(int n) {
    if (n < 0) throw std::invalid_argument("qn: negative exponent");
    if (n == 0) return IntPoly();  // q^0 - 1 = 0
    std::vector<Int> v(static_cast<size_t>(n) + 1);
    v[0] = -1;
    v.back() = 1;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative n");
    IntPoly p(1);
    for (int k = 1; k <= n; ++k) p *= qn(k);
    return p;
}

IntPoly IntPoly::one_minus_q_pochhammer(int n) {
    IntPoly p = q_pochhammer(n);
    return (n % 2 == 0) ? p : -p;
}

IntPoly IntPoly::q_binomial(int n, int k) {
    if (k < 0 || k > n) return IntPoly();
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]; stays polynomial throughout.
    std::vector<IntPoly> row(static_cast<size_t>(n) + 1);
    row[0] = IntPoly(1);
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, n); j >= 1; --j)
            row[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j) - 1] +
                monomial(1, j) * row[static_cast<size_t>(j)];
    return row[static_cast<size_t>(k)];
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (size_t i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c /= g;
    if (v.back() < 0)
        for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Int lead_a = a.leading();
        // lc(b)*a - lc(a)*q^shift*b kills the leading term
        a = IntPoly(b.leading()) * a - IntPoly::monomial(lead_a, shift) * b;
    }
    return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("divexact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("divexact: inexact division");
    std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    std::vector<Int> r(a.coeffs());
    const auto& bc = b.coeffs();
    for (size_t k = q.size(); k-- > 0;) {
        Int top = r[k + bc.size() - 1];
        if (top % b.leading() != 0) throw std::domain_error("divexact: inexact division");
        q[k] = top / b.leading();
        if (q[k] == 0) continue;
        for (size_t j = 0; j < bc.size(); ++j) r[k + j] -= q[k] * bc[j];
    }
    for (const auto& c : r)
        if (c != 0) throw std::domain_error("divexact: inexact division");
    return IntPoly(std::move(q));
}

Rational IntPoly::eval(const Rational& q0) const {
    Rational v = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * q0 + Rational(coeffs_[i]);
    return v;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int ab = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0 || ab != 1) os << ab.str();
        if (i >= 1) {
            os << "q";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

void QRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = IntPoly::divexact(num_, g);
        den_ = IntPoly::divexact(den_, g);
    }
    Int c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
        std::vector<Int> n(num_.coeffs()), d(den_.coeffs());
        for (auto& x : n) x /= c;
        for (auto& x : d) x /= c;
        num_ = IntPoly(std::move(n));
        den_ = IntPoly(std::move(d));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // common fast path for polynomial values (den = 1): no gcd work at all
    if (a.den_.is_one() && b.den_.is_one()) {
        QRat r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat QRat::operator-() const {
    QRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat();
    if (a.den_.is_one() && b.den_.is_one()) {
        QRat r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

QRat QRat::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return QRat(den_, num_);
}

Rational QRat::eval_at(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0)
        throw std::domain_error("denominator vanishes at q = " + rational_str(q0));
    return num_.eval(q0) / d;
}

std::string QRat::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.degree() > 0 || n[0] == '-') n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational parse_rational(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, pos));
        Int den(s.substr(pos + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

}  // namespace ncconj

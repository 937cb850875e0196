#pragma once

#include <stdexcept>
#include <vector>

namespace ncconj {

/// Dense truncated power series a_0 + a_1 z + ... + a_N z^N over an exact
/// coefficient ring K. Used as the commutative external oracle for inverse
/// and conjugacy checks; deliberately independent of the NSym machinery.
template <typename K>
class TruncSeries {
public:
    explicit TruncSeries(int trunc) : c_(static_cast<size_t>(trunc) + 1) {}
    TruncSeries(int trunc, std::vector<K> coeffs) : c_(std::move(coeffs)) {
        c_.resize(static_cast<size_t>(trunc) + 1);
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const K& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    K& operator[](int k) { return c_[static_cast<size_t>(k)]; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        TruncSeries r(a.trunc());
        for (int k = 0; k <= a.trunc(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        TruncSeries r(a.trunc());
        for (int k = 0; k <= a.trunc(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check(a, b);
        TruncSeries r(a.trunc());
        for (int i = 0; i <= a.trunc(); ++i) {
            if (a[i] == K(0)) continue;
            for (int j = 0; i + j <= a.trunc(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    /// Composition a(b(z)); requires b(0) = 0.
    TruncSeries compose(const TruncSeries& b) const {
        check(*this, b);
        if (!(b[0] == K(0))) throw std::invalid_argument("compose: inner series has b(0) != 0");
        TruncSeries r(trunc());
        TruncSeries power(trunc());
        power[0] = K(1);
        r[0] = c_[0];
        for (int k = 1; k <= trunc(); ++k) {
            power = power * b;
            if (!(c_[static_cast<size_t>(k)] == K(0)))
                for (int j = 0; j <= trunc(); ++j) r[j] += c_[static_cast<size_t>(k)] * power[j];
        }
        return r;
    }

    static TruncSeries identity(int trunc) {
        TruncSeries z(trunc);
        if (trunc >= 1) z[1] = K(1);
        return z;
    }

private:
    static void check(const TruncSeries& a, const TruncSeries& b) {
        if (a.trunc() != b.trunc())
            throw std::invalid_argument("truncation mismatch in series operation");
    }
    std::vector<K> c_;
};

}  // namespace ncconj

#include "ncconj/nsym.hpp"

#include <sstream>
#include <stdexcept>

namespace ncconj {

NSymElement NSymElement::unit(Basis basis) {
    NSymElement e(basis);
    e.terms_[{}] = QRat(1);
    return e;
}

NSymElement NSymElement::monomial(Basis basis, PseudoComposition key, QRat coeff) {
    NSymElement e(basis);
    if (!coeff.is_zero()) e.terms_[std::move(key)] = std::move(coeff);
    return e;
}

QRat NSymElement::coeff(const PseudoComposition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QRat() : it->second;
}

void NSymElement::add_term(const PseudoComposition& key, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NSymElement& NSymElement::operator+=(const NSymElement& b) {
    if (basis_ != b.basis_ && !b.is_zero() && !is_zero())
        throw std::invalid_argument("basis mismatch in NSym addition");
    if (is_zero()) basis_ = b.basis_;
    for (const auto& [key, c] : b.terms_) add_term(key, c);
    return *this;
}

NSymElement& NSymElement::operator-=(const NSymElement& b) {
    if (basis_ != b.basis_ && !b.is_zero() && !is_zero())
        throw std::invalid_argument("basis mismatch in NSym subtraction");
    if (is_zero()) basis_ = b.basis_;
    for (const auto& [key, c] : b.terms_) add_term(key, -c);
    return *this;
}

NSymElement operator*(const QRat& c, const NSymElement& a) {
    NSymElement out(a.basis_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : a.terms_) out.terms_[key] = c * v;
    return out;
}

NSymElement product_S(const NSymElement& a, const NSymElement& b) {
    if (a.basis() != Basis::S || b.basis() != Basis::S)
        throw std::invalid_argument("product_S requires S basis");
    NSymElement out(Basis::S);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            PseudoComposition key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            out.add_term(key, ca * cb);
        }
    return out;
}

NSymElement product_R(const NSymElement& a, const NSymElement& b) {
    if (a.basis() != Basis::R || b.basis() != Basis::R)
        throw std::invalid_argument("product_R requires R basis");
    NSymElement out(Basis::R);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            QRat c = ca * cb;
            if (ka.empty()) {
                out.add_term(kb, c);
                continue;
            }
            if (kb.empty()) {
                out.add_term(ka, c);
                continue;
            }
            PseudoComposition cat = ka;
            cat.insert(cat.end(), kb.begin(), kb.end());
            out.add_term(cat, c);
            PseudoComposition joined = ka;
            joined.back() += kb.front();
            joined.insert(joined.end(), kb.begin() + 1, kb.end());
            out.add_term(joined, c);
        }
    return out;
}

NSymElement to_R(const NSymElement& a) {
    if (a.basis() == Basis::R) return a;
    NSymElement out(Basis::R);
    for (const auto& [key, c] : a.terms())
        for (const auto& J : coarsenings(key)) out.add_term(J, c);
    return out;
}

NSymElement to_S(const NSymElement& a) {
    if (a.basis() == Basis::S) return a;
    // Invert the unitriangular system S^I = sum_{J coarser} R_J from the
    // coarse end: R_I = S^I - sum_{J strictly coarser} (R-expansion of S^J).
    NSymElement out(Basis::S);
    NSymElement residue = a;
    while (!residue.is_zero()) {
        // take a key of maximal length (finest); all coarser keys are shorter
        auto best = residue.terms().begin();
        for (auto it = residue.terms().begin(); it != residue.terms().end(); ++it)
            if (it->first.size() > best->first.size()) best = it;
        PseudoComposition key = best->first;
        QRat c = best->second;
        out.add_term(key, c);
        residue -= c * to_R(NSymElement::monomial(Basis::S, key));
    }
    return out;
}

NSymElement omega(const NSymElement& a) {
    if (a.basis() != Basis::S) throw std::invalid_argument("omega requires S basis");
    NSymElement out(Basis::S);
    for (const auto& [key, c] : a.terms()) {
        if (key.empty()) throw std::domain_error("omega of the unit is undefined");
        PseudoComposition k = key;
        k[0] += 1;
        out.add_term(k, c);
    }
    return out;
}

NSymElement bar(const NSymElement& a) {
    if (a.basis() != Basis::S) throw std::invalid_argument("bar requires S basis");
    NSymElement out(Basis::S);
    for (const auto& [key, c] : a.terms()) {
        PseudoComposition k(key.rbegin(), key.rend());
        out.add_term(k, c);
    }
    return out;
}

NSymElement s_of_mA(int n, int m) {
    if (n <= 0) throw std::invalid_argument("s_of_mA: n >= 1 required");
    if (m < 0) throw std::invalid_argument("s_of_mA: m >= 0 required");
    NSymElement out(Basis::S);
    for (const auto& I : compositions_of(n)) {
        int l = static_cast<int>(I.size());
        if (l > m) continue;
        // C(m, l) as an exact integer
        Int binom = 1;
        for (int k = 0; k < l; ++k) binom = binom * (m - k) / (k + 1);
        out.add_term(I, QRat(binom));
    }
    return out;
}

NSymElement collapse_s0(const NSymElement& a) {
    if (a.basis() != Basis::S) throw std::invalid_argument("collapse_s0 requires S basis");
    NSymElement out(Basis::S);
    for (const auto& [key, c] : a.terms()) {
        Composition stripped;
        for (int e : key)
            if (e != 0) stripped.push_back(e);
        out.add_term(stripped, c);
    }
    return out;
}

QRat alphabet_value(const PseudoComposition& key, Alphabet alph) {
    QRat v(1);
    for (int part : key) {
        if (part == 0) throw std::invalid_argument("alphabet_value: S_0 key");
        switch (alph) {
            case Alphabet::ONE:
                break;  // S_n(1) = 1
            case Alphabet::MINUS_ONE:
                if (part == 1)
                    v *= QRat(-1);
                else
                    return QRat();  // S_n(-1) = 0 for n >= 2
                break;
            case Alphabet::EXP: {
                Int fact = 1;
                for (int k = 2; k <= part; ++k) fact *= k;
                v = v / QRat(fact);
                break;
            }
            case Alphabet::GENERIC:
                throw std::invalid_argument("cannot specialize at the generic alphabet");
        }
    }
    return v;
}

std::vector<QRat> specialize(const NSymElement& a, Alphabet alph, int max_degree) {
    NSymElement s = (a.basis() == Basis::S) ? a : to_S(a);
    std::vector<QRat> out(static_cast<size_t>(max_degree) + 1);
    for (const auto& [key, c] : s.terms()) {
        int deg = 0;
        for (int part : key) deg += part;
        if (deg > max_degree) continue;
        out[static_cast<size_t>(deg)] += c * alphabet_value(key, alph);
    }
    return out;
}

namespace {

std::string key_str(const PseudoComposition& key) {
    std::string s;
    for (int e : key) {
        if (!s.empty() && (e > 9 || s.back() == ',')) s += ",";
        s += std::to_string(e);
    }
    return s;
}

}  // namespace

std::string NSymElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        os << (basis_ == Basis::S ? "*S^{" : "*R_{") << key_str(key) << "}";
    }
    return os.str();
}

std::string NSymElement::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << c.str() << "\\right)";
        if (basis_ == Basis::S)
            os << "S^{" << key_str(key) << "}";
        else
            os << "R_{" << key_str(key) << "}";
    }
    return os.str();
}

}  // namespace ncconj

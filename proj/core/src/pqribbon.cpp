#include "ncconj/pqribbon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncconj {

QuasiRibbon::QuasiRibbon(std::vector<int> values, std::set<int> bars)
    : values_(std::move(values)), bars_(std::move(bars)) {
    for (size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] < 1 || values_[k] > static_cast<int>(k) + 1)
            throw std::invalid_argument("not a parking function: a_k <= k violated");
        if (k > 0 && values_[k] < values_[k - 1])
            throw std::invalid_argument("parking function is not nondecreasing");
    }
    for (int b : bars_) {
        if (b < 1 || b >= static_cast<int>(values_.size()))
            throw std::invalid_argument("bar position out of range");
        if (values_[static_cast<size_t>(b)] == values_[static_cast<size_t>(b) - 1])
            throw std::invalid_argument("bar between equal values");
    }
}

QuasiRibbon QuasiRibbon::parse(const std::string& text) {
    std::vector<int> vals;
    std::set<int> bars;
    const bool comma_separated = text.find(',') != std::string::npos;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '|') {
            if (vals.empty()) throw std::invalid_argument("leading bar");
            bars.insert(static_cast<int>(vals.size()));
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (comma_separated) {
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                vals.push_back(std::stoi(text.substr(i, j - i)));
                i = j;
            } else {
                vals.push_back(text[i] - '0');
                ++i;
            }
        } else if (text[i] == ',') {
            ++i;
        } else {
            throw std::invalid_argument("bad character in quasi-ribbon text");
        }
    }
    return QuasiRibbon(std::move(vals), std::move(bars));
}

int QuasiRibbon::max_value() const { return values_.empty() ? 1 : values_.back(); }

Composition QuasiRibbon::bar_composition() const {
    Composition I;
    int prev = 0;
    for (int b : bars_) {
        I.push_back(b - prev);
        prev = b;
    }
    if (length() > prev) I.push_back(length() - prev);
    return I;
}

std::string QuasiRibbon::str() const {
    std::string s;
    bool wide = max_value() > 9;
    for (size_t k = 0; k < values_.size(); ++k) {
        if (k > 0 && bars_.count(static_cast<int>(k)))
            s += '|';
        else if (k > 0 && wide)
            s += ',';
        s += std::to_string(values_[k]);
    }
    return s;
}

namespace {

// Binary tree with two-colored left edges; empty() is the empty tree.
struct ColoredBinary {
    std::vector<ColoredBinary> kids;  // empty or {left, right}
    bool dbl = false;                 // left edge carries the second color

    bool empty() const { return kids.empty(); }
    static ColoredBinary node(ColoredBinary l, ColoredBinary r, bool d) {
        ColoredBinary t;
        t.kids.push_back(std::move(l));
        t.kids.push_back(std::move(r));
        t.dbl = d;
        return t;
    }
};

// Schroeder -> colored binary: a vertex with subtrees T_1..T_r becomes a
// left spine of r-1 binary vertices; the r-2 spine edges carry the second
// color, so contracting them recovers the Schroeder tree.
ColoredBinary to_colored(const SchroederTree& t) {
    if (t.is_leaf()) return {};
    const auto& kids = t.children();
    ColoredBinary acc = ColoredBinary::node(to_colored(kids[0]), to_colored(kids[1]), false);
    for (size_t k = 2; k < kids.size(); ++k)
        acc = ColoredBinary::node(std::move(acc), to_colored(kids[k]), true);
    return acc;
}

ColoredBinary to_colored(const BinaryTree& t) {
    if (t.is_leaf()) return {};
    return ColoredBinary::node(to_colored(t.left()), to_colored(t.right()), false);
}

// Contract the second-color left edges back into multi-ary vertices.
std::vector<SchroederTree> colored_child_list(const ColoredBinary& t);

SchroederTree from_colored(const ColoredBinary& t) {
    if (t.empty()) return SchroederTree::leaf();
    return SchroederTree::node(colored_child_list(t));
}

std::vector<SchroederTree> colored_child_list(const ColoredBinary& t) {
    std::vector<SchroederTree> kids;
    if (t.dbl) {
        if (t.kids[0].empty()) throw std::invalid_argument("colored spine with empty left subtree");
        kids = colored_child_list(t.kids[0]);
    } else {
        kids.push_back(from_colored(t.kids[0]));
    }
    kids.push_back(from_colored(t.kids[1]));
    return kids;
}

struct Word {
    std::vector<int> vals;
    std::set<int> bars;
};

// phi(T) = phi(T2) . (phi(T1) shifted by max(phi(T2)) - 1) . (|T1| + max(phi(T2))),
// with a bar before the final letter when the left edge has the second color.
Word phi_colored(const ColoredBinary& t) {
    if (t.empty()) return {};
    Word right = phi_colored(t.kids[1]);
    Word left = phi_colored(t.kids[0]);
    int m = right.vals.empty() ? 1 : right.vals.back();
    Word out = std::move(right);
    int offset = static_cast<int>(out.vals.size());
    for (int v : left.vals) out.vals.push_back(v + m - 1);
    for (int b : left.bars) out.bars.insert(b + offset);
    int letter = static_cast<int>(left.vals.size()) + m;
    if (t.dbl) out.bars.insert(static_cast<int>(out.vals.size()));
    out.vals.push_back(letter);
    return out;
}

ColoredBinary psi_colored(const std::vector<int>& vals, const std::set<int>& bars) {
    if (vals.empty()) return {};
    const int r = static_cast<int>(vals.size());
    bool dbl = bars.count(r - 1) > 0;

    PsiSplit sp = psi_split(vals);
    if (bars.count(sp.l)) throw std::invalid_argument("bar at the psi split position");
    std::set<int> right_bars, left_bars;
    for (int b : bars) {
        if (b < sp.l) right_bars.insert(b);
        if (b > sp.l && b < r - 1) left_bars.insert(b - sp.l);
    }
    ColoredBinary right = psi_colored(sp.right, right_bars);
    ColoredBinary left = psi_colored(sp.left, left_bars);
    return ColoredBinary::node(std::move(left), std::move(right), dbl);
}

std::vector<int> shifted(const std::vector<int>& v, int m) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) out.push_back(x + m);
    return out;
}

}  // namespace

PsiSplit psi_split(const std::vector<int>& parking) {
    const int r = static_cast<int>(parking.size());
    if (r == 0) throw std::invalid_argument("psi_split: empty word");
    PsiSplit sp;
    sp.l = 0;
    for (int k = 1; k <= r - 1; ++k) {
        int w = parking[static_cast<size_t>(k) - 1] + r - 1 - k;
        if (parking[static_cast<size_t>(k) - 1] == parking[static_cast<size_t>(k)] &&
            w == parking.back())
            sp.l = k;
    }
    sp.right.assign(parking.begin(), parking.begin() + sp.l);
    int shift = sp.l == 0 ? 0 : parking[static_cast<size_t>(sp.l) - 1] - 1;
    for (int k = sp.l; k < r - 1; ++k) sp.left.push_back(parking[static_cast<size_t>(k)] - shift);
    return sp;
}

QuasiRibbon phi(const SchroederTree& t) {
    Word w = phi_colored(to_colored(t));
    return QuasiRibbon(std::move(w.vals), std::move(w.bars));
}

QuasiRibbon phi(const BinaryTree& t) {
    Word w = phi_colored(to_colored(t));
    return QuasiRibbon(std::move(w.vals), std::move(w.bars));
}

SchroederTree psi(const QuasiRibbon& p) {
    return from_colored(psi_colored(p.values(), p.bars()));
}

QuasiRibbon tridup(Tridup op, const QuasiRibbon& a, const QuasiRibbon& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("tridup: empty operand");
    int m = 0;
    bool junction_bar = false;
    switch (op) {
        case Tridup::Prec:
            m = a.max_value() - 1;
            break;
        case Tridup::Circ:
            m = a.length();
            junction_bar = true;
            break;
        case Tridup::Succ:
            m = a.length();
            break;
    }
    std::vector<int> vals = a.values();
    auto bv = shifted(b.values(), m);
    vals.insert(vals.end(), bv.begin(), bv.end());
    std::set<int> bars = a.bars();
    if (junction_bar) bars.insert(a.length());
    for (int p : b.bars()) bars.insert(p + a.length());
    return QuasiRibbon(std::move(vals), std::move(bars));
}

PseudoComposition tridup_codes(Tridup op, const PseudoComposition& I,
                               const PseudoComposition& J) {
    if (I.size() <= 1 || J.size() <= 1)
        throw std::invalid_argument("tridup_codes: operands must be nontrivial codes");
    // J = J' 0^m with J' not ending in 0
    PseudoComposition Jp = J;
    int m = 0;
    while (!Jp.empty() && Jp.back() == 0) {
        Jp.pop_back();
        ++m;
    }
    PseudoComposition out;
    switch (op) {
        case Tridup::Prec:  // J' 0^{m-1} I
            out = Jp;
            out.insert(out.end(), static_cast<size_t>(m - 1), 0);
            out.insert(out.end(), I.begin(), I.end());
            break;
        case Tridup::Circ:  // (J' |> I) 0^{m-1}
            out = Jp;
            out.back() += I.front();
            out.insert(out.end(), I.begin() + 1, I.end());
            out.insert(out.end(), static_cast<size_t>(m - 1), 0);
            break;
        case Tridup::Succ:  // J' I 0^{m-1}
            out = Jp;
            out.insert(out.end(), I.begin(), I.end());
            out.insert(out.end(), static_cast<size_t>(m - 1), 0);
            break;
    }
    return out;
}

PSElement PSElement::monomial(QuasiRibbon a, QRat c) {
    PSElement e;
    if (!c.is_zero()) e.terms_.emplace(std::move(a), std::move(c));
    return e;
}

void PSElement::add_term(const QuasiRibbon& key, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QRat PSElement::coeff(const QuasiRibbon& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QRat() : it->second;
}

PSElement& PSElement::operator+=(const PSElement& b) {
    for (const auto& [key, c] : b.terms_) add_term(key, c);
    return *this;
}

PSElement operator*(const QRat& c, const PSElement& a) {
    PSElement out;
    if (c.is_zero()) return out;
    for (const auto& [key, v] : a.terms()) out.add_term(key, c * v);
    return out;
}

PSElement ps_product(const PSElement& a, const PSElement& b) {
    PSElement out;
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
            // beta' = beta shifted by |alpha|; barred and concatenated variants
            std::vector<int> vals = ka.values();
            auto bv = shifted(kb.values(), ka.length());
            vals.insert(vals.end(), bv.begin(), bv.end());
            std::set<int> bars = ka.bars();
            for (int p : kb.bars()) bars.insert(p + ka.length());
            out.add_term(QuasiRibbon(vals, bars), c);  // concatenation
            bars.insert(ka.length());
            out.add_term(QuasiRibbon(std::move(vals), std::move(bars)), c);  // barred
        }
    return out;
}

std::vector<QuasiRibbon> order_covers(const QuasiRibbon& a) {
    std::vector<QuasiRibbon> out;
    for (int p = 1; p <= a.length() - 1; ++p) {
        if (a.bars().count(p)) continue;
        int last_u = a.values()[static_cast<size_t>(p) - 1];
        int first_v = a.values()[static_cast<size_t>(p)];
        int shift = last_u < first_v ? 0 : 1;
        std::vector<int> vals = a.values();
        for (int k = p; k < a.length(); ++k) vals[static_cast<size_t>(k)] += shift;
        std::set<int> bars = a.bars();
        bars.insert(p);
        try {
            out.emplace_back(std::move(vals), std::move(bars));
        } catch (const std::invalid_argument&) {
            // shifting broke the parking condition: no cover at this junction
        }
    }
    return out;
}

namespace {

std::set<QuasiRibbon> upward_closure(const QuasiRibbon& a) {
    std::set<QuasiRibbon> seen{a};
    std::vector<QuasiRibbon> stack{a};
    while (!stack.empty()) {
        QuasiRibbon cur = stack.back();
        stack.pop_back();
        for (auto& c : order_covers(cur))
            if (seen.insert(c).second) stack.push_back(c);
    }
    return seen;
}

}  // namespace

bool order_le(const QuasiRibbon& a, const QuasiRibbon& b) {
    return upward_closure(a).count(b) > 0;
}

PSElement s_basis(const QuasiRibbon& a) {
    PSElement out;
    for (const auto& beta : upward_closure(a)) out.add_term(beta, QRat(1));
    return out;
}

NSymElement chi(const PSElement& x) {
    NSymElement out(Basis::R);
    for (const auto& [key, c] : x.terms()) out.add_term(conjugate(key.bar_composition()), c);
    return out;
}

PSElement bq_ps(const QuasiRibbon& a, const QuasiRibbon& b) {
    PSElement out;
    const QuasiRibbon one({1}, {});
    QRat qm = q_monomial(a.length());  // q^{|alpha|}
    if (a.empty() && b.empty()) {
        out.add_term(one, QRat(1));
        return out;
    }
    if (a.empty()) {
        out.add_term(tridup(Tridup::Prec, b, one), QRat(1));
        out.add_term(tridup(Tridup::Circ, b, one), QRat(1));
        return out;
    }
    if (b.empty()) {
        out.add_term(tridup(Tridup::Circ, a, one), qm);
        out.add_term(tridup(Tridup::Succ, a, one), QRat(1));
        return out;
    }
    out.add_term(tridup(Tridup::Prec, b, tridup(Tridup::Circ, a, one)), qm);
    out.add_term(tridup(Tridup::Prec, b, tridup(Tridup::Succ, a, one)), QRat(1));
    out.add_term(tridup(Tridup::Circ, b, tridup(Tridup::Circ, a, one)), qm);
    out.add_term(tridup(Tridup::Circ, b, tridup(Tridup::Succ, a, one)), QRat(1));
    return out;
}

PSElement bq_ps(const PSElement& a, const PSElement& b) {
    PSElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out += (ca * cb) * bq_ps(ka, kb);
    return out;
}

std::vector<QuasiRibbon> quasi_ribbons(int n) {
    std::vector<std::vector<int>> parkings;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int k) -> void {
        if (k == n) {
            parkings.push_back(cur);
            return;
        }
        int lo = cur.empty() ? 1 : cur.back();
        for (int v = lo; v <= k + 1; ++v) {
            cur.push_back(v);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);
    std::vector<QuasiRibbon> out;
    for (const auto& p : parkings) {
        std::vector<int> slots;
        for (int k = 1; k < n; ++k)
            if (p[static_cast<size_t>(k)] != p[static_cast<size_t>(k) - 1]) slots.push_back(k);
        for (uint64_t mask = 0; mask < (uint64_t(1) << slots.size()); ++mask) {
            std::set<int> bars;
            for (size_t j = 0; j < slots.size(); ++j)
                if (mask & (uint64_t(1) << j)) bars.insert(slots[j]);
            out.emplace_back(p, std::move(bars));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ncconj

#include "ncconj/operad.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncconj {

namespace {

int grading(const PseudoComposition& code) {
    int w = 0;
    for (int e : code) w += e;
    return w;
}

const PseudoComposition kLeafCode = {0};

}  // namespace

QRat TreeSeries::coeff(const PseudoComposition& code) const {
    auto it = terms.find(code);
    return it == terms.end() ? QRat() : it->second;
}

void TreeSeries::add(const PseudoComposition& code, const QRat& c) {
    if (c.is_zero()) return;
    if (grading(code) > degree) return;
    auto [it, inserted] = terms.emplace(code, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool TreeSeries::is_group_element() const { return coeff(kLeafCode).is_one(); }

TreeSeries leaf_series(int N) {
    TreeSeries s;
    s.degree = N;
    s.terms[kLeafCode] = QRat(1);
    return s;
}

SchroederTree compose(const SchroederTree& t0, const std::vector<SchroederTree>& ts) {
    if (static_cast<int>(ts.size()) != t0.leaf_count())
        throw std::invalid_argument("compose: arity mismatch");
    size_t next = 0;
    auto walk = [&](auto&& self, const SchroederTree& s) -> SchroederTree {
        if (s.is_leaf()) return ts[next++];
        std::vector<SchroederTree> kids;
        kids.reserve(static_cast<size_t>(s.arity()));
        for (const auto& k : s.children()) kids.push_back(self(self, k));
        return SchroederTree::node(std::move(kids));
    };
    return walk(walk, t0);
}

namespace {

struct RawDecomposition {
    SchroederTree trunk;
    std::vector<SchroederTree> forest;
};

std::vector<RawDecomposition> raw_decompositions(const SchroederTree& t) {
    std::vector<RawDecomposition> out;
    out.push_back({SchroederTree::leaf(), {t}});  // cut at the root
    if (t.is_leaf()) return out;
    std::vector<std::vector<RawDecomposition>> kid_dec;
    for (const auto& k : t.children()) kid_dec.push_back(raw_decompositions(k));
    std::vector<const RawDecomposition*> pick(kid_dec.size());
    auto assemble = [&](auto&& self, size_t i) -> void {
        if (i == kid_dec.size()) {
            std::vector<SchroederTree> trunk_kids;
            std::vector<SchroederTree> forest;
            for (const auto* d : pick) {
                trunk_kids.push_back(d->trunk);
                forest.insert(forest.end(), d->forest.begin(), d->forest.end());
            }
            out.push_back({SchroederTree::node(std::move(trunk_kids)), std::move(forest)});
            return;
        }
        for (const auto& d : kid_dec[i]) {
            pick[i] = &d;
            self(self, i + 1);
        }
    };
    assemble(assemble, 0);
    return out;
}

}  // namespace

std::vector<Decomposition> decompositions(const SchroederTree& t) {
    std::vector<Decomposition> out;
    for (const auto& raw : raw_decompositions(t)) {
        Decomposition d;
        d.trunk = polish_encode(raw.trunk);
        for (const auto& f : raw.forest) d.forest.push_back(polish_encode(f));
        out.push_back(std::move(d));
    }
    return out;
}

TreeSeries group_compose(const TreeSeries& p, const TreeSeries& r) {
    if (!p.is_group_element() || !r.is_group_element())
        throw std::invalid_argument("group_compose: operands must have leaf coefficient 1");
    if (p.degree != r.degree)
        throw std::invalid_argument("group_compose: truncation mismatch");
    TreeSeries out;
    out.degree = p.degree;
    for (int g = 0; g <= p.degree; ++g)
        for (const auto& t : schroeder_trees(g + 1)) {
            QRat acc;
            for (const auto& d : decompositions(t)) {
                QRat term = p.coeff(d.trunk);
                if (term.is_zero()) continue;
                for (const auto& f : d.forest) {
                    term *= r.coeff(f);
                    if (term.is_zero()) break;
                }
                acc += term;
            }
            out.add(polish_encode(t), acc);
        }
    return out;
}

TreeSeries group_inverse(const TreeSeries& p) {
    if (!p.is_group_element())
        throw std::invalid_argument("group_inverse: operand must have leaf coefficient 1");
    TreeSeries x = leaf_series(p.degree);
    for (int g = 1; g <= p.degree; ++g)
        for (const auto& t : schroeder_trees(g + 1)) {
            QRat acc;
            for (const auto& d : decompositions(t)) {
                if (d.trunk == kLeafCode) continue;  // that term is x_t itself
                QRat term = p.coeff(d.trunk);
                if (term.is_zero()) continue;
                for (const auto& f : d.forest) {
                    term *= x.coeff(f);
                    if (term.is_zero()) break;
                }
                acc += term;
            }
            x.add(polish_encode(t), -acc);
        }
    return x;
}

TreeSeries corolla_series(int N) {
    TreeSeries s = leaf_series(N);
    for (int n = 1; n <= N; ++n)
        s.add(polish_encode(SchroederTree::corolla(n + 1)), QRat(1));
    return s;
}

TreeSeries fL_series(int N) {
    TreeSeries s;
    s.degree = N;
    // codes n1 0^{n1} ... nk 0^{nk} 0 with coefficient (-1)^k
    std::vector<int> parts;
    auto emit = [&]() {
        PseudoComposition code;
        for (int n : parts) {
            code.push_back(n);
            code.insert(code.end(), static_cast<size_t>(n), 0);
        }
        code.push_back(0);
        s.add(code, QRat(parts.size() % 2 == 0 ? 1 : -1));
    };
    auto gen = [&](auto&& self, int remaining) -> void {
        emit();
        for (int n = 1; n <= remaining; ++n) {
            parts.push_back(n);
            self(self, remaining - n);
            parts.pop_back();
        }
    };
    gen(gen, N);
    return s;
}

std::map<std::pair<PseudoComposition, PTForest>, long long> coproduct_PT(const SchroederTree& t) {
    std::map<std::pair<PseudoComposition, PTForest>, long long> out;
    for (const auto& d : decompositions(t)) {
        PTForest pruning;
        for (const auto& f : d.forest)
            if (f != kLeafCode) pruning.push_back(f);
        out[{d.trunk, pruning}] += 1;
    }
    return out;
}

std::map<std::pair<PTForest, PTForest>, long long> coproduct_PT_forest(const PTForest& f) {
    std::map<std::pair<PTForest, PTForest>, long long> acc{{{PTForest{}, PTForest{}}, 1}};
    for (const auto& code : f) {
        std::map<std::pair<PTForest, PTForest>, long long> next;
        for (const auto& [pairAcc, mAcc] : acc)
            for (const auto& [pairT, mT] : coproduct_PT(polish_decode(code))) {
                PTForest trunk = pairAcc.first;
                if (pairT.first != kLeafCode) trunk.push_back(pairT.first);
                PTForest prune = pairAcc.second;
                prune.insert(prune.end(), pairT.second.begin(), pairT.second.end());
                next[{std::move(trunk), std::move(prune)}] += mAcc * mT;
            }
        acc = std::move(next);
    }
    return acc;
}

QRat pt_character(const TreeSeries& p, const PTForest& forest) {
    QRat v(1);
    for (const auto& f : forest) {
        v *= p.coeff(f);
        if (v.is_zero()) break;
    }
    return v;
}

QRat pt_convolution(const TreeSeries& p, const TreeSeries& r, const SchroederTree& t) {
    QRat acc;
    for (const auto& [pair, mult] : coproduct_PT(t)) {
        QRat left = pair.first == kLeafCode ? QRat(1) : p.coeff(pair.first);
        if (left.is_zero()) continue;
        QRat right = pt_character(r, pair.second);
        acc += QRat(mult) * left * right;
    }
    return acc;
}

TreeSeries conjugacy_character(int N) {
    TreeSeries s = leaf_series(N);
    for (int g = 1; g <= N; ++g)
        for (const auto& t : schroeder_trees(g + 1)) {
            QRat prod(1);
            for (const auto& k : t.children()) prod *= s.coeff(polish_encode(k));
            s.add(polish_encode(t), prod / QRat(IntPoly::qn(g)));
        }
    return s;
}

QRat c_closed(const SchroederTree& t) { return tree_coefficient(t); }

}  // namespace ncconj

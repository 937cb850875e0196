#include "ncconj/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncconj {

SchroederTree SchroederTree::node(std::vector<SchroederTree> children) {
    if (children.size() < 2)
        throw std::invalid_argument("SchroederTree: internal vertex needs >= 2 children");
    SchroederTree t;
    t.children_ = std::move(children);
    return t;
}

SchroederTree SchroederTree::corolla(int n) {
    return node(std::vector<SchroederTree>(static_cast<size_t>(n)));
}

int SchroederTree::leaf_count() const {
    if (is_leaf()) return 1;
    int c = 0;
    for (const auto& k : children_) c += k.leaf_count();
    return c;
}

int SchroederTree::internal_count() const {
    if (is_leaf()) return 0;
    int c = 1;
    for (const auto& k : children_) c += k.internal_count();
    return c;
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    BinaryTree t;
    t.kids_.push_back(std::move(left));
    t.kids_.push_back(std::move(right));
    return t;
}

const BinaryTree& BinaryTree::left() const {
    if (is_leaf()) throw std::domain_error("leaf has no subtrees");
    return kids_[0];
}

const BinaryTree& BinaryTree::right() const {
    if (is_leaf()) throw std::domain_error("leaf has no subtrees");
    return kids_[1];
}

int BinaryTree::internal_count() const {
    if (is_leaf()) return 0;
    return 1 + kids_[0].internal_count() + kids_[1].internal_count();
}

std::vector<int> BinaryTree::code() const {
    std::vector<int> out;
    auto walk = [&](auto&& self, const BinaryTree& t) -> void {
        if (t.is_leaf()) {
            out.push_back(0);
            return;
        }
        out.push_back(1);
        self(self, t.kids_[0]);
        self(self, t.kids_[1]);
    };
    walk(walk, *this);
    return out;
}

BinaryTree BinaryTree::from_code(const std::vector<int>& code) {
    size_t pos = 0;
    auto parse = [&](auto&& self) -> BinaryTree {
        if (pos >= code.size()) throw std::invalid_argument("binary code: truncated");
        int e = code[pos++];
        if (e == 0) return BinaryTree::leaf();
        if (e != 1) throw std::invalid_argument("binary code: entry not 0/1");
        BinaryTree l = self(self);
        BinaryTree r = self(self);
        return BinaryTree::node(std::move(l), std::move(r));
    };
    BinaryTree t = parse(parse);
    if (pos != code.size()) throw std::invalid_argument("binary code: trailing entries");
    return t;
}

SchroederTree BinaryTree::as_schroeder() const {
    if (is_leaf()) return SchroederTree::leaf();
    return SchroederTree::node({kids_[0].as_schroeder(), kids_[1].as_schroeder()});
}

BinaryTree BinaryTree::from_schroeder(const SchroederTree& t) {
    if (t.is_leaf()) return BinaryTree::leaf();
    if (t.arity() != 2) throw std::invalid_argument("tree is not binary");
    return BinaryTree::node(from_schroeder(t.children()[0]), from_schroeder(t.children()[1]));
}

PlaneTree PlaneTree::node(std::vector<PlaneTree> children) {
    PlaneTree t;
    t.children_ = std::move(children);
    return t;
}

int PlaneTree::vertex_count() const {
    int c = 1;
    for (const auto& k : children_) c += k.vertex_count();
    return c;
}

std::vector<int> PlaneTree::code() const {
    std::vector<int> out;
    auto walk = [&](auto&& self, const PlaneTree& t) -> void {
        out.push_back(t.arity());
        for (const auto& k : t.children_) self(self, k);
    };
    walk(walk, *this);
    return out;
}

PlaneTree PlaneTree::from_code(const std::vector<int>& code) {
    size_t pos = 0;
    auto parse = [&](auto&& self) -> PlaneTree {
        if (pos >= code.size()) throw std::invalid_argument("plane code: truncated");
        int k = code[pos++];
        if (k < 0) throw std::invalid_argument("plane code: negative entry");
        std::vector<PlaneTree> kids;
        kids.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) kids.push_back(self(self));
        return PlaneTree::node(std::move(kids));
    };
    PlaneTree t = parse(parse);
    if (pos != code.size()) throw std::invalid_argument("plane code: trailing entries");
    return t;
}

DecoratedTree::DecoratedTree(int decoration, std::vector<DecoratedTree> children)
    : decoration_(decoration), children_(std::move(children)) {
    if (decoration_ < 1) throw std::invalid_argument("decoration must be >= 1");
    std::sort(children_.begin(), children_.end());
    key_.push_back(decoration_);
    key_.push_back(static_cast<int>(children_.size()));
    for (const auto& c : children_) key_.insert(key_.end(), c.key_.begin(), c.key_.end());
}

int DecoratedTree::weight() const {
    int w = decoration_;
    for (const auto& c : children_) w += c.weight();
    return w;
}

int DecoratedTree::vertex_count() const {
    int n = 1;
    for (const auto& c : children_) n += c.vertex_count();
    return n;
}

CKForest make_forest(std::vector<DecoratedTree> trees) {
    std::sort(trees.begin(), trees.end());
    return trees;
}

int forest_weight(const CKForest& f) {
    int w = 0;
    for (const auto& t : f) w += t.weight();
    return w;
}

PseudoComposition polish_encode(const SchroederTree& t) {
    PseudoComposition out;
    auto walk = [&](auto&& self, const SchroederTree& s) -> void {
        if (s.is_leaf()) {
            out.push_back(0);
            return;
        }
        out.push_back(s.arity() - 1);
        for (const auto& k : s.children()) self(self, k);
    };
    walk(walk, t);
    return out;
}

SchroederTree polish_decode(const PseudoComposition& code) {
    size_t pos = 0;
    auto fail = [&](size_t p) {
        throw std::invalid_argument("invalid Schroeder code at position " + std::to_string(p + 1));
    };
    auto parse = [&](auto&& self) -> SchroederTree {
        if (pos >= code.size()) fail(code.size() ? code.size() - 1 : 0);
        size_t here = pos;
        int e = code[pos++];
        if (e < 0) fail(here);
        if (e == 0) return SchroederTree::leaf();
        std::vector<SchroederTree> kids;
        kids.reserve(static_cast<size_t>(e) + 1);
        for (int i = 0; i <= e; ++i) kids.push_back(self(self));
        return SchroederTree::node(std::move(kids));
    };
    SchroederTree t = parse(parse);
    if (pos != code.size()) fail(pos);
    return t;
}

std::vector<int> leaf_weights(const SchroederTree& t) {
    std::vector<int> out;
    auto walk = [&](auto&& self, const SchroederTree& s) -> int {
        if (s.is_leaf()) return 1;
        out.push_back(0);
        size_t slot = out.size() - 1;
        int phi = 0;
        for (const auto& k : s.children()) phi += self(self, k);
        out[slot] = phi;
        return phi;
    };
    walk(walk, t);
    return out;
}

long long d_statistic(const SchroederTree& t) {
    long long d = 0;
    for (int phi : leaf_weights(t)) d += phi - 1;
    return d;
}

QRat tree_coefficient(const SchroederTree& t) {
    IntPoly den(1);
    for (int phi : leaf_weights(t)) den *= IntPoly::qn(phi - 1);
    return QRat(IntPoly(1), den);
}

std::vector<SchroederTree> contractions(const SchroederTree& t) {
    if (t.is_leaf()) return {t};
    // Recursively collect the contraction sets of the children, then either
    // keep the first child as is or, when it is internal, splice its
    // (contracted) children into the root.
    std::vector<std::vector<SchroederTree>> kid_sets;
    for (const auto& k : t.children()) kid_sets.push_back(contractions(k));
    std::vector<SchroederTree> out;
    std::vector<SchroederTree> current;
    auto assemble = [&](auto&& self, size_t i) -> void {
        if (i == kid_sets.size()) {
            // keep-first-edge variant
            out.push_back(SchroederTree::node(current));
            // contract the root->first-child edge if the first child is internal
            if (!current[0].is_leaf()) {
                std::vector<SchroederTree> spliced(current[0].children());
                spliced.insert(spliced.end(), current.begin() + 1, current.end());
                out.push_back(SchroederTree::node(std::move(spliced)));
            }
            return;
        }
        for (const auto& choice : kid_sets[i]) {
            current.push_back(choice);
            self(self, i + 1);
            current.pop_back();
        }
    };
    assemble(assemble, 0);
    std::sort(out.begin(), out.end(), [](const SchroederTree& a, const SchroederTree& b) {
        return polish_encode(a) < polish_encode(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PseudoComposition> anti_refinements(const PseudoComposition& I) {
    // Identify maximal runs of consecutive nonzero entries; each run may be
    // coarsened independently, like an ordinary composition.
    std::vector<PseudoComposition> out{{}};
    size_t i = 0;
    while (i < I.size()) {
        if (I[i] == 0) {
            for (auto& w : out) w.push_back(0);
            ++i;
        } else {
            size_t j = i;
            Composition run;
            while (j < I.size() && I[j] != 0) run.push_back(I[j++]);
            std::vector<PseudoComposition> next;
            for (const auto& prefix : out)
                for (const auto& v : coarsenings(run)) {
                    PseudoComposition w = prefix;
                    w.insert(w.end(), v.begin(), v.end());
                    next.push_back(std::move(w));
                }
            out = std::move(next);
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PseudoComposition max_contraction(const PseudoComposition& I) {
    PseudoComposition out;
    size_t i = 0;
    while (i < I.size()) {
        if (I[i] == 0) {
            out.push_back(0);
            ++i;
        } else {
            int acc = 0;
            while (i < I.size() && I[i] != 0) acc += I[i++];
            out.push_back(acc);
        }
    }
    return out;
}

CKForest skeleton(const SchroederTree& t) {
    if (t.is_leaf()) return {};
    std::vector<DecoratedTree> kids;
    for (const auto& k : t.children()) {
        CKForest sub = skeleton(k);
        kids.insert(kids.end(), sub.begin(), sub.end());
    }
    return {DecoratedTree(t.arity() - 1, std::move(kids))};
}

std::vector<int> hook_lengths(const PlaneTree& t) {
    std::vector<int> out;
    auto walk = [&](auto&& self, const PlaneTree& s) -> int {
        out.push_back(0);
        size_t slot = out.size() - 1;
        int h = 1;
        for (const auto& k : s.children()) h += self(self, k);
        out[slot] = h;
        return h;
    };
    walk(walk, t);
    return out;
}

QRat q_hook_binary(const BinaryTree& t) {
    SchroederTree s = t.as_schroeder();
    PseudoComposition I = polish_encode(s);
    int n = t.internal_count();
    SchroederTree sharp = polish_decode(max_contraction(I));
    long long shift = d_statistic(s) - d_statistic(sharp);
    QRat val = QRat(IntPoly::q_pochhammer(n)) * tree_coefficient(s) *
               QRat(IntPoly::monomial(1, static_cast<int>(shift)));
    return val;
}

const std::vector<SchroederTree>& schroeder_trees(int leaves) {
    static std::vector<std::vector<SchroederTree>> cache{{}, {SchroederTree::leaf()}};
    if (leaves < 1) throw std::invalid_argument("schroeder_trees: leaves >= 1 required");
    while (static_cast<int>(cache.size()) <= leaves) {
        int n = static_cast<int>(cache.size());
        std::vector<SchroederTree> result;
        // root arity k >= 2, children leaf counts composing n
        std::vector<SchroederTree> current;
        auto build = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                if (current.size() >= 2) result.push_back(SchroederTree::node(current));
                return;
            }
            for (int part = 1; part <= remaining; ++part) {
                if (part == n) continue;  // proper subtrees only
                for (const auto& sub : cache[static_cast<size_t>(part)]) {
                    current.push_back(sub);
                    self(self, remaining - part);
                    current.pop_back();
                }
            }
        };
        build(build, n);
        cache.push_back(std::move(result));
    }
    return cache[static_cast<size_t>(leaves)];
}

const std::vector<PlaneTree>& plane_trees(int n) {
    static std::vector<std::vector<PlaneTree>> cache{{}, {PlaneTree()}};
    if (n < 1) throw std::invalid_argument("plane_trees: n >= 1 required");
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::vector<PlaneTree> result;
        std::vector<PlaneTree> current;
        auto build = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                result.push_back(PlaneTree::node(current));
                return;
            }
            for (int part = 1; part <= remaining; ++part) {
                for (const auto& sub : cache[static_cast<size_t>(part)]) {
                    current.push_back(sub);
                    self(self, remaining - part);
                    current.pop_back();
                }
            }
        };
        build(build, m - 1);  // children vertex counts sum to m-1
        cache.push_back(std::move(result));
    }
    return cache[static_cast<size_t>(n)];
}

std::vector<BinaryTree> binary_trees(int n) {
    if (n == 0) return {BinaryTree::leaf()};
    std::vector<BinaryTree> out;
    for (int l = 0; l < n; ++l) {
        auto lefts = binary_trees(l);
        auto rights = binary_trees(n - 1 - l);
        for (const auto& lt : lefts)
            for (const auto& rt : rights) out.push_back(BinaryTree::node(lt, rt));
    }
    return out;
}

std::vector<DecoratedTree> decorated_trees_of_weight(int w) {
    static std::vector<std::vector<DecoratedTree>> cache{{}};
    while (static_cast<int>(cache.size()) <= w) {
        int m = static_cast<int>(cache.size());
        // all forests of total weight m - dec, children sorted canonically
        std::vector<DecoratedTree> result;
        for (int dec = 1; dec <= m; ++dec) {
            int rest = m - dec;
            // enumerate multisets of trees with weights summing to rest
            std::vector<DecoratedTree> current;
            auto build = [&](auto&& self, int remaining, int min_weight, size_t min_index) -> void {
                if (remaining == 0) {
                    result.emplace_back(dec, current);
                    return;
                }
                for (int part = min_weight; part <= remaining; ++part) {
                    const auto& subs = cache[static_cast<size_t>(part)];
                    size_t start = (part == min_weight) ? min_index : 0;
                    for (size_t si = start; si < subs.size(); ++si) {
                        current.push_back(subs[si]);
                        self(self, remaining - part, part, si);
                        current.pop_back();
                    }
                }
            };
            build(build, rest, 1, 0);
        }
        cache.push_back(std::move(result));
    }
    return cache[static_cast<size_t>(w)];
}

}  // namespace ncconj

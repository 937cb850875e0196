#include "ncconj/catalan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncconj {

namespace {

const std::vector<int> kVertexCode = {0};

int plane_grading(const std::vector<int>& code) {
    return static_cast<int>(code.size()) - 1;  // vertices - 1
}

}  // namespace

QRat PlaneTreeSeries::coeff(const std::vector<int>& code) const {
    auto it = terms.find(code);
    return it == terms.end() ? QRat() : it->second;
}

void PlaneTreeSeries::add(const std::vector<int>& code, const QRat& c) {
    if (c.is_zero()) return;
    if (plane_grading(code) > degree) return;
    auto [it, inserted] = terms.emplace(code, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool PlaneTreeSeries::is_group_element() const { return coeff(kVertexCode).is_one(); }

PlaneTreeSeries cat_identity(int N) {
    PlaneTreeSeries s;
    s.degree = N;
    s.terms[kVertexCode] = QRat(1);
    return s;
}

namespace {

struct PlaneDecomposition {
    PlaneTree trunk;
    std::vector<PlaneTree> forest;
};

// Decompositions t = t0 o (t1..tn): antichains of vertices covering every
// leaf; substitution identifies a leaf of the trunk with the root of the
// substituted tree.
std::vector<PlaneDecomposition> plane_decompositions(const PlaneTree& t) {
    std::vector<PlaneDecomposition> out;
    out.push_back({PlaneTree(), {t}});  // cut at the root
    if (t.arity() == 0) return out;
    std::vector<std::vector<PlaneDecomposition>> kid_dec;
    for (const auto& k : t.children()) kid_dec.push_back(plane_decompositions(k));
    std::vector<const PlaneDecomposition*> pick(kid_dec.size());
    auto assemble = [&](auto&& self, size_t i) -> void {
        if (i == kid_dec.size()) {
            std::vector<PlaneTree> trunk_kids;
            std::vector<PlaneTree> forest;
            for (const auto* d : pick) {
                trunk_kids.push_back(d->trunk);
                forest.insert(forest.end(), d->forest.begin(), d->forest.end());
            }
            out.push_back({PlaneTree::node(std::move(trunk_kids)), std::move(forest)});
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

PlaneTreeSeries cat_compose(const PlaneTreeSeries& p, const PlaneTreeSeries& r) {
    if (!p.is_group_element() || !r.is_group_element())
        throw std::invalid_argument("cat_compose: operands must have vertex coefficient 1");
    if (p.degree != r.degree) throw std::invalid_argument("cat_compose: truncation mismatch");
    PlaneTreeSeries out;
    out.degree = p.degree;
    for (int n = 1; n <= p.degree + 1; ++n)
        for (const auto& t : plane_trees(n)) {
            QRat acc;
            for (const auto& d : plane_decompositions(t)) {
                QRat term = p.coeff(d.trunk.code());
                if (term.is_zero()) continue;
                for (const auto& f : d.forest) {
                    term *= r.coeff(f.code());
                    if (term.is_zero()) break;
                }
                acc += term;
            }
            out.add(t.code(), acc);
        }
    return out;
}

PlaneTreeSeries cat_inverse(const PlaneTreeSeries& p) {
    if (!p.is_group_element())
        throw std::invalid_argument("cat_inverse: operand must have vertex coefficient 1");
    PlaneTreeSeries x = cat_identity(p.degree);
    for (int n = 2; n <= p.degree + 1; ++n)
        for (const auto& t : plane_trees(n)) {
            QRat acc;
            for (const auto& d : plane_decompositions(t)) {
                if (d.trunk.code() == kVertexCode) continue;
                QRat term = p.coeff(d.trunk.code());
                if (term.is_zero()) continue;
                for (const auto& f : d.forest) {
                    term *= x.coeff(f.code());
                    if (term.is_zero()) break;
                }
                acc += term;
            }
            x.add(t.code(), -acc);
        }
    return x;
}

PlaneTreeSeries lagrange_solve(int N) {
    PlaneTreeSeries g = cat_identity(N);
    for (int it = 0; it < N; ++it) {
        PlaneTreeSeries next;
        next.degree = N;
        next.add(kVertexCode, QRat(1));  // n = 0 term
        // sum_{n>=1} S_n g^n: a root of arity n over any n terms of g
        for (int n = 1; n <= N; ++n) {
            std::vector<std::pair<std::vector<int>, QRat>> stack_terms(
                g.terms.begin(), g.terms.end());
            std::vector<const std::pair<std::vector<int>, QRat>*> pick(static_cast<size_t>(n));
            auto assemble = [&](auto&& self, int i, int gr_used) -> void {
                if (n + gr_used > N) return;
                if (i == n) {
                    std::vector<int> code{n};
                    QRat c(1);
                    for (const auto* kv : pick) {
                        code.insert(code.end(), kv->first.begin(), kv->first.end());
                        c *= kv->second;
                    }
                    next.add(code, c);
                    return;
                }
                for (const auto& kv : stack_terms) {
                    pick[static_cast<size_t>(i)] = &kv;
                    self(self, i + 1, gr_used + plane_grading(kv.first));
                }
            };
            assemble(assemble, 0, 0);
        }
        if (next == g) break;
        g = std::move(next);
    }
    return g;
}

PlaneTreeSeries lagrange_inverse_input(int N) {
    PlaneTreeSeries f = cat_identity(N);
    for (int n = 1; n <= N; ++n) {
        std::vector<int> code{n};
        code.insert(code.end(), static_cast<size_t>(n), 0);
        f.add(code, QRat(-1));
    }
    return f;
}

namespace {

// Remove the rightmost leaf child of every internal vertex; empty result
// when some internal vertex lacks one (the tree is outside PT_L).
bool strip_rightmost(const SchroederTree& t, PlaneTree& out) {
    if (t.is_leaf()) {
        out = PlaneTree();
        return true;
    }
    const auto& kids = t.children();
    if (!kids.back().is_leaf()) return false;
    std::vector<PlaneTree> mapped;
    for (size_t i = 0; i + 1 < kids.size(); ++i) {
        PlaneTree sub;
        if (!strip_rightmost(kids[i], sub)) return false;
        mapped.push_back(std::move(sub));
    }
    out = PlaneTree::node(std::move(mapped));
    return true;
}

}  // namespace

PlaneTreeSeries alpha(const TreeSeries& p) {
    PlaneTreeSeries out;
    out.degree = p.degree;
    for (const auto& [code, c] : p.terms) {
        PlaneTree image;
        if (strip_rightmost(polish_decode(code), image)) out.add(image.code(), c);
    }
    return out;
}

namespace {

// Shortest valid plane-code prefix starting at `from`; length or 0.
size_t prefix_len(const std::vector<int>& code, size_t from) {
    long long budget = 1;
    for (size_t i = from; i < code.size(); ++i) {
        budget += code[i] - 1;
        if (budget == 0) return i - from + 1;
    }
    return 0;
}

}  // namespace

BinaryTree rotation(const PlaneTree& t) {
    std::vector<int> code = t.code();
    if (code == kVertexCode) return BinaryTree::leaf();
    // S^I = Omega(S^{I1}) S^{I2}: undo the Omega on the first entry, then
    // split the rest as two consecutive plane codes.
    std::vector<int> rest = code;
    rest[0] -= 1;
    size_t l1 = prefix_len(rest, 0);
    if (l1 == 0 || l1 == rest.size()) throw std::invalid_argument("rotation: malformed code");
    std::vector<int> I1(rest.begin(), rest.begin() + static_cast<long>(l1));
    std::vector<int> I2(rest.begin() + static_cast<long>(l1), rest.end());
    return BinaryTree::node(rotation(PlaneTree::from_code(I1)), rotation(PlaneTree::from_code(I2)));
}

namespace {

Int binomial(int n, int k) {
    Int b = 1;
    for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
    return b;
}

Int ode_coefficient(const PlaneTree& t) {
    // c_t = (n choose |t1|,...,|tk|) prod c_{ti} for t on n+1 vertices
    if (t.arity() == 0) return 1;
    Int c = 1;
    int remaining = t.vertex_count() - 1;
    for (const auto& k : t.children()) {
        int sz = k.vertex_count();
        c *= binomial(remaining, sz);
        remaining -= sz;
        c *= ode_coefficient(k);
    }
    return c;
}

}  // namespace

std::vector<PlaneTreeSeries> ode_solve(int N) {
    std::vector<PlaneTreeSeries> X(static_cast<size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) {
        X[static_cast<size_t>(n)].degree = n - 1;
        for (const auto& t : plane_trees(n))
            X[static_cast<size_t>(n)].add(t.code(), QRat(ode_coefficient(t)));
    }
    return X;
}

std::vector<PlaneTreeSeries> ode_solve_quadratic(int N) {
    std::vector<PlaneTreeSeries> X(static_cast<size_t>(N) + 1);
    if (N >= 1) X[1] = cat_identity(0);
    for (int k = 2; k <= N; ++k) {
        X[static_cast<size_t>(k)].degree = k - 1;
        for (int n = 1; n <= k - 1; ++n) {
            const int m = k - n;
            QRat c(binomial(k - 1, n - 1));
            for (const auto& [cn, vn] : X[static_cast<size_t>(n)].terms)
                for (const auto& [cm, vm] : X[static_cast<size_t>(m)].terms) {
                    std::vector<int> code = cn;
                    code[0] += 1;
                    code.insert(code.end(), cm.begin(), cm.end());
                    X[static_cast<size_t>(k)].add(code, c * vn * vm);
                }
        }
    }
    return X;
}

long long hook_count(const PlaneTree& t) {
    Int denom = 1;
    for (int h : hook_lengths(t)) denom *= h;
    Int num = 1;
    for (int j = 2; j <= t.vertex_count(); ++j) num *= j;
    Int c = num / denom;
    if (c * denom != num) throw std::logic_error("hook_count: non-integral hook quotient");
    return static_cast<long long>(c);
}

long long decreasing_labelings(const PlaneTree& t) {
    const int n = t.vertex_count();
    if (n > 8) throw std::invalid_argument("decreasing_labelings: n <= 8");
    // parent index of each vertex in preorder
    std::vector<int> parent;
    auto walk = [&](auto&& self, const PlaneTree& s, int par) -> void {
        int me = static_cast<int>(parent.size());
        parent.push_back(par);
        for (const auto& k : s.children()) self(self, k, me);
    };
    walk(walk, t, -1);
    std::vector<int> label(static_cast<size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        for (int v = 1; v < n && ok; ++v)
            if (label[static_cast<size_t>(v)] > label[static_cast<size_t>(parent[static_cast<size_t>(v)])])
                ok = false;
        if (ok) ++count;
    } while (std::next_permutation(label.begin(), label.end()));
    return count;
}

}  // namespace ncconj

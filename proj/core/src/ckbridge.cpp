#include "ncconj/ckbridge.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ncconj {

CKCoproduct ck_coproduct_forest(const CKForest& F) {
    CKCoproduct acc{{{CKForest{}, CKForest{}}, 1}};
    for (const auto& T : F) {
        CKCoproduct next;
        for (const auto& [pairF, mF] : acc)
            for (const auto& [pairT, mT] : ck_coproduct(T)) {
                CKForest trunk = pairF.first;
                trunk.insert(trunk.end(), pairT.first.begin(), pairT.first.end());
                CKForest prune = pairF.second;
                prune.insert(prune.end(), pairT.second.begin(), pairT.second.end());
                std::sort(trunk.begin(), trunk.end());
                std::sort(prune.begin(), prune.end());
                next[{std::move(trunk), std::move(prune)}] += mF * mT;
            }
        acc = std::move(next);
    }
    return acc;
}

CKCoproduct ck_coproduct(const DecoratedTree& T) {
    CKCoproduct out;
    out[{CKForest{}, CKForest{T}}] += 1;  // the cut above the root
    for (const auto& [pair, m] : ck_coproduct_forest(T.children())) {
        DecoratedTree trunk(T.decoration(), pair.first);
        out[{CKForest{std::move(trunk)}, pair.second}] += m;
    }
    return out;
}

void CKCharacter::set(const DecoratedTree& T, QRat v) {
    if (T.weight() > bound_) throw std::invalid_argument("CKCharacter: tree beyond the table");
    table_[T] = std::move(v);
}

QRat CKCharacter::on_tree(const DecoratedTree& T) const {
    if (T.weight() > bound_)
        throw std::out_of_range("CKCharacter: tree weight exceeds the table bound");
    auto it = table_.find(T);
    return it == table_.end() ? QRat() : it->second;
}

QRat CKCharacter::on_forest(const CKForest& F) const {
    QRat v(1);
    for (const auto& T : F) {
        v *= on_tree(T);
        if (v.is_zero()) break;
    }
    return v;
}

CKCharacter theta(int weight_bound) {
    CKCharacter chi(weight_bound);
    for (int w = 1; w <= weight_bound; ++w)
        for (const auto& T : decorated_trees_of_weight(w)) {
            QRat v = QRat(IntPoly::qn(T.weight())).inv();
            for (const auto& child : T.children()) v *= chi.on_tree(child);
            chi.set(T, v);
        }
    return chi;
}

CKCharacter phi0(int weight_bound) {
    CKCharacter chi(weight_bound);
    for (int w = 1; w <= weight_bound; ++w)
        for (const auto& T : decorated_trees_of_weight(w))
            chi.set(T, T.children().empty() ? QRat(1) : QRat());
    return chi;
}

QRat ck_convolve(const CKCharacter& a, const CKCharacter& b, const CKForest& F) {
    QRat acc;
    for (const auto& [pair, m] : ck_coproduct_forest(F))
        acc += QRat(m) * a.on_forest(pair.first) * b.on_forest(pair.second);
    return acc;
}

TruncSeries<QRat> arborified_monomial(const DecoratedTree& T, const std::vector<Rational>& u,
                                      int N) {
    const int n = T.decoration();
    if (n > static_cast<int>(u.size()))
        throw std::invalid_argument("arborified_monomial: u too short");
    TruncSeries<QRat> result(N);
    // group the (sorted) children into distinct trees with multiplicities
    std::vector<std::pair<DecoratedTree, int>> groups;
    for (const auto& c : T.children()) {
        if (!groups.empty() && groups.back().first == c)
            groups.back().second += 1;
        else
            groups.emplace_back(c, 1);
    }
    int s = 0;
    TruncSeries<QRat> prod(N);
    prod[0] = QRat(1);
    Rational denom = 1;
    for (const auto& [child, mult] : groups) {
        s += mult;
        TruncSeries<QRat> a = arborified_monomial(child, u, N);
        for (int j = 0; j < mult; ++j) prod = prod * a;
        for (int j = 2; j <= mult; ++j) denom *= j;
    }
    if (s > n + 1) return TruncSeries<QRat>(N);  // derivative kills u_n z^{n+1}
    // (1/prod a_i!) * prod A_{T_i}^{a_i} * d^s(u_n z^{n+1})
    Rational fall = 1;
    for (int j = 0; j < s; ++j) fall *= (n + 1 - j);
    Rational scalar = u[static_cast<size_t>(n) - 1] * fall / denom;
    IntPoly num(Int(numerator(scalar)));
    IntPoly den(Int(denominator(scalar)));
    QRat c(num, den);
    TruncSeries<QRat> shifted(N);
    const int power = n + 1 - s;
    for (int k = 0; k + power <= N; ++k) shifted[k + power] = c * prod[k];
    return shifted;
}

TruncSeries<QRat> rho_u(const CKCharacter& phi, const std::vector<Rational>& u, int N) {
    TruncSeries<QRat> out = TruncSeries<QRat>(N);
    if (N >= 1) out[1] = QRat(1);  // the empty tree contributes A_{empty} = z
    for (int w = 1; w <= N - 1 && w <= phi.weight_bound(); ++w)
        for (const auto& T : decorated_trees_of_weight(w)) {
            QRat c = phi.on_tree(T);
            if (c.is_zero()) continue;
            TruncSeries<QRat> a = arborified_monomial(T, u, N);
            for (int k = 0; k <= N; ++k) out[k] += c * a[k];
        }
    return out;
}

TreeSeries sk_star(const CKCharacter& phi, int N) {
    TreeSeries s;
    s.degree = N;
    for (int g = 0; g <= N; ++g)
        for (const auto& t : schroeder_trees(g + 1)) s.add(polish_encode(t), phi.on_forest(skeleton(t)));
    return s;
}

TruncSeries<QRat> alpha_u(const TreeSeries& p, const std::vector<Rational>& u) {
    TruncSeries<QRat> out(p.degree + 1);
    for (const auto& [code, c] : p.terms) {
        QRat v = c;
        int leaves = 0;
        for (int e : code) {
            if (e == 0) {
                ++leaves;
                continue;
            }
            if (e > static_cast<int>(u.size())) throw std::invalid_argument("alpha_u: u too short");
            Rational un = u[static_cast<size_t>(e) - 1];
            v *= QRat(IntPoly(Int(numerator(un))), IntPoly(Int(denominator(un))));
            if (v.is_zero()) break;
        }
        if (leaves <= p.degree + 1) out[leaves] += v;
    }
    return out;
}

bool diagram_check(const CKCharacter& phi, const std::vector<Rational>& u, int N) {
    TreeSeries lifted = sk_star(phi, N);
    TruncSeries<QRat> via_operad = alpha_u(lifted, u);
    TruncSeries<QRat> direct = rho_u(phi, u, N + 1);
    return via_operad == direct;
}

CKCharacter random_character(int weight_bound, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    CKCharacter chi(weight_bound);
    for (int w = 1; w <= weight_bound; ++w)
        for (const auto& T : decorated_trees_of_weight(w))
            chi.set(T, QRat(IntPoly(num(rng)), IntPoly(den(rng))));
    return chi;
}

std::vector<Rational> random_u(int count, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> u;
    for (int i = 0; i < count; ++i) u.emplace_back(num(rng), den(rng));
    return u;
}

}  // namespace ncconj

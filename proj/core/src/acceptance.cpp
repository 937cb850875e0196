#include "ncconj/acceptance.hpp"

#include "ncconj/catalan.hpp"
#include "ncconj/ckbridge.hpp"
#include "ncconj/conjugacy.hpp"
#include "ncconj/json_io.hpp"
#include "ncconj/operad.hpp"
#include "ncconj/pqribbon.hpp"
#include "ncconj/series.hpp"

#include <map>
#include <random>
#include <sstream>

namespace ncconj::acceptance {

namespace {

using Check = std::pair<bool, std::string>;

NSymElement smono(std::initializer_list<int> key, QRat c = QRat(1)) {
    return NSymElement::monomial(Basis::S, PseudoComposition(key), std::move(c));
}

NSymElement rmono(std::initializer_list<int> key, QRat c = QRat(1)) {
    return NSymElement::monomial(Basis::R, PseudoComposition(key), std::move(c));
}

QRat qn(int n) { return QRat(IntPoly::qn(n)); }
QRat qpow(int k) { return QRat(IntPoly::monomial(1, k)); }
QRat one_minus_q_to(int n) { return QRat(-IntPoly::qn(n)); }  // 1 - q^n

// ---- criterion 1: golden tg values ----

Check criterion_golden_tg(const std::string& golden_dir) {
    auto series = poincare_triangular(3);
    // the displayed expansions, built term by term
    NSymElement tg1 = smono({1});
    NSymElement tg2 = smono({2}, qn(1)) + smono({1, 1}, QRat(2));
    NSymElement tg3 = smono({3}, QRat(IntPoly::q_pochhammer(2))) + smono({2, 1}, QRat(3) * qn(2)) +
                      smono({1, 2}, QRat(2) * qn(1)) + smono({1, 1, 1}, QRat(IntPoly({5, 1})));
    NSymElement rg1 = rmono({1});
    NSymElement rg2 = rmono({2}, QRat(IntPoly({1, 1}))) + rmono({1, 1}, QRat(2));
    NSymElement rg3 = rmono({3}, QRat(IntPoly({1, 1})) * QRat(IntPoly({1, 1, 1}))) +
                      rmono({2, 1}, QRat(IntPoly({2, 1, 3}))) +
                      rmono({1, 2}, QRat(3) * QRat(IntPoly({1, 1}))) +
                      rmono({1, 1, 1}, QRat(IntPoly({5, 1})));
    std::ostringstream detail;
    bool ok = true;
    if (!(series.tg_at(1) == tg1 && series.tg_at(2) == tg2 && series.tg_at(3) == tg3)) {
        ok = false;
        detail << "S-basis tg differs from the displayed expansion; ";
    }
    if (!(to_R(series.tg_at(1)) == rg1 && to_R(series.tg_at(2)) == rg2 &&
          to_R(series.tg_at(3)) == rg3)) {
        ok = false;
        detail << "R-basis tg differs from the displayed expansion; ";
    }
    // golden files, coefficient-by-coefficient
    try {
        auto golden_s = io::nsym_from_json(io::read_file(golden_dir + "/tg_s.json"));
        auto golden_r = io::nsym_from_json(io::read_file(golden_dir + "/tg_r.json"));
        NSymElement all_s = series.tg_at(1) + series.tg_at(2) + series.tg_at(3);
        NSymElement all_r = to_R(series.tg_at(1)) + to_R(series.tg_at(2)) + to_R(series.tg_at(3));
        if (!(all_s == golden_s)) ok = false, detail << "S-basis golden file mismatch; ";
        if (!(all_r == golden_r)) ok = false, detail << "R-basis golden file mismatch; ";
    } catch (const std::exception& e) {
        ok = false;
        detail << e.what();
    }
    return {ok, detail.str()};
}

// ---- criterion 2: triple-oracle agreement ----

Check criterion_triple_oracle() {
    const int N = 7;
    auto tri = poincare_triangular(N);
    auto tree = poincare_tree(N);
    auto quad = poincare_quadratic(N);
    auto quad_tree = poincare_quadratic(N, true);
    auto collapsed = tree.collapsed();
    for (int n = 0; n <= N; ++n) {
        if (!(collapsed.tg_at(n) == tri.tg_at(n)))
            return {false, "tree solver (S0=1) differs from triangular at degree " +
                               std::to_string(n)};
        if (!(quad.tg_at(n) == tri.tg_at(n)))
            return {false, "quadratic solver differs from triangular at degree " +
                               std::to_string(n)};
        if (!(quad_tree.tg_at(n) == tree.tg_at(n)))
            return {false, "tree-resolved quadratic differs from the tree expansion at degree " +
                               std::to_string(n)};
    }
    return {true, ""};
}

// ---- criterion 3: ribbon positivity, counting, tables ----

Check criterion_ribbon(const std::string& golden_dir) {
    auto rib = ribbon_expansion(8);
    for (int n = 1; n <= 8; ++n) {
        Int fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        for (const auto& [key, c] : rib[static_cast<size_t>(n)].terms()) {
            if (!c.is_polynomial())
                return {false, "non-polynomial ribbon coefficient at degree " + std::to_string(n)};
            Int at1 = 0;
            for (const auto& coef : c.num().coeffs()) {
                if (coef < 0)
                    return {false,
                            "negative ribbon coefficient at degree " + std::to_string(n)};
                at1 += coef;
            }
            if (at1 != fact)
                return {false, "ribbon coefficient at q=1 is not n! at degree " +
                                   std::to_string(n)};
        }
    }
    // full C_I tables for n = 3, 4 against the golden files, entry for entry
    for (int n : {3, 4}) {
        RibbonTable computed = ribbon_table(n);
        RibbonTable golden;
        try {
            golden = io::ribbon_table_from_json(
                io::read_file(golden_dir + "/ctable_n" + std::to_string(n) + ".json"));
        } catch (const std::exception& e) {
            return {false, e.what()};
        }
        if (golden.columns != computed.columns)
            return {false, "table column sets differ at n = " + std::to_string(n)};
        std::map<Permutation, std::vector<long long>> got;
        for (const auto& row : computed.rows) got[row.sigma] = row.exponents;
        if (got.size() != golden.rows.size())
            return {false, "table row counts differ at n = " + std::to_string(n)};
        for (const auto& row : golden.rows) {
            auto it = got.find(row.sigma);
            if (it == got.end() || it->second != row.exponents)
                return {false, "table entry mismatch at n = " + std::to_string(n)};
        }
    }
    // the permutation statistic reproduces the solver coefficients up to n = 6
    for (int n = 1; n <= 6; ++n)
        for (const auto& I : compositions_of(n))
            if (!(QRat(ribbon_coeff(I)) == rib[static_cast<size_t>(n)].coeff(I)))
                return {false, "sum of C_I(sigma) differs from the R-coefficient at " +
                                   composition_str(I)};
    return {true, ""};
}

// ---- criterion 4: tree-coefficient spot checks ----

Check criterion_tree_spots() {
    auto t_example = polish_decode({2, 1, 0, 0, 1, 0, 3, 0, 0, 0, 0, 0});
    QRat m = tree_coefficient(t_example);
    IntPoly den = IntPoly::qn(7) * IntPoly::qn(4) * IntPoly::qn(3) * IntPoly::qn(1);
    if (!(m == QRat(IntPoly(1), den))) return {false, "m_{210010300000} mismatch"};

    auto bin = BinaryTree::from_schroeder(polish_decode({1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0}));
    QRat r51 = ribbon_from_tree(bin, {5, 1});
    QRat want = QRat(IntPoly::qn(5) * IntPoly::qn(4), IntPoly::qn(2) * IntPoly::qn(1)) * qpow(4);
    if (!(r51 == want)) return {false, "R_51 coefficient from T(1101100011000) mismatch"};

    QRat hook = q_hook_binary(bin);
    QRat want_hook =
        QRat(IntPoly::qn(5) * IntPoly::qn(4), IntPoly::qn(2) * IntPoly::qn(1)) * qpow(5);
    if (!(hook == want_hook)) return {false, "q-hook example mismatch"};
    return {true, ""};
}

// ---- criterion 5: bijections and triduplicial axioms ----

Check criterion_bijections() {
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : schroeder_trees(n))
            if (!(psi(phi(t)) == t))
                return {false, "phi/psi round trip failed at " + std::to_string(n) + " leaves"};

    auto bt = BinaryTree::from_code({1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0});
    if (phi(bt).str() != "1124455668") return {false, "binary worked example mismatch"};
    auto barred = QuasiRibbon::parse("11|244|5566|8");
    if (!(phi(psi(barred)) == barred)) return {false, "Schroeder worked example mismatch"};

    // the five l-splits of the 112445566X family
    struct SplitCase {
        std::vector<int> word;
        int l;
        std::string left, right;
    };
    const std::vector<SplitCase> cases = {
        {{1, 1, 2, 4, 4, 5, 5, 6, 6, 6}, 9, "", "112445566"},
        {{1, 1, 2, 4, 4, 5, 5, 6, 6, 7}, 8, "1", "11244556"},
        {{1, 1, 2, 4, 4, 5, 5, 6, 6, 8}, 6, "122", "112445"},
        {{1, 1, 2, 4, 4, 5, 5, 6, 6, 9}, 4, "12233", "1124"},
        {{1, 1, 2, 4, 4, 5, 5, 6, 6, 10}, 0, "112445566", ""},
    };
    for (const auto& c : cases) {
        auto sp = psi_split(c.word);
        auto str_of = [](const std::vector<int>& v) {
            std::string s;
            for (int x : v) s += std::to_string(x);
            return s;
        };
        if (sp.l != c.l || str_of(sp.left) != c.left || str_of(sp.right) != c.right)
            return {false, "psi split mismatch for 112445566 family"};
    }

    // seven triduplicial axioms, exhaustively at total length <= 6, both encodings
    std::vector<QuasiRibbon> small;
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : quasi_ribbons(n)) small.push_back(w);
    auto prec = [](const QuasiRibbon& a, const QuasiRibbon& b) { return tridup(Tridup::Prec, a, b); };
    auto circ = [](const QuasiRibbon& a, const QuasiRibbon& b) { return tridup(Tridup::Circ, a, b); };
    auto succ = [](const QuasiRibbon& a, const QuasiRibbon& b) { return tridup(Tridup::Succ, a, b); };
    for (const auto& x : small)
        for (const auto& y : small)
            for (const auto& z : small) {
                if (x.length() + y.length() + z.length() > 6) continue;
                bool ok = prec(prec(x, y), z) == prec(x, prec(y, z)) &&
                          circ(circ(x, y), z) == circ(x, circ(y, z)) &&
                          succ(succ(x, y), z) == succ(x, succ(y, z)) &&
                          prec(succ(x, y), z) == succ(x, prec(y, z)) &&
                          prec(circ(x, y), z) == circ(x, prec(y, z)) &&
                          circ(succ(x, y), z) == succ(x, circ(y, z)) &&
                          succ(circ(x, y), z) == circ(x, succ(y, z));
                if (!ok) return {false, "triduplicial axiom failed on quasi-ribbons"};
                // code encoding commutes with phi/psi, so the axioms transport
                auto code_of = [](const QuasiRibbon& w) { return polish_encode(psi(w)); };
                for (auto op : {Tridup::Prec, Tridup::Circ, Tridup::Succ}) {
                    if (tridup_codes(op, code_of(x), code_of(y)) != code_of(tridup(op, x, y)))
                        return {false, "code encoding does not commute with phi/psi"};
                }
            }
    return {true, ""};
}

// ---- criterion 6: Schroeder's equation ----

Check criterion_schroder() {
    auto f = schroder_f(10);
    // displayed f_1, f_2, f_3
    NSymElement f1 = QRat(IntPoly(1), -IntPoly::qn(1)) * smono({1});
    NSymElement f2 = one_minus_q_to(2).inv() * smono({2}) +
                     (qpow(1) / (one_minus_q_to(1) * one_minus_q_to(2))) *
                         product_S(smono({1}), s_of_mA(1, 2));
    NSymElement f3 =
        one_minus_q_to(3).inv() * smono({3}) +
        (qpow(2) / (one_minus_q_to(2) * one_minus_q_to(3))) *
            product_S(smono({2}), s_of_mA(1, 3)) +
        (qpow(1) / (one_minus_q_to(1) * one_minus_q_to(3))) *
            product_S(smono({1}), s_of_mA(2, 2)) +
        (qpow(3) / (one_minus_q_to(1) * one_minus_q_to(2) * one_minus_q_to(3))) *
            product_S(product_S(smono({1}), s_of_mA(1, 2)), s_of_mA(1, 3));
    if (!(f[1] == f1 && f[2] == f2 && f[3] == f3))
        return {false, "f_1..f_3 differ from the displayed expansions"};

    // exact composition f(h(z)) = z to degree 10 at q0 in {3, 5/2, -3}
    auto g = poincare_triangular(10);
    std::vector<NSymElement> g_parts;
    for (int n = 0; n <= 9; ++n) g_parts.push_back(g.g(n));
    std::vector<NSymElement> f_parts(f.begin(), f.begin() + 10);
    for (const Rational& q0 : {Rational(3), Rational(5, 2), Rational(-3)}) {
        auto gv = specialize_series_at(g_parts, Alphabet::MINUS_ONE, q0);
        auto fv = specialize_series_at(f_parts, Alphabet::MINUS_ONE, q0);
        TruncSeries<Rational> h(10), fs(10);
        for (int n = 0; n <= 9; ++n) {
            h[n + 1] = gv[static_cast<size_t>(n)];
            fs[n + 1] = fv[static_cast<size_t>(n)];
        }
        if (!(fs.compose(h) == TruncSeries<Rational>::identity(10)))
            return {false, "f(h(z)) != z at q0 = " + rational_str(q0)};
    }
    return {true, ""};
}

// ---- criterion 7: operad / Hopf suite ----

TreeSeries random_series(int N, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    TreeSeries s = leaf_series(N);
    for (int g = 1; g <= N; ++g)
        for (const auto& t : schroeder_trees(g + 1)) s.add(polish_encode(t), QRat(num(rng)));
    return s;
}

Check criterion_operad_hopf() {
    // group axioms and inverse laws at truncation 5
    auto p = random_series(5, 11);
    auto q = random_series(5, 22);
    auto r = random_series(5, 33);
    if (!(group_compose(group_compose(p, q), r) == group_compose(p, group_compose(q, r))))
        return {false, "operadic composition is not associative"};
    auto pinv = group_inverse(p);
    if (!(group_compose(p, pinv) == leaf_series(5) && group_compose(pinv, p) == leaf_series(5)))
        return {false, "group inverse law failed"};

    // f_c inverse coefficients
    auto gc = group_inverse(corolla_series(6));
    for (int g = 0; g <= 6; ++g)
        for (const auto& t : schroeder_trees(g + 1))
            if (!(gc.coeff(polish_encode(t)) == QRat(t.internal_count() % 2 ? -1 : 1)))
                return {false, "f_c inverse coefficient differs from (-1)^{i(t)}"};

    // coassociativity of Delta_PT (trees <= 6 leaves)
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : schroeder_trees(n)) {
            std::map<std::tuple<PTForest, PTForest, PTForest>, long long> lhs, rhs;
            for (const auto& [pair, m] : coproduct_PT(t)) {
                PTForest trunk;
                if (pair.first != PseudoComposition{0}) trunk.push_back(pair.first);
                for (const auto& [pair2, m2] : coproduct_PT_forest(trunk))
                    lhs[{pair2.first, pair2.second, pair.second}] += m * m2;
                for (const auto& [pair2, m2] : coproduct_PT_forest(pair.second))
                    rhs[{trunk, pair2.first, pair2.second}] += m * m2;
            }
            if (lhs != rhs) return {false, "Delta_PT is not coassociative"};
        }

    // coassociativity of Delta_CK (decorated trees of weight <= 5)
    for (int w = 1; w <= 5; ++w)
        for (const auto& T : decorated_trees_of_weight(w)) {
            std::map<std::tuple<CKForest, CKForest, CKForest>, long long> lhs, rhs;
            for (const auto& [pair, m] : ck_coproduct(T)) {
                for (const auto& [pair2, m2] : ck_coproduct_forest(pair.first))
                    lhs[{pair2.first, pair2.second, pair.second}] += m * m2;
                for (const auto& [pair2, m2] : ck_coproduct_forest(pair.second))
                    rhs[{pair.first, pair2.first, pair2.second}] += m * m2;
            }
            if (lhs != rhs) return {false, "Delta_CK is not coassociative"};
        }

    // sk is a coalgebra morphism (trees <= 7 leaves)
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : schroeder_trees(n)) {
            std::map<CKPair, long long> lhs;
            for (const auto& [pair, m] : coproduct_PT(t)) {
                CKForest trunk = skeleton(polish_decode(pair.first));
                CKForest prune;
                for (const auto& f : pair.second) {
                    CKForest sk_f = skeleton(polish_decode(f));
                    prune.insert(prune.end(), sk_f.begin(), sk_f.end());
                }
                std::sort(prune.begin(), prune.end());
                lhs[{trunk, prune}] += m;
            }
            CKForest skt = skeleton(t);
            auto rhs = ck_coproduct_forest(skt);
            if (lhs != std::map<CKPair, long long>(rhs.begin(), rhs.end()))
                return {false, "sk is not a coalgebra morphism"};
        }

    // character convolution = group composition (trees <= 6 leaves)
    auto comp = group_compose(p, q);
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : schroeder_trees(n))
            if (!(pt_convolution(p, q, t) == comp.coeff(polish_encode(t))))
                return {false, "character convolution differs from group composition"};

    // theta o sk = conjugacy character, trees <= 8 leaves
    auto th = theta(7);
    auto cc = conjugacy_character(7);
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : schroeder_trees(n))
            if (!(th.on_forest(skeleton(t)) == cc.coeff(polish_encode(t))))
                return {false, "theta o sk differs from the conjugacy character"};

    // commuting diagram, 20 random rational instances at N = 6
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto chi = random_character(5, seed);
        auto u = random_u(8, seed);
        if (!diagram_check(chi, u, 6))
            return {false, "alpha_u o sk* != rho_u at seed " + std::to_string(seed)};
    }
    return {true, ""};
}

// ---- criterion 8: Catalan suite ----

Check criterion_catalan() {
    auto X = ode_solve(4);
    auto expect = [](std::initializer_list<std::pair<std::vector<int>, int>> terms, int deg) {
        PlaneTreeSeries s;
        s.degree = deg;
        for (const auto& [code, c] : terms) s.add(code, QRat(c));
        return s;
    };
    if (!(X[1] == expect({{{0}, 1}}, 0) && X[2] == expect({{{1, 0}, 1}}, 1) &&
          X[3] == expect({{{2, 0, 0}, 2}, {{1, 1, 0}, 1}}, 2) &&
          X[4] == expect({{{3, 0, 0, 0}, 6},
                          {{2, 1, 0, 0}, 3},
                          {{2, 0, 1, 0}, 3},
                          {{1, 2, 0, 0}, 2},
                          {{1, 1, 1, 0}, 1}},
                         3)))
        return {false, "X_1..X_4 differ from the displayed list"};
    auto X2 = ode_solve_quadratic(4);
    for (int n = 1; n <= 4; ++n)
        if (!(X[static_cast<size_t>(n)] == X2[static_cast<size_t>(n)]))
            return {false, "quadratic ODE route disagrees"};

    for (int n = 1; n <= 7; ++n)
        for (const auto& t : plane_trees(n))
            if (hook_count(t) != decreasing_labelings(t))
                return {false, "hook count differs from the labeling count"};

    // rotation bijective for plane trees <= 9 vertices
    for (int n = 1; n <= 9; ++n) {
        std::set<std::vector<int>> images;
        for (const auto& t : plane_trees(n)) {
            BinaryTree b = rotation(t);
            if (b.internal_count() != n - 1) return {false, "rotation changes the size"};
            images.insert(b.code());
        }
        if (images.size() != plane_trees(n).size())
            return {false, "rotation is not injective on " + std::to_string(n) + " vertices"};
        if (images.size() != binary_trees(n - 1).size())
            return {false, "rotation is not surjective on " + std::to_string(n) + " vertices"};
    }

    // x^{(4)} multiplicities: group T_4 by the underlying non-plane tree
    std::map<std::vector<int>, std::pair<long long, long long>> classes;  // key -> (aut, count)
    auto canon = [](auto&& self, const PlaneTree& t) -> std::pair<std::vector<int>, long long> {
        std::vector<std::pair<std::vector<int>, long long>> kids;
        long long aut = 1;
        for (const auto& k : t.children()) {
            kids.push_back(self(self, k));
            aut *= kids.back().second;
        }
        std::sort(kids.begin(), kids.end());
        for (size_t i = 0; i < kids.size();) {
            size_t j = i;
            while (j < kids.size() && kids[j].first == kids[i].first) ++j;
            for (size_t m = 2; m <= j - i; ++m) aut *= static_cast<long long>(m);
            i = j;
        }
        std::vector<int> key{static_cast<int>(kids.size())};
        for (const auto& [kk, ka] : kids) key.insert(key.end(), kk.begin(), kk.end());
        return {key, aut};
    };
    std::multiset<long long> mults;
    std::set<std::vector<int>> seen;
    for (const auto& t : plane_trees(4)) {
        auto [key, aut] = canon(canon, t);
        if (seen.insert(key).second) mults.insert(hook_count(t) / aut);
    }
    if (mults != std::multiset<long long>{1, 1, 1, 3})
        return {false, "x^{(4)} multiplicities are not (1,3,1,1)"};
    return {true, ""};
}

// ---- criterion 9: numeric appendix ----

Check criterion_numeric() {
    // logistic g_3 closed form
    auto g = poincare_triangular(12);
    std::vector<NSymElement> g_parts;
    for (int n = 0; n <= 12; ++n) g_parts.push_back(g.g(n));
    auto gq = specialize_series(g_parts, Alphabet::MINUS_ONE);
    QRat g3_want = QRat(IntPoly({5, 1}),
                        (-IntPoly::qn(1)) * (-IntPoly::qn(2)) * (-IntPoly::qn(3)));
    if (!(gq[3] == g3_want)) return {false, "logistic g_3 closed form mismatch"};
    auto grec = logistic_recurrence(12);
    for (int n = 0; n <= 12; ++n)
        if (!(gq[static_cast<size_t>(n)] == grec[static_cast<size_t>(n)]))
            return {false, "logistic recurrence disagrees with the NSym specialization"};

    // exact Taylor coefficients at q = 2, 4, -2 for n <= 12
    for (const Rational& q0 : {Rational(2), Rational(4), Rational(-2)}) {
        auto vals = specialize_series_at(g_parts, Alphabet::MINUS_ONE, q0);
        auto oracle = logistic_oracle(q0, 12);
        for (int n = 0; n <= 12; ++n)
            if (vals[static_cast<size_t>(n)] != oracle[static_cast<size_t>(n)])
                return {false, "logistic series differs from the closed form at q = " +
                                   rational_str(q0) + ", degree " + std::to_string(n)};
    }

    // Ricker f_1..f_3 (the degree-3 numerator is pinned by the recurrence and
    // an independent functional-equation solve; the mirrored variant fails both)
    auto f = schroder_f(10);
    auto fE = specialize_series(f, Alphabet::EXP);
    QRat f1_want = one_minus_q_to(1).inv();
    QRat f2_want = QRat(IntPoly({1, 3}), IntPoly(2) * (-IntPoly::qn(1)) * (-IntPoly::qn(2)));
    QRat f3_want = QRat(IntPoly({1, 11, 8, 16}),
                        IntPoly(6) * (-IntPoly::qn(1)) * (-IntPoly::qn(2)) * (-IntPoly::qn(3)));
    if (!(fE[1] == f1_want && fE[2] == f2_want && fE[3] == f3_want))
        return {false, "Ricker f_1..f_3 mismatch"};
    // independent check of the Ricker coefficients: solve f(phi(w)) = q f(w)
    // with phi(w) = q w e^w as a plain series equation at q = 2
    {
        const int N = 6;
        const Rational q0 = 2;
        TruncSeries<Rational> phi(N);
        Rational fact = 1;
        for (int k = 1; k <= N; ++k) {
            if (k >= 2) fact *= (k - 1);
            phi[k] = q0 / fact;  // q w e^w: coefficient of w^k is q/(k-1)!
        }
        std::vector<Rational> c(static_cast<size_t>(N) + 1);
        c[1] = 1;
        for (int m = 2; m <= N; ++m) {
            // [w^m] f(phi(w)) = q c_m; lower coefficients are known
            TruncSeries<Rational> fpart(N);
            for (int j = 1; j < m; ++j) fpart[j] = c[static_cast<size_t>(j)];
            Rational lhs = fpart.compose(phi)[m];
            // the missing term c_m phi(w)^m contributes c_m q0^m
            Rational qm = 1;
            for (int j = 0; j < m; ++j) qm *= q0;
            c[static_cast<size_t>(m)] = lhs / (q0 - qm);
        }
        auto fE_at2 = specialize_series_at(f, Alphabet::EXP, q0);
        for (int n = 1; n <= 5; ++n)
            if (fE_at2[static_cast<size_t>(n)] != c[static_cast<size_t>(n) + 1])
                return {false, "Ricker series fails the functional-equation oracle"};
    }

    // A = 1: f_n = 1/(1-q)^n, the expansion of z/(1 - z/(1-q)), degree 10
    auto f1series = specialize_series(f, Alphabet::ONE);
    QRat ratio = one_minus_q_to(1).inv();
    QRat power(1);
    for (int n = 0; n <= 10; ++n) {
        if (!(f1series[static_cast<size_t>(n)] == power))
            return {false, "A=1 series differs from z/(1-z/(1-q)) at degree " +
                               std::to_string(n)};
        power *= ratio;
    }
    return {true, ""};
}

struct Criterion {
    int id;
    const char* name;
    bool golden;  // needs the golden directory
    Check (*fn_plain)();
    Check (*fn_golden)(const std::string&);
};

const Criterion kCriteria[] = {
    {1, "golden tg_1..tg_3 on S and R bases", true, nullptr, criterion_golden_tg},
    {2, "triple-oracle agreement to degree 7", false, criterion_triple_oracle, nullptr},
    {3, "ribbon positivity, n! counting, C_I tables", true, nullptr, criterion_ribbon},
    {4, "tree-coefficient spot checks", false, criterion_tree_spots, nullptr},
    {5, "bijection suite and triduplicial axioms", false, criterion_bijections, nullptr},
    {6, "Schroeder equation and exact inverse composition", false, criterion_schroder, nullptr},
    {7, "operad / Hopf algebra suite", false, criterion_operad_hopf, nullptr},
    {8, "Catalan operad suite", false, criterion_catalan, nullptr},
    {9, "numeric appendix specializations", false, criterion_numeric, nullptr},
};

}  // namespace

std::vector<CriterionResult> run(const std::string& suite, const std::string& golden_dir) {
    std::vector<CriterionResult> results;
    for (const auto& c : kCriteria) {
        if (suite == "golden" && !c.golden) continue;
        if (suite == "properties" && c.golden) continue;
        CriterionResult res;
        res.id = c.id;
        res.name = c.name;
        try {
            Check check = c.golden ? c.fn_golden(golden_dir) : c.fn_plain();
            res.passed = check.first;
            res.detail = check.second;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string report(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name;
        if (!r.detail.empty()) os << " -- " << r.detail;
        os << "\n";
    }
    return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return !results.empty();
}

}  // namespace ncconj::acceptance

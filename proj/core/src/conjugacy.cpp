#include "ncconj/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncconj {

namespace {

int key_weight(const PseudoComposition& key) {
    int w = 0;
    for (int e : key) w += e;
    return w;
}

// (q)_a / (q)_b for a >= b, as a polynomial.
IntPoly poch_ratio(int a, int b) {
    IntPoly p(1);
    for (int j = b + 1; j <= a; ++j) p *= IntPoly::qn(j);
    return p;
}

}  // namespace

NSymElement ConjugacySeries::g(int n) const {
    QRat inv_poch = QRat(IntPoly::q_pochhammer(n)).inv();
    return inv_poch * tg_at(n);
}

ConjugacySeries ConjugacySeries::collapsed() const {
    if (!tree_resolved) return *this;
    ConjugacySeries out;
    out.degree = degree;
    out.tree_resolved = false;
    for (const auto& e : tg) out.tg.push_back(collapse_s0(e));
    return out;
}

ConjugacySeries poincare_triangular(int N) {
    if (N < 0) throw std::invalid_argument("poincare_triangular: N >= 0");
    ConjugacySeries out;
    out.degree = N;
    out.tg.push_back(NSymElement::unit());
    for (int n = 1; n <= N; ++n) {
        // G[m][d] = (q)_d (g^m)_d; q-binomial factors keep everything polynomial
        const int dmax = n - 1;
        std::vector<std::vector<NSymElement>> G(
            static_cast<size_t>(n) + 2, std::vector<NSymElement>(static_cast<size_t>(dmax) + 1));
        for (int d = 0; d <= dmax; ++d)
            G[1][static_cast<size_t>(d)] = out.tg[static_cast<size_t>(d)];
        for (int m = 2; m <= n + 1; ++m)
            for (int d = 0; d <= dmax; ++d) {
                NSymElement acc;
                for (int d1 = 0; d1 <= d; ++d1) {
                    QRat c(IntPoly::q_binomial(d, d1));
                    acc += c * product_S(G[static_cast<size_t>(m) - 1][static_cast<size_t>(d1)],
                                         out.tg[static_cast<size_t>(d - d1)]);
                }
                G[static_cast<size_t>(m)][static_cast<size_t>(d)] = std::move(acc);
            }
        NSymElement tg_n;
        for (int k = 1; k <= n; ++k) {
            QRat c(poch_ratio(n - 1, n - k));
            NSymElement sk = NSymElement::monomial(Basis::S, Composition{k});
            tg_n += c * product_S(sk, G[static_cast<size_t>(k) + 1][static_cast<size_t>(n - k)]);
        }
        out.tg.push_back(std::move(tg_n));
    }
    return out;
}

ConjugacySeries poincare_tree(int N) {
    if (N < 0) throw std::invalid_argument("poincare_tree: N >= 0");
    ConjugacySeries out;
    out.degree = N;
    out.tree_resolved = true;
    for (int n = 0; n <= N; ++n) {
        NSymElement tg_n;
        QRat poch(IntPoly::q_pochhammer(n));
        for (const auto& t : schroeder_trees(n + 1))
            tg_n.add_term(polish_encode(t), poch * tree_coefficient(t));
        out.tg.push_back(std::move(tg_n));
    }
    return out;
}

NSymElement Bq_cleared(const NSymElement& a, const NSymElement& b) {
    if (a.basis() != Basis::S || b.basis() != Basis::S)
        throw std::invalid_argument("Bq requires the S basis");
    NSymElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            QRat c = ca * cb;
            PseudoComposition cat = ka;
            cat.insert(cat.end(), kb.begin(), kb.end());
            PseudoComposition one_cat;
            one_cat.reserve(cat.size() + 1);
            one_cat.push_back(1);
            one_cat.insert(one_cat.end(), cat.begin(), cat.end());
            out.add_term(one_cat, c);
            const int wa = key_weight(ka);
            if (wa > 0 && !cat.empty()) {  // q_0 = 0 kills the Omega term
                PseudoComposition om = cat;
                om[0] += 1;
                out.add_term(om, QRat(IntPoly::qn(wa)) * c);
            }
        }
    return out;
}

NSymElement Bq(const NSymElement& a, const NSymElement& b) {
    int wa = 0, wb = 0;
    if (!a.is_zero()) wa = key_weight(a.terms().begin()->first);
    if (!b.is_zero()) wb = key_weight(b.terms().begin()->first);
    for (const auto& [k, c] : a.terms())
        if (key_weight(k) != wa) throw std::invalid_argument("Bq: inhomogeneous first operand");
    for (const auto& [k, c] : b.terms())
        if (key_weight(k) != wb) throw std::invalid_argument("Bq: inhomogeneous second operand");
    QRat inv = QRat(IntPoly::qn(wa + wb + 1)).inv();
    return inv * Bq_cleared(a, b);
}

ConjugacySeries poincare_quadratic(int N, bool tree_resolved) {
    if (N < 0) throw std::invalid_argument("poincare_quadratic: N >= 0");
    ConjugacySeries out;
    out.degree = N;
    out.tree_resolved = tree_resolved;
    out.tg.push_back(tree_resolved ? NSymElement::monomial(Basis::S, PseudoComposition{0})
                                   : NSymElement::unit());
    for (int n = 1; n <= N; ++n) {
        NSymElement tg_n;
        for (int k = 0; k <= n - 1; ++k) {
            QRat c(IntPoly::q_binomial(n - 1, k));
            tg_n += c * Bq_cleared(out.tg[static_cast<size_t>(k)],
                                   out.tg[static_cast<size_t>(n - 1 - k)]);
        }
        out.tg.push_back(std::move(tg_n));
    }
    return out;
}

std::vector<NSymElement> ribbon_expansion(int N) {
    auto series = poincare_triangular(N);
    std::vector<NSymElement> out;
    for (int n = 0; n <= N; ++n) out.push_back(to_R(series.tg_at(n)));
    return out;
}

long long c_exponent(const Permutation& sigma, const Permutation& top, const Composition& I) {
    std::set<int> D;
    for (int d : descents(conjugate(I))) D.insert(d + 1);
    return inversions(sigma) - inversions(top) + inv_restricted(top, D);
}

IntPoly ribbon_coeff(const Composition& I) {
    const int n = weight(I);
    if (n > 8) throw std::invalid_argument("ribbon_coeff: n <= 8 (permutation enumeration)");
    IntPoly out;
    for (const auto& cls : sylvester_classes(n))
        for (const auto& sigma : cls.members)
            out += IntPoly::monomial(1, static_cast<int>(c_exponent(sigma, cls.top, I)));
    return out;
}

RibbonTable ribbon_table(int n) {
    RibbonTable table;
    table.n = n;
    // column order as in the paper's tables: by length, reverse-lex inside
    auto comps = compositions_of(n);
    std::sort(comps.begin(), comps.end(), [](const Composition& a, const Composition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    });
    table.columns = comps;
    for (const auto& cls : sylvester_classes(n)) {
        for (const auto& sigma : cls.members) {
            RibbonTableRow row;
            row.sigma = sigma;
            row.top = cls.top;
            for (const auto& I : comps) row.exponents.push_back(c_exponent(sigma, cls.top, I));
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

QRat ribbon_from_tree(const BinaryTree& t, const Composition& K) {
    SchroederTree s = t.as_schroeder();
    PseudoComposition I = polish_encode(s);
    const int n = t.internal_count();
    if (weight(K) != n) return QRat();
    long long dI = d_statistic(s);
    bool found = false;
    long long best_d = 0;
    for (const auto& J : anti_refinements(I)) {
        if (!is_coarsening_of(K, strip_zeros(J))) continue;
        long long dJ = d_statistic(polish_decode(J));
        if (!found || dJ < best_d) {
            best_d = dJ;
            found = true;
        }
    }
    if (!found) return QRat();
    return QRat(IntPoly::q_pochhammer(n)) * tree_coefficient(s) *
           QRat(IntPoly::monomial(1, static_cast<int>(dI - best_d)));
}

NSymElement L_op(const NSymElement& a) {
    if (a.basis() != Basis::S) throw std::invalid_argument("L_op requires the S basis");
    NSymElement out;
    for (const auto& [key, c] : a.terms()) {
        NSymElement prod = NSymElement::unit();
        int acc = 0;
        for (int part : key) {
            if (part <= 0) throw std::invalid_argument("L_op: composition keys only");
            prod = product_S(prod, s_of_mA(part, acc + 1));
            acc += part;
        }
        out += c * prod;
    }
    return out;
}

NSymElement s_over_one_minus_q(int n) {
    NSymElement out;
    for (const auto& I : compositions_of(n)) {
        IntPoly den(1);
        int acc = 0;
        for (int part : I) {
            acc += part;
            den *= -IntPoly::qn(acc);  // (1 - q^acc)
        }
        out.add_term(I, QRat(IntPoly::monomial(1, static_cast<int>(maj(I))), den));
    }
    return out;
}

NSymElement klyachko(int n) {
    NSymElement out(Basis::R);
    for (const auto& I : compositions_of(n))
        out.add_term(I, QRat(IntPoly::monomial(1, static_cast<int>(maj(I)))));
    return out;
}

std::vector<NSymElement> schroder_f(int N) {
    std::vector<NSymElement> out;
    out.push_back(NSymElement::unit());
    for (int n = 1; n <= N; ++n) out.push_back(L_op(s_over_one_minus_q(n)));
    return out;
}

std::vector<NSymElement> schroder_f_recurrence(int N) {
    std::vector<NSymElement> f;
    f.push_back(NSymElement::unit());
    for (int n = 1; n <= N; ++n) {
        NSymElement acc;
        for (int k = 0; k <= n - 1; ++k) {
            QRat qk = q_monomial(k);
            acc += qk * product_S(f[static_cast<size_t>(k)], s_of_mA(n - k, k + 1));
        }
        QRat inv = QRat(-IntPoly::qn(n)).inv();  // 1/(1-q^n)
        f.push_back(inv * acc);
    }
    return f;
}

std::vector<NSymElement> mould_F(int N) {
    std::vector<NSymElement> f;
    f.push_back(NSymElement::unit());
    for (int n = 1; n <= N; ++n) {
        NSymElement acc;
        for (int k = 0; k <= n - 1; ++k) {
            QRat qk = q_monomial(k);
            acc += qk * product_S(s_of_mA(n - k, k + 1), f[static_cast<size_t>(k)]);
        }
        QRat inv = QRat(-IntPoly::qn(n)).inv();
        f.push_back(inv * acc);
    }
    return f;
}

std::vector<NSymElement> mould_F_closed(int N) {
    // The mirror relation: the recfnb solution is the bar involution of the
    // Schroeder solution, F_n = bar(L(S_n(A/(1-q)))).
    std::vector<NSymElement> out;
    out.push_back(NSymElement::unit());
    for (int n = 1; n <= N; ++n) out.push_back(bar(L_op(s_over_one_minus_q(n))));
    return out;
}

std::vector<QRat> specialize_series(const std::vector<NSymElement>& per_degree, Alphabet alph) {
    std::vector<QRat> out;
    const int bound = static_cast<int>(per_degree.size());
    for (const auto& elem : per_degree) {
        auto coeffs = specialize(elem, alph, bound);
        QRat total;
        for (const auto& c : coeffs) total += c;
        out.push_back(total);
    }
    return out;
}

std::vector<Rational> specialize_series_at(const std::vector<NSymElement>& per_degree,
                                           Alphabet alph, const Rational& q0) {
    std::vector<Rational> out;
    for (const auto& v : specialize_series(per_degree, alph)) out.push_back(v.eval_at(q0));
    return out;
}

std::vector<QRat> logistic_recurrence(int N) {
    std::vector<QRat> g;
    g.push_back(QRat(1));
    for (int n = 1; n <= N; ++n) {
        QRat acc;
        for (int k = 0; k <= n - 1; ++k)
            acc += g[static_cast<size_t>(k)] * g[static_cast<size_t>(n - 1 - k)];
        g.push_back(QRat(-IntPoly::qn(n)).inv() * acc);
    }
    return g;
}

std::vector<Rational> logistic_oracle(const Rational& q0, int N) {
    // h(z) = sum_{n>=0} g_n z^{n+1}: Taylor coefficients of the closed forms.
    std::vector<Rational> g(static_cast<size_t>(N) + 1);
    auto factorial = [](int m) {
        Int f = 1;
        for (int k = 2; k <= m; ++k) f *= k;
        return Rational(f);
    };
    if (q0 == 2) {
        // h(z) = (1 - e^{-2z})/2: coefficient of z^m is -(-2)^m / (2 m!)
        for (int n = 0; n <= N; ++n) {
            const int m = n + 1;
            Rational p = 1;
            for (int k = 0; k < m; ++k) p *= -2;
            g[static_cast<size_t>(n)] = -p / (2 * factorial(m));
        }
    } else if (q0 == 4) {
        // h(z) = sin^2(sqrt z) = sum_{k>=1} (-1)^{k+1} 2^{2k-1} z^k / (2k)!
        for (int n = 0; n <= N; ++n) {
            const int k = n + 1;
            Rational p = 1;
            for (int j = 0; j < 2 * k - 1; ++j) p *= 2;
            if (k % 2 == 0) p = -p;
            g[static_cast<size_t>(n)] = p / factorial(2 * k);
        }
    } else if (q0 == -2) {
        // h(z) = 1/2 - cos(2z/sqrt3 + pi/3):
        //   z^{2k} (k>=1): (-1)^{k+1} 4^k / (2 3^k (2k)!)
        //   z^{2k+1}:      (-1)^k 4^k / (3^k (2k+1)!)
        for (int n = 0; n <= N; ++n) {
            const int m = n + 1;
            const int k = m / 2;
            Rational four_pow = 1, three_pow = 1;
            for (int j = 0; j < k; ++j) four_pow *= 4, three_pow *= 3;
            Rational v;
            if (m % 2 == 0)
                v = four_pow / (2 * three_pow * factorial(m));
            else
                v = four_pow / (three_pow * factorial(m));
            if ((m % 2 == 0 && k % 2 == 0) || (m % 2 == 1 && k % 2 == 1)) v = -v;
            g[static_cast<size_t>(n)] = v;
        }
    } else {
        throw std::invalid_argument("logistic_oracle: closed forms exist for q0 in {-2, 2, 4}");
    }
    return g;
}

}  // namespace ncconj

#include "qcf/corpus.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <memory>
#include <utility>

#include "qcf/errors.hpp"
#include "qcf/expand.hpp"
#include "qcf/special.hpp"

namespace qcf {

// ---------------------------------------------------------------------------
// shared exact builders
// ---------------------------------------------------------------------------

QSeries divided_by_one_minus(const QSeries& w, const Rational& c, int E) {
    if (E < 1) throw DomainError("divided_by_one_minus: exponent must be >= 1");
    QSeries u(w.order());
    for (int i = 0; i <= w.order(); ++i) {
        Rational v = w[i];
        if (i >= E) v += c * u[i - E];
        u.at(i) = v;
    }
    return u;
}

namespace {

// Multiply by c q^e within the window (drops what falls outside).
QSeries times_monomial(const QSeries& s, const Rational& c, int e) {
    QSeries r(s.order());
    for (int i = e; i <= s.order(); ++i) r.at(i) = c * s[i - e];
    return r;
}

}  // namespace

QSeries rogers_sum(const Rational& c, int e, int s, int order) {
    QSeries sum = QSeries::constant(Rational(1), order);
    QSeries t = sum;
    for (int k = 1;; ++k) {
        // t_k = t_{k-1} * x q^{2k-1+s} / (1 - q^k), x = c q^e
        t = divided_by_one_minus(times_monomial(t, c, e + 2 * k - 1 + s), Rational(1), k);
        if (t.is_zero()) break;
        sum = sum + t;
    }
    return sum;
}

QSeries g_sum(const Rational& b, const Rational& c, int e, int order) {
    QSeries sum = QSeries::constant(Rational(1), order);
    QSeries t = sum;
    for (int k = 1;; ++k) {
        // t_k = t_{k-1} * x q^{2k-1} / ((1 - q^k)(1 + b q^k)), x = c q^e
        t = divided_by_one_minus(times_monomial(t, c, e + 2 * k - 1), Rational(1), k);
        t = divided_by_one_minus(t, -b, k);
        if (t.is_zero()) break;
        sum = sum + t;
    }
    return sum;
}

QSeries big_g_sum(const Rational& a, int ae, const Rational& b, const Rational& c, int e,
                  int order) {
    QSeries sum = QSeries::constant(Rational(1), order);
    QSeries t = sum;
    for (int k = 1;; ++k) {
        // t_k = t_{k-1} * q^k (a q^{ae} + x q^{k-1}) / ((1-q^k)(1+b q^k))
        QSeries u = times_monomial(t, a, ae + k);
        u = u + times_monomial(t, c, e + k - 1 + k);
        u = divided_by_one_minus(u, Rational(1), k);
        u = divided_by_one_minus(u, -b, k);
        t = std::move(u);
        if (t.is_zero()) break;
        sum = sum + t;
    }
    return sum;
}

QSeries eisenstein_sum(const Rational& a, int order) {
    QSeries sum(order);
    Rational coef(1);
    for (int k = 0; k * (k + 1) / 2 <= order; ++k) {
        sum.at(k * (k + 1) / 2) += coef;
        coef *= -a;
    }
    return sum;
}

Rational mu_poly(long n, long s, const Rational& lambda, const Rational& q) {
    Rational sum(1);  // the k = 0 term is 1 for every n, s
    for (long k = 1; n - k - s + 1 >= k; ++k) {
        long m = n - k - s + 1;
        Rational term = evaluate_at(qbinomial(static_cast<int>(m), static_cast<int>(k)), q);
        term *= pow(lambda, k) * pow(q, k * k + s * k);
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// shape instantiation
// ---------------------------------------------------------------------------

Real evaluate_at(const QSeries& p, const Real& x) {
    Real acc(x.prec());
    for (int k = p.order(); k >= 0; --k) {
        acc = acc * x + Real::from_rational(p[k], x.prec());
    }
    return acc;
}

ContinuedFraction<QSeries> instantiate_formal(const CfShape& s, int order) {
    auto term = s.term;
    auto gen = [term, order](long k) {
        CfTerm<QSeries> t = term(k);
        return CfTerm<QSeries>{t.a.with_order(order), t.b.with_order(order)};
    };
    return ContinuedFraction<QSeries>(s.head.with_order(order), gen, s.length);
}

ContinuedFraction<Real> instantiate_numeric(const CfShape& s, const Real& q, mpfr_prec_t prec) {
    Real qq = Real::from_long(0, prec) + q;  // exact copy at >= prec bits
    auto term = s.term;
    auto gen = [term, qq](long k) {
        CfTerm<QSeries> t = term(k);
        return CfTerm<Real>{evaluate_at(t.a, qq), evaluate_at(t.b, qq)};
    };
    return ContinuedFraction<Real>(evaluate_at(s.head, qq), gen, s.length);
}

ContinuedFraction<Rational> instantiate_exact(const CfShape& s, const Rational& q) {
    auto term = s.term;
    auto gen = [term, q](long k) {
        CfTerm<QSeries> t = term(k);
        return CfTerm<Rational>{evaluate_at(t.a, q), evaluate_at(t.b, q)};
    };
    return ContinuedFraction<Rational>(evaluate_at(s.head, q), gen, s.length);
}

// ---------------------------------------------------------------------------
// local helpers for entry definitions
// ---------------------------------------------------------------------------

namespace {

const Rational& arg(const Params& p, const char* name) {
    auto it = p.find(name);
    if (it == p.end()) throw DomainError(std::string("missing parameter '") + name + "'");
    return it->second;
}

// Exact polynomial helpers (self-sized at their degree).
QSeries cpoly(const Rational& c) { return QSeries::constant(c, 0); }
QSeries mono(const Rational& c, int e) { return QSeries::monomial(c, e, e); }
QSeries poly(std::initializer_list<std::pair<Rational, int>> ms) {
    int d = 0;
    for (const auto& m : ms) d = std::max(d, m.second);
    QSeries s(d);
    for (const auto& m : ms) s.at(m.second) += m.first;
    return s;
}
QSeries one0() { return cpoly(Rational(1)); }

// Fraction with head 0, a_1 = 1, b_k = 1 and given a_k for k >= 2.
CfShape unit_shape(std::function<QSeries(long)> a) {
    return CfShape{QSeries(0),
                   [a = std::move(a)](long k) {
                       return CfTerm<QSeries>{k == 1 ? one0() : a(k), one0()};
                   },
                   std::nullopt};
}

ParamSpec ps(const char* n, ParamSpec::Kind k, long lo = 1, long hi = 10) {
    ParamSpec s;
    s.name = n;
    s.kind = k;
    s.lo = lo;
    s.hi = hi;
    return s;
}
using K = ParamSpec::Kind;

Params pt(std::initializer_list<std::pair<const char*, const char*>> kv) {
    Params p;
    for (const auto& e : kv) p[e.first] = Rational::parse(e.second);
    return p;
}

// product (c q^off; q^step)_infinity as a truncated series
QSeries poch(const Rational& c, int off, int step, int order) {
    return qpochhammer(c, off, step, kInfiniteProduct, order);
}

// ---------------------------------------------------------------------------
// numeric helpers (all at the precision of their Real arguments)
// ---------------------------------------------------------------------------

Real eps_for(mpfr_prec_t prec) {
    return pow_int(Real::from_long(2, prec), -static_cast<long>(prec) - 8);
}

// prod_{k>=0} (1 - z r^k), |r| < 1
Real num_poch_inf(Real z, const Real& r, mpfr_prec_t prec) {
    Real one = Real::from_long(1, prec);
    Real acc = one;
    Real eps = eps_for(prec);
    for (long k = 0; k < 200000; ++k) {
        acc = acc * (one - z);
        z = z * r;
        if (abs(z) < eps) return acc;
    }
    throw NonConvergentError("infinite product did not settle within its factor budget");
}

// g(b, x) = sum_k x^k q^{k^2} / ((q;q)_k (-bq;q)_k), numerically
Real num_g(const Rational& b, const Real& x, const Real& q, mpfr_prec_t prec) {
    Real one = Real::from_long(1, prec);
    Real bb = Real::from_rational(b, prec);
    Real eps = eps_for(prec);
    Real sum = one, t = one, qk = one;
    for (long k = 1; k < 100000; ++k) {
        qk = qk * q;  // q^k
        // t *= x q^{2k-1} / ((1-q^k)(1+b q^k))
        t = t * x * qk * qk / q / ((one - qk) * (one + bb * qk));
        sum = sum + t;
        if (abs(t) < eps * (one + abs(sum))) return sum;
    }
    throw NonConvergentError("series tail did not settle within its term budget");
}

// G(a_, b, x) = sum_k q^{k(k+1)/2} prod_{j<k}(a_ + x q^j) / ((q;q)_k (-bq;q)_k)
Real num_big_g(const Real& a_, const Rational& b, const Real& x, const Real& q,
               mpfr_prec_t prec) {
    Real one = Real::from_long(1, prec);
    Real bb = Real::from_rational(b, prec);
    Real eps = eps_for(prec);
    Real sum = one, t = one, qk = one, qk1 = one;  // qk = q^k, qk1 = q^{k-1}
    for (long k = 1; k < 100000; ++k) {
        qk1 = qk;
        qk = qk * q;
        t = t * qk * (a_ + x * qk1) / ((one - qk) * (one + bb * qk));
        sum = sum + t;
        if (abs(t) < eps * (one + abs(sum))) return sum;
    }
    throw NonConvergentError("series tail did not settle within its term budget");
}

// sum_k (c; r)_k x^k / (r; r)_k, |x| < 1
Real num_phi_sum(const Real& c, const Real& x, const Real& r, mpfr_prec_t prec) {
    Real one = Real::from_long(1, prec);
    Real eps = eps_for(prec);
    Real sum = one, t = one, rk = one;  // rk = r^k
    for (long k = 1; k < 100000; ++k) {
        // t *= (1 - c r^{k-1}) x / (1 - r^k)
        Real ck = one - c * rk;
        rk = rk * r;
        t = t * ck * x / (one - rk);
        sum = sum + t;
        if (abs(t) < eps * (one + abs(sum))) return sum;
    }
    throw NonConvergentError("series tail did not settle within its term budget");
}

Real rp(const Params& p, const char* n, mpfr_prec_t prec) {
    return Real::from_rational(arg(p, n), prec);
}

// ---------------------------------------------------------------------------
// entry constructors, one per catalog identity
// ---------------------------------------------------------------------------

// -- 1. III.16.38.RR: sum ratio == residue product == fraction with a_k = q^{k-1}
Entry make_rr() {
    Entry e;
    e.id = "III.16.38.RR";
    e.summary = "sum ratio, modulus-5 product, and the fraction with ladder q^{k-1}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back(
        {"sum-ratio", [](const Params&, int N) {
             return rogers_sum(Rational(1), 0, 1, N) * inverse(rogers_sum(Rational(1), 0, 0, N));
         }});
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  QSeries num = poch(Rational(1), 1, 5, N) * poch(Rational(1), 4, 5, N);
                                  QSeries den = poch(Rational(1), 2, 5, N) * poch(Rational(1), 3, 5, N);
                                  return num * inverse(den);
                              }});
    e.shape = [](const Params&) {
        return unit_shape([](long k) { return mono(Rational(1), static_cast<int>(k) - 1); });
    };
    return e;
}

// -- 2/3. III.16.39.cor.ii / III.16.39.cor.i: pinned numeric evaluations
Entry make_special_plus() {
    Entry e;
    e.id = "III.16.39.cor.ii";
    e.summary = "fraction with ratios e^{-2pi(k-1)} against its surd closed form";
    e.backend = Backend::Special;
    e.default_order = 0;
    e.special_value = special_plus_value;
    e.special_fraction = special_plus_cf;
    return e;
}

Entry make_special_minus() {
    Entry e;
    e.id = "III.16.39.cor.i";
    e.summary = "alternating fraction with ratios e^{-pi(k-1)} against its surd closed form";
    e.backend = Backend::Special;
    e.default_order = 0;
    e.special_value = special_minus_value;
    e.special_fraction = special_minus_cf;
    return e;
}

// shared g-family left side: g(b, xq)/g(b, x)
QSeries g_ratio(const Params& p, int N) {
    const Rational b = arg(p, "b");
    const Rational lam = arg(p, "lambda");
    return g_sum(b, lam, 1, N) * inverse(g_sum(b, lam, 0, N));
}

// -- 4. L.I.6.3.1.i
Entry make_g1() {
    Entry e;
    e.id = "L.I.6.3.1.i";
    e.summary = "g-ratio as a fraction alternating b q^{(k-1)/2} and lambda q^{k-1} parts";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("b", K::SmallOrZero), ps("lambda", K::SmallRational)};
    e.preferred_points = {pt({{"b", "1/2"}, {"lambda", "1/2"}}), pt({{"b", "-1/3"}, {"lambda", "2"}})};
    e.formal_sides.push_back({"sum-ratio", g_ratio});
    e.shape = [](const Params& p) {
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        return unit_shape([b, lam](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) return mono(lam, ki - 1);
            return poly({{b, (ki - 1) / 2}, {lam, ki - 1}});
        });
    };
    return e;
}

// -- 5. L.I.6.3.1.ii
Entry make_g2() {
    Entry e;
    e.id = "L.I.6.3.1.ii";
    e.summary = "g-ratio as a fraction with parts lambda q^{k-1} over 1 + b q^{k-1}";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("b", K::SmallOrZero), ps("lambda", K::SmallRational)};
    e.preferred_points = {pt({{"b", "1/2"}, {"lambda", "1/2"}}), pt({{"b", "-1/3"}, {"lambda", "2"}})};
    e.formal_sides.push_back({"sum-ratio", g_ratio});
    e.shape = [](const Params& p) {
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        return CfShape{QSeries(0),
                       [b, lam](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) return CfTerm<QSeries>{one0(), one0()};
                           return CfTerm<QSeries>{mono(lam, ki - 1),
                                                  poly({{Rational(1), 0}, {b, ki - 1}})};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 6. L.I.6.3.1.iii: numeric variant with constant denominators 1 - b
Entry make_g3() {
    Entry e;
    e.id = "L.I.6.3.1.iii";
    e.summary = "g-ratio as a fraction with parts b + lambda q^{k-1} over 1 - b";
    e.backend = Backend::Numeric;
    e.default_order = 30;
    e.params = {ps("b", K::UnitRational), ps("lambda", K::SmallRational), ps("q", K::QPoint)};
    e.preferred_points = {pt({{"b", "1/3"}, {"lambda", "1/2"}, {"q", "1/4"}}),
                          pt({{"b", "1/2"}, {"lambda", "2"}, {"q", "1/3"}}),
                          pt({{"b", "1/5"}, {"lambda", "1/2"}, {"q", "1/2"}})};
    e.numeric_sides.push_back({"sum-ratio", [](const Params& p, const Real& q, mpfr_prec_t prec) {
                                   const Rational b = arg(p, "b");
                                   Real lam = rp(p, "lambda", prec);
                                   return num_g(b, lam * q, q, prec) / num_g(b, lam, q, prec);
                               }});
    e.shape = [](const Params& p) {
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        return CfShape{QSeries(0),
                       [b, lam](long k) {
                           if (k == 1) return CfTerm<QSeries>{one0(), cpoly(Rational(1) - b)};
                           return CfTerm<QSeries>{poly({{b, 0}, {lam, static_cast<int>(k) - 1}}),
                                                  cpoly(Rational(1) - b)};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 7. L.I.6.3.1.iv: the g functional equation as a series family
Entry make_g_recurrence() {
    Entry e;
    e.id = "L.I.6.3.1.iv";
    e.summary = "three-term relation g(b,x) = (1-b) g(b,xq) + (b+xq) g(b,xq^2)";
    e.backend = Backend::Recurrence;
    e.default_order = 25;
    e.params = {ps("b", K::SmallOrZero), ps("lambda", K::SmallRational)};
    e.preferred_points = {pt({{"b", "1/2"}, {"lambda", "1/2"}}), pt({{"b", "-1/3"}, {"lambda", "2"}})};
    e.recurrence_defect = [](const Params& p, int N) {
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        std::vector<QSeries> fam;
        for (int s = 0; s < 5; ++s) fam.push_back(g_sum(b, lam, s, N));
        return three_term_defect(
            fam,
            [&](int s) { return poly({{b, 0}, {lam, s + 1}}).with_order(N); },
            [&](int s) {
                (void)s;
                return QSeries::constant(Rational(1) - b, N);
            },
            N);
    };
    return e;
}

// -- 8. III.16.15.cor: Rogers sum ratio with parameter lambda
Entry make_rogers_lambda() {
    Entry e;
    e.id = "III.16.15.cor";
    e.summary = "shifted Rogers sum ratio as the fraction with parts lambda q^{k-1}";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("lambda", K::SmallRational)};
    e.preferred_points = {pt({{"lambda", "1"}}), pt({{"lambda", "-1/2"}})};
    e.formal_sides.push_back({"sum-ratio", [](const Params& p, int N) {
                                  const Rational lam = arg(p, "lambda");
                                  return rogers_sum(lam, 0, 1, N) * inverse(rogers_sum(lam, 0, 0, N));
                              }});
    e.shape = [](const Params& p) {
        const Rational lam = arg(p, "lambda");
        return unit_shape([lam](long k) { return mono(lam, static_cast<int>(k) - 1); });
    };
    return e;
}

// -- 9. III.16.16: finite fraction against the mu-polynomial ratio, exact in q
Entry make_mu_finite() {
    Entry e;
    e.id = "III.16.16";
    e.summary = "finite fraction with parts lambda q^k equals a ratio of mu polynomials";
    e.backend = Backend::ExactFinite;
    e.default_order = 0;
    e.params = {ps("n", K::Integer, 1, 10), ps("lambda", K::PositiveSmall), ps("q", K::QPoint)};
    e.preferred_points = {pt({{"n", "4"}, {"lambda", "1"}, {"q", "1/3"}}),
                          pt({{"n", "7"}, {"lambda", "1/2"}, {"q", "1/5"}})};
    e.exact_value = [](const Params& p) {
        long n = arg(p, "n").numerator().get_si();
        const Rational lam = arg(p, "lambda");
        const Rational q = arg(p, "q");
        Rational den = mu_poly(n, 1, lam, q);
        if (den.is_zero()) throw DivisionByZeroError("mu ratio denominator vanishes", -1);
        return mu_poly(n, 0, lam, q) / den;
    };
    e.exact_fraction = [](const Params& p) {
        long n = arg(p, "n").numerator().get_si();
        const Rational lam = arg(p, "lambda");
        const Rational q = arg(p, "q");
        std::vector<CfTerm<Rational>> terms;
        for (long j = 1; j <= n; ++j) {
            terms.push_back(CfTerm<Rational>{lam * pow(q, j), Rational(1)});
        }
        return ContinuedFraction<Rational>::finite(Rational(1), std::move(terms));
    };
    return e;
}

// -- 10. III.16.13: alternating theta-like sum as a fraction
Entry make_eisenstein() {
    Entry e;
    e.id = "III.16.13";
    e.summary = "sum of (-a)^k q^{k(k+1)/2} as a fraction with split even/odd parts";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("a", K::SmallRational)};
    e.preferred_points = {pt({{"a", "1"}}), pt({{"a", "1/2"}}), pt({{"a", "-1/3"}})};
    e.formal_sides.push_back({"sum", [](const Params& p, int N) {
                                  return eisenstein_sum(arg(p, "a"), N);
                              }});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        return unit_shape([a](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) return mono(a, ki - 1);
            return poly({{a, ki - 1}, {-a, (ki - 1) / 2}});
        });
    };
    return e;
}

// -- 11. III.16.13.D: closed forms of the fraction's denominator polynomials
Entry make_eisenstein_denoms() {
    Entry e;
    e.id = "III.16.13.D";
    e.summary = "denominators Q_{2n}, Q_{2n+1} equal Gaussian-binomial sums";
    e.backend = Backend::Recurrence;
    e.default_order = 25;
    e.params = {ps("a", K::SmallRational), ps("n", K::Integer, 1, 8)};
    e.preferred_points = {pt({{"a", "1"}, {"n", "3"}}), pt({{"a", "1/2"}, {"n", "5"}}),
                          pt({{"a", "-1/3"}, {"n", "4"}})};
    e.recurrence_defect = [](const Params& p,
                             int N) -> std::optional<std::pair<int, int>> {
        const Rational a = arg(p, "a");
        int n = static_cast<int>(arg(p, "n").numerator().get_si());
        int W = std::max(N, n * (n + 1) + 4);
        CfShape s = entry("III.16.13").shape(Params{{"a", a}});
        auto cf = instantiate_formal(s, W);
        auto pq = convergents(cf, 2L * n + 1);
        auto dsum = [&](int shift) {  // sum_k a^k q^{shift k} [n k]_q
            QSeries out(W);
            Rational ak(1);
            for (int k = 0; k <= n; ++k) {
                out = out + times_monomial(qbinomial(n, k).with_order(W), ak, shift * k);
                ak *= a;
            }
            return out;
        };
        auto d0 = first_difference(pq[2 * static_cast<std::size_t>(n)].second, dsum(n), W);
        if (d0) return std::make_pair(2 * n, *d0);
        auto d1 = first_difference(pq[2 * static_cast<std::size_t>(n) + 1].second, dsum(n + 1), W);
        if (d1) return std::make_pair(2 * n + 1, *d1);
        return std::nullopt;
    };
    return e;
}

// shared G-family left side: G(aq, b, xq)/G(a, b, x)
QSeries big_g_ratio(const Params& p, int N) {
    const Rational a = arg(p, "a");
    const Rational b = arg(p, "b");
    const Rational lam = arg(p, "lambda");
    return big_g_sum(a, 1, b, lam, 1, N) * inverse(big_g_sum(a, 0, b, lam, 0, N));
}

// -- 12. L.I.6.2.1
Entry make_big_g1() {
    Entry e;
    e.id = "L.I.6.2.1";
    e.summary = "G-ratio as a fraction alternating a q^{k/2} and b q^{(k-1)/2} parts";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("a", K::SmallOrZero), ps("b", K::SmallOrZero), ps("lambda", K::SmallRational)};
    e.preferred_points = {pt({{"a", "1/2"}, {"b", "1/3"}, {"lambda", "1"}}),
                          pt({{"a", "-1/2"}, {"b", "1/4"}, {"lambda", "-1"}})};
    e.formal_sides.push_back({"sum-ratio", big_g_ratio});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        return unit_shape([a, b, lam](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) return poly({{a, ki / 2}, {lam, ki - 1}});
            return poly({{b, (ki - 1) / 2}, {lam, ki - 1}});
        });
    };
    return e;
}

// -- 13. L.I.6.4.1
Entry make_big_g2() {
    Entry e;
    e.id = "L.I.6.4.1";
    e.summary = "G-ratio as a fraction with parts lambda q^{k-1} - ab q^{2(k-1)}";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("a", K::SmallOrZero), ps("b", K::SmallOrZero), ps("lambda", K::SmallRational)};
    e.preferred_points = {pt({{"a", "1/2"}, {"b", "1/3"}, {"lambda", "1"}}),
                          pt({{"a", "-1/2"}, {"b", "1/4"}, {"lambda", "-1"}})};
    e.formal_sides.push_back({"sum-ratio", big_g_ratio});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        return CfShape{QSeries(0),
                       [a, b, lam](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) {
                               return CfTerm<QSeries>{one0(), poly({{Rational(1), 0}, {a, 1}})};
                           }
                           return CfTerm<QSeries>{
                               poly({{lam, ki - 1}, {-a * b, 2 * (ki - 1)}}),
                               poly({{Rational(1), 0}, {a, ki}, {b, ki - 1}})};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 14. T.6.4.1: numeric variant with near-constant denominators
Entry make_big_g3() {
    Entry e;
    e.id = "T.6.4.1";
    e.summary = "G-ratio as a fraction with parts aq + lambda q^{k-1} over 1 - aq + b q^{k-1}";
    e.backend = Backend::Numeric;
    e.default_order = 30;
    e.params = {ps("a", K::SmallRational), ps("b", K::SmallOrZero), ps("lambda", K::SmallRational),
                ps("q", K::QPoint)};
    e.preferred_points = {pt({{"a", "1/2"}, {"b", "1/3"}, {"lambda", "1/2"}, {"q", "1/3"}}),
                          pt({{"a", "-1/2"}, {"b", "1/4"}, {"lambda", "2"}, {"q", "1/4"}})};
    e.admissible = [](const Params& p) {
        return abs(arg(p, "a") * arg(p, "q")) < Rational(1);
    };
    e.numeric_sides.push_back({"sum-ratio", [](const Params& p, const Real& q, mpfr_prec_t prec) {
                                   const Rational b = arg(p, "b");
                                   Real a = rp(p, "a", prec);
                                   Real lam = rp(p, "lambda", prec);
                                   Real num = num_big_g(a * q, b, lam * q, q, prec);
                                   Real den = num_big_g(a, b, lam, q, prec);
                                   return num / den;
                               }});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        const Rational b = arg(p, "b");
        const Rational lam = arg(p, "lambda");
        return CfShape{QSeries(0),
                       [a, b, lam](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) return CfTerm<QSeries>{one0(), one0()};
                           return CfTerm<QSeries>{
                               poly({{a, 1}, {lam, ki - 1}}),
                               poly({{Rational(1), 0}, {-a, 1}, {b, ki - 1}})};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 15. L.I.6.2.3: the lambda = 0 ratio, fraction alternating aq^j and bq^j
Entry make_big_g_pair() {
    Entry e;
    e.id = "L.I.6.2.3";
    e.summary = "G(a,b,0)/G(aq,b,0) as the fraction with interleaved parts aq^j, bq^j";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.params = {ps("a", K::SmallRational), ps("b", K::SmallRational)};
    e.preferred_points = {pt({{"a", "1/2"}, {"b", "1/3"}}), pt({{"a", "2"}, {"b", "-1/2"}})};
    e.formal_sides.push_back({"sum-ratio", [](const Params& p, int N) {
                                  const Rational a = arg(p, "a");
                                  const Rational b = arg(p, "b");
                                  return big_g_sum(a, 0, b, Rational(0), 0, N) *
                                         inverse(big_g_sum(a, 1, b, Rational(0), 0, N));
                              }});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        const Rational b = arg(p, "b");
        return CfShape{one0(),
                       [a, b](long k) {
                           int j = static_cast<int>((k + 1) / 2);
                           return CfTerm<QSeries>{k % 2 == 1 ? mono(a, j) : mono(b, j), one0()};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 16. L.I.6.2.1.cor9: sparse theta sum as a fraction
Entry make_cor9() {
    Entry e;
    e.id = "L.I.6.2.1.cor9";
    e.summary = "sum of (-1)^k q^{3k^2+2k}(1+q^{2k+1}) as a two-power fraction";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.formal_sides.push_back({"sum", [](const Params&, int N) {
                                  QSeries s(N);
                                  int sign = 1;
                                  for (int k = 0; 3 * k * k + 2 * k <= N; ++k) {
                                      int base = 3 * k * k + 2 * k;
                                      s.at(base) += Rational(sign);
                                      if (base + 2 * k + 1 <= N) s.at(base + 2 * k + 1) += Rational(sign);
                                      sign = -sign;
                                  }
                                  return s;
                              }});
    e.shape = [](const Params&) {
        return unit_shape([](long k) {
            int ki = static_cast<int>(k);
            return poly({{Rational(1), 2 * (ki - 1)}, {Rational(-1), ki - 1}});
        });
    };
    return e;
}

// -- 17. L.I.6.2.1.cor11: pentagonal-power sum as a fraction with head 2/(2 + ...)
Entry make_cor11() {
    Entry e;
    e.id = "L.I.6.2.1.cor11";
    e.summary = "1 - sum q^{k(3k-1)/2}(1-q^k) as a fraction led by 2/(2 + ...)";
    e.backend = Backend::Formal;
    e.default_order = 30;
    e.formal_sides.push_back({"sum", [](const Params&, int N) {
                                  QSeries s = QSeries::constant(Rational(1), N);
                                  for (int k = 1; k * (3 * k - 1) / 2 <= N; ++k) {
                                      s.at(k * (3 * k - 1) / 2) -= Rational(1);
                                      if (k * (3 * k + 1) / 2 <= N) s.at(k * (3 * k + 1) / 2) += Rational(1);
                                  }
                                  return s;
                              }});
    e.shape = [](const Params&) {
        return CfShape{QSeries(0),
                       [](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) return CfTerm<QSeries>{cpoly(Rational(2)), cpoly(Rational(2))};
                           return CfTerm<QSeries>{
                               poly({{Rational(1), ki - 1}, {Rational(1), 2 * ki - 3}}), one0()};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 18. L.I.6.5.1: two fractions joined through alpha, beta with alpha beta = k
Entry make_two_fractions() {
    Entry e;
    e.id = "L.I.6.5.1";
    e.summary = "fraction with parts k + q^{j-1} equals one with denominators alpha + beta q^{j-1}";
    e.backend = Backend::Numeric;
    e.default_order = 30;
    e.params = {ps("k", K::PositiveSmall), ps("q", K::QPoint)};
    e.preferred_points = {pt({{"k", "2"}, {"q", "1/3"}}), pt({{"k", "6"}, {"q", "1/4"}})};
    e.numeric_left_fraction = [](const Params& p, const Real& q, mpfr_prec_t prec) {
        Real kk = rp(p, "k", prec);
        Real one = Real::from_long(1, prec);
        auto gen = [kk, one, q](long j) {
            if (j == 1) return CfTerm<Real>{one, one};
            return CfTerm<Real>{kk + pow_int(q, j - 1), one};
        };
        return ContinuedFraction<Real>(Real(prec), gen);
    };
    e.numeric_fraction = [](const Params& p, const Real& q, mpfr_prec_t prec) {
        Real kk = rp(p, "k", prec);
        Real one = Real::from_long(1, prec);
        Real root = sqrt(one + Real::from_long(4, prec) * kk);
        Real alpha = (one + root) / Real::from_long(2, prec);
        Real beta = alpha - one;
        auto gen = [alpha, beta, one, q](long j) {
            if (j == 1) return CfTerm<Real>{one, alpha};
            return CfTerm<Real>{pow_int(q, j - 1), alpha + beta * pow_int(q, j - 1)};
        };
        return ContinuedFraction<Real>(Real(prec), gen);
    };
    return e;
}

// -- 19. L.I.6.5.2: the k = 2 instance (alpha = 2, beta = 1)
Entry make_two_fractions_fixed() {
    Entry e = make_two_fractions();
    e.id = "L.I.6.5.2";
    e.summary = "fraction with parts 2 + q^{j-1} equals one with denominators 2 + q^{j-1}";
    e.params = {ps("q", K::QPoint)};
    e.preferred_points = {pt({{"q", "1/3"}}), pt({{"q", "1/2"}})};
    auto fix = [](const Params& p) {
        Params out = p;
        out["k"] = Rational(2);
        return out;
    };
    auto left = e.numeric_left_fraction;
    auto right = e.numeric_fraction;
    e.numeric_left_fraction = [fix, left](const Params& p, const Real& q, mpfr_prec_t prec) {
        return left(fix(p), q, prec);
    };
    e.numeric_fraction = [fix, right](const Params& p, const Real& q, mpfr_prec_t prec) {
        return right(fix(p), q, prec);
    };
    return e;
}

// -- 20. L.I.6.4.2: equal fractions with geometric vs inverse-geometric drift
Entry make_drift_pair() {
    Entry e;
    e.id = "L.I.6.4.2";
    e.summary = "fraction with denominators a+b+cq^{j-1} equals one with a/q^{j-1} drift";
    e.backend = Backend::Numeric;
    e.default_order = 30;
    e.params = {ps("a", K::PositiveSmall), ps("b", K::PositiveSmall), ps("c", K::PositiveSmall),
                ps("q", K::QPoint)};
    e.preferred_points = {pt({{"a", "1"}, {"b", "1/2"}, {"c", "1/3"}, {"q", "1/3"}}),
                          pt({{"a", "3/2"}, {"b", "1/2"}, {"c", "1"}, {"q", "1/4"}}),
                          pt({{"a", "2"}, {"b", "1"}, {"c", "1/2"}, {"q", "1/5"}})};
    e.admissible = [](const Params& p) {
        const Rational a = arg(p, "a"), b = arg(p, "b"), c = arg(p, "c");
        return a != b && a + c - b > Rational(0);
    };
    e.numeric_left_fraction = [](const Params& p, const Real& q, mpfr_prec_t prec) {
        Real a = rp(p, "a", prec), b = rp(p, "b", prec), c = rp(p, "c", prec);
        Real one = Real::from_long(1, prec);
        auto gen = [a, b, c, one, q](long j) {
            if (j == 1) return CfTerm<Real>{one, a + c};
            return CfTerm<Real>{-(a * b), a + b + c * pow_int(q, j - 1)};
        };
        return ContinuedFraction<Real>(Real(prec), gen);
    };
    e.numeric_fraction = [](const Params& p, const Real& q, mpfr_prec_t prec) {
        Real a = rp(p, "a", prec), b = rp(p, "b", prec), c = rp(p, "c", prec);
        Real one = Real::from_long(1, prec);
        auto gen = [a, b, c, one, q](long j) {
            if (j == 1) return CfTerm<Real>{one, c - b + a};
            return CfTerm<Real>{b * c, c - b + a * pow_int(q, -(j - 1))};
        };
        return ContinuedFraction<Real>(Real(prec), gen);
    };
    return e;
}

// -- 21. L.I.6.4.3: finite interleaved fraction collapses to n layers
Entry make_finite_collapse() {
    Entry e;
    e.id = "L.I.6.4.3";
    e.summary = "finite fraction interleaving (a,1),(b,q^j) collapses to n layers (-ab, a+b+q^j)";
    e.backend = Backend::ExactFinite;
    e.default_order = 0;
    e.params = {ps("n", K::Integer, 1, 8), ps("a", K::PositiveSmall), ps("b", K::PositiveSmall),
                ps("q", K::QPoint)};
    e.preferred_points = {pt({{"n", "3"}, {"a", "1/2"}, {"b", "1/3"}, {"q", "1/4"}}),
                          pt({{"n", "5"}, {"a", "1"}, {"b", "2"}, {"q", "1/3"}})};
    e.exact_value = [](const Params& p) {
        long n = arg(p, "n").numerator().get_si();
        const Rational a = arg(p, "a"), b = arg(p, "b"), q = arg(p, "q");
        std::vector<CfTerm<Rational>> terms;
        for (long j = 1; j <= n; ++j) {
            terms.push_back(CfTerm<Rational>{a, Rational(1)});
            terms.push_back(CfTerm<Rational>{b, pow(q, j)});
        }
        terms.push_back(CfTerm<Rational>{a, Rational(1)});
        auto cf = ContinuedFraction<Rational>::finite(Rational(1), std::move(terms));
        return cf_eval_exact(cf);
    };
    e.exact_fraction = [](const Params& p) {
        long n = arg(p, "n").numerator().get_si();
        const Rational a = arg(p, "a"), b = arg(p, "b"), q = arg(p, "q");
        std::vector<CfTerm<Rational>> terms;
        for (long j = 1; j <= n; ++j) {
            terms.push_back(CfTerm<Rational>{-(a * b), a + b + pow(q, j)});
        }
        return ContinuedFraction<Rational>::finite(Rational(1) + a, std::move(terms));
    };
    return e;
}

// -- 22. L.I.6.2.1.cor2: even/odd product ratio with parameter a
Entry make_cor2() {
    Entry e;
    e.id = "L.I.6.2.1.cor2";
    e.summary = "(-aq^2;q^2)/(-aq;q^2) as a fraction alternating q^{(k-1)/2} + a q^{k-1}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.params = {ps("a", K::SmallRational)};
    e.preferred_points = {pt({{"a", "1/2"}}), pt({{"a", "-1/3"}}), pt({{"a", "2"}})};
    e.formal_sides.push_back({"product", [](const Params& p, int N) {
                                  const Rational a = arg(p, "a");
                                  return poch(-a, 2, 2, N) * inverse(poch(-a, 1, 2, N));
                              }});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        return unit_shape([a](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) return mono(a, ki - 1);
            return poly({{Rational(1), (ki - 1) / 2}, {a, ki - 1}});
        });
    };
    return e;
}

// -- 23. V.32.21: the a = 1 case with both product forms
Entry make_v21() {
    Entry e;
    e.id = "V.32.21";
    e.summary = "(-q^2;q^2)/(-q;q^2) two ways and its interleaved-power fraction";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  return poch(Rational(-1), 2, 2, N) *
                                         inverse(poch(Rational(-1), 1, 2, N));
                              }});
    e.formal_sides.push_back({"product-alt", [](const Params&, int N) {
                                  QSeries den = poch(Rational(1), 2, 4, N);
                                  return poch(Rational(1), 1, 2, N) * inverse(den * den);
                              }});
    e.shape = [](const Params&) {
        return unit_shape([](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) return mono(Rational(1), ki - 1);
            return poly({{Rational(1), (ki - 1) / 2}, {Rational(1), ki - 1}});
        });
    };
    return e;
}

// -- 24. L.I.6.2.1.cor10: modulus-4 product ratio
Entry make_cor10() {
    Entry e;
    e.id = "L.I.6.2.1.cor10";
    e.summary = "(-q^3;q^4)/(-q;q^4) as a fraction with parts q^{k-1} + q^{2k-3}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  return poch(Rational(-1), 3, 4, N) *
                                         inverse(poch(Rational(-1), 1, 4, N));
                              }});
    e.shape = [](const Params&) {
        return unit_shape([](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) return mono(Rational(1), 2 * ki - 3);
            return poly({{Rational(1), ki - 1}, {Rational(1), 2 * ki - 3}});
        });
    };
    return e;
}

// -- 25. V.32.20: signed modulus-4 ratio with denominators 1 + q^{2(k-1)}
Entry make_v20() {
    Entry e;
    e.id = "V.32.20";
    e.summary = "(q^3;q^4)/(q;q^4) as the fraction with parts -q^{2k-3} over 1 + q^{2(k-1)}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  return poch(Rational(1), 3, 4, N) *
                                         inverse(poch(Rational(1), 1, 4, N));
                              }});
    e.shape = [](const Params&) {
        return CfShape{QSeries(0),
                       [](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) return CfTerm<QSeries>{one0(), one0()};
                           return CfTerm<QSeries>{
                               mono(Rational(-1), 2 * ki - 3),
                               poly({{Rational(1), 0}, {Rational(1), 2 * (ki - 1)}})};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 26. V.32.18: modulus-6 products, two forms
Entry make_v18() {
    Entry e;
    e.id = "V.32.18";
    e.summary = "modulus-6 product two ways as the fraction with parts q^{k-1} + q^{2(k-1)}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  QSeries den = poch(Rational(1), 3, 6, N);
                                  return poch(Rational(1), 1, 6, N) * poch(Rational(1), 5, 6, N) *
                                         inverse(den * den);
                              }});
    e.formal_sides.push_back({"product-alt", [](const Params&, int N) {
                                  QSeries den = poch(Rational(1), 3, 6, N);
                                  return poch(Rational(1), 1, 2, N) *
                                         inverse(den * den * den);
                              }});
    e.shape = [](const Params&) {
        return unit_shape([](long k) {
            int ki = static_cast<int>(k);
            return poly({{Rational(1), ki - 1}, {Rational(1), 2 * (ki - 1)}});
        });
    };
    return e;
}

// -- 27. V.32.22: modulus-8 product ratio
Entry make_v22() {
    Entry e;
    e.id = "V.32.22";
    e.summary = "modulus-8 product as a fraction alternating q^{k-1}+q^{2(k-1)} and q^{2(k-1)}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  QSeries num = poch(Rational(1), 1, 8, N) * poch(Rational(1), 7, 8, N);
                                  QSeries den = poch(Rational(1), 3, 8, N) * poch(Rational(1), 5, 8, N);
                                  return num * inverse(den);
                              }});
    e.shape = [](const Params&) {
        return unit_shape([](long k) {
            int ki = static_cast<int>(k);
            if (k % 2 == 0) {
                return poly({{Rational(1), ki - 1}, {Rational(1), 2 * (ki - 1)}});
            }
            return mono(Rational(1), 2 * (ki - 1));
        });
    };
    return e;
}

// -- 28. V.32.19: modulus-3 ratio with denominators 1 + q^{k-1}
Entry make_v19() {
    Entry e;
    e.id = "V.32.19";
    e.summary = "(q^2;q^3)/(q;q^3) as the fraction with parts -q^{2k-3} over 1 + q^{k-1}";
    e.backend = Backend::Formal;
    e.default_order = 40;
    e.formal_sides.push_back({"product", [](const Params&, int N) {
                                  return poch(Rational(1), 2, 3, N) *
                                         inverse(poch(Rational(1), 1, 3, N));
                              }});
    e.shape = [](const Params&) {
        return CfShape{QSeries(0),
                       [](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) return CfTerm<QSeries>{one0(), one0()};
                           return CfTerm<QSeries>{
                               mono(Rational(-1), 2 * ki - 3),
                               poly({{Rational(1), 0}, {Rational(1), ki - 1}})};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 29. III.16.2: the binomial-theorem sum equals a product ratio
Entry make_qbt() {
    Entry e;
    e.id = "III.16.2";
    e.summary = "sum (b/a;q)_k a^k/(q;q)_k equals the product ratio (b;q)/(a;q)";
    e.backend = Backend::Formal;
    e.default_order = 20;
    e.params = {ps("a", K::SmallRational), ps("b", K::SmallOrZero)};
    e.preferred_points = {pt({{"a", "1/2"}, {"b", "1/4"}}), pt({{"a", "-2/5"}, {"b", "1/7"}}),
                          pt({{"a", "3"}, {"b", "2"}})};
    e.admissible = [](const Params& p) { return arg(p, "a") != Rational(1); };
    e.formal_sides.push_back({"sum", [](const Params& p, int N) {
                                  return qbinomial_theorem_sum(arg(p, "a"), arg(p, "b"), N);
                              }});
    e.formal_sides.push_back({"product", [](const Params& p, int N) {
                                  return poch(arg(p, "b"), 0, 1, N) *
                                         inverse(poch(arg(p, "a"), 0, 1, N));
                              }});
    return e;
}

// -- 30. III.16.11: product alternation identity, numeric
Entry make_product_alternation() {
    Entry e;
    e.id = "III.16.11";
    e.summary = "product alternation ratio as a fraction with quadratic parts";
    e.backend = Backend::Numeric;
    e.default_order = 25;
    e.params = {ps("a", K::UnitRational), ps("b", K::UnitRational), ps("q", K::QPoint)};
    e.preferred_points = {pt({{"a", "1/3"}, {"b", "1/3"}, {"q", "1/3"}}),
                          pt({{"a", "1/2"}, {"b", "1/4"}, {"q", "1/3"}}),
                          pt({{"a", "-1/2"}, {"b", "1/3"}, {"q", "1/4"}})};
    e.numeric_sides.push_back({"product-form", [](const Params& p, const Real& q, mpfr_prec_t prec) {
                                   Real a = rp(p, "a", prec), b = rp(p, "b", prec);
                                   Real p1 = num_poch_inf(-a, q, prec);
                                   Real p2 = num_poch_inf(b, q, prec);
                                   Real p3 = num_poch_inf(a, q, prec);
                                   Real p4 = num_poch_inf(-b, q, prec);
                                   return (p1 * p2 - p3 * p4) / (p1 * p2 + p3 * p4);
                               }});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        const Rational b = arg(p, "b");
        return CfShape{QSeries(0),
                       [a, b](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) {
                               return CfTerm<QSeries>{cpoly(a - b),
                                                      poly({{Rational(1), 0}, {Rational(-1), 1}})};
                           }
                           // q^{k-2} (a - b q^{k-1})(a q^{k-1} - b)
                           QSeries an = poly({{-a * b, ki - 2},
                                              {a * a + b * b, 2 * ki - 3},
                                              {-a * b, 3 * ki - 4}});
                           QSeries bn = poly({{Rational(1), 0}, {Rational(-1), 2 * ki - 1}});
                           return CfTerm<QSeries>{an, bn};
                       },
                       std::nullopt};
    };
    return e;
}

// -- 31. III.16.12: modulus-4 square product ratio, numeric, with a sum form
Entry make_square_products() {
    Entry e;
    e.id = "III.16.12";
    e.summary = "(a^2q^3,b^2q^3;q^4)/(a^2q,b^2q;q^4) as a fraction with paired parts";
    e.backend = Backend::Numeric;
    e.default_order = 25;
    e.params = {ps("a", K::UnitRational), ps("b", K::UnitRational), ps("q", K::QPoint)};
    e.preferred_points = {pt({{"a", "1/3"}, {"b", "1/2"}, {"q", "1/3"}}),
                          pt({{"a", "-1/2"}, {"b", "1/4"}, {"q", "1/4"}})};
    e.numeric_sides.push_back({"product-form", [](const Params& p, const Real& q, mpfr_prec_t prec) {
                                   Real a = rp(p, "a", prec), b = rp(p, "b", prec);
                                   Real q4 = pow_int(q, 4);
                                   Real a2 = a * a, b2 = b * b;
                                   Real q3 = pow_int(q, 3);
                                   Real num = num_poch_inf(a2 * q3, q4, prec) *
                                              num_poch_inf(b2 * q3, q4, prec);
                                   Real den = num_poch_inf(a2 * q, q4, prec) *
                                              num_poch_inf(b2 * q, q4, prec);
                                   return num / den;
                               }});
    e.numeric_sides.push_back({"sum-ratio", [](const Params& p, const Real& q, mpfr_prec_t prec) {
                                   Real a = rp(p, "a", prec), b = rp(p, "b", prec);
                                   Real q4 = pow_int(q, 4);
                                   Real cn = b * q / a;
                                   Real cd = b / (a * q);
                                   Real num = num_phi_sum(cn * cn, a * a * q, q4, prec);
                                   Real den = num_phi_sum(cd * cd, a * a * pow_int(q, 3), q4, prec);
                                   return num / den;
                               }});
    e.shape = [](const Params& p) {
        const Rational a = arg(p, "a");
        const Rational b = arg(p, "b");
        return CfShape{QSeries(0),
                       [a, b](long k) {
                           int ki = static_cast<int>(k);
                           if (k == 1) return CfTerm<QSeries>{one0(), cpoly(Rational(1) - a * b)};
                           // (a - b q^{2k-3})(b - a q^{2k-3}) over (1-ab)(1+q^{2(k-1)})
                           QSeries an = poly({{a * b, 0},
                                              {-(a * a + b * b), 2 * ki - 3},
                                              {a * b, 2 * (2 * ki - 3)}});
                           QSeries bn = poly({{Rational(1) - a * b, 0},
                                              {Rational(1) - a * b, 2 * (ki - 1)}});
                           return CfTerm<QSeries>{an, bn};
                       },
                       std::nullopt};
    };
    return e;
}

std::vector<Entry> build_corpus() {
    std::vector<Entry> v;
    v.push_back(make_rr());
    v.push_back(make_special_plus());
    v.push_back(make_special_minus());
    v.push_back(make_g1());
    v.push_back(make_g2());
    v.push_back(make_g3());
    v.push_back(make_g_recurrence());
    v.push_back(make_rogers_lambda());
    v.push_back(make_mu_finite());
    v.push_back(make_eisenstein());
    v.push_back(make_eisenstein_denoms());
    v.push_back(make_big_g1());
    v.push_back(make_big_g2());
    v.push_back(make_big_g3());
    v.push_back(make_big_g_pair());
    v.push_back(make_cor9());
    v.push_back(make_cor11());
    v.push_back(make_two_fractions());
    v.push_back(make_two_fractions_fixed());
    v.push_back(make_drift_pair());
    v.push_back(make_finite_collapse());
    v.push_back(make_cor2());
    v.push_back(make_v21());
    v.push_back(make_cor10());
    v.push_back(make_v20());
    v.push_back(make_v18());
    v.push_back(make_v22());
    v.push_back(make_v19());
    v.push_back(make_qbt());
    v.push_back(make_product_alternation());
    v.push_back(make_square_products());
    return v;
}

}  // namespace

const std::vector<Entry>& corpus() {
    static const std::vector<Entry> c = build_corpus();
    return c;
}

std::vector<std::string> entry_ids() {
    std::vector<std::string> ids;
    ids.reserve(corpus().size());
    for (const Entry& e : corpus()) ids.push_back(e.id);
    return ids;
}

namespace {
const std::map<std::string, std::size_t>& index_map() {
    static const std::map<std::string, std::size_t> m = [] {
        std::map<std::string, std::size_t> mm;
        for (std::size_t i = 0; i < corpus().size(); ++i) mm[corpus()[i].id] = i;
        return mm;
    }();
    return m;
}
}  // namespace

bool has_entry(const std::string& id) { return index_map().count(id) != 0; }

const Entry& entry(const std::string& id) {
    auto it = index_map().find(id);
    if (it == index_map().end()) throw UnknownEntryError("no catalog entry named '" + id + "'");
    return corpus()[it->second];
}

std::string backend_label(Backend b) {
    switch (b) {
        case Backend::Formal:
        case Backend::Recurrence:
            return "formal";
        case Backend::ExactFinite:
            return "exact";
        case Backend::Numeric:
        case Backend::Special:
            return "numeric";
    }
    return "unknown";
}

}  // namespace qcf

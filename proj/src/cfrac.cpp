#include "qcf/cfrac.hpp"

#include <string>

namespace qcf {

QSeries cf_limit(const ContinuedFraction<QSeries>& cf, int N, long budget) {
    if (N < 0) throw DomainError("cf_limit: order must be >= 0");
    if (cf.head().order() < N) throw DomainError("cf_limit: head series order below target");
    if (budget < 0) budget = 4L * N + 64;

    QSeries pm1 = QSeries::constant(Rational(1), N);
    QSeries qm1(N);
    QSeries p(N);
    QSeries q = QSeries::constant(Rational(1), N);

    long cum = 0;       // accumulated valuation of the partial numerators
    long used = 0;      // layers folded in
    bool settled = false;
    for (long k = 1; !settled; ++k) {
        if (cf.length() && k > *cf.length()) break;  // exact end of a finite fraction
        if (k > budget) {
            throw NotFormallyConvergentError(
                "no formal limit through q^" + std::to_string(N) + " within " +
                    std::to_string(budget) + " layers (valuation sum " + std::to_string(cum) + ")",
                budget);
        }
        CfTerm<QSeries> t = cf.term(k);
        if (t.a.order() < N || t.b.order() < N) {
            throw DomainError("cf_limit: term order below target at layer " + std::to_string(k));
        }
        auto va = t.a.valuation();
        if (!va.has_value()) break;  // vanishing partial numerator: value is x_{k-1}
        cum += *va;
        QSeries pn = t.b * p + t.a * pm1;
        QSeries qn = t.b * q + t.a * qm1;
        pm1 = std::move(p);
        qm1 = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
        used = k;
        settled = cum > N;
    }
    QSeries value = cf.head() + checked_div(p, q, used);
    return value.order() == N ? value : value.truncated(N);
}

Rational cf_eval_exact(const ContinuedFraction<Rational>& cf) {
    if (!cf.length()) throw DomainError("exact evaluation requires a finite fraction");
    const long L = *cf.length();
    if (L == 0) return cf.head();
    CfTerm<Rational> upper = cf.term(L);
    Rational v = upper.b;
    for (long k = L - 1; k >= 1; --k) {
        CfTerm<Rational> cur = cf.term(k);
        v = cur.b + checked_div(upper.a, v, k + 1);
        upper = cur;
    }
    return cf.head() + checked_div(upper.a, v, 1);
}

Real cf_eval_at_depth(const ContinuedFraction<Real>& cf, long depth) {
    if (cf.length() && depth > *cf.length()) depth = *cf.length();
    if (depth < 0) throw DomainError("cf_eval_at_depth: depth must be >= 0");
    if (depth == 0) return cf.head();
    CfTerm<Real> upper = cf.term(depth);
    Real v = upper.b;
    for (long k = depth - 1; k >= 1; --k) {
        CfTerm<Real> cur = cf.term(k);
        v = cur.b + checked_div(upper.a, v, k + 1);
        upper = cur;
    }
    return cf.head() + checked_div(upper.a, v, 1);
}

NumericResult cf_eval_numeric(const ContinuedFraction<Real>& cf, const Real& tol,
                              long max_depth) {
    if (cf.length()) {
        const long L = *cf.length();
        return NumericResult{cf_eval_at_depth(cf, L), L};
    }
    long d = 8;
    if (d > max_depth) throw DomainError("cf_eval_numeric: depth budget below starting depth");
    Real prev = cf_eval_at_depth(cf, d);
    std::string last_delta = "n/a";
    while (2 * d <= max_depth) {
        Real cur = cf_eval_at_depth(cf, 2 * d);
        Real delta = abs(cur - prev);
        if (delta.is_finite() && delta < tol) return NumericResult{std::move(cur), 2 * d};
        last_delta = delta.str(8);
        prev = std::move(cur);
        d *= 2;
    }
    throw NoNumericConvergenceError(
        "approximants still moving by " + last_delta + " at depth " + std::to_string(d),
        d, last_delta);
}

}  // namespace qcf

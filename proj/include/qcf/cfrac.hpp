#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qcf/errors.hpp"
#include "qcf/qseries.hpp"
#include "qcf/rational.hpp"
#include "qcf/real.hpp"

namespace qcf {

// One layer of a generalized continued fraction: ... + a / (b + ...).
template <typename T>
struct CfTerm {
    T a;
    T b;
};

// Value helpers shared by the generic algorithms.
inline QSeries unit_like(const QSeries& m) { return QSeries::constant(Rational(1), m.order()); }
inline Rational unit_like(const Rational&) { return Rational(1); }
inline Real unit_like(const Real& m) { return Real::from_long(1, m.prec()); }

inline QSeries zero_like(const QSeries& m) { return QSeries(m.order()); }
inline Rational zero_like(const Rational&) { return Rational(); }
inline Real zero_like(const Real& m) { return Real(m.prec()); }

inline bool value_is_zero(const QSeries& x) { return x.is_zero(); }
inline bool value_is_zero(const Rational& x) { return x.is_zero(); }
inline bool value_is_zero(const Real& x) { return x.is_zero(); }

// Division used inside the fraction algorithms; `index` names the layer at
// which an impossible division was requested.
inline QSeries checked_div(const QSeries& x, const QSeries& y, long index) {
    if (y[0].is_zero()) {
        throw DivisionByZeroError(
            "division by a non-invertible series at layer " + std::to_string(index), index);
    }
    return x * inverse(y);
}
inline Rational checked_div(const Rational& x, const Rational& y, long index) {
    if (y.is_zero()) {
        throw DivisionByZeroError("division by zero at layer " + std::to_string(index), index);
    }
    return x / y;
}
inline Real checked_div(const Real& x, const Real& y, long index) {
    if (y.is_zero()) {
        throw DivisionByZeroError("division by zero at layer " + std::to_string(index), index);
    }
    return x / y;
}

// Generalized continued fraction b0 + K_{k>=1} (a_k / b_k), with terms
// produced on demand by a 1-based generator. A fraction may be finite
// (explicit length) or unbounded.
template <typename T>
class ContinuedFraction {
public:
    using Term = CfTerm<T>;

    ContinuedFraction(T head, std::function<Term(long)> gen,
                      std::optional<long> length = std::nullopt)
        : head_(std::move(head)), gen_(std::move(gen)), len_(length) {
        if (len_ && *len_ < 0) throw DomainError("continued fraction length must be >= 0");
    }

    static ContinuedFraction finite(T head, std::vector<Term> terms) {
        auto stored = std::make_shared<std::vector<Term>>(std::move(terms));
        const long n = static_cast<long>(stored->size());
        return ContinuedFraction(
            std::move(head),
            [stored](long k) { return (*stored)[static_cast<std::size_t>(k - 1)]; }, n);
    }

    const T& head() const { return head_; }
    std::optional<long> length() const { return len_; }

    Term term(long k) const {
        if (k < 1) throw DomainError("continued fraction terms are 1-based");
        if (len_ && k > *len_) throw DomainError("term index beyond fraction length");
        return gen_(k);
    }

private:
    T head_;
    std::function<Term(long)> gen_;
    std::optional<long> len_;
};

// Numerators/denominators (P_k, Q_k) for k = 0..n with P_0 = 0, Q_0 = 1 and
// P_k = b_k P_{k-1} + a_k P_{k-2} (seeds P_{-1} = 1, Q_{-1} = 0). The value
// truncated after k layers is head() + P_k / Q_k, and
//   P_k Q_{k-1} - P_{k-1} Q_k = (-1)^{k-1} a_1 a_2 ... a_k.
template <typename T>
std::vector<std::pair<T, T>> convergents(const ContinuedFraction<T>& cf, long n) {
    if (cf.length() && n > *cf.length()) n = *cf.length();
    std::vector<std::pair<T, T>> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    T pm1 = unit_like(cf.head());
    T qm1 = zero_like(cf.head());
    T p = zero_like(cf.head());
    T q = unit_like(cf.head());
    out.emplace_back(p, q);
    for (long k = 1; k <= n; ++k) {
        auto t = cf.term(k);
        T pn = t.b * p + t.a * pm1;
        T qn = t.b * q + t.a * qm1;
        pm1 = std::move(p);
        qm1 = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
        out.emplace_back(p, q);
    }
    return out;
}

// ---- formal evaluation (power series layers) ----

// Limit of the fraction as a power series through q^N. Convergents are
// computed until the accumulated valuation of the partial numerators
// exceeds N, after which all later convergents agree with the limit
// through q^N. A partial numerator that vanishes through the window, or
// the end of a finite fraction, terminates the value exactly. Throws
// NotFormallyConvergentError when the valuation bound is not reached
// within `budget` layers (default 4N + 64).
QSeries cf_limit(const ContinuedFraction<QSeries>& cf, int N, long budget = -1);

// ---- exact evaluation (rational layers, finite fractions) ----

Rational cf_eval_exact(const ContinuedFraction<Rational>& cf);

// ---- numeric evaluation (floating-point layers) ----

struct NumericResult {
    Real value;
    long depth;
};

// Backward evaluation of the depth-d approximant with zero tail.
Real cf_eval_at_depth(const ContinuedFraction<Real>& cf, long depth);

// Doubling-depth evaluation: returns the first v_{2d} with
// |v_{2d} - v_d| < tol. Finite fractions are evaluated exactly at their
// length. Throws NoNumericConvergenceError when depth exceeds max_depth.
NumericResult cf_eval_numeric(const ContinuedFraction<Real>& cf, const Real& tol,
                              long max_depth = 1 << 16);

// ---- transformations ----

// Equivalence transform: a_k -> r_k r_{k-1} a_k, b_k -> r_k b_k with
// r_0 = 1. Leaves every convergent (and hence the value) unchanged.
// A vanishing r_k throws ZeroScaleError at term construction.
template <typename T>
ContinuedFraction<T> equivalence_scale(const ContinuedFraction<T>& cf,
                                       std::function<T(long)> r) {
    auto scale = [r](long k) {
        T v = r(k);
        if (value_is_zero(v)) {
            throw ZeroScaleError("equivalence scale factor r_" + std::to_string(k) + " is zero", k);
        }
        return v;
    };
    auto gen = [cf, scale](long k) -> CfTerm<T> {
        auto t = cf.term(k);
        T rk = scale(k);
        T rkm1 = k == 1 ? unit_like(cf.head()) : scale(k - 1);
        return CfTerm<T>{rk * rkm1 * t.a, rk * t.b};
    };
    return ContinuedFraction<T>(cf.head(), gen, cf.length());
}

template <typename T>
ContinuedFraction<T> equivalence_scale(const ContinuedFraction<T>& cf, std::vector<T> r) {
    auto stored = std::make_shared<std::vector<T>>(std::move(r));
    long n = static_cast<long>(stored->size());
    if (cf.length() && *cf.length() < n) n = *cf.length();
    auto fetch = [stored](long k) { return (*stored)[static_cast<std::size_t>(k - 1)]; };
    ContinuedFraction<T> clipped(cf.head(), [cf](long k) { return cf.term(k); }, n);
    return equivalence_scale(clipped, std::function<T(long)>(fetch));
}

// Odd part: a fraction whose convergents are the odd-indexed convergents
// x_1, x_3, x_5, ... of the input. Requires the relevant b_k to be
// invertible (checked at term construction).
template <typename T>
ContinuedFraction<T> odd_part(const ContinuedFraction<T>& cf) {
    std::optional<long> len;
    if (cf.length()) len = (*cf.length() + 1) / 2;
    auto gen = [cf](long j) -> CfTerm<T> {
        if (j == 1) return cf.term(1);
        if (j == 2) {
            auto t2 = cf.term(2);
            auto t3 = cf.term(3);
            return CfTerm<T>{t2.a * t3.b, t3.a + t2.b * t3.b};
        }
        auto u = cf.term(2 * j - 3);  // index 2j-3
        auto v = cf.term(2 * j - 2);
        auto w = cf.term(2 * j - 1);
        T ratio = checked_div(v.a * w.b, u.b, 2 * j - 3);
        return CfTerm<T>{zero_like(u.a) - u.a * ratio, w.a + v.b * w.b + ratio};
    };
    return ContinuedFraction<T>(cf.head(), gen, len);
}

}  // namespace qcf

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcf/rational.hpp"

namespace qcf {

// Truncated formal power series in q over exact rationals. A series of order
// N carries coefficients of q^0 .. q^N; everything above q^N is unknown.
// Binary operations return the minimum order of their operands, never more:
// truncation is a ring homomorphism, silent extension is not.
class QSeries {
public:
    explicit QSeries(int order);  // zero series of the given order
    QSeries(int order, std::vector<Rational> coeffs);  // coeffs.size() == order+1

    static QSeries constant(const Rational& c, int order);
    // c * q^e; exponents beyond the order simply vanish from the window.
    static QSeries monomial(const Rational& c, int e, int order);

    int order() const { return order_; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& at(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Smallest exponent with nonzero coefficient; nullopt when the series is
    // zero through its order (valuation formally +infinity).
    std::optional<int> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }
    bool is_one() const;

    // Restrict to a smaller window. new_order must not exceed order().
    QSeries truncated(int new_order) const;
    // Extend the window with explicit zeros. Only meaningful when the value
    // is an exact polynomial (all higher coefficients known to vanish);
    // arithmetic never does this implicitly.
    QSeries padded(int new_order) const;
    // truncated or padded as needed; same polynomial caveat applies.
    QSeries with_order(int new_order) const;

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    int order_;
    std::vector<Rational> c_;
};

// ---- ring operations (result order = min of operand orders) ----
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const Rational& s);
QSeries operator*(const Rational& s, const QSeries& a);

// Multiplicative inverse; requires a nonzero constant term.
QSeries inverse(const QSeries& a);

// A(q) -> A(q^m), m >= 1. Result order = order(A); coefficients of A beyond
// order(A)/m fall outside the window and are dropped.
QSeries substitute_q_power(const QSeries& a, int m);

// Exact division by q^e; requires valuation >= e (or zero series).
// Result order = order(a) - e.
QSeries shifted_down(const QSeries& a, int e);

// ---- comparisons ----
// First exponent <= through where the two disagree; nullopt if they agree.
std::optional<int> first_difference(const QSeries& a, const QSeries& b, int through);
bool agree_through(const QSeries& a, const QSeries& b, int through);

// Exact evaluation at a scalar point (Horner). Meaningful for polynomials.
Rational evaluate_at(const QSeries& a, const Rational& x);

// Human-readable form, e.g. "1 - q + 2*q^2".
std::string to_string(const QSeries& a);

// ---- q-factorial building blocks ----
inline constexpr int kInfiniteProduct = -1;

// Finite or infinite q-Pochhammer (c q^e; q^m)_n = prod (1 - c q^{e+mk}),
// truncated at the given order. n = kInfiniteProduct multiplies factors
// until the exponent e + m*k leaves the window. Requires e >= 0, m >= 1,
// and e + m > 0 (the factor exponents must eventually grow).
QSeries qpochhammer(const Rational& c, int e, int m, int n, int order);
// Scalar base (c; q^m)_n.
QSeries qpochhammer(const Rational& c, int m, int n, int order);

// Gaussian binomial coefficient as an exact polynomial of degree k(n-k),
// carried at exactly that order. Zero (order 0) when n < k; requires k >= 0.
QSeries qbinomial(int n, int k);

// q-binomial theorem sum F(a,b) = sum_k (b/a;q)_k / (q;q)_k * a^k, exact
// through q^order. Terms with k > order contribute a^k * C mod q^{order+1}
// with a fixed series C, so their sum collapses to an exact geometric tail;
// the analytic regime is |a| < 1. Requires a != 0 and a != 1.
QSeries qbinomial_theorem_sum(const Rational& a, const Rational& b, int order);
// Same sum restricted to even or odd k; the tail uses 1/(1 - a^2).
QSeries qbinomial_theorem_sum_even(const Rational& a, const Rational& b, int order);
QSeries qbinomial_theorem_sum_odd(const Rational& a, const Rational& b, int order);

}  // namespace qcf

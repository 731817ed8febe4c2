#include "qcf/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qcf/errors.hpp"

namespace qcf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace

QSeries::QSeries(int order) : order_(order) {
    require(order >= 0, "QSeries order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational());
}

QSeries::QSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    require(order >= 0, "QSeries order must be >= 0");
    require(c_.size() == static_cast<std::size_t>(order) + 1,
            "QSeries coefficient count must be order + 1");
}

QSeries QSeries::constant(const Rational& c, int order) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::monomial(const Rational& c, int e, int order) {
    require(e >= 0, "monomial exponent must be >= 0");
    QSeries s(order);
    if (e <= order) s.c_[static_cast<std::size_t>(e)] = c;
    return s;
}

std::optional<int> QSeries::valuation() const {
    for (int k = 0; k <= order_; ++k) {
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
    }
    return std::nullopt;
}

bool QSeries::is_one() const {
    if (!c_[0].is_one()) return false;
    for (int k = 1; k <= order_; ++k) {
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return false;
    }
    return true;
}

QSeries QSeries::truncated(int new_order) const {
    require(new_order >= 0 && new_order <= order_,
            "truncated: new order must lie in [0, order]");
    std::vector<Rational> v(c_.begin(), c_.begin() + new_order + 1);
    return QSeries(new_order, std::move(v));
}

QSeries QSeries::padded(int new_order) const {
    require(new_order >= order_, "padded: new order must be >= order");
    std::vector<Rational> v = c_;
    v.resize(static_cast<std::size_t>(new_order) + 1, Rational());
    return QSeries(new_order, std::move(v));
}

QSeries QSeries::with_order(int new_order) const {
    return new_order <= order_ ? truncated(new_order) : padded(new_order);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = a[k] + b[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int k = 0; k <= n; ++k) r.at(k) = a[k] - b[k];
    return r;
}

QSeries operator-(const QSeries& a) {
    QSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.at(k) = -a[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            r.at(i + j) += a[i] * b[j];
        }
    }
    return r;
}

QSeries operator*(const QSeries& a, const Rational& s) {
    QSeries r(a.order());
    if (s.is_zero()) return r;
    for (int k = 0; k <= a.order(); ++k) r.at(k) = a[k] * s;
    return r;
}

QSeries operator*(const Rational& s, const QSeries& a) { return a * s; }

QSeries inverse(const QSeries& a) {
    if (a[0].is_zero()) {
        throw ZeroConstantTermError("series inverse requires a nonzero constant term");
    }
    const int n = a.order();
    QSeries r(n);
    const Rational inv0 = inverse(a[0]);
    r.at(0) = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int j = 1; j <= k; ++j) {
            if (a[j].is_zero()) continue;
            s += a[j] * r[k - j];
        }
        r.at(k) = -inv0 * s;
    }
    return r;
}

QSeries substitute_q_power(const QSeries& a, int m) {
    require(m >= 1, "substitute_q_power: exponent must be >= 1");
    const int n = a.order();
    QSeries r(n);
    for (int k = 0; m * k <= n; ++k) r.at(m * k) = a[k];
    return r;
}

QSeries shifted_down(const QSeries& a, int e) {
    require(e >= 0, "shifted_down: shift must be >= 0");
    require(a.order() >= e, "shifted_down: shift exceeds order");
    auto v = a.valuation();
    require(!v.has_value() || *v >= e, "shifted_down: valuation below shift");
    QSeries r(a.order() - e);
    for (int k = 0; k <= r.order(); ++k) r.at(k) = a[k + e];
    return r;
}

std::optional<int> first_difference(const QSeries& a, const QSeries& b, int through) {
    require(through >= 0 && through <= a.order() && through <= b.order(),
            "first_difference: window exceeds series order");
    for (int k = 0; k <= through; ++k) {
        if (a[k] != b[k]) return k;
    }
    return std::nullopt;
}

bool agree_through(const QSeries& a, const QSeries& b, int through) {
    return !first_difference(a, b, through).has_value();
}

Rational evaluate_at(const QSeries& a, const Rational& x) {
    Rational acc;
    for (int k = a.order(); k >= 0; --k) acc = acc * x + a[k];
    return acc;
}

std::string to_string(const QSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= a.order(); ++k) {
        const Rational& c = a[k];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag.is_one();
        if (k == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// In-place multiply by (1 - c q^E) within the window of s.
void mul_one_minus_monomial(QSeries& s, const Rational& c, int E) {
    if (c.is_zero() || E > s.order()) return;
    if (E == 0) {
        const Rational f = Rational(1) - c;
        for (int k = 0; k <= s.order(); ++k) s.at(k) *= f;
        return;
    }
    for (int k = s.order(); k >= E; --k) s.at(k) -= c * s[k - E];
}

}  // namespace

QSeries qpochhammer(const Rational& c, int e, int m, int n, int order) {
    require(e >= 0, "qpochhammer: base exponent must be >= 0");
    require(m >= 1, "qpochhammer: step must be >= 1");
    require(n >= 0 || n == kInfiniteProduct,
            "qpochhammer: length must be >= 0 or infinite");
    QSeries r = QSeries::constant(Rational(1), order);
    if (c.is_zero() || n == 0) return r;
    if (n == kInfiniteProduct) {
        for (long long E = e; E <= order; E += m) {
            mul_one_minus_monomial(r, c, static_cast<int>(E));
        }
    } else {
        for (int k = 0; k < n; ++k) {
            const long long E = static_cast<long long>(e) + static_cast<long long>(m) * k;
            if (E > order) break;  // remaining factors are 1 within the window
            mul_one_minus_monomial(r, c, static_cast<int>(E));
        }
    }
    return r;
}

QSeries qpochhammer(const Rational& c, int m, int n, int order) {
    return qpochhammer(c, 0, m, n, order);
}

QSeries qbinomial(int n, int k) {
    require(k >= 0, "qbinomial: lower index must be >= 0");
    if (n < k) return QSeries(0);
    const int d = k * (n - k);
    // prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j)
    QSeries num = qpochhammer(Rational(1), n - k + 1, 1, k, d);
    QSeries den = qpochhammer(Rational(1), 1, 1, k, d);
    return num * inverse(den);
}

namespace {

// Shared core: sum of t_k = (b/a;q)_k / (q;q)_k * a^k over k in the chosen
// residue class (parity < 0 means all k), exact through q^order. Terms past
// the window multiply by the scalar a (or a^2) each step, so the remainder
// is a geometric series with an exact rational sum.
QSeries qbt_sum_core(const Rational& a, const Rational& b, int order, int parity) {
    if (a.is_zero()) throw DomainError("q-binomial theorem sum: a must be nonzero");
    if (a.is_one()) throw DomainError("q-binomial theorem sum: a must not be 1");
    if (parity >= 0 && a == Rational(-1)) {
        throw DomainError("q-binomial theorem sum: parity variants need a != -1");
    }
    const int N = order;
    QSeries sum(N);
    QSeries t = QSeries::constant(Rational(1), N);  // t_0
    for (int k = 0; k <= N; ++k) {
        if (parity < 0 || k % 2 == parity) sum = sum + t;
        // advance to t_{k+1} = t_k * (a - b q^k) / (1 - q^{k+1})
        QSeries next(N);
        for (int i = 0; i <= N; ++i) {
            Rational v = a * t[i];
            if (i >= k) v -= b * t[i - k];
            if (i >= k + 1) v += next[i - k - 1];  // divide by (1 - q^{k+1})
            next.at(i) = v;
        }
        t = std::move(next);
    }
    // t now holds t_{N+1}; within the window t_{k+1} == a * t_k for k > N.
    if (parity < 0) {
        sum = sum + t * inverse(Rational(1) - a);
    } else {
        QSeries tm = t;                       // t_{N+1}
        if ((N + 1) % 2 != parity) tm = tm * a;  // step to t_{N+2}
        sum = sum + tm * inverse(Rational(1) - a * a);
    }
    return sum;
}

}  // namespace

QSeries qbinomial_theorem_sum(const Rational& a, const Rational& b, int order) {
    return qbt_sum_core(a, b, order, -1);
}

QSeries qbinomial_theorem_sum_even(const Rational& a, const Rational& b, int order) {
    return qbt_sum_core(a, b, order, 0);
}

QSeries qbinomial_theorem_sum_odd(const Rational& a, const Rational& b, int order) {
    return qbt_sum_core(a, b, order, 1);
}

}  // namespace qcf

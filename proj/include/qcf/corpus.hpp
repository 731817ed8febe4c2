#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcf/cfrac.hpp"
#include "qcf/qseries.hpp"
#include "qcf/rational.hpp"
#include "qcf/real.hpp"

namespace qcf {

// A sampled parameter point: name -> exact rational value.
using Params = std::map<std::string, Rational>;

// How an identity is checked.
enum class Backend {
    Formal,       // truncated power series, exact coefficients
    ExactFinite,  // finite fraction against a closed form, exact rationals
    Numeric,      // high-precision floating point within a tolerance
    Recurrence,   // a family of exact polynomial/series relations
    Special,      // pinned numeric evaluation, no free parameters
};

// Fraction template: head and terms as exact polynomials in q (each carried
// at exactly its degree), ready to be instantiated formally, numerically, or
// at a rational point.
struct CfShape {
    QSeries head;
    std::function<CfTerm<QSeries>(long)> term;
    std::optional<long> length;
};

ContinuedFraction<QSeries> instantiate_formal(const CfShape& s, int order);
ContinuedFraction<Real> instantiate_numeric(const CfShape& s, const Real& q, mpfr_prec_t prec);
ContinuedFraction<Rational> instantiate_exact(const CfShape& s, const Rational& q);

// A named series (formal side) or named numeric side of an identity.
struct FormalSide {
    std::string name;
    std::function<QSeries(const Params&, int)> build;  // (params, order)
};
struct NumericSide {
    std::string name;
    std::function<Real(const Params&, const Real&, mpfr_prec_t)> eval;  // (params, q, prec)
};

// How one parameter of an entry is sampled.
struct ParamSpec {
    enum class Kind {
        SmallRational,  // nonzero, moderate numerator/denominator
        SmallOrZero,    // as above but zero is allowed
        PositiveSmall,  // strictly positive small rational
        UnitRational,   // nonzero with |v| < 1
        QPoint,         // rational in (0, 1/2]
        Integer,        // uniform integer in [lo, hi]
    };
    std::string name;
    Kind kind;
    long lo = 1;
    long hi = 10;
};

struct Entry {
    std::string id;       // catalog identifier, e.g. "III.16.38.RR"
    std::string summary;  // one-line human description
    Backend backend;
    int default_order;  // formal working order (where meaningful)

    std::vector<ParamSpec> params;
    std::vector<Params> preferred_points;            // tried before random samples
    std::function<bool(const Params&)> admissible;   // joint constraint, may be null

    // Formal backend: series sides (first is the reference) plus an optional
    // fraction compared through the same window.
    std::vector<FormalSide> formal_sides;
    std::function<CfShape(const Params&)> shape;  // may be null

    // Exact backend: closed form and finite fraction at a rational point.
    std::function<Rational(const Params&)> exact_value;
    std::function<ContinuedFraction<Rational>(const Params&)> exact_fraction;

    // Numeric backend: named sides plus fractions; every computed value is
    // compared against the first one.
    std::vector<NumericSide> numeric_sides;
    std::function<ContinuedFraction<Real>(const Params&, const Real&, mpfr_prec_t)>
        numeric_fraction;       // right-hand fraction (built from `shape` if null)
    std::function<ContinuedFraction<Real>(const Params&, const Real&, mpfr_prec_t)>
        numeric_left_fraction;  // for fraction = fraction identities

    // Recurrence backend: first failing (index, power) or nullopt.
    std::function<std::optional<std::pair<int, int>>(const Params&, int)> recurrence_defect;

    // Special backend: closed form and fraction, no parameters.
    std::function<Real(mpfr_prec_t)> special_value;
    std::function<ContinuedFraction<Real>(mpfr_prec_t)> special_fraction;
};

// The identity catalog in canonical order.
const std::vector<Entry>& corpus();
std::vector<std::string> entry_ids();
bool has_entry(const std::string& id);
const Entry& entry(const std::string& id);  // throws UnknownEntryError

// Backend label used in reports: recurrence checks count as formal work,
// special evaluations as numeric work.
std::string backend_label(Backend b);

// ---- shared series builders (exact, truncated at `order`) ----

// sum_k x^k q^{k^2 + sk} / (q;q)_k with x = c q^e.
QSeries rogers_sum(const Rational& c, int e, int s, int order);

// g(b, x) = sum_k x^k q^{k^2} / ((q;q)_k (-bq;q)_k) with x = c q^e.
QSeries g_sum(const Rational& b, const Rational& c, int e, int order);

// G(a_, b, x) = sum_k q^{k(k+1)/2} prod_{j<k}(a_ + x q^j) / ((q;q)_k (-bq;q)_k)
// with a_ = a q^{ae} and x = c q^e.
QSeries big_g_sum(const Rational& a, int ae, const Rational& b, const Rational& c, int e,
                  int order);

// sum_k (-a)^k q^{k(k+1)/2}.
QSeries eisenstein_sum(const Rational& a, int order);

// mu polynomial: sum_k q^{k^2+sk} lambda^k [n-k-s+1, k]_q evaluated at a
// rational q; the finite-fraction closed form for entry III.16.16.
Rational mu_poly(long n, long s, const Rational& lambda, const Rational& q);

// Divide by (1 - c q^E) exactly within the window (sparse backsubstitution).
QSeries divided_by_one_minus(const QSeries& w, const Rational& c, int E);

}  // namespace qcf

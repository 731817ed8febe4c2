#pragma once

#include <stdexcept>
#include <string>

namespace qcf {

// Zero denominator while constructing or parsing a rational.
struct ZeroDenominatorError : std::domain_error {
    explicit ZeroDenominatorError(const std::string& what) : std::domain_error(what) {}
};

// Exact division by zero (rational inverse, finite continued fraction pivot).
struct DivisionByZeroError : std::domain_error {
    long index;  // offending term index when meaningful, -1 otherwise
    explicit DivisionByZeroError(const std::string& what, long idx = -1)
        : std::domain_error(what), index(idx) {}
};

// Series inversion requires a unit: the constant coefficient must be nonzero.
struct ZeroConstantTermError : std::domain_error {
    explicit ZeroConstantTermError(const std::string& what) : std::domain_error(what) {}
};

// A sum failed to reach its exact value within the configured term budget.
struct NonConvergentError : std::runtime_error {
    explicit NonConvergentError(const std::string& what) : std::runtime_error(what) {}
};

// Partial-numerator valuations never exceeded the requested order: the
// continued fraction has no formal limit at this order.
struct NotFormallyConvergentError : std::runtime_error {
    long terms_used;
    NotFormallyConvergentError(const std::string& what, long used)
        : std::runtime_error(what), terms_used(used) {}
};

// Doubling-depth evaluation did not meet the tolerance within the budget.
struct NoNumericConvergenceError : std::runtime_error {
    long depth_reached;
    std::string last_delta;  // decimal string of the final doubling delta
    NoNumericConvergenceError(const std::string& what, long depth, std::string delta)
        : std::runtime_error(what), depth_reached(depth), last_delta(std::move(delta)) {}
};

// An equivalence transform was given a zero scale factor.
struct ZeroScaleError : std::domain_error {
    long index;
    ZeroScaleError(const std::string& what, long idx) : std::domain_error(what), index(idx) {}
};

// A term map divided by a partial denominator that is zero or non-invertible.
struct ZeroDenominatorTermError : std::domain_error {
    long index;
    ZeroDenominatorTermError(const std::string& what, long idx)
        : std::domain_error(what), index(idx) {}
};

// C-fraction expansion requires constant term exactly 1.
struct ConstantTermNotOneError : std::domain_error {
    explicit ConstantTermNotOneError(const std::string& what) : std::domain_error(what) {}
};

// Catalog lookup with an id that names no entry.
struct UnknownEntryError : std::out_of_range {
    explicit UnknownEntryError(const std::string& what) : std::out_of_range(what) {}
};

// A parameter point violates an operation's or entry's domain.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed textual input (rational literals, tolerances).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qcf

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qcf/cfrac.hpp"
#include "qcf/qseries.hpp"

namespace qcf {

// One partial numerator c * q^e of a C-fraction 1 + c1 q^{e1}/(1 + c2 q^{e2}/(1 + ...)).
struct CTerm {
    Rational c;
    int e;
};

// One greedy division step: writes f = 1 + c q^e / next, where next again has
// constant term 1 and lives on a window smaller by e. Returns nullopt when
// f == 1 through its whole window (nothing left to extract). Throws
// ConstantTermNotOneError unless f(0) == 1.
struct CStep {
    Rational c;
    int e;
    QSeries next;
};
std::optional<CStep> division_step(const QSeries& f);

enum class CStop {
    Terminated,      // residual was exactly 1 through a window of order >= 1
    OrderExhausted,  // window shrank to order 0 before the residual vanished
    TermBudget,      // max_terms extracted first
};

struct CExpansion {
    std::vector<CTerm> terms;
    CStop reason;
    int final_order;  // window order left when expansion stopped
};

// Greedy C-fraction expansion of a unit series. The reconstruction from m
// extracted terms agrees with f through q^{order(f) - final_order}.
CExpansion c_fraction_expand(const QSeries& f, long max_terms);

// The finite fraction 1 + c1 q^{e1}/(1 + ... + cm q^{em}/1).
ContinuedFraction<QSeries> c_fraction_to_cf(const std::vector<CTerm>& terms, int order);

// Its value as a series through q^order.
QSeries c_fraction_reconstruct(const std::vector<CTerm>& terms, int order);

// First failure (s, power) of the family relations f_s = b(s) f_{s+1} + a(s) f_{s+2},
// s = 0 .. f.size()-3, compared through q^through; nullopt when all hold.
std::optional<std::pair<int, int>> three_term_defect(
    const std::vector<QSeries>& f, const std::function<QSeries(int)>& a,
    const std::function<QSeries(int)>& b, int through);

}  // namespace qcf

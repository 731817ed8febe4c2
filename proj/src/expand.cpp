#include "qcf/expand.hpp"

#include <utility>

namespace qcf {

std::optional<CStep> division_step(const QSeries& f) {
    if (!f[0].is_one()) {
        throw ConstantTermNotOneError("division step requires constant term 1, got " +
                                      f[0].str());
    }
    QSeries r = f - QSeries::constant(Rational(1), f.order());
    auto val = r.valuation();
    if (!val.has_value()) return std::nullopt;
    const int e = *val;
    const Rational c = r[e];
    QSeries u = shifted_down(r, e) * inverse(c);  // unit constant term by construction
    return CStep{c, e, inverse(u)};
}

CExpansion c_fraction_expand(const QSeries& f, long max_terms) {
    if (max_terms < 0) throw DomainError("c_fraction_expand: negative term budget");
    CExpansion out;
    QSeries cur = f;
    while (true) {
        if (static_cast<long>(out.terms.size()) == max_terms) {
            out.reason = CStop::TermBudget;
            break;
        }
        if (cur.order() == 0) {
            out.reason = CStop::OrderExhausted;
            break;
        }
        auto step = division_step(cur);
        if (!step) {
            out.reason = CStop::Terminated;
            break;
        }
        out.terms.push_back(CTerm{step->c, step->e});
        cur = std::move(step->next);
    }
    out.final_order = cur.order();
    return out;
}

ContinuedFraction<QSeries> c_fraction_to_cf(const std::vector<CTerm>& terms, int order) {
    std::vector<CfTerm<QSeries>> layers;
    layers.reserve(terms.size());
    const QSeries one = QSeries::constant(Rational(1), order);
    for (const CTerm& t : terms) {
        layers.push_back(CfTerm<QSeries>{QSeries::monomial(t.c, t.e, order), one});
    }
    return ContinuedFraction<QSeries>::finite(one, std::move(layers));
}

QSeries c_fraction_reconstruct(const std::vector<CTerm>& terms, int order) {
    return cf_limit(c_fraction_to_cf(terms, order), order);
}

std::optional<std::pair<int, int>> three_term_defect(
    const std::vector<QSeries>& f, const std::function<QSeries(int)>& a,
    const std::function<QSeries(int)>& b, int through) {
    for (int s = 0; s + 2 < static_cast<int>(f.size()); ++s) {
        QSeries rhs = b(s) * f[static_cast<std::size_t>(s) + 1] +
                      a(s) * f[static_cast<std::size_t>(s) + 2];
        auto d = first_difference(f[static_cast<std::size_t>(s)], rhs, through);
        if (d) return std::make_pair(s, *d);
    }
    return std::nullopt;
}

}  // namespace qcf

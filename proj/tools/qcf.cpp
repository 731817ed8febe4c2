#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcf/corpus.hpp"
#include "qcf/errors.hpp"
#include "qcf/expand.hpp"
#include "qcf/sampling.hpp"
#include "qcf/verify.hpp"

namespace {

using namespace qcf;

constexpr int kExitUsage = 64;
constexpr int kExitUnknownEntry = 66;

mpfr_prec_t default_prec() {
    if (const char* env = std::getenv("QCF_DEFAULT_PREC")) {
        long p = std::strtol(env, nullptr, 10);
        if (p >= 16 && p <= 1 << 20) return static_cast<mpfr_prec_t>(p);
    }
    return 256;
}

Params resolve_params(const Entry& e, const std::vector<std::string>& overrides) {
    Params p;
    if (!e.preferred_points.empty()) p = e.preferred_points.front();
    for (const std::string& kv : overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("expected name=value, got '" + kv + "'");
        }
        p[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    return p;
}

int cmd_list(bool json) {
    if (json) {
        std::string sep = "[\n";
        for (const Entry& e : corpus()) {
            std::printf("%s  {\"id\": \"%s\", \"backend\": \"%s\"}", sep.c_str(), e.id.c_str(),
                        backend_label(e.backend).c_str());
            sep = ",\n";
        }
        std::printf("\n]\n");
        return 0;
    }
    for (const Entry& e : corpus()) {
        std::string names;
        for (const ParamSpec& s : e.params) names += (names.empty() ? "" : ",") + s.name;
        std::printf("%-18s %-8s %-14s %s\n", e.id.c_str(), backend_label(e.backend).c_str(),
                    names.empty() ? "-" : names.c_str(), e.summary.c_str());
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& explicit_ids, const std::string& pattern, bool all,
               const VerifyOptions& opt, bool json, const std::string& out_path) {
    std::vector<std::string> ids;
    if (all || (explicit_ids.empty() && pattern.empty())) {
        ids = entry_ids();
    } else {
        for (const std::string& id : explicit_ids) {
            if (!has_entry(id)) throw UnknownEntryError("no catalog entry named '" + id + "'");
            ids.push_back(id);
        }
        if (!pattern.empty()) {
            for (const std::string& id : entry_ids()) {
                if (id.find(pattern) != std::string::npos &&
                    std::find(ids.begin(), ids.end(), id) == ids.end()) {
                    ids.push_back(id);
                }
            }
            if (ids.empty()) {
                throw UnknownEntryError("no catalog entry matches '" + pattern + "'");
            }
        }
    }

    auto reports = run_suite(ids, opt);
    long pass = 0, fail = 0, inconclusive = 0;
    for (const Report& r : reports) {
        if (r.status == Status::Pass) ++pass;
        else if (r.status == Status::Fail) ++fail;
        else ++inconclusive;
    }

    std::string payload;
    if (json) {
        payload = to_json(reports) + "\n";
    } else {
        for (const Report& r : reports) payload += human_line(r) + "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 1;
        }
        out << payload;
        std::printf("%ld checks: %ld pass, %ld fail, %ld inconclusive -> %s\n",
                    static_cast<long>(reports.size()), pass, fail, inconclusive, out_path.c_str());
    } else {
        std::fputs(payload.c_str(), stdout);
        if (!json) {
            std::printf("%ld checks: %ld pass, %ld fail, %ld inconclusive\n",
                        static_cast<long>(reports.size()), pass, fail, inconclusive);
        }
    }
    if (fail > 0) return 1;
    if (inconclusive > 0) return 2;
    return 0;
}

int cmd_expand(const std::string& id, int depth, int order,
               const std::vector<std::string>& overrides) {
    const Entry& e = entry(id);
    if (e.formal_sides.empty()) {
        std::fprintf(stderr, "error: '%s' has no series side to expand\n", id.c_str());
        return 1;
    }
    Params p = resolve_params(e, overrides);
    int N = order > 0 ? order : e.default_order;
    QSeries f = e.formal_sides[0].build(p, N);

    bool reciprocal = false;
    QSeries target = f;
    if (e.shape) {
        CfShape s = e.shape(p);
        CfTerm<QSeries> t1 = s.term(1);
        if (s.head.is_zero() && t1.a.is_one() && t1.b.is_one()) {
            target = inverse(f);
            reciprocal = true;
        }
    }
    std::printf("entry %s: greedy regular expansion of the %s (window q^%d)\n", id.c_str(),
                reciprocal ? "reciprocal of the reference series" : "reference series", N);
    if (!p.empty()) {
        std::string at;
        for (const auto& [k, v] : p) at += (at.empty() ? "" : ", ") + k + "=" + v.str();
        std::printf("at %s\n", at.c_str());
    }

    CExpansion ex = c_fraction_expand(target, depth);
    for (std::size_t i = 0; i < ex.terms.size(); ++i) {
        std::printf("  term %2zu: %s * q^%d\n", i + 1, ex.terms[i].c.str().c_str(),
                    ex.terms[i].e);
    }
    const char* why = ex.reason == CStop::Terminated     ? "series terminated"
                      : ex.reason == CStop::OrderExhausted ? "window exhausted"
                                                           : "term budget reached";
    std::printf("stop: %s after %zu terms (remaining window %d)\n", why, ex.terms.size(),
                ex.final_order);
    QSeries rec = c_fraction_reconstruct(ex.terms, N);
    auto fd = first_difference(rec, target, N);
    if (fd) {
        std::printf("reconstruction agrees through q^%d\n", *fd - 1);
    } else {
        std::printf("reconstruction agrees through the whole window q^%d\n", N);
    }
    return 0;
}

int cmd_eval(const std::string& id, const std::string& q_str, int order, mpfr_prec_t prec,
             const std::vector<std::string>& overrides) {
    const Entry& e = entry(id);
    Params p = resolve_params(e, overrides);
    if (!q_str.empty()) p["q"] = Rational::parse(q_str);
    Real tol = pow_int(Real::from_long(2, prec), -static_cast<long>(prec) + 24);

    switch (e.backend) {
        case Backend::Special: {
            Real lhs = e.special_value(prec);
            Real rhs = cf_eval_numeric(e.special_fraction(prec), tol).value;
            std::printf("closed form: %s\n", lhs.str(40).c_str());
            std::printf("fraction:    %s\n", rhs.str(40).c_str());
            std::printf("|difference| = %s\n", abs(lhs - rhs).str(3).c_str());
            return 0;
        }
        case Backend::ExactFinite: {
            Rational lhs = e.exact_value(p);
            Rational rhs = cf_eval_exact(e.exact_fraction(p));
            std::printf("closed form: %s\n", lhs.str().c_str());
            std::printf("fraction:    %s\n", rhs.str().c_str());
            std::printf("exactly equal: %s\n", lhs == rhs ? "yes" : "NO");
            return 0;
        }
        case Backend::Numeric: {
            if (!p.count("q")) {
                std::fprintf(stderr, "error: numeric evaluation needs --q\n");
                return 1;
            }
            Real q = Real::from_rational(p.at("q"), prec);
            std::vector<std::pair<std::string, Real>> values;
            for (const NumericSide& side : e.numeric_sides) {
                values.emplace_back(side.name, side.eval(p, q, prec));
            }
            if (e.numeric_left_fraction) {
                values.emplace_back("left-fraction",
                                    cf_eval_numeric(e.numeric_left_fraction(p, q, prec), tol).value);
            }
            if (e.numeric_fraction) {
                values.emplace_back("fraction",
                                    cf_eval_numeric(e.numeric_fraction(p, q, prec), tol).value);
            } else if (e.shape) {
                values.emplace_back(
                    "fraction",
                    cf_eval_numeric(instantiate_numeric(e.shape(p), q, prec), tol).value);
            }
            for (const auto& [name, v] : values) {
                std::printf("%-14s %s\n", (name + ":").c_str(), v.str(40).c_str());
            }
            if (values.size() > 1) {
                Real worst(prec);
                for (std::size_t i = 1; i < values.size(); ++i) {
                    Real d = abs(values[i].second - values[0].second);
                    if (d > worst) worst = d;
                }
                std::printf("max |difference| = %s\n", worst.str(3).c_str());
            }
            return 0;
        }
        case Backend::Recurrence: {
            int N = order > 0 ? order : e.default_order;
            auto defect = e.recurrence_defect(p, N);
            if (defect) {
                std::printf("relation fails at index %d, first difference at q^%d\n",
                            defect->first, defect->second);
            } else {
                std::printf("all relations hold through q^%d\n", N);
            }
            return 0;
        }
        case Backend::Formal: {
            int N = order > 0 ? order : e.default_order;
            QSeries ref = e.formal_sides[0].build(p, N);
            int show = std::min(N, 12);
            std::printf("%s (coefficients through q^%d):\n  %s\n", e.formal_sides[0].name.c_str(),
                        show, to_string(ref.truncated(show)).c_str());
            auto agreement = [N](std::optional<int> fd) {
                return fd ? "differs first at q^" + std::to_string(*fd)
                          : "agrees through q^" + std::to_string(N);
            };
            for (std::size_t i = 1; i < e.formal_sides.size(); ++i) {
                QSeries other = e.formal_sides[i].build(p, N);
                std::printf("%s: %s\n", e.formal_sides[i].name.c_str(),
                            agreement(first_difference(ref, other, N)).c_str());
            }
            if (e.shape) {
                QSeries cf = cf_limit(instantiate_formal(e.shape(p), N), N);
                std::printf("fraction: %s\n", agreement(first_difference(ref, cf, N)).c_str());
            }
            return 0;
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and generalized continued fraction identity checker"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check catalog identities");
    std::string pattern;
    std::vector<std::string> ids;
    bool all = false, json = false;
    std::string out_path, tol = "1e-40";
    int order = -1, samples = 5;
    std::uint64_t seed = 42;
    long prec = static_cast<long>(default_prec());
    long max_depth = 1L << 16;
    verify->add_option("pattern", pattern, "substring of catalog ids to check");
    verify->add_flag("--all", all, "check the whole catalog");
    verify->add_option("--entry", ids, "catalog id (repeatable)");
    verify->add_option("--order", order, "formal series window");
    verify->add_option("--samples", samples, "points per parameterized entry");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--prec", prec, "numeric precision in bits");
    verify->add_option("--tol", tol, "numeric tolerance, e.g. 1e-40");
    verify->add_option("--max-depth", max_depth, "numeric fraction depth budget");
    verify->add_flag("--json", json, "emit structured reports");
    verify->add_option("--out", out_path, "write the report to a file");

    // list
    auto* list = app.add_subcommand("list", "show the identity catalog");
    bool list_json = false;
    list->add_flag("--json", list_json, "emit structured list");

    // expand
    auto* expand = app.add_subcommand("expand", "greedy regular expansion of an entry's series");
    std::string ex_entry;
    int ex_depth = 16, ex_order = -1;
    std::vector<std::string> ex_params;
    expand->add_option("--entry", ex_entry, "catalog id")->required();
    expand->add_option("--depth", ex_depth, "maximum number of terms");
    expand->add_option("--order", ex_order, "series window");
    expand->add_option("--param", ex_params, "parameter as name=value (repeatable)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate an entry's sides at a point");
    std::string ev_entry, ev_q;
    int ev_order = -1;
    long ev_prec = static_cast<long>(default_prec());
    std::vector<std::string> ev_params;
    eval->add_option("--entry", ev_entry, "catalog id")->required();
    eval->add_option("--q", ev_q, "rational evaluation point, e.g. 1/3");
    eval->add_option("--order", ev_order, "series window (formal entries)");
    eval->add_option("--prec", ev_prec, "numeric precision in bits");
    eval->add_option("--param", ev_params, "parameter as name=value (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(list)) return cmd_list(list_json);
        if (app.got_subcommand(verify)) {
            VerifyOptions opt;
            opt.order = order;
            opt.samples = samples;
            opt.seed = seed;
            opt.prec = static_cast<mpfr_prec_t>(prec);
            opt.tol = tol;
            opt.max_depth = max_depth;
            return cmd_verify(ids, pattern, all, opt, json, out_path);
        }
        if (app.got_subcommand(expand)) return cmd_expand(ex_entry, ex_depth, ex_order, ex_params);
        if (app.got_subcommand(eval)) {
            return cmd_eval(ev_entry, ev_q, ev_order, static_cast<mpfr_prec_t>(ev_prec), ev_params);
        }
    } catch (const UnknownEntryError& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitUnknownEntry;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
    return kExitUsage;
}

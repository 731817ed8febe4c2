#include "qcf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qcf/errors.hpp"
#include "qcf/sampling.hpp"

namespace qcf {

std::string status_label(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

namespace {

using clock_type = std::chrono::steady_clock;

void check_formal(const Entry& e, const Params& p, int N, Report& r) {
    r.order = N;
    if (e.backend == Backend::Recurrence) {
        auto defect = e.recurrence_defect(p, N);
        if (defect) {
            r.status = Status::Fail;
            r.first_diff_power = defect->second;
        } else {
            r.status = Status::Pass;
        }
        return;
    }
    QSeries ref = e.formal_sides[0].build(p, N);
    std::optional<int> worst;
    auto take = [&](const QSeries& other) {
        auto fd = first_difference(ref, other, N);
        if (fd && (!worst || *fd < *worst)) worst = fd;
    };
    for (std::size_t i = 1; i < e.formal_sides.size(); ++i) {
        take(e.formal_sides[i].build(p, N));
    }
    if (e.shape) {
        take(cf_limit(instantiate_formal(e.shape(p), N), N));
    }
    if (worst) {
        r.status = Status::Fail;
        r.first_diff_power = worst;
    } else {
        r.status = Status::Pass;
    }
}

void check_exact(const Entry& e, const Params& p, Report& r) {
    Rational lhs = e.exact_value(p);
    Rational rhs = cf_eval_exact(e.exact_fraction(p));
    if (lhs == rhs) {
        r.status = Status::Pass;
    } else {
        r.status = Status::Fail;
        r.delta = abs(Real::from_rational(lhs - rhs, 128)).str(3);
    }
}

void check_numeric(const Entry& e, const Params& p, const VerifyOptions& opt, Report& r) {
    const mpfr_prec_t prec = opt.prec + 32;  // guard bits
    r.precision_bits = static_cast<int>(opt.prec);
    r.tol = opt.tol;
    Real tol = Real::from_string(opt.tol, prec);
    Real inner = tol / Real::from_long(16, prec);  // fraction stopping tolerance

    std::vector<Real> values;
    if (e.backend == Backend::Special) {
        values.push_back(e.special_value(prec));
        values.push_back(cf_eval_numeric(e.special_fraction(prec), inner, opt.max_depth).value);
    } else {
        Real q = Real::from_rational(p.at("q"), prec);
        for (const NumericSide& side : e.numeric_sides) {
            values.push_back(side.eval(p, q, prec));
        }
        if (e.numeric_left_fraction) {
            values.push_back(
                cf_eval_numeric(e.numeric_left_fraction(p, q, prec), inner, opt.max_depth).value);
        }
        if (e.numeric_fraction) {
            values.push_back(
                cf_eval_numeric(e.numeric_fraction(p, q, prec), inner, opt.max_depth).value);
        } else if (e.shape) {
            values.push_back(
                cf_eval_numeric(instantiate_numeric(e.shape(p), q, prec), inner, opt.max_depth)
                    .value);
        }
    }
    Real worst(prec);
    for (std::size_t i = 1; i < values.size(); ++i) {
        Real d = abs(values[i] - values[0]);
        if (d > worst) worst = d;
    }
    r.delta = worst.str(3);
    r.status = worst < tol ? Status::Pass : Status::Fail;
}

}  // namespace

Report verify_point(const Entry& e, const Params& p, const VerifyOptions& opt) {
    Report r;
    r.entry = e.id;
    r.backend = backend_label(e.backend);
    for (const ParamSpec& spec : e.params) {
        auto it = p.find(spec.name);
        if (it != p.end()) r.params.emplace_back(spec.name, it->second.str_num_den());
    }
    const auto start = clock_type::now();
    try {
        switch (e.backend) {
            case Backend::Formal:
            case Backend::Recurrence:
                check_formal(e, p, opt.order > 0 ? opt.order : e.default_order, r);
                break;
            case Backend::ExactFinite:
                check_exact(e, p, r);
                break;
            case Backend::Numeric:
            case Backend::Special:
                check_numeric(e, p, opt, r);
                break;
        }
    } catch (const std::exception&) {
        r.status = Status::Inconclusive;
    }
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start).count();
    return r;
}

std::vector<Report> verify_entry(const Entry& e, const VerifyOptions& opt) {
    std::vector<Report> out;
    for (const Params& p : sample_points(e, opt.samples, opt.seed)) {
        out.push_back(verify_point(e, p, opt));
    }
    return out;
}

std::vector<Report> run_suite(const std::vector<std::string>& ids, const VerifyOptions& opt) {
    struct Task {
        const Entry* e;
        Params p;
    };
    std::vector<Task> tasks;
    for (const std::string& id : ids) {
        const Entry& e = entry(id);
        for (Params& p : sample_points(e, opt.samples, opt.seed)) {
            tasks.push_back(Task{&e, std::move(p)});
        }
    }
    std::vector<Report> results(tasks.size());

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 4;
    if (const char* env = std::getenv("QCF_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 64) workers = static_cast<unsigned>(n);
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size() ? tasks.size() : 1));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = verify_point(*tasks[i].e, tasks[i].p, opt);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return results;
}

namespace {

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["entry"] = r.entry;
    j["backend"] = r.backend;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) j["params"][name] = value;
    if (r.order) j["order"] = *r.order;
    if (r.precision_bits) j["precision_bits"] = *r.precision_bits;
    if (r.tol) j["tol"] = *r.tol;
    j["status"] = status_label(r.status);
    if (r.first_diff_power) j["first_diff_power"] = *r.first_diff_power;
    if (r.delta) j["delta"] = *r.delta;
    j["ms"] = r.ms;
    return j;
}

}  // namespace

std::string to_json(const Report& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<Report>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Report& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string human_line(const Report& r) {
    std::ostringstream os;
    os << "[" << (r.status == Status::Pass         ? "PASS"
                  : r.status == Status::Fail       ? "FAIL"
                                                   : "INCONCLUSIVE")
       << "] " << r.entry;
    for (const auto& [name, value] : r.params) os << " " << name << "=" << value;
    os << " (" << r.backend;
    if (r.order) os << ", order " << *r.order;
    if (r.precision_bits) os << ", " << *r.precision_bits << " bits";
    if (r.tol) os << ", tol " << *r.tol;
    if (r.first_diff_power) os << ", first diff at q^" << *r.first_diff_power;
    if (r.delta) os << ", delta " << *r.delta;
    os << ") " << r.ms << "ms";
    return os.str();
}

}  // namespace qcf

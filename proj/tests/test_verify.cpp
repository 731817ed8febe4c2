#include "qcf/verify.hpp"

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "qcf/sampling.hpp"

using namespace qcf;

namespace {

Rational r(const char* s) { return Rational::parse(s); }

nlohmann::json parsed(const Report& rep) { return nlohmann::json::parse(to_json(rep)); }

std::set<std::string> key_set(const nlohmann::json& j) {
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    return keys;
}

nlohmann::json without_ms(const std::string& json_array) {
    nlohmann::json arr = nlohmann::json::parse(json_array);
    for (auto& item : arr) item.erase("ms");
    return arr;
}

}  // namespace

TEST_CASE("sampling is deterministic, admissible, and preferred-first") {
    const Entry& e = entry("L.I.6.4.2");
    auto pts = sample_points(e, 7, 42);
    REQUIRE(pts.size() == 7);
    for (std::size_t i = 0; i < e.preferred_points.size(); ++i) {
        CHECK(pts[i] == e.preferred_points[i]);
    }
    for (const Params& p : pts) {
        CHECK(e.admissible(p));
        CHECK(p.count("a") == 1);
        CHECK(p.count("q") == 1);
    }
    CHECK(sample_points(e, 7, 42) == pts);
    CHECK(sample_points(e, 7, 43) != pts);

    CHECK(sample_points(entry("III.16.38.RR"), 5, 42).size() == 1);
    CHECK(sample_points(e, 0, 42).size() == 1);
}

TEST_CASE("verify_point passes on a sound formal entry") {
    VerifyOptions opt;
    Report rep = verify_point(entry("III.16.38.RR"), {}, opt);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.backend == "formal");
    CHECK(rep.order == 40);
    CHECK(!rep.first_diff_power);
    CHECK(!rep.delta);

    auto j = parsed(rep);
    CHECK(key_set(j) == std::set<std::string>{"entry", "backend", "params", "order", "status", "ms"});
    CHECK(j["status"] == "pass");
    CHECK(j["params"].empty());
}

TEST_CASE("a corrupted fraction term is caught with a small first difference") {
    Entry pert = entry("III.16.38.RR");
    auto orig = pert.shape;
    pert.shape = [orig](const Params& p) {
        CfShape s = orig(p);
        auto term = s.term;
        s.term = [term](long k) {
            CfTerm<QSeries> t = term(k);
            if (k == 3) {
                int d = std::max(t.a.order(), 1);
                t.a = t.a.with_order(d) + QSeries::monomial(Rational(1), 1, d);
            }
            return t;
        };
        return s;
    };
    VerifyOptions opt;
    Report rep = verify_point(pert, {}, opt);
    REQUIRE(rep.status == Status::Fail);
    REQUIRE(static_cast<bool>(rep.first_diff_power));
    CHECK(*rep.first_diff_power <= 6);

    auto j = parsed(rep);
    CHECK(j["status"] == "fail");
    CHECK(j.contains("first_diff_power"));
}

TEST_CASE("precondition violations surface as inconclusive, not as pass or fail") {
    VerifyOptions opt;
    Report rep = verify_point(entry("III.16.2"), {{"a", r("1")}, {"b", r("0")}}, opt);
    CHECK(rep.status == Status::Inconclusive);
    CHECK(parsed(rep)["status"] == "inconclusive");
}

TEST_CASE("numeric and exact reports carry exactly their schema fields") {
    VerifyOptions opt;
    Report num = verify_point(entry("III.16.11"), entry("III.16.11").preferred_points[0], opt);
    CHECK(num.status == Status::Pass);
    auto nj = parsed(num);
    CHECK(key_set(nj) == std::set<std::string>{"entry", "backend", "params", "precision_bits",
                                               "tol", "status", "delta", "ms"});
    CHECK(nj["backend"] == "numeric");
    CHECK(nj["precision_bits"] == 256);
    CHECK(nj["tol"] == "1e-40");
    CHECK(nj["params"]["a"] == "1/3");

    Report ex = verify_point(entry("III.16.16"), entry("III.16.16").preferred_points[0], opt);
    CHECK(ex.status == Status::Pass);
    auto ej = parsed(ex);
    CHECK(key_set(ej) == std::set<std::string>{"entry", "backend", "params", "status", "ms"});
    CHECK(ej["backend"] == "exact");

    Report sp = verify_point(entry("III.16.39.cor.ii"), {}, opt);
    CHECK(sp.status == Status::Pass);
    auto sj = parsed(sp);
    CHECK(key_set(sj) == std::set<std::string>{"entry", "backend", "params", "precision_bits",
                                               "tol", "status", "delta", "ms"});
}

TEST_CASE("recurrence entries report as formal work with an order") {
    VerifyOptions opt;
    Report rep = verify_point(entry("L.I.6.3.1.iv"), entry("L.I.6.3.1.iv").preferred_points[0], opt);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.backend == "formal");
    CHECK(rep.order == 25);
}

TEST_CASE("verify output is byte-deterministic apart from timings") {
    VerifyOptions opt;
    auto a = verify_entry(entry("III.16.13"), opt);
    auto b = verify_entry(entry("III.16.13"), opt);
    CHECK(without_ms(to_json(a)) == without_ms(to_json(b)));
    REQUIRE(a.size() == 5);
    CHECK(a[0].params == std::vector<std::pair<std::string, std::string>>{{"a", "1/1"}});
}

TEST_CASE("the suite runner is schedule-independent") {
    VerifyOptions opt;
    opt.samples = 2;
    std::vector<std::string> ids = {"III.16.38.RR", "III.16.16", "L.I.6.5.2", "III.16.13"};
    setenv("QCF_THREADS", "1", 1);
    auto serial = run_suite(ids, opt);
    setenv("QCF_THREADS", "8", 1);
    auto parallel = run_suite(ids, opt);
    unsetenv("QCF_THREADS");
    CHECK(without_ms(to_json(serial)) == without_ms(to_json(parallel)));
    // one report per sampled point, in catalog task order
    REQUIRE(serial.size() == 1 + 2 + 2 + 2);
    CHECK(serial[0].entry == "III.16.38.RR");
    CHECK(serial.back().entry == "III.16.13");
    for (const Report& rep : serial) CHECK(rep.status == Status::Pass);
}

TEST_CASE("human lines summarize status, point, and evidence") {
    VerifyOptions opt;
    Report rep = verify_point(entry("III.16.13"), {{"a", r("1/2")}}, opt);
    std::string line = human_line(rep);
    CHECK(line.find("[PASS]") == 0);
    CHECK(line.find("III.16.13") != std::string::npos);
    CHECK(line.find("a=1/2") != std::string::npos);
    CHECK(line.find("order 30") != std::string::npos);
}

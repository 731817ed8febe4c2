#include "qcf/corpus.hpp"

#include <set>

#include "doctest.h"
#include "qcf/errors.hpp"
#include "qcf/expand.hpp"

using namespace qcf;

namespace {
Rational r(const char* s) { return Rational::parse(s); }
}

TEST_CASE("catalog is complete, ordered, and addressable") {
    const auto ids = entry_ids();
    REQUIRE(ids.size() == 31);
    CHECK(ids.front() == "III.16.38.RR");
    CHECK(ids[1] == "III.16.39.cor.ii");
    CHECK(ids[2] == "III.16.39.cor.i");
    CHECK(ids.back() == "III.16.12");
    std::set<std::string> uniq(ids.begin(), ids.end());
    CHECK(uniq.size() == ids.size());
    for (const auto& id : ids) {
        CHECK(has_entry(id));
        CHECK(entry(id).id == id);
        CHECK(!entry(id).summary.empty());
    }
    CHECK(!has_entry("no.such.entry"));
    CHECK_THROWS_AS(entry("no.such.entry"), UnknownEntryError);
}

TEST_CASE("every entry carries the pieces its backend needs") {
    for (const Entry& e : corpus()) {
        switch (e.backend) {
            case Backend::Formal:
                CHECK(!e.formal_sides.empty());
                CHECK((e.formal_sides.size() >= 2 || static_cast<bool>(e.shape)));
                break;
            case Backend::ExactFinite:
                CHECK(static_cast<bool>(e.exact_value));
                CHECK(static_cast<bool>(e.exact_fraction));
                break;
            case Backend::Numeric:
                CHECK((!e.numeric_sides.empty() || static_cast<bool>(e.numeric_left_fraction)));
                CHECK((static_cast<bool>(e.shape) || static_cast<bool>(e.numeric_fraction)));
                break;
            case Backend::Recurrence:
                CHECK(static_cast<bool>(e.recurrence_defect));
                break;
            case Backend::Special:
                CHECK(static_cast<bool>(e.special_value));
                CHECK(static_cast<bool>(e.special_fraction));
                break;
        }
        for (const auto& p : e.preferred_points) {
            if (e.admissible) CHECK(e.admissible(p));
        }
    }
}

TEST_CASE("g_sum matches its frozen expansion") {
    // g(b, lambda) at b = 1/3, lambda = 1/2, through q^10
    const char* expect[] = {"1",        "1/2",      "1/3",       "7/18",
                            "67/108",   "44/81",    "715/972",   "979/1458",
                            "3881/4374", "49357/52488", "87223/78732"};
    QSeries g = g_sum(r("1/3"), r("1/2"), 0, 10);
    for (int i = 0; i <= 10; ++i) CHECK(g[i] == r(expect[i]));
}

TEST_CASE("eisenstein_sum matches its frozen expansion") {
    const char* expect[] = {"1", "-1/2", "0", "1/4", "0", "0", "-1/8",
                            "0", "0",    "0", "1/16", "0", "0"};
    QSeries s = eisenstein_sum(r("1/2"), 12);
    for (int i = 0; i <= 12; ++i) CHECK(s[i] == r(expect[i]));
}

TEST_CASE("ladder fraction, sum ratio, and residue product agree through q^40") {
    const Entry& e = entry("III.16.38.RR");
    const int N = 40;
    QSeries ratio = e.formal_sides[0].build({}, N);
    QSeries product = e.formal_sides[1].build({}, N);
    QSeries fraction = cf_limit(instantiate_formal(e.shape({}), N), N);
    CHECK(!first_difference(ratio, product, N));
    CHECK(!first_difference(ratio, fraction, N));
}

TEST_CASE("mu polynomials satisfy their descent relation and match the finite fraction") {
    const Rational lam = r("1/2"), q = r("1/3");
    for (long n = 1; n <= 8; ++n) {
        // mu_n(s) = mu_n(s+1) + lambda q^{s+1} mu_n(s+2), for s = 0 .. n-1
        for (long s = 0; s < n; ++s) {
            Rational lhs = mu_poly(n, s, lam, q);
            Rational rhs = mu_poly(n, s + 1, lam, q) + lam * pow(q, s + 1) * mu_poly(n, s + 2, lam, q);
            CHECK(lhs == rhs);
        }
        Params p{{"n", Rational(n)}, {"lambda", lam}, {"q", q}};
        const Entry& e = entry("III.16.16");
        CHECK(e.exact_value(p) == cf_eval_exact(e.exact_fraction(p)));
    }
}

TEST_CASE("denominator polynomials of the split fraction match their closed forms") {
    const Entry& e = entry("III.16.13.D");
    CHECK(!e.recurrence_defect(Params{{"a", r("1")}, {"n", Rational(4)}}, 25));
    CHECK(!e.recurrence_defect(Params{{"a", r("-1/3")}, {"n", Rational(5)}}, 25));
    CHECK(!e.recurrence_defect(Params{{"a", r("2/5")}, {"n", Rational(6)}}, 25));
}

TEST_CASE("g functional equation holds as a series family") {
    const Entry& e = entry("L.I.6.3.1.iv");
    CHECK(!e.recurrence_defect(Params{{"b", r("1/2")}, {"lambda", r("1/2")}}, 25));
    CHECK(!e.recurrence_defect(Params{{"b", r("-2/3")}, {"lambda", r("3")}}, 25));
}

TEST_CASE("interleaved lambda-free fraction reproduces its sum ratio") {
    const Entry& e = entry("L.I.6.2.3");
    Params p{{"a", r("1/2")}, {"b", r("1/3")}};
    const int N = 25;
    QSeries lhs = e.formal_sides[0].build(p, N);
    QSeries cf = cf_limit(instantiate_formal(e.shape(p), N), N);
    CHECK(!first_difference(lhs, cf, N));
}

TEST_CASE("product alternation ratio equals the odd/even sum split, formally") {
    // independent construction of entry III.16.11's left side as a series
    const Rational a = r("1/3"), b = r("1/5");
    const int N = 20;
    QSeries p1 = qpochhammer(-a, 0, 1, kInfiniteProduct, N);
    QSeries p2 = qpochhammer(b, 0, 1, kInfiniteProduct, N);
    QSeries p3 = qpochhammer(a, 0, 1, kInfiniteProduct, N);
    QSeries p4 = qpochhammer(-b, 0, 1, kInfiniteProduct, N);
    QSeries lhs = (p1 * p2 - p3 * p4) * inverse(p1 * p2 + p3 * p4);
    QSeries parity = qbinomial_theorem_sum_odd(a, b, N) *
                     inverse(qbinomial_theorem_sum_even(a, b, N));
    QSeries cf = cf_limit(
        instantiate_formal(entry("III.16.11").shape(Params{{"a", a}, {"b", b}}), N), N);
    CHECK(!first_difference(lhs, parity, N));
    CHECK(!first_difference(lhs, cf, N));
}

TEST_CASE("finite interleaved fraction collapses exactly") {
    const Entry& e = entry("L.I.6.4.3");
    for (long n = 1; n <= 6; ++n) {
        Params p{{"n", Rational(n)}, {"a", r("1/2")}, {"b", r("4/3")}, {"q", r("1/4")}};
        CHECK(e.exact_value(p) == cf_eval_exact(e.exact_fraction(p)));
    }
}

TEST_CASE("numeric fraction pair agrees at a pinned point") {
    const Entry& e = entry("L.I.6.5.2");
    const mpfr_prec_t prec = 256;
    Real q = Real::from_rational(r("1/3"), prec);
    Real tol = Real::from_string("1e-45", prec);
    Real left = cf_eval_numeric(e.numeric_left_fraction({}, q, prec), tol).value;
    Real right = cf_eval_numeric(e.numeric_fraction({}, q, prec), tol).value;
    CHECK(abs(left - right) < Real::from_string("1e-40", prec));
}

TEST_CASE("square-product entry: both numeric sides and the fraction agree") {
    const Entry& e = entry("III.16.12");
    const mpfr_prec_t prec = 256;
    Params p{{"a", r("1/3")}, {"b", r("1/2")}, {"q", r("1/3")}};
    Real q = Real::from_rational(r("1/3"), prec);
    Real tol = Real::from_string("1e-45", prec);
    Real products = e.numeric_sides[0].eval(p, q, prec);
    Real sums = e.numeric_sides[1].eval(p, q, prec);
    Real cf = cf_eval_numeric(instantiate_numeric(e.shape(p), q, prec), tol).value;
    Real bound = Real::from_string("1e-40", prec);
    CHECK(abs(products - sums) < bound);
    CHECK(abs(products - cf) < bound);
}

TEST_CASE("divided_by_one_minus inverts multiplication by 1 - c q^E") {
    QSeries w(12);
    w.at(0) = r("1");
    w.at(3) = r("-2/3");
    w.at(7) = r("5");
    QSeries onem(12);
    onem.at(0) = r("1");
    onem.at(2) = r("-3/4");
    CHECK(divided_by_one_minus(w * onem, r("3/4"), 2) == w);
}

#include <vector>

#include "doctest.h"
#include "qcf/errors.hpp"
#include "qcf/qseries.hpp"

using qcf::kInfiniteProduct;
using qcf::QSeries;
using qcf::Rational;

namespace {

QSeries from_longs(const std::vector<long>& cs) {
    std::vector<Rational> v(cs.begin(), cs.end());
    return QSeries(static_cast<int>(cs.size()) - 1, std::move(v));
}

}  // namespace

TEST_CASE("series ring arithmetic at minimum order") {
    QSeries a = from_longs({1, 2, 3});       // order 2
    QSeries b = from_longs({1, -1, 0, 5});   // order 3
    QSeries s = a + b;
    CHECK(s.order() == 2);
    CHECK(s == from_longs({2, 1, 3}));
    QSeries p = a * b;
    CHECK(p.order() == 2);
    CHECK(p == from_longs({1, 1, 1}));  // (1+2q+3q^2)(1-q+...) = 1 + q + q^2 + O(q^3)
    CHECK((a - a).is_zero());
    CHECK((-a)[1] == Rational(-2));
    CHECK((a * Rational(1, 2))[2] == Rational(3, 2));
}

TEST_CASE("series inversion") {
    QSeries a = from_longs({1, -1});  // 1 - q, order 1: too short to see the pattern
    QSeries geo = inverse(a.padded(6));
    CHECK(geo == from_longs({1, 1, 1, 1, 1, 1, 1}));
    CHECK((geo * a.padded(6)).is_one());

    QSeries f = from_longs({2, 1, -3, 0, 4});
    CHECK((inverse(f) * f).is_one());
    CHECK_THROWS_AS(inverse(from_longs({0, 1})), qcf::ZeroConstantTermError);
}

TEST_CASE("substitution, shift, valuation") {
    QSeries a = from_longs({1, 2, 3, 4, 5, 6, 7});
    QSeries a2 = substitute_q_power(a, 2);
    CHECK(a2 == from_longs({1, 0, 2, 0, 3, 0, 4}));
    CHECK(substitute_q_power(a, 7) == from_longs({1, 0, 0, 0, 0, 0, 0}));

    QSeries m = QSeries::monomial(Rational(5), 3, 8);
    CHECK(m.valuation() == 3);
    CHECK(QSeries(4).valuation() == std::nullopt);
    QSeries d = shifted_down(m, 2);
    CHECK(d.order() == 6);
    CHECK(d[1] == Rational(5));
    CHECK_THROWS_AS(shifted_down(from_longs({0, 1, 0}), 2), qcf::DomainError);
}

TEST_CASE("agreement windows") {
    QSeries a = from_longs({1, 2, 3, 9});
    QSeries b = from_longs({1, 2, 4, 9});
    CHECK(qcf::agree_through(a, b, 1));
    CHECK_FALSE(qcf::agree_through(a, b, 3));
    CHECK(qcf::first_difference(a, b, 3) == 2);
    CHECK(qcf::first_difference(a, a, 3) == std::nullopt);
    CHECK_THROWS_AS(qcf::first_difference(a, b, 4), qcf::DomainError);
}

TEST_CASE("polynomial evaluation and printing") {
    QSeries a = from_longs({1, 0, -2, 1});
    CHECK(qcf::evaluate_at(a, Rational(1, 2)) == Rational(5, 8));  // 1 - 1/2 + 1/8
    CHECK(qcf::to_string(a) == "1 - 2*q^2 + q^3");
    CHECK(qcf::to_string(QSeries(3)) == "0");
    CHECK(qcf::to_string(QSeries::monomial(Rational(-1, 3), 1, 2)) == "-1/3*q");
}

// (q;q)_infinity through q^40; the nonzero coefficients sit at the
// generalized pentagonal numbers k(3k-1)/2 with sign (-1)^k.
TEST_CASE("Euler product support") {
    const std::vector<long> expected = {1,  -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0,
                                        0,  -1, 0,  0, 0, 0, 0, 0, 1, 0, 0, 0, 1,  0,
                                        0,  0,  0,  0, 0, 0, 0, -1, 0, 0, 0, 0, -1};
    QSeries euler = qcf::qpochhammer(Rational(1), 1, 1, kInfiniteProduct, 40);
    CHECK(euler == from_longs(expected));
}

// The quintuple-residue product that the catalog's first entry converges to,
// frozen from an independent computation.
TEST_CASE("modulus-5 residue product through q^40") {
    const std::vector<long> expected = {
        1,  -1, 1,  0,  -1, 1,   -1, 1,  0,  -1, 2,  -3, 2,  0,   -2, 4,  -4, 3,  -1, -3, 6,
        -7, 5,  0,  -5, 9,  -10, 7,  -1, -7, 14, -16, 11, -1, -11, 20, -22, 16, -2, -15, 29};
    QSeries num = qcf::qpochhammer(Rational(1), 1, 5, kInfiniteProduct, 40) *
                  qcf::qpochhammer(Rational(1), 4, 5, kInfiniteProduct, 40);
    QSeries den = qcf::qpochhammer(Rational(1), 2, 5, kInfiniteProduct, 40) *
                  qcf::qpochhammer(Rational(1), 3, 5, kInfiniteProduct, 40);
    QSeries ratio = num * inverse(den);
    REQUIRE(ratio.order() == 40);
    CHECK(ratio == from_longs(expected));
}

TEST_CASE("finite products and scalar bases") {
    // (2q; q)_3 = (1-2q)(1-2q^2)(1-2q^3)
    QSeries p = qcf::qpochhammer(Rational(2), 1, 1, 3, 7);
    QSeries expect = from_longs({1, -2, -2, 2, 4, 4, -8, 0});
    CHECK(p == expect);
    // (c; q)_0 = 1 and zero base
    CHECK(qcf::qpochhammer(Rational(3), 1, 1, 0, 4).is_one());
    CHECK(qcf::qpochhammer(Rational(0), 1, 1, kInfiniteProduct, 4).is_one());
    // factors beyond the window do not contribute
    CHECK(qcf::qpochhammer(Rational(1), 9, 1, 2, 5).is_one());
}

TEST_CASE("Gaussian binomials") {
    QSeries b52 = qcf::qbinomial(5, 2);
    CHECK(b52 == from_longs({1, 1, 2, 2, 2, 1, 1}));
    QSeries b63 = qcf::qbinomial(6, 3);
    CHECK(b63 == from_longs({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    CHECK(qcf::qbinomial(4, 0).is_one());
    CHECK(qcf::qbinomial(4, 4).is_one());
    CHECK(qcf::qbinomial(3, 5).is_zero());
    // symmetry [n k] = [n n-k]
    CHECK(qcf::qbinomial(7, 3) == qcf::qbinomial(7, 4));
    // Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k]
    QSeries lhs = qcf::qbinomial(6, 2);
    QSeries rhs = qcf::qbinomial(5, 1).padded(8) +
                  QSeries::monomial(Rational(1), 2, 8) * qcf::qbinomial(5, 2).padded(8);
    CHECK(lhs == rhs);
}

TEST_CASE("binomial-theorem sum against the product ratio") {
    const int N = 20;
    const Rational a(1, 2), b(1, 4);
    QSeries lhs = qcf::qbinomial_theorem_sum(a, b, N);
    QSeries rhs = qcf::qpochhammer(b, 0, 1, kInfiniteProduct, N) *
                  inverse(qcf::qpochhammer(a, 0, 1, kInfiniteProduct, N));
    CHECK(lhs == rhs);
}

TEST_CASE("binomial-theorem sum degenerate and edge points") {
    // b == a collapses every k >= 1 term
    CHECK(qcf::qbinomial_theorem_sum(Rational(-2, 3), Rational(-2, 3), 12).is_one());
    // b == 0 gives the reciprocal product
    QSeries lhs = qcf::qbinomial_theorem_sum(Rational(1, 3), Rational(0), 16);
    QSeries rhs = inverse(qcf::qpochhammer(Rational(1, 3), 0, 1, kInfiniteProduct, 16));
    CHECK(lhs == rhs);
    // negative a outside (0,1): the tail formula is an exact identity
    QSeries l2 = qcf::qbinomial_theorem_sum(Rational(-2, 5), Rational(1, 7), 14);
    QSeries r2 = qcf::qpochhammer(Rational(1, 7), 0, 1, kInfiniteProduct, 14) *
                 inverse(qcf::qpochhammer(Rational(-2, 5), 0, 1, kInfiniteProduct, 14));
    CHECK(l2 == r2);
    CHECK_THROWS_AS(qcf::qbinomial_theorem_sum(Rational(0), Rational(1, 2), 5), qcf::DomainError);
    CHECK_THROWS_AS(qcf::qbinomial_theorem_sum(Rational(1), Rational(1, 2), 5), qcf::DomainError);
}

TEST_CASE("parity-restricted sums recombine") {
    const int N = 15;
    const Rational a(-2, 5), b(1, 7);
    QSeries even = qcf::qbinomial_theorem_sum_even(a, b, N);
    QSeries odd = qcf::qbinomial_theorem_sum_odd(a, b, N);
    QSeries full = qcf::qbinomial_theorem_sum(a, b, N);
    CHECK(even + odd == full);
    // with b = 0 the terms are a^k/(q;q)_k, so a -> -a flips exactly the odd part
    QSeries even0 = qcf::qbinomial_theorem_sum_even(a, Rational(0), N);
    QSeries odd0 = qcf::qbinomial_theorem_sum_odd(a, Rational(0), N);
    CHECK(qcf::qbinomial_theorem_sum_even(-a, Rational(0), N) == even0);
    CHECK(qcf::qbinomial_theorem_sum_odd(-a, Rational(0), N) == -odd0);
    CHECK_THROWS_AS(qcf::qbinomial_theorem_sum_even(Rational(-1), b, 5), qcf::DomainError);
}

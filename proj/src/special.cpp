#include "qcf/special.hpp"

namespace qcf {

namespace {
// Guard digits so the closed forms are good to the working precision.
mpfr_prec_t padded(mpfr_prec_t prec) { return prec + 32; }
}  // namespace

Real special_plus_value(mpfr_prec_t prec) {
    const mpfr_prec_t p = padded(prec);
    Real five = Real::from_long(5, p);
    Real two = Real::from_long(2, p);
    Real s5 = sqrt(five);
    Real bracket = sqrt((five + s5) / two) - (s5 + Real::from_long(1, p)) / two;
    Real scale = exp(Real::pi(p) * two / five);
    return bracket * scale;
}

Real special_minus_value(mpfr_prec_t prec) {
    const mpfr_prec_t p = padded(prec);
    Real five = Real::from_long(5, p);
    Real two = Real::from_long(2, p);
    Real s5 = sqrt(five);
    Real bracket = sqrt((five - s5) / two) - (s5 - Real::from_long(1, p)) / two;
    Real scale = exp(Real::pi(p) / five);
    return bracket * scale;
}

ContinuedFraction<Real> special_plus_cf(mpfr_prec_t prec) {
    const mpfr_prec_t p = padded(prec);
    Real ratio = exp(-(Real::pi(p) + Real::pi(p)));  // e^{-2 pi}
    Real one = Real::from_long(1, p);
    auto gen = [ratio, one](long k) {
        return CfTerm<Real>{pow_int(ratio, k - 1), one};
    };
    return ContinuedFraction<Real>(Real(p), gen);
}

ContinuedFraction<Real> special_minus_cf(mpfr_prec_t prec) {
    const mpfr_prec_t p = padded(prec);
    Real ratio = -exp(-Real::pi(p));  // partial numerators (-e^{-pi})^{k-1}
    Real one = Real::from_long(1, p);
    auto gen = [ratio, one](long k) {
        return CfTerm<Real>{pow_int(ratio, k - 1), one};
    };
    return ContinuedFraction<Real>(Real(p), gen);
}

}  // namespace qcf

#pragma once

#include "qcf/cfrac.hpp"
#include "qcf/real.hpp"

namespace qcf {

// Closed forms and fractions for the two classical evaluation identities in
// the catalog (entries III.16.39.cor.ii and III.16.39.cor.i): the fraction
// 1/(1 + e^{-2pi}/(1 + e^{-4pi}/(1 + ...))) equals
// (sqrt((5+sqrt5)/2) - (sqrt5+1)/2) e^{2pi/5}, and its alternating sibling
// 1/(1 - e^{-pi}/(1 + e^{-2pi}/(1 - ...))) equals
// (sqrt((5-sqrt5)/2) - (sqrt5-1)/2) e^{pi/5}.

Real special_plus_value(mpfr_prec_t prec);
Real special_minus_value(mpfr_prec_t prec);

ContinuedFraction<Real> special_plus_cf(mpfr_prec_t prec);
ContinuedFraction<Real> special_minus_cf(mpfr_prec_t prec);

}  // namespace qcf

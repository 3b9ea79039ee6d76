#pragma once

#include <mpfr.h>

#include "hyperid/real.hpp"

namespace hyperid::constants {

/// Memoized per bit precision; repeated requests return bit-identical values.
/// First fill is internally synchronized.
Real pi(mpfr_prec_t bits);
Real sqrt_pi(mpfr_prec_t bits);
Real log_2pi(mpfr_prec_t bits);
Real euler_gamma(mpfr_prec_t bits);
/// zeta(n) for integer n >= 2.
Real zeta(unsigned n, mpfr_prec_t bits);

/// Bernoulli number B_{2n} (exact rational, rounded once to the target
/// precision). B_2 = 1/6, B_4 = -1/30, ...
Real bernoulli_2n(unsigned n, mpfr_prec_t bits);

}  // namespace hyperid::constants

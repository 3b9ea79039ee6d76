#pragma once

#include "hyperid/scalar.hpp"

namespace hyperid {

/// Pole proximity tolerance at the precision of z: 10^(-P/2) for P working
/// decimal digits. Arguments this close to a non-positive integer are treated
/// as pole hits.
Real pole_tolerance(mpfr_prec_t bits);

/// Gamma function for complex z. Throws PoleError at (near) non-positive
/// integers. Real arguments use the native mpfr path; complex arguments use
/// reflection for re(z) < 1/2 and a shifted Stirling series otherwise.
Scalar gamma(const Scalar& z);

/// Principal log-gamma, continuous on the plane cut along the non-positive
/// real axis; on the cut the value follows the sign of im(z) (+0 selects the
/// upper edge).
Scalar ln_gamma(const Scalar& z);

Scalar digamma(const Scalar& z);

/// m-th polygamma, m >= 0. Reflection is provided for m <= 3, so arguments
/// with re(z) < 1/2 and m > 3 are rejected.
Scalar polygamma(unsigned m, const Scalar& z);

/// (a)_k = a (a+1) ... (a+k-1), evaluated as a plain product.
Scalar pochhammer(const Scalar& a, unsigned long k);

}  // namespace hyperid

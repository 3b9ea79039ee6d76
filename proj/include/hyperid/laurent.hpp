#pragma once

#include <functional>
#include <map>

#include "hyperid/scalar.hpp"

namespace hyperid {

/// Numeric Laurent-coefficient extraction for a family eps -> F(eps) that is
/// analytic in a punctured disc with pole order <= -lo_order.
struct LaurentProbe {
  /// Family evaluated at the given epsilon; the probe calls it with epsilons
  /// carrying the internal working precision (2P digits).
  std::function<Scalar(const Scalar& eps)> family;
  long digits = 50;      // P
  int lo_order = -2;
  int hi_order = 0;      // highest order whose coefficient is requested
  int rungs = 0;         // 0 -> max(6, window + 2)
  long eps_exp = 0;      // base epsilon 10^eps_exp; 0 -> 10^(-P/8)
};

struct LaurentResult {
  std::map<int, Scalar> coeff;     // orders lo..hi
  Real stability;                  // worst relative change under ladder refinement
};

/// Solves a Vandermonde system over a geometric epsilon ladder (ratio 1/2)
/// and validates the requested coefficients by halving the base epsilon.
/// Throws UnstableExtraction when refinement moves a requested coefficient by
/// more than 10^(-P/4) relative.
LaurentResult laurent_limit(const LaurentProbe& probe);

}  // namespace hyperid

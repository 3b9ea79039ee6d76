#pragma once

#include <cmath>

#include "hyperid/whipple.hpp"
#include "test_util.hpp"

namespace tu {

/// Draws a frame with tops in (0,1) and bottoms near (1.5, 2.1), constrained
/// so every constituent series of the six base three-part relations
/// converges (0 < s < 1, c < e < c+1, b < f < b+1) and every derived
/// alpha/beta stays at least 0.04 away from the integers.
inline hyperid::whipple::Frame sample_convergent_frame(Rng& rng, long digits) {
  using hyperid::Scalar;
  mpfr_prec_t bits = tu::bits(digits);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    double b = rng.uniform(0.55, 0.85);
    double c = rng.uniform(0.55, 0.85);
    double u = rng.uniform(0.60, 0.78);   // e - c
    double v = rng.uniform(0.60, 0.78);   // f - b
    double lo = u + v - 0.92, hi = u + v - 0.08;
    if (lo < 0.05) lo = 0.05;
    if (hi > 0.95) hi = 0.95;
    if (hi <= lo) continue;
    double a = rng.uniform(lo, hi);
    double e = c + u, f = b + v;
    // keep the cross-relatives that the replayed relations touch convergent
    bool conv = true;
    for (double x : {f - c, e - b, 1 + f + c - a - b - e, 1 + e + b - a - c - f}) {
      conv = conv && x > 0.08 && x < 0.92;
    }
    if (!conv) continue;

    auto fr = hyperid::whipple::make_frame(
        Scalar(hyperid::Real::of_double(a, bits)), Scalar(hyperid::Real::of_double(b, bits)),
        Scalar(hyperid::Real::of_double(c, bits)), Scalar(hyperid::Real::of_double(e, bits)),
        Scalar(hyperid::Real::of_double(f, bits)));

    bool ok = true;
    auto off_integers = [&](double x) {
      return std::fabs(x - std::round(x)) > 0.04;
    };
    for (int l = 0; l < 6 && ok; ++l) {
      for (int m = 0; m < 6 && ok; ++m) {
        if (m == l) continue;
        ok = off_integers(hyperid::whipple::beta(fr, l, m).re().to_double());
        for (int n = m + 1; n < 6 && ok; ++n) {
          if (n == l) continue;
          ok = off_integers(hyperid::whipple::alpha(fr, l, m, n).re().to_double());
        }
      }
    }
    if (ok) return fr;
  }
  throw std::runtime_error("frame sampling failed");
}

}  // namespace tu

#pragma once

#include <functional>

#include "hyperid/series.hpp"

namespace hyperid {

/// Regularized sum over k = x .. y for non-integer limits:
///   sum_{k=x}^{y} f(k) := sum_{k=1}^{inf} ( f(k+x-1) - f(k+y) ).
/// When y - x is a non-negative integer the ordinary finite sum is returned
/// (and y - x = -1 gives the empty sum). `decay_hint`, when nonzero, is the
/// known algebraic decay exponent of f; otherwise it is estimated from term
/// samples. Throws NonConvergent when the difference terms are not summable.
EvalResult ms_sum(const std::function<Scalar(const Scalar&)>& f, const Scalar& x, const Scalar& y,
                  const EvalOptions& opts = {}, double decay_hint = 0.0);

}  // namespace hyperid

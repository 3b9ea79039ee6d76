#pragma once

#include <functional>

#include "hyperid/scalar.hpp"
#include "hyperid/series.hpp"

namespace hyperid::detail {

/// Stateful term source: successive calls yield term(k0), term(k0+1), ...
using TermSource = std::function<Scalar()>;

enum class Decay {
  Polynomial,     // |term(k)| ~ k^re(nu) (log k)^log_pow
  SuperGeometric  // term ratio -> 0 (factorial-type decay)
};

enum class Parity {
  Smooth,       // one-signed tail: model K^(nu+1-j)
  Alternating,  // strictly alternating tail: model (-1)^K K^(nu-j)
  Mixed         // both components present
};

struct LadderSpec {
  Decay decay = Decay::Polynomial;
  Scalar nu;             // algebraic decay exponent of |term|
  int log_pow = 0;       // highest log power in the term asymptotics
  Parity parity = Parity::Smooth;
  long first_index = 0;  // k0
  long preamble = 0;     // indices before the asymptotic regime sets in
  /// Builds the term stream at the engine-chosen working precision. The
  /// extrapolation amplifies sample noise by roughly two digits per
  /// eliminated power, so the engine pads the precision accordingly instead
  /// of lengthening the ladder.
  std::function<TermSource(mpfr_prec_t)> source;
};

struct LadderOutcome {
  Scalar value;
  Real bound;
  unsigned long terms = 0;
  bool budget_hit = false;
  bool regime_ok = true;
};

/// Sums term(k) from k0, extrapolating the algebraic tail from partial sums
/// on a short geometric ladder (Richardson-type elimination with the decay
/// exponents known a priori, solved as a dense system at elevated precision).
/// The reported bound combines the spread of two nested extrapolations, the
/// magnitude of the last modelled tail column, and the rounding floor.
LadderOutcome sum_with_tail_fit(const LadderSpec& spec, const EvalOptions& opts);

}  // namespace hyperid::detail

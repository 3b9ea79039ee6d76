#pragma once

#include <vector>

#include "hyperid/scalar.hpp"

namespace hyperid {

/// Parameters of a pFq at unit argument: p tops, q bottoms (the k! bottom is
/// implicit). A bottom at a non-positive integer -j is legal only if some top
/// sits at -n with n < j, so the series truncates before the pole.
struct HypParams {
  std::vector<Scalar> tops;
  std::vector<Scalar> bottoms;
};

/// Sum of bottoms minus sum of tops; re > 0 is the convergence condition for
/// the non-terminating series at unit argument.
Scalar parametric_excess(const HypParams& p);

enum class SeriesKind { Terminating, Convergent, Divergent, BottomPole };

struct Classification {
  SeriesKind kind;
  long terminates_at = -1;  // n for Terminating(n)
};

/// Tops and bottoms within 10^(-P/2) of non-positive integers are snapped.
Classification classify(const HypParams& p);

/// Canonical ordering of tops and bottoms (by real, then imaginary part) so
/// evaluation is bit-stable under parameter permutations.
HypParams canonical(const HypParams& p);

}  // namespace hyperid

#include "hyperid/hyp.hpp"

#include <algorithm>

#include "hyperid/special.hpp"

namespace hyperid {

Scalar parametric_excess(const HypParams& p) {
  mpfr_prec_t bits = 64;
  for (const auto& t : p.tops) bits = std::max(bits, t.prec());
  for (const auto& b : p.bottoms) bits = std::max(bits, b.prec());
  Scalar s(bits);
  for (const auto& b : p.bottoms) s += b;
  for (const auto& t : p.tops) s -= t;
  return s;
}

Classification classify(const HypParams& p) {
  mpfr_prec_t bits = 64;
  for (const auto& t : p.tops) bits = std::max(bits, t.prec());
  Real tol = pole_tolerance(bits);

  long term_at = -1;
  for (const auto& t : p.tops) {
    long n = 0;
    if (near_nonpositive_integer(t, tol, &n)) {
      if (term_at < 0 || n < term_at) term_at = n;
    }
  }
  long bottom_pole = -1;
  for (const auto& b : p.bottoms) {
    long j = 0;
    if (near_nonpositive_integer(b, tol, &j)) {
      if (bottom_pole < 0 || j < bottom_pole) bottom_pole = j;
    }
  }
  if (bottom_pole >= 0 && !(term_at >= 0 && term_at < bottom_pole)) {
    return {SeriesKind::BottomPole, bottom_pole};
  }
  if (term_at >= 0) return {SeriesKind::Terminating, term_at};
  Scalar s = parametric_excess(p);
  if (s.re().sign() > 0) return {SeriesKind::Convergent, -1};
  return {SeriesKind::Divergent, -1};
}

HypParams canonical(const HypParams& p) {
  HypParams q = p;
  auto less = [](const Scalar& a, const Scalar& b) {
    if (!(a.re() == b.re())) return a.re() < b.re();
    return a.im() < b.im();
  };
  std::stable_sort(q.tops.begin(), q.tops.end(), less);
  std::stable_sort(q.bottoms.begin(), q.bottoms.end(), less);
  return q;
}

}  // namespace hyperid

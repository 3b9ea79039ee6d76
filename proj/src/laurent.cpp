#include "hyperid/laurent.hpp"

#include <vector>

#include "hyperid/errors.hpp"

namespace hyperid {

namespace {

std::vector<Scalar> solve_vandermonde(const std::vector<Scalar>& eps,
                                      const std::vector<Scalar>& vals, int lo,
                                      mpfr_prec_t sb) {
  const size_t n = eps.size();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  std::vector<Scalar> b(n);
  for (size_t i = 0; i < n; ++i) {
    Scalar e = eps[i].at_prec(sb);
    Scalar p = pow_si(e, lo);
    for (size_t c = 0; c < n; ++c) {
      a[i][c] = p;
      p *= e;
    }
    b[i] = vals[i].at_prec(sb);
  }
  // Gaussian elimination with partial pivoting
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    Real best = abs1(a[col][col]);
    for (size_t r = col + 1; r < n; ++r) {
      Real v = abs1(a[r][col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Scalar> x(n);
  for (size_t i = n; i-- > 0;) {
    Scalar acc = b[i];
    for (size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace

LaurentResult laurent_limit(const LaurentProbe& probe) {
  const long p = probe.digits;
  const mpfr_prec_t wb = bits_for_digits(2 * p);
  const int window = probe.hi_order - probe.lo_order + 1;
  if (window < 1) throw DomainError("empty laurent order window");
  const int rungs = probe.rungs > 0 ? probe.rungs : std::max(6, window + 2);
  const long eexp = probe.eps_exp != 0 ? probe.eps_exp : -std::max(2L, p / 8);

  // two nested ladders sharing all but one evaluation
  std::vector<Scalar> eps(rungs + 1), vals(rungs + 1);
  Real e0 = pow10(eexp, wb);
  for (int i = 0; i <= rungs; ++i) {
    eps[i] = Scalar(e0);
    vals[i] = probe.family(eps[i]);
    e0 = e0 / 2;
  }
  mpfr_prec_t sb = wb + 128;
  std::vector<Scalar> coarse_eps(eps.begin(), eps.begin() + rungs);
  std::vector<Scalar> coarse_vals(vals.begin(), vals.begin() + rungs);
  std::vector<Scalar> fine_eps(eps.begin() + 1, eps.end());
  std::vector<Scalar> fine_vals(vals.begin() + 1, vals.end());
  auto ca = solve_vandermonde(coarse_eps, coarse_vals, probe.lo_order, sb);
  auto cb = solve_vandermonde(fine_eps, fine_vals, probe.lo_order, sb);

  Real thresh = pow10(-(p / 4), 64);
  LaurentResult out;
  out.stability = Real::of_long(0, 64);
  Real e0abs = abs(eps[0].re());
  for (int o = probe.lo_order; o <= probe.hi_order; ++o) {
    size_t idx = static_cast<size_t>(o - probe.lo_order);
    Scalar refined = cb[idx].at_prec(wb);
    // a coefficient competing against the other orders at the base epsilon:
    // below that scale times the stability threshold it is numerically zero
    Real floor(sb);
    mpfr_set_zero(floor.raw(), 1);
    for (int j = probe.lo_order; j < probe.lo_order + rungs; ++j) {
      if (j == o) continue;
      size_t jdx = static_cast<size_t>(j - probe.lo_order);
      floor = max(floor, abs1(cb[jdx]) * pow(e0abs, Real::of_long(j - o, sb)));
    }
    Real rel = abs1(ca[idx] - cb[idx]) / (abs1(cb[idx]) + floor * pow10(-p / 4, sb) + pow10(-2 * p, sb));
    out.stability = max(out.stability, rel.at_prec(64));
    out.coeff.emplace(o, refined);
  }
  if (!(out.stability <= thresh)) {
    throw UnstableExtraction("laurent coefficients moved by " + out.stability.str(4) +
                             " under ladder refinement");
  }
  return out;
}

}  // namespace hyperid

#include "hyperid/special.hpp"

#include <stdexcept>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"

namespace hyperid {

namespace {

struct StirlingPlan {
  long shift_to;     // require re(z) >= shift_to before using the series
  unsigned max_terms;
  mpfr_prec_t work;  // internal bit precision
};

StirlingPlan plan_for(mpfr_prec_t target_bits) {
  double dw = target_bits / 3.3219280948873623;
  StirlingPlan p;
  p.shift_to = static_cast<long>(0.55 * dw) + 10;
  p.max_terms = static_cast<unsigned>(dw) + 14;
  p.work = target_bits + static_cast<mpfr_prec_t>(p.max_terms) + 28;
  return p;
}

// log Gamma(z) by the Stirling series; requires re(z) >= plan.shift_to.
Scalar ln_gamma_stirling(const Scalar& z, const StirlingPlan& plan) {
  mpfr_prec_t wb = plan.work;
  Scalar lz = log(z);
  Scalar acc = (z - Scalar::of_ratio(1, 2, wb)) * lz - z;
  acc += Scalar(constants::log_2pi(wb) / 2);
  Real scale = abs1(acc) + 1;
  Real target = scale * pow10(-digits_for_bits(wb) - 2, wb);
  Scalar zinv2 = pow_si(z, -2);
  Scalar zpow = Scalar::of_long(1, wb) / z;  // z^{-(2n-1)}
  for (unsigned n = 1; n <= plan.max_terms; ++n) {
    Scalar term = Scalar(constants::bernoulli_2n(n, wb) /
                         (2L * n * (2L * n - 1))) *
                  zpow;
    acc += term;
    if (abs1(term) <= target) return acc;
    zpow *= zinv2;
  }
  throw std::logic_error("stirling series did not reach tolerance");
}

Scalar digamma_asym(const Scalar& z, const StirlingPlan& plan) {
  mpfr_prec_t wb = plan.work;
  Scalar acc = log(z) - pow_si(z * 2, -1);
  Real scale = abs1(acc) + 1;
  Real target = scale * pow10(-digits_for_bits(wb) - 2, wb);
  Scalar zinv2 = pow_si(z, -2);
  Scalar zpow = zinv2;  // z^{-2n}
  for (unsigned n = 1; n <= plan.max_terms; ++n) {
    Scalar term = Scalar(constants::bernoulli_2n(n, wb) / (2L * n)) * zpow;
    acc -= term;
    if (abs1(term) <= target) return acc;
    zpow *= zinv2;
  }
  throw std::logic_error("digamma series did not reach tolerance");
}

// (-1)^{m-1} Psi^{(m)} expansion for re(z) large:
//   (m-1)!/z^m + m!/(2 z^{m+1}) + sum_n B_{2n} (2n+m-1)!/((2n)! z^{2n+m})
Scalar polygamma_asym(unsigned m, const Scalar& z, const StirlingPlan& plan) {
  mpfr_prec_t wb = plan.work;
  Real fact_m1 = Real::of_long(1, wb);  // (m-1)!
  for (unsigned j = 2; j < m; ++j) fact_m1 *= static_cast<long>(j);
  Scalar zinv = Scalar::of_long(1, wb) / z;
  Scalar zpow_m = pow_si(zinv, static_cast<long>(m));  // z^{-m}
  Scalar acc = Scalar(fact_m1) * zpow_m;
  acc += Scalar(fact_m1 * static_cast<long>(m) / 2L) * zpow_m * zinv;
  Real scale = abs1(acc) + abs1(zpow_m);
  Real target = scale * pow10(-digits_for_bits(wb) - 2, wb);
  Scalar zinv2 = zinv * zinv;
  Scalar zpow = zpow_m * zinv2;  // z^{-(2n+m)}
  // ratio (2n+m-1)!/(2n)! maintained incrementally
  Real ratio(wb);
  {
    // n = 1: (m+1)!/2!
    Real num = Real::of_long(1, wb);
    for (unsigned j = 3; j <= m + 1; ++j) num *= static_cast<long>(j);
    ratio = num;
  }
  for (unsigned n = 1; n <= plan.max_terms; ++n) {
    Scalar term = Scalar(constants::bernoulli_2n(n, wb) * ratio) * zpow;
    acc += term;
    if (abs1(term) <= target) {
      if (m % 2 == 0) acc = -acc;
      return acc;
    }
    zpow *= zinv2;
    ratio *= static_cast<long>(2 * n + m);
    ratio *= static_cast<long>(2 * n + m + 1);
    ratio /= static_cast<long>(2 * n + 1);
    ratio /= static_cast<long>(2 * n + 2);
  }
  throw std::logic_error("polygamma series did not reach tolerance");
}

long shift_count(const Scalar& z, long shift_to) {
  double re = z.re().to_double();
  if (re >= static_cast<double>(shift_to)) return 0;
  return static_cast<long>(static_cast<double>(shift_to) - re) + 1;
}

void check_pole(const Scalar& z) {
  long n = 0;
  if (near_nonpositive_integer(z, pole_tolerance(z.prec()), &n)) throw PoleError(n);
}

}  // namespace

Real pole_tolerance(mpfr_prec_t bits) {
  long p = digits_for_bits(bits);
  return pow10(-(p / 2), bits);
}

Scalar gamma(const Scalar& z) {
  mpfr_prec_t tb = z.prec();
  check_pole(z);
  if (z.is_real()) {
    Real r(tb + 16);
    mpfr_gamma(r.raw(), z.re().raw(), MPFR_RNDN);
    return Scalar(r.at_prec(tb));
  }
  StirlingPlan plan = plan_for(tb);
  if (z.re().to_double() < 0.5) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    Scalar zw = z.at_prec(plan.work);
    Scalar res = Scalar(constants::pi(plan.work)) / (sin_pi(zw) * gamma(1 - zw));
    return res.at_prec(tb);
  }
  Scalar zw = z.at_prec(plan.work);
  long m = shift_count(zw, plan.shift_to);
  Scalar lg = ln_gamma_stirling(zw + m, plan);
  Scalar res = exp(lg);
  for (long k = 0; k < m; ++k) res = res / (zw + k);
  return res.at_prec(tb);
}

Scalar ln_gamma(const Scalar& z) {
  mpfr_prec_t tb = z.prec();
  check_pole(z);
  if (z.is_real() && z.re().sign() > 0) {
    Real r(tb + 16);
    mpfr_lngamma(r.raw(), z.re().raw(), MPFR_RNDN);
    return Scalar(r.at_prec(tb));
  }
  StirlingPlan plan = plan_for(tb);
  Scalar zw = z.at_prec(plan.work);
  long m = shift_count(zw, plan.shift_to);
  Scalar lg = ln_gamma_stirling(zw + m, plan);
  for (long k = 0; k < m; ++k) lg -= log(zw + k);
  return lg.at_prec(tb);
}

Scalar digamma(const Scalar& z) {
  mpfr_prec_t tb = z.prec();
  check_pole(z);
  if (z.is_real()) {
    Real r(tb + 16);
    mpfr_digamma(r.raw(), z.re().raw(), MPFR_RNDN);
    return Scalar(r.at_prec(tb));
  }
  StirlingPlan plan = plan_for(tb);
  if (z.re().to_double() < 0.5) {
    // Psi(z) = Psi(1-z) - pi cot(pi z)
    Scalar zw = z.at_prec(plan.work);
    Scalar res = digamma(1 - zw) - Scalar(constants::pi(plan.work)) * cot_pi(zw);
    return res.at_prec(tb);
  }
  Scalar zw = z.at_prec(plan.work);
  long m = shift_count(zw, plan.shift_to);
  Scalar res = digamma_asym(zw + m, plan);
  for (long k = 0; k < m; ++k) res -= pow_si(zw + k, -1);
  return res.at_prec(tb);
}

Scalar polygamma(unsigned m, const Scalar& z) {
  if (m == 0) return digamma(z);
  mpfr_prec_t tb = z.prec();
  check_pole(z);
  StirlingPlan plan = plan_for(tb);
  mpfr_prec_t wb = plan.work;
  if (z.re().to_double() < 0.5) {
    Scalar zw = z.at_prec(wb);
    Real pi = constants::pi(wb);
    Scalar s = sin_pi(zw);
    Scalar refl = polygamma(m, 1 - zw);
    Scalar res(wb);
    switch (m) {
      case 1:  // Psi'(z) = -Psi'(1-z) + pi^2 / sin^2
        res = -refl + Scalar(pi * pi) * pow_si(s, -2);
        break;
      case 2:  // Psi''(z) = Psi''(1-z) - 2 pi^3 cos / sin^3
        res = refl - Scalar(pi * pi * pi * 2L) * cos_pi(zw) * pow_si(s, -3);
        break;
      case 3: {  // Psi'''(z) = -Psi'''(1-z) + 2 pi^4 (3 - 2 sin^2) / sin^4
        Scalar s2 = s * s;
        res = -refl + Scalar(pow_si(pi, 4) * 2L) * (Scalar::of_long(3, wb) - s2 * 2L) * pow_si(s2, -2);
        break;
      }
      default:
        throw DomainError("polygamma reflection implemented only for order <= 3");
    }
    return res.at_prec(tb);
  }
  Scalar zw = z.at_prec(wb);
  long shift = shift_count(zw, plan.shift_to);
  Scalar res = polygamma_asym(m, zw + shift, plan);
  // Psi^{(m)}(z) = Psi^{(m)}(z+M) - sum (-1)^m m! / (z+k)^{m+1}
  Real fact = Real::of_long(1, wb);
  for (unsigned j = 2; j <= m; ++j) fact *= static_cast<long>(j);
  if (m % 2 == 1) fact = -fact;  // (-1)^m m!
  for (long k = 0; k < shift; ++k) res -= Scalar(fact) * pow_si(zw + k, -(static_cast<long>(m) + 1));
  return res.at_prec(tb);
}

Scalar pochhammer(const Scalar& a, unsigned long k) {
  mpfr_prec_t tb = a.prec();
  Scalar acc = Scalar::of_long(1, tb + 16);
  Scalar cur = a.at_prec(tb + 16);
  for (unsigned long j = 0; j < k; ++j) {
    acc *= cur;
    cur = cur + 1;
  }
  return acc.at_prec(tb);
}

}  // namespace hyperid

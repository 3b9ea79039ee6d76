#include "hyperid/real.hpp"

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace hyperid {

Real Real::of_string(const std::string& s, mpfr_prec_t bits) {
  Real r(bits);
  if (s.find('/') != std::string::npos) {
    try {
      mpq_class q(s, 10);
      q.canonicalize();
      mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
      return r;
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational number: " + s);
    }
  }
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + s);
  }
  return r;
}

std::string Real::str(long digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%ldRg", digits);
  char* out = nullptr;
  if (mpfr_asprintf(&out, fmt, v_) < 0) return "?";
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& a, const Real& x) {
  Real r(std::max(a.prec(), x.prec()));
  mpfr_pow(r.raw(), a.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real floor(const Real& a) {
  Real r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

Real round_nearest(const Real& a) {
  Real r(a.prec());
  mpfr_round(r.raw(), a.raw());
  return r;
}

Real pow10(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

}  // namespace hyperid

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace hyperid {

/// Decimal working precision -> mpfr bit precision, with guard bits so that
/// chains of a few thousand rounded operations stay below 10^(10-P).
inline mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 1) + 32;
}

inline long digits_for_bits(mpfr_prec_t bits) {
  return static_cast<long>((bits - 32) / 3.3219280948873623);
}

/// Thin RAII wrapper over mpfr_t. Value semantics; the precision travels with
/// the value and binary operations round to the wider operand.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_nan(v_); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of_long(long x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of_double(double x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  /// Parses a decimal string; rounds once to the target precision.
  static Real of_string(const std::string& s, mpfr_prec_t bits);
  /// Exact rational n/d rounded once.
  static Real of_ratio(long n, long d, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, d, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real at_prec(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  std::string str(long digits) const;

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define HYPERID_REAL_BINOP(op, fn)                        \
  friend Real operator op(const Real& a, const Real& b) { \
    Real r(std::max(a.prec(), b.prec()));                 \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                      \
    return r;                                             \
  }                                                       \
  friend Real operator op(const Real& a, long b) {        \
    Real r(a.prec());                                     \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                    \
    return r;                                             \
  }
  HYPERID_REAL_BINOP(+, mpfr_add)
  HYPERID_REAL_BINOP(-, mpfr_sub)
  HYPERID_REAL_BINOP(*, mpfr_mul)
  HYPERID_REAL_BINOP(/, mpfr_div)
#undef HYPERID_REAL_BINOP

  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend int cmp(const Real& a, long b) { return mpfr_cmp_si(a.v_, b); }

 private:
  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real pow_si(const Real& a, long e);
/// a^x for a > 0.
Real pow(const Real& a, const Real& x);
Real floor(const Real& a);
Real round_nearest(const Real& a);
/// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t bits);
Real max(const Real& a, const Real& b);

}  // namespace hyperid

#pragma once

#include <string>
#include <utility>

#include "hyperid/real.hpp"

namespace hyperid {

/// Arbitrary-precision complex number. Arithmetic is correctly rounded per
/// component operation; results carry the wider precision of the operands.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpfr_prec_t bits) : re_(bits), im_(bits) {
    mpfr_set_zero(re_.raw(), 1);
    mpfr_set_zero(im_.raw(), 1);
  }
  Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Scalar(Real re) : re_(std::move(re)), im_(re_.prec()) { mpfr_set_zero(im_.raw(), 1); }

  static Scalar of_long(long x, mpfr_prec_t bits) { return Scalar(Real::of_long(x, bits)); }
  static Scalar of_ratio(long n, long d, mpfr_prec_t bits) {
    return Scalar(Real::of_ratio(n, d, bits));
  }
  static Scalar of_string(const std::string& s, mpfr_prec_t bits) {
    return Scalar(Real::of_string(s, bits));
  }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  Scalar at_prec(mpfr_prec_t bits) const { return Scalar(re_.at_prec(bits), im_.at_prec(bits)); }

  bool is_real() const { return im_.is_zero(); }
  bool is_nan() const { return re_.is_nan() || im_.is_nan(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  /// "x" or "x + y*I" with the given digit count per component.
  std::string str(long digits) const;

  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  friend Scalar operator+(const Scalar& a, long b) { return Scalar(a.re_ + b, a.im_); }
  friend Scalar operator-(const Scalar& a, long b) { return Scalar(a.re_ - b, a.im_); }
  friend Scalar operator*(const Scalar& a, long b) { return Scalar(a.re_ * b, a.im_ * b); }
  friend Scalar operator/(const Scalar& a, long b) { return Scalar(a.re_ / b, a.im_ / b); }
  friend Scalar operator+(long a, const Scalar& b) { return b + a; }
  friend Scalar operator*(long a, const Scalar& b) { return b * a; }
  friend Scalar operator-(long a, const Scalar& b) { return Scalar(a - b.re_, -b.im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }

 private:
  Real re_, im_;
};

Real abs(const Scalar& z);
/// Cheap upper proxy |re| + |im|, used for bounds.
Real abs1(const Scalar& z);
Scalar conj(const Scalar& z);
Scalar exp(const Scalar& z);
/// Principal logarithm; real negative inputs take the upper-edge value
/// (imaginary part +pi), matching the continuation from above.
Scalar log(const Scalar& z);
Scalar sqrt(const Scalar& z);
Scalar pow_si(const Scalar& z, long e);
/// Principal power exp(w log z); integer fast path.
Scalar pow(const Scalar& z, const Scalar& w);

/// sin(pi z) / cos(pi z) with exact reduction of the integer part of re(z),
/// so there is no cancellation for large real parts and sin_pi(n) == 0.
Scalar sin_pi(const Scalar& z);
Scalar cos_pi(const Scalar& z);
Scalar cot_pi(const Scalar& z);
/// exp(i pi z).
Scalar exp_i_pi(const Scalar& z);

/// Distance to the nearest integer along with that integer.
std::pair<Real, long> nearest_integer(const Real& x);
/// True when z lies within tol of the non-positive integer -n (n >= 0);
/// reports n.
bool near_nonpositive_integer(const Scalar& z, const Real& tol, long* n);

}  // namespace hyperid

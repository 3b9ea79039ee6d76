#include "hyperid/scalar.hpp"

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"

namespace hyperid {

std::string Scalar::str(long digits) const {
  if (im_.is_zero()) return re_.str(digits);
  std::string s = re_.str(digits);
  if (im_.sign() >= 0)
    s += " + " + im_.str(digits) + "*I";
  else
    s += " - " + (-im_).str(digits) + "*I";
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  if (a.im_.is_zero() && b.im_.is_zero()) return Scalar((a.re_ * b.re_).at_prec(p));
  Real re = a.re_ * b.re_ - a.im_ * b.im_;
  Real im = a.re_ * b.im_ + a.im_ * b.re_;
  return Scalar(re.at_prec(p), im.at_prec(p));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  if (b.im_.is_zero()) return Scalar((a.re_ / b.re_).at_prec(p), (a.im_ / b.re_).at_prec(p));
  Real d = b.re_ * b.re_ + b.im_ * b.im_;
  Real re = (a.re_ * b.re_ + a.im_ * b.im_) / d;
  Real im = (a.im_ * b.re_ - a.re_ * b.im_) / d;
  return Scalar(re.at_prec(p), im.at_prec(p));
}

Real abs(const Scalar& z) {
  if (z.im().is_zero()) return abs(z.re());
  Real r(z.prec());
  mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return r;
}

Real abs1(const Scalar& z) { return abs(z.re()) + abs(z.im()); }

Scalar conj(const Scalar& z) { return Scalar(z.re(), -z.im()); }

Scalar exp(const Scalar& z) {
  mpfr_prec_t p = z.prec();
  Real ex = exp(z.re());
  if (z.im().is_zero()) return Scalar(ex);
  Real s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return Scalar(ex * c, ex * s);
}

Scalar log(const Scalar& z) {
  mpfr_prec_t p = z.prec();
  if (z.im().is_zero() && z.re().sign() > 0) return Scalar(log(z.re()));
  Real arg(p);
  mpfr_atan2(arg.raw(), z.im().raw(), z.re().raw(), MPFR_RNDN);
  Real mag(p);
  mpfr_hypot(mag.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return Scalar(log(mag), arg);
}

Scalar sqrt(const Scalar& z) {
  if (z.im().is_zero() && z.re().sign() >= 0) return Scalar(sqrt(z.re()));
  return exp(log(z) / 2);
}

Scalar pow_si(const Scalar& z, long e) {
  mpfr_prec_t p = z.prec();
  if (z.im().is_zero()) return Scalar(pow_si(z.re(), e));
  if (e == 0) return Scalar::of_long(1, p);
  bool neg = e < 0;
  unsigned long n = neg ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Scalar base = z, acc = Scalar::of_long(1, p);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (neg) return Scalar::of_long(1, p) / acc;
  return acc;
}

Scalar pow(const Scalar& z, const Scalar& w) {
  mpfr_prec_t p = std::max(z.prec(), w.prec());
  if (w.im().is_zero() && w.re().is_integer()) {
    long e = w.re().to_long();
    if (abs(w.re() - Real::of_long(e, p)).is_zero()) return pow_si(z.at_prec(p), e);
  }
  if (z.im().is_zero() && w.im().is_zero() && z.re().sign() > 0) {
    return Scalar(pow(z.re().at_prec(p), w.re()));
  }
  if (z.is_zero()) return Scalar(p);
  return exp(w * log(z.at_prec(p)));
}

std::pair<Real, long> nearest_integer(const Real& x) {
  Real n = round_nearest(x);
  long ni = n.to_long();
  return {x - n, ni};
}

bool near_nonpositive_integer(const Scalar& z, const Real& tol, long* n) {
  if (!(abs(z.im()) <= tol)) return false;
  auto [frac, ni] = nearest_integer(z.re());
  if (ni > 0) return false;
  if (!(abs(frac) <= tol)) return false;
  if (n) *n = -ni;
  return true;
}

namespace {

/// sin/cos of pi*(f + iy) for |f| <= 1/2 after exact integer reduction.
void sincos_pi_reduced(const Real& f, const Real& y, mpfr_prec_t p, Scalar* s, Scalar* c) {
  Real pi = constants::pi(p + 8);
  Real sf(p + 8), cf(p + 8);
  Real arg = pi * f;
  mpfr_sin_cos(sf.raw(), cf.raw(), arg.raw(), MPFR_RNDN);
  if (f.is_zero()) {
    mpfr_set_zero(sf.raw(), 1);
    mpfr_set_si(cf.raw(), 1, MPFR_RNDN);
  }
  if (y.is_zero()) {
    if (s) *s = Scalar(sf.at_prec(p));
    if (c) *c = Scalar(cf.at_prec(p));
    return;
  }
  Real ch(p + 8), sh(p + 8);
  Real piy = pi * y;
  mpfr_cosh(ch.raw(), piy.raw(), MPFR_RNDN);
  mpfr_sinh(sh.raw(), piy.raw(), MPFR_RNDN);
  if (s) *s = Scalar((sf * ch).at_prec(p), (cf * sh).at_prec(p));
  if (c) *c = Scalar((cf * ch).at_prec(p), (-(sf * sh)).at_prec(p));
}

}  // namespace

Scalar sin_pi(const Scalar& z) {
  mpfr_prec_t p = z.prec();
  auto [f, n] = nearest_integer(z.re());
  Scalar s;
  sincos_pi_reduced(f, z.im(), p, &s, nullptr);
  if (n & 1) s = -s;
  return s;
}

Scalar cos_pi(const Scalar& z) {
  mpfr_prec_t p = z.prec();
  auto [f, n] = nearest_integer(z.re());
  Scalar c;
  sincos_pi_reduced(f, z.im(), p, nullptr, &c);
  if (n & 1) c = -c;
  return c;
}

Scalar cot_pi(const Scalar& z) {
  mpfr_prec_t p = z.prec();
  auto [f, n] = nearest_integer(z.re());
  (void)n;  // period pi: the half-turn signs cancel in the ratio
  Scalar s, c;
  sincos_pi_reduced(f, z.im(), p, &s, &c);
  if (s.is_zero()) throw SinPole("cot(pi z) pole at integer z");
  return c / s;
}

Scalar exp_i_pi(const Scalar& z) {
  // exp(i pi (x+iy)) = exp(-pi y) * (cos(pi x) + i sin(pi x))
  mpfr_prec_t p = z.prec();
  auto [f, n] = nearest_integer(z.re());
  Scalar s, c;
  sincos_pi_reduced(f, Real::of_long(0, p), p, &s, &c);
  Real mag = Real::of_long(1, p);
  if (!z.im().is_zero()) {
    mag = exp(-(constants::pi(p + 8) * z.im())).at_prec(p);
  }
  Real re = c.re() * mag;
  Real im = s.re() * mag;
  if (n & 1) {
    re = -re;
    im = -im;
  }
  return Scalar(re, im);
}

}  // namespace hyperid

#include "hyperid/ms_sum.hpp"

#include <cmath>
#include <memory>

#include "hyperid/detail/ladder.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"

namespace hyperid {

EvalResult ms_sum(const std::function<Scalar(const Scalar&)>& f, const Scalar& x, const Scalar& y,
                  const EvalOptions& opts, double decay_hint) {
  const mpfr_prec_t wb = opts.work_bits();
  Scalar xs = x.at_prec(wb), ys = y.at_prec(wb);
  Scalar d = ys - xs;
  Real tol = pole_tolerance(wb);

  if (abs(d.im()) <= tol) {
    auto [frac, n] = nearest_integer(d.re());
    if (abs(frac) <= tol && n >= -1) {
      Scalar sum(wb);
      for (long j = 0; j <= n; ++j) sum += f(xs + j);
      EvalResult res;
      res.value = sum.at_prec(bits_for_digits(opts.digits));
      res.tail_bound = (abs1(sum) + 1) * pow10(-(opts.digits + 18), 64);
      res.terms = static_cast<unsigned long>(n + 1);
      if (opts.stats) opts.stats->count(res.terms);
      return res;
    }
  }

  auto diff = [&](long k) { return f(xs + (k - 1)) - f(ys + k); };

  double nu = decay_hint;
  bool geometric = false;
  bool alternating = false;
  {
    // sign pattern of successive terms
    Scalar prev = diff(48);
    int flips = 0, run = 0;
    for (long k = 49; k < 55; ++k) {
      Scalar cur = diff(k);
      if (!prev.is_zero() && !cur.is_zero()) {
        ++run;
        if ((cur / prev).re().sign() < 0) ++flips;
      }
      prev = cur;
    }
    alternating = run > 0 && flips == run;
  }
  if (nu == 0.0) {
    double mags[3];
    for (int i = 0; i < 3; ++i) {
      long k = 64L << i;
      Real m = abs1(diff(k));
      mags[i] = m.is_zero() ? -1e300 : std::log2(m.to_double());
      if (mags[i] < -1e200) {
        // fall back: treat as fast decay
        geometric = true;
        break;
      }
    }
    if (!geometric) {
      double s1 = mags[1] - mags[0];
      double s2 = mags[2] - mags[1];
      if (s2 < -3.0 && s2 < 1.5 * s1) {
        geometric = true;
      } else {
        nu = 0.5 * (s1 + s2);
      }
    }
  }

  detail::LadderSpec spec;
  spec.first_index = 1;
  if (geometric) {
    spec.decay = detail::Decay::SuperGeometric;
  } else {
    if (!(nu < (alternating ? 0.0 : -1.0))) {
      throw NonConvergent("regularized terms decay like k^" + std::to_string(nu));
    }
    spec.decay = detail::Decay::Polynomial;
    spec.nu = Scalar(Real::of_double(nu, wb));
    spec.log_pow = 2;
    spec.parity = detail::Parity::Mixed;
    spec.preamble = 32;
  }

  spec.source = [f, xs, ys](mpfr_prec_t engine_bits) {
    auto xk = std::make_shared<Scalar>(xs.at_prec(engine_bits));
    auto yk = std::make_shared<Scalar>(ys.at_prec(engine_bits));
    auto k = std::make_shared<long>(1);
    return detail::TermSource([f, xk, yk, k]() {
      Scalar t = f(*xk + (*k - 1)) - f(*yk + *k);
      ++*k;
      return t;
    });
  };
  detail::LadderOutcome out = detail::sum_with_tail_fit(spec, opts);
  if (opts.stats) opts.stats->count(out.terms);

  EvalResult res;
  res.value = out.value.at_prec(bits_for_digits(opts.digits));
  res.tail_bound = out.bound;
  res.terms = out.terms;
  Real rtol = pow10(opts.tol_exp(), 64);
  if (out.budget_hit && !(out.bound <= rtol * (abs1(out.value) + 1))) {
    throw BudgetExceeded("regularized sum budget exhausted", res.value.str(opts.digits),
                         res.tail_bound.str(8));
  }
  return res;
}

}  // namespace hyperid

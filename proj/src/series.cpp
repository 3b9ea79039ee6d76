#include "hyperid/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <vector>

#include "hyperid/detail/ladder.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"

namespace hyperid::detail {

namespace {

// Gaussian elimination with partial pivoting; returns the solution vector.
std::vector<Scalar> solve_dense(std::vector<std::vector<Scalar>>& a, std::vector<Scalar>& b) {
  const size_t n = a.size();
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

struct FitResult {
  Scalar value;
  Real last_column;  // magnitude of the deepest modelled tail column
};

// number of tail columns per modelled power
size_t cols_per_power(const LadderSpec& spec) {
  size_t c = static_cast<size_t>(spec.log_pow) + 1;
  return spec.parity == Parity::Mixed ? 2 * c : c;
}

// Fits S(K_i) = S - sum_{j,l} c_{jl} f_{jl}(K_i + 1) and returns S. The log
// basis is centered at the ladder midpoint and columns are normalized, so the
// (ln x)^l columns stay well separated from the plain powers.
FitResult fit_tail(const std::vector<Scalar>& samples, const std::vector<long>& ks,
                   const LadderSpec& spec, int j_terms, mpfr_prec_t solve_bits) {
  const int lp = spec.log_pow;
  const size_t n = 1 + static_cast<size_t>(j_terms) * cols_per_power(spec);
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  std::vector<Scalar> rhs(n);
  Scalar smooth_exp = spec.nu.at_prec(solve_bits) + 1;
  Scalar alt_exp = spec.nu.at_prec(solve_bits);
  Real lmid = (log(Real::of_long(ks.front() + 1, solve_bits)) +
               log(Real::of_long(ks.back() + 1, solve_bits))) /
              2;

  for (size_t i = 0; i < n; ++i) {
    Real x = Real::of_long(ks[i] + 1, solve_bits);
    Real lx = log(x) - lmid;
    Real sgn = Real::of_long(((ks[i] + 1) % 2 == 0) ? 1 : -1, solve_bits);
    a[i][0] = Scalar::of_long(1, solve_bits);
    size_t c = 1;
    Scalar pw_s = pow(Scalar(x), smooth_exp);
    Scalar pw_a = pow(Scalar(x), alt_exp) * Scalar(sgn);
    for (int j = 0; j < j_terms; ++j) {
      if (spec.parity != Parity::Alternating) {
        Scalar lpow = pw_s;
        for (int l = 0; l <= lp; ++l) {
          a[i][c++] = -lpow;
          if (l < lp) lpow *= Scalar(lx);
        }
      }
      if (spec.parity != Parity::Smooth) {
        Scalar lpow = pw_a;
        for (int l = 0; l <= lp; ++l) {
          a[i][c++] = -lpow;
          if (l < lp) lpow *= Scalar(lx);
        }
      }
      pw_s = pw_s / Scalar(x);
      pw_a = pw_a / Scalar(x);
    }
    rhs[i] = samples[i].at_prec(solve_bits);
  }

  // normalize tail columns
  std::vector<Real> colscale(n, Real::of_long(1, solve_bits));
  for (size_t c = 1; c < n; ++c) {
    Real m(solve_bits);
    mpfr_set_zero(m.raw(), 1);
    for (size_t i = 0; i < n; ++i) m = max(m, abs1(a[i][c]));
    if (m.is_zero()) m = Real::of_long(1, solve_bits);
    colscale[c] = m;
    for (size_t i = 0; i < n; ++i) a[i][c] = a[i][c] / Scalar(m);
  }
  std::vector<Scalar> sol = solve_dense(a, rhs);

  // contribution of the deepest modelled power at the far end of the ladder
  Real xlast = Real::of_long(ks.back() + 1, solve_bits);
  Real lxl = abs(log(xlast) - lmid);
  Real resid(solve_bits);
  mpfr_set_zero(resid.raw(), 1);
  size_t c = 1 + static_cast<size_t>(j_terms - 1) * cols_per_power(spec);
  if (spec.parity != Parity::Alternating) {
    Real lfac = abs(Scalar(pow(Scalar(xlast), smooth_exp - (j_terms - 1))));
    for (int l = 0; l <= lp; ++l) {
      resid += abs1(sol[c]) / colscale[c] * lfac;
      lfac *= lxl;
      ++c;
    }
  }
  if (spec.parity != Parity::Smooth) {
    Real lfac = abs(Scalar(pow(Scalar(xlast), alt_exp - (j_terms - 1))));
    for (int l = 0; l <= lp; ++l) {
      resid += abs1(sol[c]) / colscale[c] * lfac;
      lfac *= lxl;
      ++c;
    }
  }
  return {sol[0], resid};
}

}  // namespace

LadderOutcome sum_with_tail_fit(const LadderSpec& spec, const EvalOptions& opts) {
  Real tol = pow10(opts.tol_exp(), 64);

  LadderOutcome out;

  if (spec.decay == Decay::SuperGeometric) {
    const mpfr_prec_t wb = opts.work_bits();
    const long pw = opts.digits + 25;
    TermSource src = spec.source(wb);
    Scalar sum(wb);
    Scalar cur_term(wb);
    int small = 0;
    Real floor_rel = pow10(-(pw + 4), wb);
    while (out.terms < opts.budget) {
      cur_term = src();
      sum += cur_term;
      ++out.terms;
      Real mag = abs1(cur_term);
      if (mag <= (abs1(sum) + 1) * floor_rel) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    out.value = sum;
    out.bound = abs1(cur_term) * 4 + (abs1(sum) + 1) * pow10(-(pw - 8), wb);
    out.budget_hit = out.terms >= opts.budget;
    return out;
  }

  const double nu_re = spec.nu.re().to_double();
  const int lp = spec.log_pow;
  const long target_digits = std::min(opts.digits + 17, -opts.tol_exp() + 6);

  // settle the ladder start and the model depth together
  long k0 = std::max({static_cast<long>(256), 2 * spec.preamble + 16, 2 * spec.first_index + 16});
  auto depth_for = [&](long start) {
    return std::clamp(static_cast<int>(std::ceil(static_cast<double>(target_digits) /
                                                 std::log10(static_cast<double>(start)))) + 2,
                      6, 44);
  };
  int j_terms = depth_for(k0);
  for (int pass = 0; pass < 4; ++pass) {
    size_t u = 1 + static_cast<size_t>(j_terms) * cols_per_power(spec);
    if (k0 < static_cast<long>(6 * u)) {
      k0 = static_cast<long>(6 * u);
      j_terms = depth_for(k0);
    }
  }

  // noise amplification of the elimination is roughly two digits per power
  const long pw = std::max(opts.digits + 25, target_digits + 2L * j_terms + 12);
  const mpfr_prec_t wb = bits_for_digits(pw);
  TermSource src = spec.source(wb);

  Scalar sum(wb);
  long k = spec.first_index;  // index of the next term to consume
  Scalar prev_term(wb), cur_term(wb);
  bool have_prev = false;
  auto consume_through = [&](long upto) {
    while (k <= upto) {
      prev_term = cur_term;
      have_prev = out.terms > 0;
      cur_term = src();
      sum += cur_term;
      ++k;
      ++out.terms;
    }
  };

  while (true) {
    size_t unknowns = 1 + static_cast<size_t>(j_terms) * cols_per_power(spec);
    long kmax = static_cast<long>(2.5 * static_cast<double>(k0)) + 1;
    if (static_cast<unsigned long>(kmax) > opts.budget + static_cast<unsigned long>(spec.first_index)) {
      // cannot afford this ladder: sum what the budget allows and report the
      // direct integral-comparison bound
      long reach = spec.first_index + static_cast<long>(opts.budget) - 1;
      consume_through(reach);
      out.value = sum;
      Real mag = abs1(cur_term);
      double denom = std::max(0.05, -nu_re - 1.0);
      Real lk = log(Real::of_long(k, wb));
      Real logfac = Real::of_long(1, wb);
      for (int l = 0; l < lp; ++l) logfac *= lk;
      out.bound = mag * Real::of_long(k, wb) * logfac / Real::of_double(denom, wb) * 2 +
                  (abs1(sum) + 1) * pow10(-(pw - 8), wb);
      out.budget_hit = true;
      return out;
    }

    // asymptotic-regime check: three successive magnitude ratios must agree
    // with the expected algebraic decay to within 10%. Mixed-parity streams
    // oscillate in magnitude, so they compare across two steps.
    const int stride = spec.parity == Parity::Mixed ? 2 : 1;
    bool regime = true;
    {
      consume_through(k0 - 9);
      double mags[8];
      long idx0 = k;
      for (int i = 0; i < 8; ++i) {
        consume_through(k);
        Real m = abs1(cur_term);
        mags[i] = m.is_zero() ? -1.0 : m.to_double();
      }
      int checked = 0;
      for (int i = stride; i < 8 && checked < 3; ++i) {
        if (mags[i] <= 0 || mags[i - stride] <= 0) continue;
        double kk = static_cast<double>(idx0 + i);
        double ratio = mags[i] / mags[i - stride];
        double expected = std::pow(kk / (kk - stride), nu_re);
        if (!(std::fabs(ratio / expected - 1.0) < 0.10 * stride)) {
          regime = false;
          break;
        }
        ++checked;
      }
      if (checked == 0) regime = false;
    }
    if (!regime) {
      if (static_cast<unsigned long>(4 * kmax) <= opts.budget) {
        k0 *= 2;
        j_terms = depth_for(k0);
        continue;
      }
      out.regime_ok = false;
    }

    std::vector<long> ks(unknowns);
    double rho = std::pow(2.5, 1.0 / static_cast<double>(unknowns - 1));
    double pos = static_cast<double>(k0);
    long prev = k0 - 1;
    for (size_t i = 0; i < unknowns; ++i) {
      long ki = std::max(prev + 1, static_cast<long>(std::llround(pos)));
      ks[i] = ki;
      prev = ki;
      pos *= rho;
    }
    std::vector<Scalar> samples(unknowns);
    for (size_t i = 0; i < unknowns; ++i) {
      consume_through(ks[i]);
      samples[i] = sum;
    }

    mpfr_prec_t sb = wb + 7 * static_cast<mpfr_prec_t>(j_terms) + 128;
    FitResult fa = fit_tail(samples, ks, spec, j_terms, sb);
    int j2 = std::max(4, j_terms - 3);
    size_t u2 = 1 + static_cast<size_t>(j2) * cols_per_power(spec);
    std::vector<Scalar> s2(u2);
    std::vector<long> k2(u2);
    for (size_t i = 0; i < u2; ++i) {
      size_t idx = i * (unknowns - 1) / (u2 - 1);
      s2[i] = samples[idx];
      k2[i] = ks[idx];
    }
    FitResult fb = fit_tail(s2, k2, spec, j2, sb);

    Scalar value = fa.value.at_prec(wb);
    Real scale = abs1(value) + 1;
    Real bound = abs1(fa.value - fb.value) * 4 + fa.last_column.at_prec(wb) +
                 scale * pow10(-(pw - 14), wb);
    if (std::getenv("HYPERID_TRACE")) {
      std::fprintf(stderr,
                   "[ladder] k0=%ld J=%d U=%zu regime=%d terms=%lu |A-B|=%s lastcol=%s A=%s\n",
                   k0, j_terms, unknowns, regime ? 1 : 0, out.terms,
                   abs1(fa.value - fb.value).str(4).c_str(), fa.last_column.str(4).c_str(),
                   value.str(12).c_str());
    }
    if (bound <= tol * scale || !out.regime_ok) {
      out.value = value;
      out.bound = bound;
      out.budget_hit = out.budget_hit || !out.regime_ok;
      return out;
    }
    if (static_cast<unsigned long>(5 * kmax) <= opts.budget) {
      // the stream has been consumed through ks.back(); the next ladder must
      // start beyond it
      k0 = std::max(2 * k0, k + 8);
      j_terms = depth_for(k0);
      continue;
    }
    out.value = value;
    out.bound = bound;
    out.budget_hit = true;
    return out;
  }
}

}  // namespace hyperid::detail

namespace hyperid {

namespace {

struct PfqTermGen {
  std::vector<Scalar> tops, bots;
  Scalar term;
  long k = 0;

  PfqTermGen(const HypParams& p, mpfr_prec_t wb) {
    for (const auto& t : p.tops) tops.push_back(t.at_prec(wb));
    for (const auto& b : p.bottoms) bots.push_back(b.at_prec(wb));
    term = Scalar::of_long(1, wb);
  }

  Scalar operator()() {
    Scalar out = term;
    Scalar num = Scalar::of_long(1, term.prec());
    for (auto& t : tops) {
      num *= t;
      t = t + 1;
    }
    Scalar den = Scalar::of_long(static_cast<long>(k) + 1, term.prec());
    for (auto& b : bots) {
      den *= b;
      b = b + 1;
    }
    term = term * num / den;
    ++k;
    return out;
  }
};

long preamble_for(const HypParams& p) {
  double m = 4;
  for (const auto& t : p.tops) m = std::max(m, std::fabs(t.re().to_double()));
  for (const auto& b : p.bottoms) m = std::max(m, std::fabs(b.re().to_double()));
  return 16 + static_cast<long>(4 * m);
}

}  // namespace

EvalResult eval_pfq1(const HypParams& p, const EvalOptions& opts) {
  const mpfr_prec_t wb = opts.work_bits();
  HypParams cp = canonical(p);
  Classification cls = classify(cp);
  if (cls.kind == SeriesKind::BottomPole) {
    throw DomainError("bottom parameter at non-positive integer -" +
                      std::to_string(cls.terminates_at) + " without earlier truncation");
  }
  if (cls.kind == SeriesKind::Divergent) {
    Scalar s = parametric_excess(cp);
    throw DivergentSeries("series diverges at unit argument: parametric excess " +
                          s.str(6) + " has non-positive real part");
  }

  EvalResult res;
  if (cls.kind == SeriesKind::Terminating) {
    PfqTermGen gen(cp, wb);
    Scalar sum(wb);
    for (long k = 0; k <= cls.terminates_at; ++k) sum += gen();
    res.value = sum.at_prec(bits_for_digits(opts.digits));
    res.tail_bound = (abs1(sum) + 1) * pow10(-(opts.digits + 18), 64);
    res.terms = static_cast<unsigned long>(cls.terminates_at + 1);
    if (opts.stats) opts.stats->count(res.terms);
    return res;
  }

  Scalar s = parametric_excess(cp).at_prec(wb);
  detail::LadderSpec spec;
  spec.decay = detail::Decay::Polynomial;
  spec.nu = -(s + 1);
  spec.log_pow = 0;
  spec.parity = detail::Parity::Smooth;
  spec.first_index = 0;
  spec.preamble = preamble_for(cp);
  spec.source = [cp](mpfr_prec_t engine_bits) {
    auto gen = std::make_shared<PfqTermGen>(cp, engine_bits);
    return detail::TermSource([gen]() { return (*gen)(); });
  };
  detail::LadderOutcome out = detail::sum_with_tail_fit(spec, opts);
  if (opts.stats) opts.stats->count(out.terms);
  res.value = out.value.at_prec(bits_for_digits(opts.digits));
  res.tail_bound = out.bound;
  res.terms = out.terms;
  Real tol = pow10(opts.tol_exp(), 64);
  if (out.budget_hit && !(out.bound <= tol * (abs1(out.value) + 1))) {
    throw BudgetExceeded("series budget exhausted before reaching tolerance",
                         res.value.str(opts.digits), res.tail_bound.str(8));
  }
  return res;
}

}  // namespace hyperid

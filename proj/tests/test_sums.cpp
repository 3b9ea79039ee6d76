#include <doctest.h>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"
#include "hyperid/sum_spec.hpp"
#include "test_util.hpp"

using namespace hyperid;
using tu::check_close;
using tu::num;

namespace {

// S1(a) = sum_{k>=1} Gamma(k+1-a) Gamma(a+k)
//                    (psi(k+1-a) + psi(a+k) - 2 psi(k)) / (k^3 Gamma(k)^2)
SumSpec make_s1(const Scalar& a, mpfr_prec_t b) {
  SumSpec s;
  s.start = 1;
  s.gammas = {{1 - a, 1, 1}, {a, 1, 1}, {Scalar(b), 1, -2}};
  s.linears = {{Scalar(b), -3}};
  Scalar one = Scalar::of_long(1, b);
  s.weight = {{one, {{0, 1 - a, 1}}}, {one, {{0, a, 1}}}, {Scalar::of_long(-2, b), {{0, Scalar(b), 1}}}};
  return s;
}

}  // namespace

TEST_CASE("euler sum: sum psi(k+1)/(k+1)^2 = zeta(3) - pi^2 gamma / 6") {
  const long d = 50;
  mpfr_prec_t b = tu::bits(d + 10);
  SumSpec s;
  s.start = 0;
  s.linears = {{Scalar::of_long(1, b), -2}};
  s.weight = {{Scalar::of_long(1, b), {{0, Scalar::of_long(1, b), 1}}}};
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_sum(s, opts);
  Real pi = constants::pi(b);
  Scalar want = Scalar(constants::zeta(3, b)) - Scalar(pi * pi * constants::euler_gamma(b) / 6);
  check_close(r.value, want, 44);
}

TEST_CASE("euler sum: sum psi(k+1)/((k+1)^3 (k+2))") {
  const long d = 50;
  mpfr_prec_t b = tu::bits(d + 10);
  SumSpec s;
  s.start = 0;
  s.linears = {{Scalar::of_long(1, b), -3}, {Scalar::of_long(2, b), -1}};
  s.weight = {{Scalar::of_long(1, b), {{0, Scalar::of_long(1, b), 1}}}};
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_sum(s, opts);
  Real pi = constants::pi(b);
  Real g = constants::euler_gamma(b);
  Scalar want = Scalar(-(g + 1) * constants::zeta(3, b) - (1 - pi * pi / 6) * g +
                       pow_si(pi, 4) / 360 + 1);
  check_close(r.value, want, 44);
}

TEST_CASE("term stream matches direct evaluation (downward factors)") {
  // terms of sum_{k>=1} (-1)^k psi(a-k)(psi(k)-psi(a)) / (k^2 Gamma(k) Gamma(a-k))
  const long d = 40;
  mpfr_prec_t b = tu::bits(d + 10);
  Scalar a = tu::num("2.5", d + 10);
  SumSpec s;
  s.start = 1;
  s.sign_base = -1;
  s.gammas = {{Scalar(b), 1, -1}, {a, -1, -1}};
  s.linears = {{Scalar(b), -2}};
  Scalar one = Scalar::of_long(1, b);
  s.weight = {{one, {{0, a, -1}, {0, Scalar(b), 1}}},
              {-digamma(a), {{0, a, -1}}}};
  auto terms = sum_terms(s, 24, d + 10);
  for (long k = 1; k <= 24; ++k) {
    Scalar kk = Scalar::of_long(k, b);
    Scalar direct = digamma(a - k) * (digamma(kk) - digamma(a)) /
                    (kk * kk * gamma(kk) * gamma(a - k));
    if (k % 2 == 1) direct = -direct;
    check_close(terms[static_cast<size_t>(k - 1)], direct, 36);
  }
}

TEST_CASE("alternating-series identity with reflected factors") {
  // sum_{k>=1} (-1)^k psi(a-k)(psi(k)-psi(a)) / (k^2 Gamma(k) Gamma(a-k))
  //   = ( 3/2 psi^3 + 3 g psi^2 + (3/2 g^2 - pi^2/12 - 3/2 psi') psi
  //       - 2 g psi' - psi''/2 ) / Gamma(a)
  const long d = 45;
  mpfr_prec_t b = tu::bits(d + 10);
  Scalar a = tu::num("2.5", d + 10);
  SumSpec s;
  s.start = 1;
  s.sign_base = -1;
  s.gammas = {{Scalar(b), 1, -1}, {a, -1, -1}};
  s.linears = {{Scalar(b), -2}};
  Scalar one = Scalar::of_long(1, b);
  s.weight = {{one, {{0, a, -1}, {0, Scalar(b), 1}}}, {-digamma(a), {{0, a, -1}}}};
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_sum(s, opts);

  Real pi = constants::pi(b);
  Scalar g(constants::euler_gamma(b));
  Scalar ps = digamma(a), p1 = polygamma(1, a), p2 = polygamma(2, a);
  Scalar want = (ps * ps * ps * 3 / 2 + g * ps * ps * 3 +
                 (g * g * 3 / 2 - Scalar(pi * pi / 12) - p1 * 3 / 2) * ps - g * p1 * 2 - p2 / 2) /
                gamma(a);
  check_close(r.value, want, 30);
}

TEST_CASE("S1 brute-force agreement and symmetry") {
  const long d = 40;
  mpfr_prec_t b = tu::bits(d + 10);
  Scalar half = Scalar::of_ratio(1, 2, b);
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_sum(make_s1(half, b), opts);

  // brute force: direct partial sum, independent of the recurrence engine
  Scalar brute(b);
  long K = 200000;
  {
    Scalar g1 = gamma(half + 1);  // Gamma(k+1-a) at k=1, a=1/2 -> Gamma(3/2)
    Scalar g2 = gamma(half + 1);
    Scalar p1 = digamma(half + 1), p2 = digamma(half + 1), p3 = digamma(Scalar::of_long(1, b));
    Scalar gk = Scalar::of_long(1, b);  // Gamma(k) at k=1
    for (long k = 1; k <= K; ++k) {
      Scalar kk = Scalar::of_long(k, b);
      Scalar w = p1 + p2 - p3 * 2;
      brute += g1 * g2 * w / (kk * kk * kk * gk * gk);
      // advance all recurrences to k+1
      g1 *= half + k;  // Gamma(k+1+1/2) = (k+1/2) ... offset 1-a = 1/2: arg = 1/2+k
      g2 *= half + k;
      p1 += pow_si(half + k, -1);
      p2 += pow_si(half + k, -1);
      p3 += pow_si(kk, -1);
      gk *= kk;
    }
  }
  Real diff = abs1(r.value - brute);
  INFO("engine " << r.value.str(20) << " brute " << brute.str(20));
  CHECK(diff <= Real::of_string("2e-4", 64));  // brute-force tail dominates

  // S1(a) = S1(1-a)
  for (const char* as : {"0.2", "0.3", "0.45"}) {
    Scalar a = tu::num(as, d + 10);
    auto ra = eval_sum(make_s1(a, b), opts);
    auto rb = eval_sum(make_s1(1 - a, b), opts);
    check_close(ra.value, rb.value, 40);
  }
}

TEST_CASE("empty-weight sum agrees with the hypergeometric evaluator") {
  const long d = 45;
  mpfr_prec_t b = tu::bits(d + 10);
  SumSpec s;
  s.start = 0;
  const char* tops[] = {"0.3", "0.5", "0.9"};
  const char* bots[] = {"1.7", "1.9"};
  for (const char* t : tops) s.gammas.push_back({tu::num(t, d + 10), 1, 1});
  for (const char* bo : bots) s.gammas.push_back({tu::num(bo, d + 10), 1, -1});
  s.gammas.push_back({Scalar::of_long(1, b), 1, -1});

  auto hp = sum_to_pfq(s);
  REQUIRE(hp.has_value());
  CHECK(hp->tops.size() == 3);
  CHECK(hp->bottoms.size() == 2);

  EvalOptions opts;
  opts.digits = d;
  auto rs = eval_sum(s, opts);
  auto rp = eval_pfq1(*hp, opts);
  Scalar pre = Scalar::of_long(1, b);
  for (const char* t : tops) pre *= gamma(tu::num(t, d + 10));
  for (const char* bo : bots) pre = pre / gamma(tu::num(bo, d + 10));
  Real tol = pow10(10 - d, 64);
  CHECK(tu::rel_err(rs.value, pre * rp.value) <= tol);
}

TEST_CASE("non-convergent sums are rejected") {
  mpfr_prec_t b = tu::bits(40);
  SumSpec s;  // sum k^(-1/2): decay exponent -1/2
  s.start = 1;
  s.linears = {{Scalar(b), -1}};
  EvalOptions opts;
  opts.digits = 30;
  CHECK_THROWS_AS((void)eval_sum(s, opts), NonConvergent);

  SumSpec g;  // Gamma(k) alone grows factorially
  g.start = 1;
  g.gammas = {{Scalar(b), 1, 1}};
  CHECK_THROWS_AS((void)eval_sum(g, opts), NonConvergent);
}

TEST_CASE("parameter derivative of gauss 2F1 matches the closed form") {
  const long d = 50;
  mpfr_prec_t b = tu::bits(d + 10);
  Scalar a = Scalar::of_ratio(1, 3, b), bb = Scalar::of_ratio(1, 4, b), c = Scalar::of_long(2, b);
  HypParams p;
  p.tops = {a, bb};
  p.bottoms = {c};
  SumSpec ds = pfq_param_derivative(p, {false, 0}, d + 20);
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_sum(ds, opts);
  // d/dc of Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))
  Scalar f = gamma(c) * gamma(c - a - bb) / (gamma(c - a) * gamma(c - bb));
  Scalar want = f * (digamma(c) + digamma(c - a - bb) - digamma(c - a) - digamma(c - bb));
  check_close(r.value, want, 40);
}

TEST_CASE("parameter derivative matches a central difference") {
  const long d = 30;
  mpfr_prec_t b = tu::bits(3 * d);
  Scalar a = tu::num("0.45", 3 * d), bb = tu::num("0.8", 3 * d), c = tu::num("2.2", 3 * d);
  HypParams p;
  p.tops = {a, bb};
  p.bottoms = {c};
  SumSpec ds = pfq_param_derivative(p, {true, 0}, 3 * d);
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_sum(ds, opts);

  Real h = pow10(-(d / 3), b);  // step 10^(-P/3)
  EvalOptions wide;
  wide.digits = 2 * d;
  HypParams pp = p, pm = p;
  pp.tops[0] = a + Scalar(h);
  pm.tops[0] = a - Scalar(h);
  Scalar diff = (eval_pfq1(pp, wide).value - eval_pfq1(pm, wide).value) / (Scalar(h) * 2);
  check_close(r.value, diff, d / 3);
}

TEST_CASE("the b -> a derivative rule reproduces the contiguous reduction") {
  // h(a) = 3F2(a,a,a;2a,a+1;1) - a * d/db 3F2(a,a,b;2a,b+1;1) |_{b=a}
  const long d = 45;
  mpfr_prec_t b = tu::bits(d + 15);
  Scalar a = Scalar::of_ratio(1, 2, b);
  HypParams f32;
  f32.tops = {a, a, a};
  f32.bottoms = {a * 2, a + 1};
  EvalOptions opts;
  opts.digits = d;
  Scalar base = eval_pfq1(f32, opts).value;

  SumSpec dtop = pfq_param_derivative(f32, {true, 2}, d + 20);
  SumSpec dbot = pfq_param_derivative(f32, {false, 1}, d + 20);
  Scalar deriv = eval_sum(dtop, opts).value + eval_sum(dbot, opts).value;

  HypParams h4;
  h4.tops = {a, a, a, a};
  h4.bottoms = {a * 2, a + 1, a + 1};
  Scalar h = eval_pfq1(h4, opts).value;
  check_close(h, base - a * deriv, 40);
}

#include <doctest.h>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/series.hpp"
#include "hyperid/special.hpp"
#include "test_util.hpp"

using namespace hyperid;
using tu::check_close;
using tu::num;

namespace {

HypParams make(std::initializer_list<const char*> tops, std::initializer_list<const char*> bots,
               long digits = 60) {
  HypParams p;
  for (const char* t : tops) p.tops.push_back(tu::num(t, digits));
  for (const char* b : bots) p.bottoms.push_back(tu::num(b, digits));
  return p;
}

}  // namespace

TEST_CASE("parametric excess") {
  auto p1 = make({"0.4", "0.4", "0.9"}, {"0.8", "1.9"});  // (a,a,b;2a,b+1), a=.4 b=.9
  check_close(parametric_excess(p1), Scalar::of_long(1, 64), 40);
  auto p2 = make({"0.3", "0.3", "0.3", "0.3"}, {"0.6", "1.3", "1.3"});  // h(a) shape
  check_close(parametric_excess(p2), Scalar::of_long(2, 64), 40);
  auto p3 = make({"1", "1", "1", "1.7", "1.3"}, {"2", "2", "2", "2"});  // 2-a,1+a at a=0.3
  check_close(parametric_excess(p3), Scalar::of_long(2, 64), 40);
}

TEST_CASE("classification") {
  auto t = make({"1", "1", "0.37", "-3"}, {"2", "2", "2"});
  auto ct = classify(t);
  CHECK(ct.kind == SeriesKind::Terminating);
  CHECK(ct.terminates_at == 3);

  auto c = make({"1", "1", "1", "1"}, {"2", "2", "2"});
  CHECK(classify(c).kind == SeriesKind::Convergent);

  auto d = make({"1", "2", "2"}, {"2", "3"});  // s = 0
  CHECK(classify(d).kind == SeriesKind::Divergent);

  auto bp = make({"1", "0.5"}, {"-2"});
  CHECK(classify(bp).kind == SeriesKind::BottomPole);

  // bottom pole shielded by an earlier terminating top
  auto ok = make({"-1", "0.5"}, {"-2"});
  auto cok = classify(ok);
  CHECK(cok.kind == SeriesKind::Terminating);
  CHECK(cok.terminates_at == 1);
}

TEST_CASE("gauss theorem at 2F1(a,b;c;1)") {
  const long d = 50;
  EvalOptions opts;
  opts.digits = d;
  auto p = make({"1/3", "1/4"}, {"2"}, d + 10);
  auto r = eval_pfq1(p, opts);
  mpfr_prec_t b = tu::bits(d + 10);
  Scalar a = Scalar::of_ratio(1, 3, b), bb = Scalar::of_ratio(1, 4, b), c = Scalar::of_long(2, b);
  Scalar want = gamma(c) * gamma(c - a - bb) / (gamma(c - a) * gamma(c - bb));
  check_close(r.value, want, 46);
  CHECK(r.tail_bound <= pow10(-(d + 2), 64));
}

TEST_CASE("gauss theorem with a complex parameter") {
  const long d = 50;
  EvalOptions opts;
  opts.digits = d;
  mpfr_prec_t b = tu::bits(d + 10);
  Scalar a = tu::cnum("0.3", "0.2", d + 10);
  Scalar bb = tu::num("0.4", d + 10);
  Scalar c = tu::num("2.1", d + 10);
  HypParams p;
  p.tops = {a, bb};
  p.bottoms = {c};
  auto r = eval_pfq1(p, opts);
  Scalar want = gamma(c) * gamma(c - a - bb) / (gamma(c - a) * gamma(c - bb));
  (void)b;
  check_close(r.value, want, 44);
}

TEST_CASE("unit-parameter 4F3 equals zeta(3)") {
  const long d = 50;
  EvalOptions opts;
  opts.digits = d;
  auto r = eval_pfq1(make({"1", "1", "1", "1"}, {"2", "2", "2"}, d + 10), opts);
  check_close(r.value, Scalar(constants::zeta(3, tu::bits(d + 10))), 45);

  opts.digits = 30;
  auto r30 = eval_pfq1(make({"1", "1", "1", "1"}, {"2", "2", "2"}, 40), opts);
  check_close(r30.value, Scalar(constants::zeta(3, tu::bits(40))), 30);
}

TEST_CASE("watson-contiguous closed form") {
  // 3F2(a,a,a; 2a, a+1; 1) = a 2^(2a) (psi'(a/2) - psi'((a+1)/2)) Gamma(a+1/2)
  //                          / (4 sqrt(pi) Gamma(a))
  const long d = 50;
  EvalOptions opts;
  opts.digits = d;
  mpfr_prec_t b = tu::bits(d + 10);
  for (const char* as : {"1/3", "1/4", "3/5"}) {
    Scalar a = Scalar::of_string(as, b);
    HypParams p;
    p.tops = {a, a, a};
    p.bottoms = {a * 2, a + 1};
    auto r = eval_pfq1(p, opts);
    Scalar want = a * pow(Scalar::of_long(2, b), a * 2) *
                  (polygamma(1, a / 2) - polygamma(1, (a + 1) / 2)) *
                  gamma(a + Scalar::of_ratio(1, 2, b)) /
                  (Scalar(constants::sqrt_pi(b)) * 4);
    want = want / gamma(a);
    check_close(r.value, want, 44);
  }
}

TEST_CASE("terminating series are summed exactly") {
  const long d = 50;
  EvalOptions opts;
  opts.digits = d;
  auto p = make({"-3", "1", "1", "0.37"}, {"2", "2", "2"}, d);
  auto r = eval_pfq1(p, opts);
  // direct 4-term sum
  mpfr_prec_t b = tu::bits(d);
  Scalar sum(b);
  for (long k = 0; k <= 3; ++k) {
    Scalar t = pochhammer(tu::num("-3", d), k) * pochhammer(tu::num("1", d), k) *
               pochhammer(tu::num("1", d), k) * pochhammer(tu::num("0.37", d), k);
    Scalar den = pochhammer(tu::num("2", d), k);
    den = den * den * den * gamma(Scalar::of_long(k + 1, b));
    sum += t / den;
  }
  check_close(r.value, sum, 46);
  CHECK(r.terms == 4);
}

TEST_CASE("permutation symmetry is bit-stable") {
  const long d = 40;
  EvalOptions opts;
  opts.digits = d;
  auto p1 = make({"0.31", "0.47", "0.59", "0.21"}, {"1.9", "2.3", "2.7"}, d);
  auto p2 = make({"0.59", "0.21", "0.31", "0.47"}, {"2.7", "1.9", "2.3"}, d);
  auto r1 = eval_pfq1(p1, opts);
  auto r2 = eval_pfq1(p2, opts);
  CHECK(r1.value.str(d) == r2.value.str(d));
}

TEST_CASE("divergent and bottom-pole inputs are rejected") {
  EvalOptions opts;
  opts.digits = 30;
  CHECK_THROWS_AS((void)eval_pfq1(make({"1", "2", "2"}, {"2", "3"}, 40), opts), DivergentSeries);
  CHECK_THROWS_AS((void)eval_pfq1(make({"1", "0.5"}, {"-2"}, 40), opts), DomainError);
}

TEST_CASE("budget exhaustion reports partial data") {
  EvalOptions opts;
  opts.digits = 50;
  opts.budget = 300;
  auto p = make({"0.9", "0.8", "0.7"}, {"1.2", "1.45"}, 60);  // s = 0.25, slow
  try {
    (void)eval_pfq1(p, opts);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(!e.partial_value.empty());
    CHECK(!e.partial_bound.empty());
  }
}

TEST_CASE("tail bound is sound on random convergent parameters") {
  const long d = 40;
  tu::Rng rng(20240901);
  int done = 0;
  while (done < 100) {
    int p = static_cast<int>(rng.integer(2, 4));
    HypParams hp;
    mpfr_prec_t b = tu::bits(d + 10);
    for (int i = 0; i < p; ++i) {
      hp.tops.push_back(Scalar(Real::of_double(rng.uniform(0.05, 1.2), b)));
    }
    for (int i = 0; i + 1 < p; ++i) {
      hp.bottoms.push_back(Scalar(Real::of_double(rng.uniform(0.9, 2.3), b)));
    }
    Scalar s = parametric_excess(hp);
    if (s.re().to_double() < 0.5) continue;
    EvalOptions opts;
    opts.digits = d;
    auto r1 = eval_pfq1(hp, opts);
    EvalOptions opts2 = opts;
    opts2.budget = 2 * opts.budget;
    opts2.rel_tol_exp = -(d + 10);
    auto r2 = eval_pfq1(hp, opts2);
    Real remainder = abs1(r1.value - r2.value);
    INFO("sample " << done << ": remainder " << remainder.str(4) << " vs bound "
                   << r1.tail_bound.str(4));
    CHECK(remainder <= r1.tail_bound);
    ++done;
  }
}

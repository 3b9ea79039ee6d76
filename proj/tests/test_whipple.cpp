#include <doctest.h>

#include "frame_sampler.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"
#include "hyperid/whipple.hpp"
#include "test_util.hpp"

using namespace hyperid;
namespace wh = hyperid::whipple;
using tu::check_close;

namespace {

wh::Frame frame_at(const char* a, const char* b, const char* c, const char* e, const char* f,
                   long digits = 60) {
  return wh::make_frame(tu::num(a, digits), tu::num(b, digits), tu::num(c, digits),
                        tu::num(e, digits), tu::num(f, digits));
}

}  // namespace

TEST_CASE("label parameters at the origin and at ones") {
  mpfr_prec_t b = tu::bits(60);
  auto fr0 = frame_at("0", "0", "0", "0", "0");
  check_close(fr0.r[0], Scalar::of_ratio(5, 6, b), 50);
  for (int i = 1; i < 6; ++i) check_close(fr0.r[i], Scalar::of_ratio(-1, 6, b), 50);

  auto fr1 = frame_at("1", "1", "1", "1", "1");
  check_close(fr1.r[0], Scalar::of_ratio(1, 2, b), 50);

  tu::Rng rng(99);
  for (int t = 0; t < 5; ++t) {
    auto fr = frame_at(std::to_string(rng.uniform(0, 1)).c_str(),
                       std::to_string(rng.uniform(0, 1)).c_str(),
                       std::to_string(rng.uniform(0, 1)).c_str(),
                       std::to_string(rng.uniform(1, 2)).c_str(),
                       std::to_string(rng.uniform(1, 2)).c_str());
    Scalar sum(tu::bits(60));
    for (const auto& r : fr.r) sum += r;
    CHECK(abs1(sum) <= pow10(-55, 64));
  }
}

TEST_CASE("anchor identities pin the reconstruction") {
  tu::Rng rng(31337);
  for (int t = 0; t < 5; ++t) {
    double av = rng.uniform(0.1, 0.9), bv = rng.uniform(0.1, 0.9), cv = rng.uniform(0.1, 0.9);
    double ev = rng.uniform(1.2, 2.2), fv = rng.uniform(1.2, 2.2);
    auto fr = frame_at(std::to_string(av).c_str(), std::to_string(bv).c_str(),
                       std::to_string(cv).c_str(), std::to_string(ev).c_str(),
                       std::to_string(fv).c_str());
    const Scalar &a = fr.base[0], &b = fr.base[1], &c = fr.base[2], &e = fr.base[3],
                 &f = fr.base[4];
    Scalar one = Scalar::of_long(1, a.prec());
    check_close(wh::alpha(fr, 0, 2, 3), one - a, 50);
    check_close(wh::alpha(fr, 0, 1, 3), one - b, 50);
    check_close(wh::alpha(fr, 1, 3, 4), e - b, 50);
    check_close(wh::alpha(fr, 1, 3, 5), f - b, 50);
    check_close(wh::alpha(fr, 1, 4, 5), a, 50);
    check_close(wh::alpha(fr, 2, 4, 5), b, 50);
    check_close(wh::alpha(fr, 3, 4, 5), c, 50);
    check_close(wh::alpha(fr, 1, 2, 3), e + f - a - b - c, 50);
    check_close(wh::beta(fr, 3, 2), one + c - b, 50);
    check_close(wh::beta(fr, 1, 2), one + a - b, 50);
    check_close(wh::beta(fr, 4, 0), e, 50);
    check_close(wh::beta(fr, 5, 0), f, 50);
  }
}

TEST_CASE("normalized functions reduce to the canonical series") {
  const long d = 45;
  EvalOptions opts;
  opts.digits = d;
  auto fr = frame_at("0.3", "0.5", "0.9", "1.7", "1.9", d + 10);
  const Scalar &a = fr.base[0], &b = fr.base[1], &c = fr.base[2], &e = fr.base[3], &f = fr.base[4];
  Scalar s = e + f - a - b - c;

  HypParams direct;
  direct.tops = {a, b, c};
  direct.bottoms = {e, f};
  Scalar f32 = eval_pfq1(direct, opts).value;

  Scalar fp = wh::f_eval(fr, {true, 0, 4, 5}, opts);
  check_close(fp * gamma(e) * gamma(f) * gamma(s), f32, 40);

  // Fn(2;3,1) agrees with its expanded series
  Scalar fn2 = wh::f_eval(fr, {false, 2, 3, 1}, opts);
  HypParams q;
  Scalar one = Scalar::of_long(1, a.prec());
  q.tops = {b, one + b - e, one + b - f};
  q.bottoms = {one + b - c, one + b - a};
  Scalar want = eval_pfq1(q, opts).value /
                (gamma(one + b - c) * gamma(one + b - a) * gamma(s));
  check_close(fn2, want, 40);
}

TEST_CASE("all twenty label pairs with the same first parameter agree") {
  const long d = 40;
  EvalOptions opts;
  opts.digits = d;
  tu::Rng rng(2718);
  auto fr = tu::sample_convergent_frame(rng, d + 10);
  Scalar ref = wh::f_eval(fr, {true, 0, 4, 5}, opts);
  int checked = 0;
  for (int v = 1; v <= 5; ++v) {
    for (int w = 1; w <= 5; ++w) {
      if (v == w) continue;
      Scalar val = wh::f_eval(fr, {true, 0, v, w}, opts);
      check_close(val, ref, 38);
      ++checked;
    }
  }
  CHECK(checked == 20);
}

TEST_CASE("six base relations hold at sampled convergent frames") {
  const long d = 40;
  EvalOptions opts;
  opts.digits = d;
  tu::Rng rng(424242);
  for (int t = 0; t < 6; ++t) {
    auto fr = tu::sample_convergent_frame(rng, d + 10);
    for (auto id : {wh::BaseId::P3, wh::BaseId::P4, wh::BaseId::P5, wh::BaseId::P3A,
                    wh::BaseId::P4A, wh::BaseId::P5A}) {
      auto rel = wh::base_relation(id);
      Scalar res = wh::residual(rel, fr, opts);
      Scalar scale = wh::relation_scale(rel, fr, opts);
      INFO("relation " << wh::base_name(id) << " at sample " << t);
      CHECK(abs1(res) <= abs1(scale) * pow10(-36, 64));
    }
  }
}

TEST_CASE("label-permutation closure") {
  const long d = 40;
  EvalOptions opts;
  opts.digits = d;
  tu::Rng rng(555);
  int done = 0;
  while (done < 6) {
    auto fr = tu::sample_convergent_frame(rng, d + 10);
    std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
    for (int i = 5; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
    auto rel = wh::relabel(wh::base_relation(wh::BaseId::P3), perm);
    try {
      Scalar res = wh::residual(rel, fr, opts);
      Scalar scale = wh::relation_scale(rel, fr, opts);
      CHECK(abs1(res) <= abs1(scale) * pow10(-36, 64));
      ++done;
    } catch (const AnalyticContinuationRequired&) {
      // this permutation asks for a divergent constituent here; resample
      continue;
    }
  }

  // identity permutation leaves the residual unchanged
  auto fr = tu::sample_convergent_frame(rng, d + 10);
  auto rel = wh::base_relation(wh::BaseId::P5);
  auto same = wh::relabel(rel, {0, 1, 2, 3, 4, 5});
  Scalar r1 = wh::residual(rel, fr, opts);
  Scalar r2 = wh::residual(same, fr, opts);
  CHECK(r1.str(30) == r2.str(30));
}

TEST_CASE("derivation replays") {
  const long d = 40;
  EvalOptions opts;
  opts.digits = d;
  tu::Rng rng(90210);
  for (int t = 0; t < 3; ++t) {
    auto fr = tu::sample_convergent_frame(rng, d + 10);
    INFO("sample " << t);
    CHECK(wh::replay_derivation(wh::ReplayId::B8FromP5a, fr, opts) <= pow10(-34, 64));
    CHECK(wh::replay_derivation(wh::ReplayId::P3CFromP3, fr, opts) <= pow10(-34, 64));
    CHECK(wh::replay_derivation(wh::ReplayId::B7FromEqY, fr, opts) <= pow10(-34, 64));
  }
}

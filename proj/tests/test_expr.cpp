#include <doctest.h>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/expr.hpp"
#include "hyperid/expr_json.hpp"
#include "hyperid/special.hpp"
#include "test_util.hpp"

using namespace hyperid;
using tu::check_close;

namespace ex = hyperid::expr;

TEST_CASE("parse and evaluate the mini-language") {
  mpfr_prec_t b = tu::bits(50);
  ex::Env env;
  env["a"] = Scalar::of_ratio(1, 3, b);
  env["n"] = Scalar::of_long(4, b);

  auto e1 = ex::parse("2*(euler+psi(n))^2/(n*(n-1))");
  Scalar g(constants::euler_gamma(b));
  Scalar want = pow_si(g + digamma(Scalar::of_long(4, b)), 2) * 2 / Scalar::of_long(12, b);
  check_close(ex::eval(e1, env, b), want, 44);

  auto e2 = ex::parse("gamma(a)*gamma(1-a)*sinpi(a)/pi");
  check_close(ex::eval(e2, env, b), Scalar::of_long(1, b), 44);

  auto e3 = ex::parse("psi(2, a) - psi(2, a+1)");
  check_close(ex::eval(e3, env, b),
              Scalar(Real::of_long(-2, b)) * pow_si(env["a"], -3), 42);

  auto e4 = ex::parse("4^a*sqrt(pi)/2^(2*a)");
  check_close(ex::eval(e4, env, b), Scalar(constants::sqrt_pi(b)), 44);

  // exact decimal literals
  auto e5 = ex::parse("0.35*2 - 7/10");
  CHECK(abs1(ex::eval(e5, env, b)).is_zero());
}

TEST_CASE("finite sums with bound variables") {
  mpfr_prec_t b = tu::bits(50);
  ex::Env env;
  env["n"] = Scalar::of_long(5, b);
  auto e = ex::parse("sum(j, 0, n-1, (-1)^j*(j+1))");  // 1-2+3-4+5 = 3
  check_close(ex::eval(e, env, b), Scalar::of_long(3, b), 45);

  auto empty = ex::parse("sum(j, 0, n-6, 1)");
  CHECK(ex::eval(empty, env, b).is_zero());

  auto nested = ex::parse("sum(j, 1, 3, sum(i, 1, j, i))");  // 1 + 3 + 6
  check_close(ex::eval(nested, env, b), Scalar::of_long(10, b), 45);

  CHECK_THROWS_AS((void)ex::eval(ex::parse("sum(j, 0, a, 1)"),
                                 ex::Env{{"a", Scalar::of_ratio(1, 2, b)}}, b),
                  DomainError);
}

TEST_CASE("parse errors and unknown names") {
  CHECK_THROWS_AS((void)ex::parse("2*+"), DomainError);
  CHECK_THROWS_AS((void)ex::parse("foo(3)"), DomainError);
  CHECK_THROWS_AS((void)ex::parse("(1+2"), DomainError);
  mpfr_prec_t b = tu::bits(30);
  CHECK_THROWS_AS((void)ex::eval(ex::parse("q+1"), ex::Env{}, b), DomainError);
}

TEST_CASE("json round trip via tagged objects") {
  auto e = ex::parse("-(euler + psi(2, a))*gamma(a)^2/sinpi(a) + sum(j,0,n,expipi(j)/2)");
  auto j = ex::to_json(e);
  auto back = ex::from_json(j, "rt");
  mpfr_prec_t b = tu::bits(40);
  ex::Env env;
  env["a"] = Scalar::of_string("0.41", b);
  env["n"] = Scalar::of_long(3, b);
  check_close(ex::eval(back, env, b), ex::eval(e, env, b), 38);
  CHECK(ex::to_json(back) == j);
}

TEST_CASE("json rejects malformed nodes") {
  using nlohmann::json;
  CHECK_THROWS_AS((void)ex::from_json(json{{"k", "frob"}}, "t"), SchemaError);
  CHECK_THROWS_AS((void)ex::from_json(json{{"k", "call"}, {"f", "frob"}, {"a", json::array({json{{"k", "num"}, {"v", "1"}}})}}, "t"),
                  SchemaError);
  CHECK_THROWS_AS((void)ex::from_json(json{{"k", "num"}, {"v", "x/y"}}, "t"), SchemaError);
  CHECK_THROWS_AS((void)ex::from_json(json{{"k", "div"}, {"a", json::array({json{{"k", "num"}, {"v", "1"}}})}}, "t"),
                  SchemaError);
}

TEST_CASE("pole checking names the offending argument") {
  mpfr_prec_t b = tu::bits(50);
  auto e = ex::parse("gamma(a - 2)/gamma(a)");
  ex::Env env;
  env["a"] = Scalar::of_long(2, b);
  try {
    ex::check_poles(e, env, b);
    FAIL("expected GammaPole");
  } catch (const GammaPole& g) {
    CHECK(g.argument.find("a") != std::string::npos);
  }
  env["a"] = Scalar::of_string("2.5", b);
  CHECK_NOTHROW(ex::check_poles(e, env, b));
}

TEST_CASE("string rendering round trips through the parser") {
  const char* cases[] = {
      "2*(euler+psi(n))^2/(n*(n-1))",
      "-(a+b)^2/(c-1)",
      "sum(j, 0, n-1, psi(1, j+1)/gamma(j+1))",
      "expipi(a)*cotpi(a) - zeta3 + zeta5/4",
  };
  mpfr_prec_t b = tu::bits(40);
  ex::Env env;
  env["a"] = Scalar::of_string("0.37", b);
  env["b"] = Scalar::of_string("1.21", b);
  env["c"] = Scalar::of_string("2.4", b);
  env["n"] = Scalar::of_long(4, b);
  for (const char* c : cases) {
    auto e = ex::parse(c);
    auto rt = ex::parse(ex::to_string(e));
    check_close(ex::eval(rt, env, b), ex::eval(e, env, b), 36);
  }
}

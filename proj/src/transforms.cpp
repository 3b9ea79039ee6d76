#include "hyperid/transforms.hpp"

#include <algorithm>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"
#include "hyperid/whipple.hpp"

namespace hyperid::transforms {

namespace {

struct Builder {
  Decomposition d;

  Builder(std::string kind, expr::Env env) {
    d.kind = std::move(kind);
    d.env = std::move(env);
  }

  void term(const std::string& coeff, std::initializer_list<std::string> tops,
            std::initializer_list<std::string> bottoms) {
    DecompTerm t;
    t.coeff = expr::parse(coeff);
    for (const auto& s : tops) t.tops.push_back(expr::parse(s));
    for (const auto& s : bottoms) t.bottoms.push_back(expr::parse(s));
    d.terms.push_back(std::move(t));
  }

  void remainder(const std::string& r) { d.remainder = expr::parse(r); }
};

expr::Env env4(const HypParams& p) {
  if (p.tops.size() != 4 || p.bottoms.size() != 3) {
    throw DomainError("expected a 4F3: four tops and three bottoms");
  }
  return expr::Env{{"a", p.tops[0]}, {"b", p.tops[1]}, {"c", p.tops[2]}, {"d", p.tops[3]},
                   {"e", p.bottoms[0]}, {"f", p.bottoms[1]}, {"g", p.bottoms[2]}};
}

expr::Env env3(const HypParams& p) {
  if (p.tops.size() != 3 || p.bottoms.size() != 2) {
    throw DomainError("expected a 3F2: three tops and two bottoms");
  }
  return expr::Env{{"a", p.tops[0]}, {"b", p.tops[1]}, {"c", p.tops[2]},
                   {"e", p.bottoms[0]}, {"f", p.bottoms[1]}};
}

long snapped_integer_diff(const Scalar& x, const Scalar& y, const Real& tol, bool* ok) {
  Scalar diff = x - y;
  *ok = false;
  if (!(abs(diff.im()) <= tol)) return 0;
  auto [frac, n] = nearest_integer(diff.re());
  if (!(abs(frac) <= tol)) return 0;
  *ok = true;
  return n;
}

}  // namespace

HypParams term_params(const DecompTerm& t, const expr::Env& env, mpfr_prec_t bits) {
  HypParams p;
  for (const auto& e : t.tops) p.tops.push_back(expr::eval(e, env, bits));
  for (const auto& e : t.bottoms) p.bottoms.push_back(expr::eval(e, env, bits));
  return p;
}

Scalar eval_decomposition(const Decomposition& d, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  Scalar acc(wb);
  if (d.remainder) acc += expr::eval(d.remainder, d.env, wb);
  for (const auto& t : d.terms) {
    Scalar coeff = expr::eval(t.coeff, d.env, wb);
    if (coeff.is_zero()) continue;
    acc += coeff * eval_pfq1(term_params(t, d.env, wb), opts).value;
  }
  return acc;
}

void screen_coefficients(const Decomposition& d, long digits) {
  mpfr_prec_t b = bits_for_digits(digits);
  if (d.remainder) expr::check_poles(d.remainder, d.env, b);
  for (const auto& t : d.terms) expr::check_poles(t.coeff, d.env, b);
}

Decomposition miller1(const HypParams& p) {
  Builder b("miller1", env4(p));
  const std::string pref = "gamma(e)*gamma(f)*gamma(g)*gamma(1-d)";
  b.term(pref +
             "*gamma(b-a)*gamma(c-a)/"
             "(gamma(b)*gamma(c)*gamma(e-a)*gamma(f-a)*gamma(g-a)*gamma(1+a-d))",
         {"a", "1+a-e", "1+a-f", "1+a-g"}, {"1+a-d", "1+a-b", "1+a-c"});
  b.term(pref +
             "*gamma(a-b)*gamma(c-b)/"
             "(gamma(a)*gamma(c)*gamma(e-b)*gamma(f-b)*gamma(g-b)*gamma(1+b-d))",
         {"b", "1+b-e", "1+b-f", "1+b-g"}, {"1+b-d", "1+b-a", "1+b-c"});
  b.term(pref +
             "*gamma(a-c)*gamma(b-c)/"
             "(gamma(a)*gamma(b)*gamma(e-c)*gamma(f-c)*gamma(g-c)*gamma(1+c-d))",
         {"c", "1+c-e", "1+c-f", "1+c-g"}, {"1+c-d", "1+c-a", "1+c-b"});
  screen_coefficients(b.d, 40);
  return b.d;
}

Decomposition miller2(const HypParams& p) {
  Builder b("miller2", env4(p));
  const std::string pref = "gamma(e)*gamma(f)*gamma(1-d)*gamma(1-c)/gamma(1-g)";
  b.term(pref +
             "*gamma(a-b)*gamma(1+b-g)/"
             "(gamma(a)*gamma(e-b)*gamma(f-b)*gamma(1+b-c)*gamma(1+b-d))",
         {"b", "1+b-g", "1+b-f", "1+b-e"}, {"1+b-c", "1+b-d", "1+b-a"});
  b.term(pref +
             "*gamma(b-a)*gamma(1+a-g)/"
             "(gamma(b)*gamma(e-a)*gamma(f-a)*gamma(1+a-c)*gamma(1+a-d))",
         {"a", "1+a-g", "1+a-e", "1+a-f"}, {"1+a-c", "1+a-d", "1+a-b"});
  b.term("-" + pref +
             "*gamma(g-1)*gamma(1+a-g)*gamma(1+b-g)/"
             "(gamma(a)*gamma(b)*gamma(g-c)*gamma(g-d)*gamma(1+e-g)*gamma(1+f-g))",
         {"1+b-g", "1+a-g", "1+c-g", "1+d-g"}, {"2-g", "1+e-g", "1+f-g"});
  screen_coefficients(b.d, 40);
  return b.d;
}

Decomposition gf_imag(const HypParams& p) {
  Builder b("gf_imag", env4(p));
  const std::string pref =
      "-gamma(1-a)*gamma(1-b)*gamma(1-c)*gamma(1-d)/(gamma(1-e)*gamma(1-f)*gamma(1-g))";
  b.term(pref + "*gamma(g-1)*gamma(g-f)*gamma(g-e)/(gamma(g-a)*gamma(g-b)*gamma(g-c)*gamma(g-d))",
         {"1-g+a", "1-g+b", "1-g+c", "1-g+d"}, {"2-g", "f+1-g", "e+1-g"});
  b.term(pref + "*gamma(e-1)*gamma(e-f)*gamma(e-g)/(gamma(e-a)*gamma(e-b)*gamma(e-c)*gamma(e-d))",
         {"1-e+a", "1-e+b", "1-e+c", "1-e+d"}, {"2-e", "f+1-e", "g+1-e"});
  b.term(pref + "*gamma(f-1)*gamma(f-e)*gamma(f-g)/(gamma(f-a)*gamma(f-b)*gamma(f-c)*gamma(f-d))",
         {"1-f+a", "1-f+b", "1-f+c", "1-f+d"}, {"2-f", "e+1-f", "g+1-f"});
  screen_coefficients(b.d, 40);
  return b.d;
}

Decomposition three_part(ThreePart kind, const HypParams& p) {
  switch (kind) {
    case ThreePart::Eq1p7b: {
      Builder b("eq1p7b", env3(p));
      b.term(
          "gamma(f)*gamma(1-a)*gamma(1-b)*gamma(1+c-e)/"
          "(gamma(1-e)*gamma(f-c)*gamma(1+c-a)*gamma(1+c-b))",
          {"c", "1+c-f", "1+c-e"}, {"1+c-b", "1+c-a"});
      b.term(
          "gamma(f)*gamma(e)*gamma(1-a)*gamma(1-b)*gamma(e-a-b+f-c)/"
          "(gamma(e-a)*gamma(e-b)*gamma(c)*gamma(1-a+f-c)*gamma(1-b+f-c))",
          {"f-c", "1-c", "e-a-b+f-c"}, {"1-b+f-c", "1-a+f-c"});
      screen_coefficients(b.d, 40);
      return b.d;
    }
    case ThreePart::Shpot3: {
      Builder b("shpot3", env3(p));
      const std::string pref = "gamma(1-a)*gamma(f)*gamma(e)";
      b.term(pref + "*gamma(c-b)/(gamma(c)*gamma(e-b)*gamma(1+b-a)*gamma(f-b))",
             {"b", "1+b-e", "1+b-f"}, {"1+b-c", "1+b-a"});
      b.term(pref + "*gamma(b-c)/(gamma(b)*gamma(1+c-a)*gamma(e-c)*gamma(f-c))",
             {"c", "1+c-f", "1+c-e"}, {"1+c-a", "1+c-b"});
      screen_coefficients(b.d, 40);
      return b.d;
    }
    case ThreePart::F32Imag: {
      Builder b("f32_imag", env3(p));
      const std::string pref = "-gamma(1-a)*gamma(1-b)*gamma(1-c)/(gamma(1-f)*gamma(1-e))";
      b.term(pref + "*gamma(f-1)*gamma(f-e)/(gamma(f-a)*gamma(f-b)*gamma(f-c))",
             {"1+a-f", "1+b-f", "1+c-f"}, {"2-f", "1+e-f"});
      b.term(pref + "*gamma(e-1)*gamma(e-f)/(gamma(e-a)*gamma(e-b)*gamma(e-c))",
             {"1+a-e", "1+b-e", "1+c-e"}, {"2-e", "1+f-e"});
      screen_coefficients(b.d, 40);
      return b.d;
    }
    case ThreePart::Miller2b: {
      Builder b("miller2b", env3(p));
      const std::string pref = "gamma(1+b-e)*gamma(1-a)*gamma(1-c)*gamma(f)";
      b.term(pref + "/(gamma(1-e)*gamma(f-b)*gamma(1+b-c)*gamma(1+b-a))",
             {"b", "1+b-e", "1+b-f"}, {"1+b-c", "1+b-a"});
      b.term(pref + "*gamma(e)/(gamma(2-e)*gamma(e-c)*gamma(e-a)*gamma(1-e+f)*gamma(b))",
             {"1+b-e", "1+a-e", "1+c-e"}, {"2-e", "1-e+f"});
      screen_coefficients(b.d, 40);
      return b.d;
    }
  }
  throw DomainError("unknown three-part kind");
}

Decomposition mix(Mix kind, const HypParams& p, const Scalar& dval) {
  expr::Env env = env3(p);
  env["d"] = dval;
  if (kind == Mix::Mix1) {
    if (abs1(sin_pi(dval)) <= pole_tolerance(dval.prec())) {
      throw SinPole("mix requires sin(pi d) != 0; d = " + dval.str(8));
    }
    Builder b("mix1", std::move(env));
    const std::string pref = "gamma(e)*gamma(f)/sinpi(d)";
    b.term("-" + pref +
               "*sinpi(a-d)*gamma(c-a)*gamma(b-a)/(gamma(f-a)*gamma(e-a)*gamma(c)*gamma(b))",
           {"a", "1+a-e", "1+a-f"}, {"1+a-c", "1+a-b"});
    b.term("-" + pref +
               "*gamma(a-b)*sinpi(b-d)*gamma(c-b)/(gamma(a)*gamma(c)*gamma(f-b)*gamma(e-b))",
           {"b", "1+b-e", "1+b-f"}, {"1+b-a", "1+b-c"});
    b.term("-" + pref +
               "*gamma(a-c)*gamma(b-c)*sinpi(c-d)/(gamma(a)*gamma(f-c)*gamma(e-c)*gamma(b))",
           {"c", "1+c-e", "1+c-f"}, {"1+c-a", "1+c-b"});
    screen_coefficients(b.d, 40);
    return b.d;
  }
  Builder b("mix2", std::move(env));
  const std::string pref =
      "gamma(1+b-d)*gamma(1-c)*gamma(1-a)*gamma(f)*gamma(e)/gamma(1-d)";
  b.term(pref + "*gamma(d-b)/(gamma(d)*gamma(1+b-a)*gamma(1+b-c)*gamma(f-b)*gamma(e-b))",
         {"b", "1+b-e", "1+b-f"}, {"1+b-a", "1+b-c"});
  b.term("-" + pref +
             "*gamma(d-b)/"
             "(gamma(f-d)*gamma(e-d)*gamma(1+d-b)*gamma(1+d-c)*gamma(1+d-a)*gamma(b))",
         {"1", "d", "1-e+d", "1-f+d"}, {"1+d-a", "1+d-b", "1+d-c"});
  b.term("-" + pref +
             "*gamma(d-1)/"
             "(gamma(d)*gamma(d-a)*gamma(d-c)*gamma(1+e-d)*gamma(1+f-d)*gamma(b))",
         {"1", "1+a-d", "1+b-d", "1+c-d"}, {"2-d", "1+e-d", "1+f-d"});
  screen_coefficients(b.d, 40);
  return b.d;
}

Decomposition minton_karlsson(const HypParams& p) {
  const size_t np = p.tops.size();
  if (!((np == 4 && p.bottoms.size() == 3) || (np == 3 && p.bottoms.size() == 2))) {
    throw DomainError("order reduction expects a 4F3 or 3F2");
  }
  mpfr_prec_t bits = 64;
  for (const auto& t : p.tops) bits = std::max(bits, t.prec());
  Real tol = pole_tolerance(bits);

  size_t ti = np, bj = np;
  long n = -1;
  for (size_t i = 0; i < p.tops.size() && ti == np; ++i) {
    for (size_t j = 0; j < p.bottoms.size(); ++j) {
      bool ok = false;
      long diff = snapped_integer_diff(p.tops[i], p.bottoms[j], tol, &ok);
      if (ok && diff >= 0) {
        ti = i;
        bj = j;
        n = diff;
        break;
      }
    }
  }
  if (ti == np) {
    throw NoIntegerOffset("no top parameter exceeds a bottom parameter by a non-negative integer");
  }

  std::vector<Scalar> tops, bots;
  for (size_t i = 0; i < p.tops.size(); ++i) {
    if (i != ti) tops.push_back(p.tops[i]);
  }
  Scalar base = p.bottoms[bj];
  for (size_t j = 0; j < p.bottoms.size(); ++j) {
    if (j != bj) bots.push_back(p.bottoms[j]);
  }

  expr::Env env;
  env["e"] = base;
  env["a"] = tops[0];
  env["b"] = tops[1];
  if (tops.size() == 3) env["c"] = tops[2];
  env["f"] = bots[0];
  if (bots.size() == 2) env["g"] = bots[1];

  Builder b("minton_karlsson", std::move(env));
  const std::string ns = std::to_string(n);
  for (long k = 0; k <= n; ++k) {
    const std::string ks = std::to_string(k);
    if (tops.size() == 3) {
      b.term("gamma(" + ns + "+1)*gamma(e)*gamma(f)*gamma(g)/(gamma(a)*gamma(b)*gamma(c))" +
                 "*gamma(a+" + ks + ")*gamma(b+" + ks + ")*gamma(c+" + ks + ")/" +
                 "(gamma(" + ks + "+1)*gamma(1+" + ns + "-" + ks + ")*gamma(e+" + ks +
                 ")*gamma(f+" + ks + ")*gamma(g+" + ks + "))",
             {"a+" + ks, "b+" + ks, "c+" + ks}, {"f+" + ks, "g+" + ks});
    } else {
      b.term("gamma(" + ns + "+1)*gamma(e)*gamma(f)/(gamma(a)*gamma(b))" + "*gamma(a+" + ks +
                 ")*gamma(b+" + ks + ")/" + "(gamma(" + ks + "+1)*gamma(1+" + ns + "-" + ks +
                 ")*gamma(e+" + ks + ")*gamma(f+" + ks + "))",
             {"a+" + ks, "b+" + ks}, {"f+" + ks});
    }
  }
  screen_coefficients(b.d, 40);
  return b.d;
}

Decomposition whipple_terminating(const HypParams& p) {
  if (p.tops.size() != 4 || p.bottoms.size() != 3) {
    throw DomainError("expected a terminating 4F3");
  }
  mpfr_prec_t bits = 64;
  for (const auto& t : p.tops) bits = std::max(bits, t.prec());
  Real tol = pole_tolerance(bits);

  size_t ni = 4;
  long n = -1;
  for (size_t i = 0; i < 4; ++i) {
    long m = 0;
    if (near_nonpositive_integer(p.tops[i], tol, &m)) {
      ni = i;
      n = m;
      break;
    }
  }
  if (ni == 4) throw NotBalanced("no terminating top parameter found");

  std::vector<Scalar> abc;
  for (size_t i = 0; i < 4; ++i) {
    if (i != ni) abc.push_back(p.tops[i]);
  }
  // balance: f = a+b+c+1-d-e-n
  Scalar want = abc[0] + abc[1] + abc[2] + 1 - p.bottoms[0] - p.bottoms[1] - n;
  if (!(abs1(want - p.bottoms[2]) <= tol * 64)) {
    throw NotBalanced("last bottom must equal a+b+c+1-d-e-n; expected " + want.str(12));
  }

  expr::Env env{{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]},
                {"d", p.bottoms[0]}, {"e", p.bottoms[1]}, {"f", p.bottoms[2]}};
  Builder b("whipple_terminating", std::move(env));
  const std::string ns = std::to_string(n);
  b.term("gamma(" + ns + "+e-a)*gamma(" + ns + "+f-a)*gamma(e)*gamma(f)/" + "(gamma(e-a)*gamma(f-a)*gamma(" +
             ns + "+e)*gamma(" + ns + "+f))",
         {"a", "-" + ns, "d-b", "d-c"}, {"d", "a+1-" + ns + "-f", "a+1-" + ns + "-e"});
  screen_coefficients(b.d, 40);
  return b.d;
}

ClosedEval sheppard_andersen(const Scalar& a, const Scalar& b, const Scalar& c, long n, long k) {
  if (k < 1 || n < 0) throw DomainError("k-balanced closed form needs k >= 1, n >= 0");
  long nn = std::min(k - 1, n);
  const std::string ks = std::to_string(k), ns = std::to_string(n), caps = std::to_string(nn);
  int sgn = ((n + k) % 2 == 0) ? 1 : -1;
  std::string form = std::string(sgn < 0 ? "" : "-") + "pi*gamma(a-c+1)*gamma(" + ks + "-" + ns +
                     "+a+b-c)*gamma(" + ns + "+1)*gamma(" + ks + ")*gamma(c)/" + "(sinpi(c-b)*gamma(" + ks +
                     "-" + ns + "+b-c)*gamma(" + ks + "+b-c+a)*gamma(" + ns + "+c)*gamma(a))" +
                     "*sum(j, 0, " + caps + ", gamma(a+j)/(gamma(1+" + ns + "-j)*gamma(c-b-" + ks +
                     "+1+j)*gamma(a-" + ns + "-c+1+j)*gamma(1+j)*gamma(" + ks + "-j)))";
  ClosedEval ce;
  ce.form = expr::parse(form);
  ce.env = {{"a", a}, {"b", b}, {"c", c}};
  return ce;
}

ClosedEval saalschutz_two_balanced(const Scalar& a, const Scalar& b, const Scalar& c, long n) {
  const std::string ns = std::to_string(n);
  std::string form = "gamma(c-b+" + ns + "-1)*gamma(" + ns + "+c-a)*gamma(c-a-b-1)*gamma(c)/" +
                     "(gamma(c-b-1)*gamma(c-a)*gamma(c-b+" + ns + "-1-a)*gamma(" + ns + "+c))" +
                     "*(1 - " + ns + "*a/((c-b-1)*(" + ns + "+c-1-a)))";
  ClosedEval ce;
  ce.form = expr::parse(form);
  ce.env = {{"a", a}, {"b", b}, {"c", c}};
  return ce;
}

ClosedEval andersen(const Scalar& a, const Scalar& b, long m) {
  const std::string ms = std::to_string(m);
  const std::string sgn = (m % 2 == 0) ? "1" : "-1";
  std::string form = "(" + sgn + ")*sinpi(a)*sinpi(b)*gamma(1-b-" + ms + ")*gamma(b+a)*gamma(1-a)*gamma(2+" +
                     ms + ")/((a-1-" + ms + ")*pi^2*(b-1))" + " - (1+" + ms + ")*(b+a-1)/((a-1-" + ms +
                     ")*(b-1))";
  ClosedEval ce;
  ce.form = expr::parse(form);
  ce.env = {{"a", a}, {"b", b}};
  return ce;
}

Relation shpot_contiguity(const Scalar& c, long n, const Scalar& b, const Scalar& a, long m) {
  expr::Env env{{"a", a}, {"b", b}, {"c", c}};
  const std::string ns = std::to_string(n), ms = std::to_string(m);
  Relation rel;
  {
    Builder lhs("shpot_contiguity_lhs", env);
    lhs.term("1", {"c", "-" + ns, "b"}, {"a", "b+1+" + ms});
    rel.lhs = lhs.d;
  }
  Builder rhs("shpot_contiguity_rhs", env);
  for (long i = 0; i <= m; ++i) {
    const std::string is = std::to_string(i);
    const std::string sgn = ((m + i) % 2 == 0) ? "" : "-";
    rhs.term(sgn + "gamma(1-b)/(gamma(-b-" + ms + ")*(-b-" + is + ")*gamma(" + is + "+1)*gamma(1-" +
                 is + "+" + ms + "))",
             {"c", "-" + ns, "b+" + is}, {"a", "b+" + is + "+1"});
  }
  rel.rhs = rhs.d;
  screen_coefficients(rel.rhs, 40);
  return rel;
}

Decomposition shpot_finite(const Scalar& a, const Scalar& b, const Scalar& c, long m, long n) {
  expr::Env env{{"a", a}, {"b", b}, {"c", c}};
  const std::string ms = std::to_string(m), ns = std::to_string(n);
  Builder bl("shpot_finite", std::move(env));
  // T(a,b,c,m,n) scaled by Gamma(b+1+m) Gamma(c+1+n) / (Gamma(b) Gamma(c))
  bl.term("gamma(b+1+" + ms + ")*gamma(c+1+" + ns + ")*gamma(1-a)*gamma(c-b)/" + "(gamma(c)*gamma(1+b-a)*gamma(" +
              ns + "+1+c-b)*gamma(" + ms + "+1))",
          {"b", "-" + ms, "b-c-" + ns}, {"1+b-a", "1+b-c"});
  bl.term("gamma(b+1+" + ms + ")*gamma(c+1+" + ns + ")*gamma(1-a)*gamma(b-c)/" + "(gamma(b)*gamma(1+c-a)*gamma(" +
              ms + "+1+b-c)*gamma(" + ns + "+1))",
          {"c", "-" + ns, "c-b-" + ms}, {"1+c-a", "1+c-b"});
  screen_coefficients(bl.d, 40);
  return bl.d;
}

std::vector<OrbitEntry> thomae_orbit(const HypParams& p, long digits) {
  if (p.tops.size() != 3 || p.bottoms.size() != 2) {
    throw DomainError("orbit expects a 3F2");
  }
  mpfr_prec_t bits = bits_for_digits(digits + 10);
  Real tol = pole_tolerance(bits);
  std::vector<OrbitEntry> out;

  auto push = [&](const expr::Ptr& coeff, std::vector<expr::Ptr> tops, std::vector<expr::Ptr> bots,
                  const expr::Env& env) {
    OrbitEntry oe;
    oe.coeff = coeff;
    oe.tops = std::move(tops);
    oe.bottoms = std::move(bots);
    oe.env = env;
    HypParams hp;
    for (const auto& t : oe.tops) hp.tops.push_back(expr::eval(t, env, bits));
    for (const auto& bo : oe.bottoms) hp.bottoms.push_back(expr::eval(bo, env, bits));
    oe.cls = classify(hp);
    oe.excess = parametric_excess(hp);
    out.push_back(std::move(oe));
  };

  // special shape (x,x,y; 2x, y+1)
  {
    int xi = -1, yi = -1;
    for (int i = 0; i < 3 && xi < 0; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (abs1(p.tops[i] - p.tops[j]) <= tol) {
          xi = i;
          yi = 3 - i - j;
          break;
        }
      }
    }
    if (xi >= 0) {
      Scalar x = p.tops[xi], y = p.tops[yi];
      for (int swap = 0; swap < 2; ++swap) {
        const Scalar& b0 = p.bottoms[swap];
        const Scalar& b1 = p.bottoms[1 - swap];
        if (abs1(b0 - x * 2) <= tol && abs1(b1 - (y + 1)) <= tol) {
          expr::Env env{{"a", x}, {"b", y}};
          push(expr::parse("gamma(b+1)*gamma(2*a)/(gamma(b)*gamma(1+a)^2)"),
               {expr::parse("1"), expr::parse("1"), expr::parse("2*a-b")},
               {expr::parse("1+a"), expr::parse("1+a")}, env);
          push(expr::parse("gamma(2*a)/(gamma(a)*gamma(1+a))"),
               {expr::parse("1"), expr::parse("b-a+1"), expr::parse("a")},
               {expr::parse("1+a"), expr::parse("b+1")}, env);
          push(expr::parse("gamma(b+1)/(gamma(b-a+1)*gamma(1+a))"),
               {expr::parse("2*a-b"), expr::parse("a"), expr::parse("a")},
               {expr::parse("1+a"), expr::parse("2*a")}, env);
          push(expr::parse("gamma(2*a)/(gamma(2*a-b)*gamma(b+1))"),
               {expr::parse("b-a+1"), expr::parse("b-a+1"), expr::parse("b")},
               {expr::parse("b+1"), expr::parse("b+1")}, env);
          return out;
        }
      }
    }
  }

  // general case: all (v, w) label pairs of the frame
  expr::Env env{{"a", p.tops[0]}, {"b", p.tops[1]}, {"c", p.tops[2]},
                {"e", p.bottoms[0]}, {"f", p.bottoms[1]}};
  expr::Ptr sexp = expr::parse("e+f-a-b-c");
  for (int v = 1; v <= 5; ++v) {
    for (int w = 1; w <= 5; ++w) {
      if (v == w) continue;
      std::array<bool, 6> used{};
      used[0] = used[v] = used[w] = true;
      std::vector<expr::Ptr> tops;
      for (int x = 1; x < 6; ++x) {
        if (!used[x]) tops.push_back(whipple::form_expr(whipple::alpha_form(x, v, w)));
      }
      std::vector<expr::Ptr> bots = {whipple::form_expr(whipple::beta_form(v, 0)),
                                     whipple::form_expr(whipple::beta_form(w, 0))};
      expr::Ptr coeff;
      if (v == 4 && w == 5) {
        coeff = expr::number(1);
      } else {
        // Gamma(e) Gamma(f) Gamma(s) / (Gamma(beta_v0) Gamma(beta_w0) Gamma(1 - alpha_0vw))
        whipple::LinearForm av = whipple::alpha_form(0, v, w);
        for (auto& q : av) q = -q;
        av[0] += 1;
        coeff = expr::div(
            expr::mul({expr::call("gamma", expr::symbol("e")), expr::call("gamma", expr::symbol("f")),
                       expr::call("gamma", sexp)}),
            expr::mul({expr::call("gamma", whipple::form_expr(whipple::beta_form(v, 0))),
                       expr::call("gamma", whipple::form_expr(whipple::beta_form(w, 0))),
                       expr::call("gamma", whipple::form_expr(av))}));
      }
      push(coeff, std::move(tops), std::move(bots), env);
    }
  }
  return out;
}

}  // namespace hyperid::transforms

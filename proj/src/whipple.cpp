#include "hyperid/whipple.hpp"

#include <algorithm>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"

namespace hyperid::whipple {

namespace {

// rows: constant, a, b, c, e, f (thirds and sixths)
constexpr int kRNum[6][6] = {
    {5, 2, 2, 2, -4, -4},   // r0 = 5/6 + a/3 + b/3 + c/3 - 2e/3 - 2f/3
    {-1, 2, -4, -4, 2, 2},  // r1
    {-1, -4, 2, -4, 2, 2},  // r2
    {-1, -4, -4, 2, 2, 2},  // r3
    {-1, 2, 2, 2, 2, -4},   // r4
    {-1, 2, 2, 2, -4, 2},   // r5
};

}  // namespace

LinearForm r_form(int i) {
  LinearForm lf;
  for (int j = 0; j < 6; ++j) {
    lf[j] = mpq_class(kRNum[i][j], 6);
    lf[j].canonicalize();
  }
  return lf;
}

LinearForm alpha_form(int l, int m, int n) {
  LinearForm lf = r_form(l);
  LinearForm lm = r_form(m), ln = r_form(n);
  for (int j = 0; j < 6; ++j) lf[j] += lm[j] + ln[j];
  lf[0] += mpq_class(1, 2);
  for (int j = 0; j < 6; ++j) lf[j].canonicalize();
  return lf;
}

LinearForm beta_form(int m, int n) {
  LinearForm lf = r_form(m);
  LinearForm ln = r_form(n);
  for (int j = 0; j < 6; ++j) lf[j] -= ln[j];
  lf[0] += 1;
  for (int j = 0; j < 6; ++j) lf[j].canonicalize();
  return lf;
}

expr::Ptr form_expr(const LinearForm& lf) {
  static const char* names[5] = {"a", "b", "c", "e", "f"};
  std::vector<expr::Ptr> terms;
  if (lf[0] != 0) terms.push_back(expr::number(lf[0]));
  for (int j = 0; j < 5; ++j) {
    if (lf[j + 1] == 0) continue;
    if (lf[j + 1] == 1) {
      terms.push_back(expr::symbol(names[j]));
    } else {
      terms.push_back(expr::mul({expr::number(lf[j + 1]), expr::symbol(names[j])}));
    }
  }
  if (terms.empty()) return expr::number(0);
  return expr::add(std::move(terms));
}

namespace {

Scalar eval_form(const Frame& fr, const LinearForm& lf) {
  mpfr_prec_t b = fr.base[0].prec();
  Real q(b);
  mpfr_set_q(q.raw(), lf[0].get_mpq_t(), MPFR_RNDN);
  Scalar acc(q);
  for (int j = 0; j < 5; ++j) {
    if (lf[j + 1] == 0) continue;
    Real w(b);
    mpfr_set_q(w.raw(), lf[j + 1].get_mpq_t(), MPFR_RNDN);
    acc += fr.base[j] * Scalar(w);
  }
  return acc;
}

}  // namespace

Frame make_frame(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& e,
                 const Scalar& f) {
  Frame fr;
  mpfr_prec_t bits = std::max({a.prec(), b.prec(), c.prec(), e.prec(), f.prec()});
  fr.base = {a.at_prec(bits), b.at_prec(bits), c.at_prec(bits), e.at_prec(bits), f.at_prec(bits)};
  for (int i = 0; i < 6; ++i) fr.r[i] = eval_form(fr, r_form(i));
  return fr;
}

Scalar alpha(const Frame& fr, int l, int m, int n) {
  mpfr_prec_t b = fr.base[0].prec();
  return Scalar::of_ratio(1, 2, b) + fr.r[l] + fr.r[m] + fr.r[n];
}

Scalar beta(const Frame& fr, int m, int n) {
  mpfr_prec_t b = fr.base[0].prec();
  return Scalar::of_long(1, b) + fr.r[m] - fr.r[n];
}

HypParams f_series(const Frame& fr, const FLabel& lbl, mpfr_prec_t bits, Scalar* divisor) {
  std::array<bool, 6> used{};
  used[lbl.u] = used[lbl.v] = used[lbl.w] = true;
  std::array<int, 3> comp{};
  int ci = 0;
  for (int i = 0; i < 6; ++i) {
    if (!used[i]) comp[ci++] = i;
  }
  HypParams p;
  Scalar one = Scalar::of_long(1, bits);
  for (int x : comp) {
    Scalar av = alpha(fr, x, lbl.v, lbl.w).at_prec(bits);
    p.tops.push_back(lbl.positive ? av : one - av);
  }
  Scalar b1 = beta(fr, lbl.v, lbl.u).at_prec(bits);
  Scalar b2 = beta(fr, lbl.w, lbl.u).at_prec(bits);
  if (!lbl.positive) {
    b1 = 2 - b1;
    b2 = 2 - b2;
  }
  p.bottoms = {b1, b2};
  if (divisor) {
    Scalar au = alpha(fr, lbl.u, lbl.v, lbl.w).at_prec(bits);
    Scalar ga = lbl.positive ? one - au : au;
    *divisor = gamma(b1) * gamma(b2) * gamma(ga);
  }
  return p;
}

Scalar f_eval(const Frame& fr, const FLabel& lbl, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  Scalar divisor(wb);
  HypParams p = f_series(fr, lbl, wb, &divisor);
  auto cls = classify(p);
  if (cls.kind == SeriesKind::Divergent || cls.kind == SeriesKind::BottomPole) {
    throw AnalyticContinuationRequired(
        "embedded series of the labelled function does not converge");
  }
  return eval_pfq1(p, opts).value / divisor;
}

const char* base_name(BaseId id) {
  switch (id) {
    case BaseId::P3:
      return "P3";
    case BaseId::P4:
      return "P4";
    case BaseId::P5:
      return "P5";
    case BaseId::P3A:
      return "P3A";
    case BaseId::P4A:
      return "P4A";
    case BaseId::P5A:
      return "P5A";
  }
  return "?";
}

Relation base_relation(BaseId id) {
  auto A = [](int l, int m, int n) { return AlphaSpec{false, {l, m, n}}; };
  Relation rel;
  switch (id) {
    case BaseId::P3: {
      rel.lhs = {true, 0, 4, 5};
      RelTerm t1;
      t1.sign = 1;
      t1.pi_pow = 1;
      t1.gamma_num = {A(0, 2, 3)};
      t1.gamma_den = {A(1, 3, 4), A(1, 3, 5), A(3, 4, 5)};
      t1.sin_den = {{2, 3}};
      t1.f = {false, 2, 3, 1};
      RelTerm t2 = t1;
      t2.sign = -1;
      t2.gamma_den = {A(1, 2, 4), A(1, 2, 5), A(2, 4, 5)};
      t2.f = {false, 3, 1, 2};
      rel.rhs = {t1, t2};
      return rel;
    }
    case BaseId::P4: {
      rel.lhs = {true, 0, 4, 5};
      RelTerm t1;
      t1.sign = 1;
      t1.pi_pow = 1;
      t1.gamma_num = {A(0, 3, 5)};
      t1.gamma_den = {A(1, 2, 3), A(1, 3, 4), A(2, 3, 4)};
      t1.sin_den = {{5, 3}};
      t1.f = {false, 5, 0, 3};
      RelTerm t2 = t1;
      t2.sign = -1;
      t2.gamma_den = {A(1, 2, 5), A(1, 4, 5), A(2, 4, 5)};
      t2.f = {false, 3, 0, 5};
      rel.rhs = {t1, t2};
      return rel;
    }
    case BaseId::P5: {
      rel.lhs = {true, 0, 4, 5};
      RelTerm t1;
      t1.sign = 1;
      t1.pi_pow = -1;
      t1.gamma_num = {A(0, 1, 4), A(0, 2, 4), A(0, 3, 4)};
      t1.gamma_den = {A(1, 2, 3)};
      t1.sin_num = {{5, 0}};
      t1.f = {false, 4, 0, 2};
      RelTerm t2;
      t2.sign = 1;
      t2.pi_pow = 0;
      t2.gamma_num = {A(0, 1, 4), A(0, 2, 4), A(0, 3, 4)};
      t2.gamma_den = {A(1, 4, 5), A(2, 4, 5), A(3, 4, 5)};
      t2.f = {true, 5, 0, 4};
      rel.rhs = {t1, t2};
      return rel;
    }
    case BaseId::P3A:
      return complement(base_relation(BaseId::P3));
    case BaseId::P4A:
      return complement(base_relation(BaseId::P4));
    case BaseId::P5A:
      return complement(base_relation(BaseId::P5));
  }
  throw DomainError("unknown base relation");
}

Relation relabel(const Relation& rel, const std::array<int, 6>& perm) {
  // bijectivity
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (perm[i] < 0 || perm[i] > 5 || seen[perm[i]]) throw DomainError("permutation not bijective");
    seen[perm[i]] = true;
  }
  Relation out = rel;
  auto map_label = [&](FLabel& l) {
    l.u = perm[l.u];
    l.v = perm[l.v];
    l.w = perm[l.w];
  };
  map_label(out.lhs);
  for (auto& t : out.rhs) {
    map_label(t.f);
    for (auto& g : t.gamma_num) {
      for (auto& i : g.idx) i = perm[i];
    }
    for (auto& g : t.gamma_den) {
      for (auto& i : g.idx) i = perm[i];
    }
    for (auto& s : t.sin_num) {
      s.m = perm[s.m];
      s.n = perm[s.n];
    }
    for (auto& s : t.sin_den) {
      s.m = perm[s.m];
      s.n = perm[s.n];
    }
  }
  return out;
}

Relation complement(const Relation& rel) {
  Relation out = rel;
  out.lhs.positive = !out.lhs.positive;
  for (auto& t : out.rhs) {
    t.f.positive = !t.f.positive;
    for (auto& g : t.gamma_num) g.one_minus = !g.one_minus;
    for (auto& g : t.gamma_den) g.one_minus = !g.one_minus;
    // beta -> 2 - beta is beta with swapped labels (beta_mn + beta_nm = 2),
    // which already carries the sign of sin(pi(2 - beta))
    for (auto& s : t.sin_num) std::swap(s.m, s.n);
    for (auto& s : t.sin_den) std::swap(s.m, s.n);
  }
  return out;
}

namespace {

Scalar term_coefficient(const RelTerm& t, const Frame& fr, mpfr_prec_t wb) {
  Scalar acc = Scalar::of_long(t.sign, wb);
  Real pi = constants::pi(wb);
  if (t.pi_pow != 0) acc *= Scalar(pow_si(pi, t.pi_pow));
  Scalar one = Scalar::of_long(1, wb);
  auto alpha_val = [&](const AlphaSpec& g) {
    Scalar v = alpha(fr, g.idx[0], g.idx[1], g.idx[2]).at_prec(wb);
    return g.one_minus ? one - v : v;
  };
  for (const auto& g : t.gamma_num) acc *= gamma(alpha_val(g));
  for (const auto& g : t.gamma_den) acc = acc / gamma(alpha_val(g));
  for (const auto& s : t.sin_num) acc *= sin_pi(beta(fr, s.m, s.n).at_prec(wb));
  for (const auto& s : t.sin_den) acc = acc / sin_pi(beta(fr, s.m, s.n).at_prec(wb));
  return acc;
}

}  // namespace

Scalar residual(const Relation& rel, const Frame& fr, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  Scalar lhs = f_eval(fr, rel.lhs, opts);
  Scalar rhs(wb);
  for (const auto& t : rel.rhs) {
    rhs += term_coefficient(t, fr, wb) * f_eval(fr, t.f, opts);
  }
  return lhs - rhs;
}

Scalar relation_scale(const Relation& rel, const Frame& fr, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  Real scale = abs1(f_eval(fr, rel.lhs, opts));
  for (const auto& t : rel.rhs) {
    scale = max(scale, abs1(term_coefficient(t, fr, wb) * f_eval(fr, t.f, opts)));
  }
  return Scalar(max(scale, Real::of_long(1, wb)));
}

namespace {

// The independently derived two-part mixture (the e-reduction of the second
// 4F3 transformation) in label form.
Relation b8_relation() {
  auto A = [](int l, int m, int n) { return AlphaSpec{false, {l, m, n}}; };
  Relation rel;
  rel.lhs = {true, 0, 4, 5};
  RelTerm t1;
  t1.sign = 1;
  t1.pi_pow = -1;
  t1.gamma_num = {A(0, 1, 2), A(0, 2, 3), A(0, 2, 5)};
  t1.gamma_den = {A(1, 3, 5)};
  t1.sin_num = {{4, 0}};
  t1.f = {false, 2, 3, 1};
  RelTerm t2;
  t2.sign = 1;
  t2.pi_pow = 0;
  t2.gamma_num = {A(0, 1, 2), A(0, 2, 3), A(0, 2, 5)};
  t2.gamma_den = {A(1, 2, 4), A(2, 3, 4), A(2, 4, 5)};
  t2.f = {true, 4, 1, 2};
  rel.rhs = {t1, t2};
  return rel;
}

// EqY: Fp(2) solved from equating the complements of P3 and P4.
std::vector<Relation> eqy_relation_terms() {
  auto A = [](int l, int m, int n) { return AlphaSpec{false, {l, m, n}}; };
  Relation rel;
  rel.lhs = {true, 2, 0, 1};  // Fp(2)
  RelTerm p1;                 // Fp(3) / Gamma(alpha035) * (ratio block)
  p1.sign = 1;
  p1.pi_pow = 0;
  p1.gamma_num = {A(0, 1, 2), A(0, 2, 4), A(0, 2, 5)};
  p1.gamma_den = {A(0, 3, 5), A(0, 3, 4), A(0, 1, 3)};
  p1.f = {true, 3, 0, 1};
  RelTerm p2;
  p2.sign = 1;
  p2.pi_pow = 0;
  p2.gamma_num = {A(0, 1, 2), A(0, 2, 4), A(0, 2, 5), A(1, 2, 4)};
  p2.gamma_den = {A(1, 4, 5), A(0, 2, 3), A(0, 3, 4), A(0, 1, 3)};
  p2.sin_num = {{2, 3}};
  p2.sin_den = {{3, 5}};
  p2.f = {true, 3, 0, 1};
  RelTerm p3;
  p3.sign = -1;
  p3.pi_pow = 0;
  p3.gamma_num = {A(1, 2, 4), A(0, 2, 4), A(0, 1, 2)};
  p3.gamma_den = {A(0, 4, 5), A(0, 1, 5), A(1, 4, 5)};
  p3.sin_num = {{2, 3}};
  p3.sin_den = {{3, 5}};
  p3.f = {true, 5, 0, 1};
  rel.rhs = {p1, p2, p3};
  return {rel};
}

// F32_Imag in label form (B7).
Relation b7_relation() {
  auto A = [](int l, int m, int n) { return AlphaSpec{false, {l, m, n}}; };
  Relation rel;
  rel.lhs = {true, 0, 4, 5};
  // common prefactor: sin(pi e) sin(pi f) Gamma(1-a) Gamma(1-b) Gamma(1-c)
  //                   / sin(pi(e - f))
  // with e = beta40, f = beta50, e - f = beta45 - 1:
  // sin(pi(e-f)) = -sin(pi beta45)
  RelTerm t1;  // + Fp(4) / (sin(pi e) Gamma(e-b)Gamma(e-c)Gamma(e-a))
  t1.sign = -1;
  t1.pi_pow = 0;
  t1.gamma_num = {AlphaSpec{true, {1, 4, 5}}, AlphaSpec{true, {2, 4, 5}}, AlphaSpec{true, {3, 4, 5}}};
  t1.gamma_den = {A(1, 3, 4), A(2, 3, 4), A(1, 2, 4)};
  t1.sin_num = {{5, 0}};
  t1.sin_den = {{4, 5}};
  t1.f = {true, 4, 0, 5};
  RelTerm t2;  // - Fp(5) / (sin(pi f) Gamma(f-b)Gamma(f-c)Gamma(f-a))
  t2.sign = 1;
  t2.pi_pow = 0;
  t2.gamma_num = {AlphaSpec{true, {1, 4, 5}}, AlphaSpec{true, {2, 4, 5}}, AlphaSpec{true, {3, 4, 5}}};
  t2.gamma_den = {A(1, 3, 5), A(2, 3, 5), A(1, 2, 5)};
  t2.sin_num = {{4, 0}};
  t2.sin_den = {{4, 5}};
  t2.f = {true, 5, 0, 4};
  rel.rhs = {t1, t2};
  return rel;
}

// P3 after a <-> b written from its printed expanded form.
Relation p3c_relation() {
  auto A = [](int l, int m, int n) { return AlphaSpec{false, {l, m, n}}; };
  Relation rel;
  rel.lhs = {true, 0, 4, 5};
  RelTerm t1;  // - pi Gamma(1-b) Fn(1) / (sin(pi(a-c)) Gamma(e-a)Gamma(f-a)Gamma(c))
  t1.sign = 1;
  t1.pi_pow = 1;
  t1.gamma_num = {A(0, 1, 3)};
  t1.gamma_den = {A(2, 3, 4), A(2, 3, 5), A(3, 4, 5)};
  t1.sin_den = {{1, 3}};
  t1.f = {false, 1, 2, 3};
  RelTerm t2 = t1;
  t2.sign = -1;
  t2.gamma_den = {A(1, 2, 4), A(1, 2, 5), A(1, 4, 5)};
  t2.f = {false, 3, 1, 2};
  rel.rhs = {t1, t2};
  return rel;
}

// groups the assembled coefficient in front of each (kind, u) class
std::vector<std::pair<std::pair<bool, int>, Scalar>> grouped_terms(const Relation& rel,
                                                                   const Frame& fr,
                                                                   const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  std::vector<std::pair<std::pair<bool, int>, Scalar>> out;
  for (const auto& t : rel.rhs) {
    Scalar coeff = term_coefficient(t, fr, wb);
    auto key = std::make_pair(t.f.positive, t.f.u);
    bool found = false;
    for (auto& [k, v] : out) {
      if (k == key) {
        v += coeff;
        found = true;
      }
    }
    if (!found) out.emplace_back(key, coeff);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Real compare_relations(const Relation& got, const Relation& want, const Frame& fr,
                       const EvalOptions& opts) {
  if (got.lhs.positive != want.lhs.positive || got.lhs.u != want.lhs.u) {
    return Real::of_long(1, 64);
  }
  auto ga = grouped_terms(got, fr, opts);
  auto gb = grouped_terms(want, fr, opts);
  Real worst = Real::of_long(0, 64);
  if (ga.size() != gb.size()) return Real::of_long(1, 64);
  for (size_t i = 0; i < ga.size(); ++i) {
    if (ga[i].first != gb[i].first) return Real::of_long(1, 64);
    Real scale = max(abs1(gb[i].second), Real::of_long(1, 64));
    worst = max(worst, (abs1(ga[i].second - gb[i].second) / scale).at_prec(64));
  }
  return worst;
}

}  // namespace

Real replay_derivation(ReplayId id, const Frame& fr, const EvalOptions& opts) {
  switch (id) {
    case ReplayId::B8FromP5a: {
      Relation r = base_relation(BaseId::P5);
      r = relabel(r, {0, 1, 4, 3, 2, 5});  // 4 <-> 2
      r = relabel(r, {0, 1, 2, 3, 5, 4});  // 5 <-> 4
      Relation target = b8_relation();
      Real coeffs = compare_relations(r, target, fr, opts);
      Real res = (abs1(residual(r, fr, opts)) / abs1(relation_scale(r, fr, opts))).at_prec(64);
      return max(coeffs, res);
    }
    case ReplayId::B7FromEqY: {
      Relation r = eqy_relation_terms()[0];
      Real sanity = (abs1(residual(r, fr, opts)) / abs1(relation_scale(r, fr, opts))).at_prec(64);
      r = relabel(r, {0, 1, 2, 4, 3, 5});  // 3 <-> 4
      r = relabel(r, {2, 1, 0, 3, 4, 5});  // 0 <-> 2
      Relation target = b7_relation();
      Real coeffs = compare_relations(r, target, fr, opts);
      Real res = (abs1(residual(r, fr, opts)) / abs1(relation_scale(r, fr, opts))).at_prec(64);
      return max(sanity, max(coeffs, res));
    }
    case ReplayId::P3CFromP3: {
      Relation r = relabel(base_relation(BaseId::P3), {0, 2, 1, 3, 4, 5});  // 1 <-> 2
      Relation target = p3c_relation();
      Real coeffs = compare_relations(r, target, fr, opts);
      Real res = (abs1(residual(r, fr, opts)) / abs1(relation_scale(r, fr, opts))).at_prec(64);
      return max(coeffs, res);
    }
  }
  throw DomainError("unknown replay");
}

}  // namespace hyperid::whipple

#pragma once

#include <array>
#include <vector>

#include "hyperid/expr.hpp"
#include "hyperid/series.hpp"

namespace hyperid::whipple {

/// The six label parameters attached to a canonical 3F2(a,b,c;e,f;1). They
/// sum to zero, and every Thomae relative of the function is described by
/// the derived quantities alpha_{lmn} = 1/2 + r_l + r_m + r_n and
/// beta_{mn} = 1 + r_m - r_n over distinct labels 0..5.
struct Frame {
  std::array<Scalar, 5> base;  // a, b, c, e, f
  std::array<Scalar, 6> r;
};

Frame make_frame(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& e,
                 const Scalar& f);

Scalar alpha(const Frame& fr, int l, int m, int n);
Scalar beta(const Frame& fr, int m, int n);

/// Rational coefficient row (constant, a, b, c, e, f) of r_i, alpha, beta as
/// linear forms; used to build symbolic coefficients.
using LinearForm = std::array<mpq_class, 6>;
LinearForm r_form(int i);
LinearForm alpha_form(int l, int m, int n);
LinearForm beta_form(int m, int n);
/// The linear form as an expression over symbols a,b,c,e,f.
expr::Ptr form_expr(const LinearForm& lf);

struct FLabel {
  bool positive = true;  // Fp vs Fn
  int u = 0, v = 4, w = 5;
};

/// Embedded series of Fp/Fn(u;v,w); also reports the normalizing divisor
/// Gamma(beta_vu) Gamma(beta_wu) Gamma(1 - alpha_uvw) (complemented for Fn).
HypParams f_series(const Frame& fr, const FLabel& lbl, mpfr_prec_t bits, Scalar* divisor);

/// Normalized value; throws AnalyticContinuationRequired when the embedded
/// series does not converge.
Scalar f_eval(const Frame& fr, const FLabel& lbl, const EvalOptions& opts);

/// A coefficient in label space: sign * pi^pi_pow * prod Gamma(alpha or
/// 1-alpha) / ... * prod sin(pi beta) / ... multiplying one F-function.
struct AlphaSpec {
  bool one_minus = false;
  std::array<int, 3> idx;
};
struct BetaSpec {
  int m = 0, n = 0;
};
struct RelTerm {
  int sign = 1;
  int pi_pow = 0;
  std::vector<AlphaSpec> gamma_num, gamma_den;
  std::vector<BetaSpec> sin_num, sin_den;
  FLabel f;
};
struct Relation {
  FLabel lhs;
  std::vector<RelTerm> rhs;
};

enum class BaseId { P3, P4, P5, P3A, P4A, P5A };
Relation base_relation(BaseId id);
const char* base_name(BaseId id);

/// Numeric-label permutation: perm[i] is the image of label i.
Relation relabel(const Relation& rel, const std::array<int, 6>& perm);
/// r_i -> -r_i: alpha -> 1-alpha, beta_mn -> beta_nm (so each sin factor
/// flips sign), Fp <-> Fn.
Relation complement(const Relation& rel);

/// lhs - rhs at the frame. Throws AnalyticContinuationRequired when any
/// constituent series diverges.
Scalar residual(const Relation& rel, const Frame& fr, const EvalOptions& opts);
/// Largest constituent magnitude, for scaling residuals.
Scalar relation_scale(const Relation& rel, const Frame& fr, const EvalOptions& opts);

enum class ReplayId { B8FromP5a, B7FromEqY, P3CFromP3 };
/// Replays a derivation by label permutation and returns the worst deviation
/// against the independently transcribed target relation.
Real replay_derivation(ReplayId id, const Frame& fr, const EvalOptions& opts);

}  // namespace hyperid::whipple

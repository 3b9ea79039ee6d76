#pragma once

#include <string>
#include <vector>

#include "hyperid/expr.hpp"
#include "hyperid/series.hpp"

namespace hyperid::transforms {

/// One piece of a decomposition: a closed-form coefficient times a pFq(1).
/// Parameters are expression trees over the bound environment, so the whole
/// decomposition can be re-evaluated at any precision.
struct DecompTerm {
  expr::Ptr coeff;
  std::vector<expr::Ptr> tops;
  std::vector<expr::Ptr> bottoms;
};

struct Decomposition {
  std::string kind;
  expr::Ptr remainder;  // may be null
  std::vector<DecompTerm> terms;
  expr::Env env;  // exact parameter bindings
};

/// Instantiated view of one term at a working precision.
HypParams term_params(const DecompTerm& t, const expr::Env& env, mpfr_prec_t bits);

/// remainder + sum coeff_i * pFq_i(1).
Scalar eval_decomposition(const Decomposition& d, const EvalOptions& opts);

/// Throws GammaPole (naming the argument) when any coefficient gamma sits on
/// a pole; transforms never take limits internally.
void screen_coefficients(const Decomposition& d, long digits);

/// The two 4-part transformations of an arbitrary 4F3(1) and the third one
/// obtained from the argument inversion of the underlying G-function.
/// Input: p with 4 tops (a,b,c,d) and 3 bottoms (e,f,g).
Decomposition miller1(const HypParams& p);
Decomposition miller2(const HypParams& p);
Decomposition gf_imag(const HypParams& p);

enum class ThreePart { Eq1p7b, Shpot3, F32Imag, Miller2b };
/// 2-term decompositions of a general 3F2(a,b,c;e,f;1).
Decomposition three_part(ThreePart kind, const HypParams& p);

enum class Mix { Mix1, Mix2 };
/// Decompositions carrying a superfluous parameter d; the assembled value is
/// independent of d. Mix1 requires sin(pi d) != 0, Mix2 gamma arguments off
/// poles.
Decomposition mix(Mix kind, const HypParams& p, const Scalar& d);

/// Order reduction when a top exceeds a bottom by a non-negative integer n:
/// an (n+1)-term decomposition into lower-order series. Supports 4F3 and 3F2
/// inputs; throws NoIntegerOffset when no (top, bottom) pair qualifies.
Decomposition minton_karlsson(const HypParams& p);

/// Transformation of a terminating 1-balanced 4F3(1); the terminating top -n
/// is detected and the balance f = a+b+c+1-d-e-n checked against the last
/// bottom. Throws NotBalanced.
Decomposition whipple_terminating(const HypParams& p);

/// Closed form of the k-balanced terminating 3F2(a,b,-n; c, k-n+a+b-c; 1)
/// as an evaluable expression with its environment.
struct ClosedEval {
  expr::Ptr form;
  expr::Env env;
};
ClosedEval sheppard_andersen(const Scalar& a, const Scalar& b, const Scalar& c, long n, long k);
/// The special k = 2 closed form.
ClosedEval saalschutz_two_balanced(const Scalar& a, const Scalar& b, const Scalar& c, long n);
/// Closed form of 3F2(1, a, m+b; 2+m, a+b; 1).
ClosedEval andersen(const Scalar& a, const Scalar& b, long m);

/// Both sides of the contiguity relation between 3F2(c,-n,b;a,b+1+m;1) and
/// the bottom-shifted family.
struct Relation {
  Decomposition lhs;
  Decomposition rhs;
};
Relation shpot_contiguity(const Scalar& c, long n, const Scalar& b, const Scalar& a, long m);

/// The finite two-part reduction of 3F2(a,b,c; b+1+m, c+1+n; 1) into two
/// terminating 3F2(1).
Decomposition shpot_finite(const Scalar& a, const Scalar& b, const Scalar& c, long m, long n);

/// One Thomae relative: the source function equals coeff * series.
struct OrbitEntry {
  expr::Ptr coeff;
  std::vector<expr::Ptr> tops;
  std::vector<expr::Ptr> bottoms;
  expr::Env env;
  Classification cls;
  Scalar excess;
};

/// The two-part relatives of a 3F2(1). For the (a,a,b;2a,b+1) shape the four
/// special relatives are returned; otherwise the twenty label-pair
/// representations generated from the frame (the first entry is the identity
/// representation).
std::vector<OrbitEntry> thomae_orbit(const HypParams& p, long digits = 50);

}  // namespace hyperid::transforms

#pragma once

#include <optional>

#include "hyperid/hyp.hpp"

namespace hyperid {

struct EvalStats {
  unsigned long terms = 0;
  unsigned long series = 0;
  void count(unsigned long t) {
    terms += t;
    series += 1;
  }
};

struct EvalOptions {
  long digits = 50;              // working precision P in decimal digits
  unsigned long budget = 400000; // max terms per series evaluation
  long rel_tol_exp = 0;          // target relative tolerance 10^rel_tol_exp; 0 -> 10^-(P+4)
  bool accelerate = true;
  EvalStats* stats = nullptr;

  long tol_exp() const { return rel_tol_exp != 0 ? rel_tol_exp : -(digits + 4); }
  mpfr_prec_t work_bits() const { return bits_for_digits(digits + 25); }
};

struct EvalResult {
  Scalar value;
  Real tail_bound;
  unsigned long terms = 0;
};

/// Evaluates pFq(tops; bottoms; 1). Terminating series are summed exactly;
/// convergent ones by forward recurrence with tail extrapolation keyed to the
/// Gauss-test decay k^(-1-s). Throws DivergentSeries, DomainError (bottom
/// pole), or BudgetExceeded when the tail bound cannot reach the requested
/// tolerance within the term budget.
EvalResult eval_pfq1(const HypParams& p, const EvalOptions& opts = {});

}  // namespace hyperid

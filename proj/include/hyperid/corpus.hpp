#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperid/expr.hpp"
#include "hyperid/series.hpp"

namespace hyperid::corpus {

/// pFq(1) with expression-valued parameters.
struct PfqBody {
  std::vector<expr::Ptr> tops, bottoms;
};

/// Gamma-ratio sum with polygamma weights, expression-valued offsets.
struct SumBody {
  struct G {
    expr::Ptr offset;
    int scale = 1;
    long power = 1;
  };
  struct L {
    expr::Ptr offset;
    long power = 1;
  };
  struct PsiF {
    unsigned order = 0;
    expr::Ptr offset;
    int sign = 1;
  };
  struct Mono {
    expr::Ptr coeff;  // null -> 1
    std::vector<PsiF> psis;
  };
  long start = 0;
  int sign_base = 1;
  std::vector<G> gammas;
  std::vector<L> linears;
  std::vector<Mono> weight;
};

struct Evaluable;

/// Laurent coefficient of a parametric family: the expansion symbol is bound
/// on a shrinking ladder and the requested coefficient extracted.
struct LaurentBody {
  std::string var = "eps";
  int order = 0;
  int lo_order = -2;
  int hi_order = 0;
  long eps_exp = 0;  // 0 -> default ladder
  std::shared_ptr<Evaluable> family;
};

struct EvalTerm {
  expr::Ptr coeff;  // null -> 1
  std::variant<PfqBody, SumBody, LaurentBody, expr::Ptr> body;
};

/// A linear combination of evaluable terms; both identity sides use this.
struct Evaluable {
  std::vector<EvalTerm> terms;
};

enum class Status { ProvedInPaper, Known, Conjectural, IntegerOnly };
const char* status_name(Status s);
std::optional<Status> status_from(const std::string& s);

/// A checkable predicate over the sample parameters.
struct Constraint {
  enum class Op { Less, Greater, NonInteger } op;
  expr::Ptr lhs;
  expr::Ptr rhs;  // null for NonInteger
};

/// One named sample point; values are exact decimal/rational literals (pairs
/// for complex points).
struct Sample {
  std::map<std::string, std::pair<std::string, std::string>> values;  // re, im ("" = 0)
  expr::Env env(mpfr_prec_t bits) const;
  std::string str() const;
};

struct UniformSampling {
  int count = 3;
  std::map<std::string, std::pair<double, double>> real_ranges;
  std::map<std::string, std::pair<long, long>> integer_ranges;
};

struct IdentityPart {
  Evaluable lhs, rhs;
};

struct IdentityRecord {
  std::string id;
  std::string note;
  std::vector<IdentityPart> parts;
  std::vector<Constraint> domain;
  std::vector<Sample> samples;                // fixed sampling
  std::optional<UniformSampling> uniform;     // seeded sampling, appended
  Status status = Status::Known;
  std::vector<std::string> tags;
  long tol_exp = 0;        // 0 -> 10^(10-P) relative; else absolute 10^tol_exp
  unsigned long budget = 0;  // 0 -> config budget
  bool has_tag(const std::string& t) const;
};

struct Corpus {
  std::vector<IdentityRecord> records;
  const IdentityRecord* find(const std::string& id) const;
};

/// Evaluation of one side at a bound sample.
Scalar eval_evaluable(const Evaluable& ev, const expr::Env& env, const EvalOptions& opts);
/// Magnitude of the largest constituent term, for residual scaling.
Real evaluable_scale(const Evaluable& ev, const expr::Env& env, const EvalOptions& opts);

/// The shipped catalog, authored in code; serialized to JSON by the
/// generator tool and loaded back through load_corpus (see
/// docs/corpus-schema.md for the file format).
Corpus builtin_corpus();

/// Loads and validates a corpus file; throws SchemaError with the record id
/// and field path on malformed input (duplicate ids included).
Corpus load_corpus(const std::string& path);
std::string corpus_to_json_text(const Corpus& c);

}  // namespace hyperid::corpus

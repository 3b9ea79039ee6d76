#pragma once

#include <stdexcept>
#include <string>

namespace hyperid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gamma/digamma argument landed on (or within pole tolerance of) a
/// non-positive integer.
struct PoleError : Error {
  long index;  // the pole -index, index >= 0
  explicit PoleError(long idx)
      : Error("pole at non-positive integer -" + std::to_string(idx)), index(idx) {}
};

struct DomainError : Error {
  using Error::Error;
};

struct DivergentSeries : Error {
  using Error::Error;
};

struct NonConvergent : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  std::string partial_value;
  std::string partial_bound;
  BudgetExceeded(std::string msg, std::string value, std::string bound)
      : Error(std::move(msg)), partial_value(std::move(value)), partial_bound(std::move(bound)) {}
};

struct UnstableExtraction : Error {
  using Error::Error;
};

/// A transformation coefficient hit a gamma pole; the caller is expected to
/// approach the point through a limit instead.
struct GammaPole : Error {
  std::string argument;  // textual form of the offending gamma argument
  GammaPole(std::string arg, const std::string& detail)
      : Error("gamma pole in coefficient at " + arg + (detail.empty() ? "" : ": " + detail)),
        argument(std::move(arg)) {}
};

struct SinPole : Error {
  using Error::Error;
};

struct NoIntegerOffset : Error {
  using Error::Error;
};

struct NotBalanced : Error {
  using Error::Error;
};

struct AnalyticContinuationRequired : Error {
  using Error::Error;
};

struct SchemaError : Error {
  std::string record_id;
  std::string field;
  SchemaError(std::string id, std::string fld, const std::string& detail)
      : Error("corpus schema error" + (id.empty() ? "" : " in record '" + id + "'") +
              (fld.empty() ? "" : " at " + fld) + ": " + detail),
        record_id(std::move(id)),
        field(std::move(fld)) {}
};

struct DomainViolation : Error {
  using Error::Error;
};

}  // namespace hyperid

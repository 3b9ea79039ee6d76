#pragma once

#include <cstdint>

#include "hyperid/corpus.hpp"

namespace hyperid::corpus {

struct VerifyConfig {
  long digits = 50;
  unsigned long budget = 400000;
  std::uint64_t seed = 1;
  long tol_exp = 0;  // 0 -> per-record default
  std::vector<std::string> only_ids;   // empty -> all
  std::vector<std::string> only_tags;  // empty -> all
  int jobs = 1;
};

struct SampleOutcome {
  std::string point;
  std::string lhs, rhs;     // rendered values
  std::string abs_diff;     // rendered |lhs-rhs|
  double rel_exp = 0;       // log10 of |lhs-rhs| / scale (0 when exact)
  bool pass = false;
  double agreement_digits = 0;
  unsigned long terms = 0;
  double wall_ms = 0;       // timing; excluded from determinism comparisons
  std::string error;        // non-empty when evaluation failed
};

struct RecordReport {
  std::string id;
  Status status = Status::Known;
  std::vector<SampleOutcome> samples;
  bool pass = true;                 // conjectural records always pass
  double agreement_digits = 0;      // min over samples
};

struct Report {
  std::vector<RecordReport> records;
  long digits = 50;
  std::uint64_t seed = 1;
  int passed = 0;
  int failed = 0;
  int conjectural = 0;
  double wall_ms = 0;
};

RecordReport verify_record(const IdentityRecord& rec, const VerifyConfig& cfg);
/// Record order in the report is the corpus order regardless of --jobs.
Report verify_all(const Corpus& corpus, const VerifyConfig& cfg);

/// JSON rendering; timing fields are emitted only when include_timing.
std::string report_json(const Report& r, bool include_timing);
std::string report_csv(const Report& r);

}  // namespace hyperid::corpus

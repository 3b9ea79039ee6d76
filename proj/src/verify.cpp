#include "hyperid/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"

namespace hyperid::corpus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct SampleGen {
  std::uint64_t state;
  double uniform(double lo, double hi) {
    state = mix64(state);
    double u = static_cast<double>(state >> 11) / 9007199254740992.0;
    double v = lo + (hi - lo) * u;
    return static_cast<double>(static_cast<long long>(v * 1e6)) / 1e6;
  }
  long integer(long lo, long hi) {
    state = mix64(state);
    return lo + static_cast<long>(state % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

bool satisfies_domain(const IdentityRecord& rec, const expr::Env& env, mpfr_prec_t bits) {
  for (const auto& c : rec.domain) {
    Scalar lv = expr::eval(c.lhs, env, bits);
    switch (c.op) {
      case Constraint::Op::Less: {
        Scalar rv = expr::eval(c.rhs, env, bits);
        if (!(lv.re() < rv.re())) return false;
        break;
      }
      case Constraint::Op::Greater: {
        Scalar rv = expr::eval(c.rhs, env, bits);
        if (!(lv.re() > rv.re())) return false;
        break;
      }
      case Constraint::Op::NonInteger: {
        auto [frac, n] = nearest_integer(lv.re());
        (void)n;
        if (!(abs(lv.im()) > pow10(-20, 64)) && abs(frac) <= pow10(-6, 64)) return false;
        break;
      }
    }
  }
  return true;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::vector<Sample> effective_samples(const IdentityRecord& rec, const VerifyConfig& cfg) {
  std::vector<Sample> out = rec.samples;
  if (rec.uniform) {
    std::uint64_t h = cfg.seed;
    for (char ch : rec.id) h = mix64(h ^ static_cast<std::uint64_t>(ch));
    SampleGen gen{h};
    mpfr_prec_t bits = bits_for_digits(30);
    int made = 0, tries = 0;
    while (made < rec.uniform->count && tries < 200 * rec.uniform->count) {
      ++tries;
      Sample s;
      for (const auto& [name, range] : rec.uniform->real_ranges) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.6f", gen.uniform(range.first, range.second));
        s.values[name] = {buf, ""};
      }
      for (const auto& [name, range] : rec.uniform->integer_ranges) {
        s.values[name] = {std::to_string(gen.integer(range.first, range.second)), ""};
      }
      if (!satisfies_domain(rec, s.env(bits), bits)) continue;
      out.push_back(std::move(s));
      ++made;
    }
  }
  return out;
}

}  // namespace

RecordReport verify_record(const IdentityRecord& rec, const VerifyConfig& cfg) {
  RecordReport rr;
  rr.id = rec.id;
  rr.status = rec.status;
  rr.agreement_digits = 1e9;
  const bool conjectural = rec.status == Status::Conjectural;

  EvalOptions opts;
  opts.digits = cfg.digits;
  opts.budget = rec.budget != 0 ? rec.budget : cfg.budget;
  if (rec.tol_exp != 0) {
    opts.rel_tol_exp = std::max(-(cfg.digits + 4), rec.tol_exp - 4);
  }
  EvalStats stats;
  opts.stats = &stats;

  mpfr_prec_t bits = bits_for_digits(cfg.digits + 10);
  // pass tolerance
  long tol_e = cfg.tol_exp != 0 ? cfg.tol_exp : (10 - cfg.digits);
  Real rel_tol = pow10(tol_e, 64);

  for (const auto& sample : effective_samples(rec, cfg)) {
    SampleOutcome so;
    so.point = sample.str();
    auto t0 = Clock::now();
    unsigned long terms_before = stats.terms;
    try {
      expr::Env env = sample.env(bits);
      if (!satisfies_domain(rec, env, bits)) {
        throw DomainViolation("sample outside the record domain: " + so.point);
      }
      Real worst_abs = Real::of_long(0, 64);
      Real worst_rel = Real::of_long(0, 64);
      Scalar first_lhs, first_rhs;
      for (size_t pi = 0; pi < rec.parts.size(); ++pi) {
        Scalar lv = eval_evaluable(rec.parts[pi].lhs, env, opts);
        Scalar rv = eval_evaluable(rec.parts[pi].rhs, env, opts);
        if (pi == 0) {
          first_lhs = lv;
          first_rhs = rv;
        }
        Real diff = abs1(lv - rv);
        Real scale = max(max(abs1(lv), abs1(rv)), Real::of_long(1, 64));
        worst_abs = max(worst_abs, diff.at_prec(64));
        worst_rel = max(worst_rel, (diff / scale).at_prec(64));
      }
      so.lhs = first_lhs.str(cfg.digits);
      so.rhs = first_rhs.str(cfg.digits);
      so.abs_diff = worst_abs.str(4);
      double lg = worst_rel.is_zero() ? -300.0 : std::log10(worst_rel.to_double());
      if (std::isinf(lg) || std::isnan(lg)) lg = -300.0;
      so.rel_exp = lg;
      so.agreement_digits = -lg;
      if (rec.tol_exp != 0) {
        so.pass = worst_abs <= pow10(rec.tol_exp, 64);
      } else {
        so.pass = worst_rel <= rel_tol;
      }
    } catch (const std::exception& e) {
      so.error = e.what();
      so.pass = false;
      so.agreement_digits = 0;
    }
    so.terms = stats.terms - terms_before;
    so.wall_ms = ms_since(t0);
    rr.agreement_digits = std::min(rr.agreement_digits, so.agreement_digits);
    if (!so.pass && !conjectural) rr.pass = false;
    rr.samples.push_back(std::move(so));
  }
  if (rr.samples.empty()) {
    rr.pass = false;
    rr.agreement_digits = 0;
  }
  if (conjectural) rr.pass = true;
  if (rr.agreement_digits > 1e8) rr.agreement_digits = 0;
  return rr;
}

Report verify_all(const Corpus& corpus, const VerifyConfig& cfg) {
  auto t0 = Clock::now();
  std::vector<const IdentityRecord*> selected;
  for (const auto& r : corpus.records) {
    if (!cfg.only_ids.empty()) {
      bool found = false;
      for (const auto& id : cfg.only_ids) found = found || id == r.id;
      if (!found) continue;
    }
    if (!cfg.only_tags.empty()) {
      bool found = false;
      for (const auto& t : cfg.only_tags) found = found || r.has_tag(t);
      if (!found) continue;
    }
    selected.push_back(&r);
  }

  Report rep;
  rep.digits = cfg.digits;
  rep.seed = cfg.seed;
  rep.records.resize(selected.size());

  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < selected.size(); ++i) {
      rep.records[i] = verify_record(*selected[i], cfg);
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= selected.size()) return;
          rep.records[i] = verify_record(*selected[i], cfg);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& rr : rep.records) {
    if (rr.status == Status::Conjectural) {
      ++rep.conjectural;
    } else if (rr.pass) {
      ++rep.passed;
    } else {
      ++rep.failed;
    }
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

std::string report_json(const Report& r, bool include_timing) {
  nlohmann::json j;
  j["digits"] = r.digits;
  j["seed"] = r.seed;
  nlohmann::json summary;
  summary["pass"] = r.passed;
  summary["fail"] = r.failed;
  summary["conjectural"] = r.conjectural;
  nlohmann::json agree = nlohmann::json::object();
  for (const auto& rr : r.records) {
    if (rr.status == Status::Conjectural) agree[rr.id] = fmt_double(rr.agreement_digits);
  }
  summary["conjectural-agreement-digits"] = std::move(agree);
  if (include_timing) summary["wall_ms"] = r.wall_ms;
  j["summary"] = std::move(summary);

  nlohmann::json records = nlohmann::json::array();
  for (const auto& rr : r.records) {
    nlohmann::json rj;
    rj["id"] = rr.id;
    rj["status"] = status_name(rr.status);
    rj["pass"] = rr.pass;
    rj["agreement_digits"] = fmt_double(rr.agreement_digits);
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& so : rr.samples) {
      nlohmann::json sj;
      sj["point"] = so.point;
      sj["pass"] = so.pass;
      if (!so.error.empty()) {
        sj["error"] = so.error;
      } else {
        sj["lhs"] = so.lhs;
        sj["rhs"] = so.rhs;
        sj["abs_diff"] = so.abs_diff;
        sj["agreement_digits"] = fmt_double(so.agreement_digits);
      }
      sj["terms"] = so.terms;
      if (include_timing) sj["wall_ms"] = so.wall_ms;
      samples.push_back(std::move(sj));
    }
    rj["samples"] = std::move(samples);
    records.push_back(std::move(rj));
  }
  j["records"] = std::move(records);
  return j.dump(1);
}

std::string report_csv(const Report& r) {
  std::string out = "id,status,point,pass,agreement_digits,terms,error\n";
  auto quote = [](std::string s) {
    for (auto& c : s) {
      if (c == ',') c = ';';
    }
    return s;
  };
  for (const auto& rr : r.records) {
    for (const auto& so : rr.samples) {
      out += rr.id;
      out += ",";
      out += status_name(rr.status);
      out += ",";
      out += quote(so.point) + ",";
      out += so.pass ? "1," : "0,";
      out += fmt_double(so.agreement_digits) + ",";
      out += std::to_string(so.terms) + ",";
      out += quote(so.error) + "\n";
    }
  }
  return out;
}

}  // namespace hyperid::corpus

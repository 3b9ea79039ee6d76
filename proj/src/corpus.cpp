#include "hyperid/corpus.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

#include "hyperid/errors.hpp"
#include "hyperid/expr_json.hpp"
#include "hyperid/laurent.hpp"
#include "hyperid/special.hpp"
#include "hyperid/sum_spec.hpp"

namespace hyperid::corpus {

using nlohmann::json;

const char* status_name(Status s) {
  switch (s) {
    case Status::ProvedInPaper:
      return "proved-in-paper";
    case Status::Known:
      return "known";
    case Status::Conjectural:
      return "conjectural";
    case Status::IntegerOnly:
      return "integer-only";
  }
  return "?";
}

std::optional<Status> status_from(const std::string& s) {
  if (s == "proved-in-paper") return Status::ProvedInPaper;
  if (s == "known") return Status::Known;
  if (s == "conjectural") return Status::Conjectural;
  if (s == "integer-only") return Status::IntegerOnly;
  return std::nullopt;
}

bool IdentityRecord::has_tag(const std::string& t) const {
  for (const auto& x : tags) {
    if (x == t) return true;
  }
  return false;
}

const IdentityRecord* Corpus::find(const std::string& id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

expr::Env Sample::env(mpfr_prec_t bits) const {
  expr::Env e;
  for (const auto& [name, val] : values) {
    Real re = Real::of_string(val.first, bits);
    if (val.second.empty()) {
      e[name] = Scalar(std::move(re));
    } else {
      e[name] = Scalar(std::move(re), Real::of_string(val.second, bits));
    }
  }
  return e;
}

std::string Sample::str() const {
  std::string out;
  for (const auto& [name, val] : values) {
    if (!out.empty()) out += ", ";
    out += name + "=" + val.first;
    if (!val.second.empty()) out += "+" + val.second + "*I";
  }
  return out;
}

namespace {

SumSpec materialize(const SumBody& sb, const expr::Env& env, mpfr_prec_t bits) {
  SumSpec s;
  s.start = sb.start;
  s.sign_base = sb.sign_base;
  for (const auto& g : sb.gammas) {
    s.gammas.push_back({expr::eval(g.offset, env, bits), g.scale, g.power});
  }
  for (const auto& l : sb.linears) {
    s.linears.push_back({expr::eval(l.offset, env, bits), l.power});
  }
  for (const auto& m : sb.weight) {
    WeightMonomial wm;
    wm.coeff = m.coeff ? expr::eval(m.coeff, env, bits) : Scalar::of_long(1, bits);
    for (const auto& pf : m.psis) {
      wm.psis.push_back({pf.order, expr::eval(pf.offset, env, bits), pf.sign});
    }
    s.weight.push_back(std::move(wm));
  }
  return s;
}

Scalar eval_term_body(const EvalTerm& t, const expr::Env& env, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  if (const auto* pfq = std::get_if<PfqBody>(&t.body)) {
    HypParams p;
    for (const auto& e : pfq->tops) p.tops.push_back(expr::eval(e, env, wb));
    for (const auto& e : pfq->bottoms) p.bottoms.push_back(expr::eval(e, env, wb));
    return eval_pfq1(p, opts).value;
  }
  if (const auto* sb = std::get_if<SumBody>(&t.body)) {
    return eval_sum(materialize(*sb, env, wb), opts).value;
  }
  if (const auto* lb = std::get_if<LaurentBody>(&t.body)) {
    LaurentProbe probe;
    probe.digits = opts.digits;
    probe.lo_order = lb->lo_order;
    probe.hi_order = lb->hi_order;
    probe.eps_exp = lb->eps_exp;
    const Evaluable& family = *lb->family;
    std::string var = lb->var;
    EvalOptions inner = opts;
    probe.family = [&family, &env, var, inner](const Scalar& eps) {
      expr::Env fenv = env;
      fenv[var] = eps;
      EvalOptions o = inner;
      o.digits = digits_for_bits(eps.prec());
      return eval_evaluable(family, fenv, o);
    };
    return laurent_limit(probe).coeff.at(lb->order).at_prec(bits_for_digits(opts.digits));
  }
  return expr::eval(std::get<expr::Ptr>(t.body), env, wb);
}

}  // namespace

Scalar eval_evaluable(const Evaluable& ev, const expr::Env& env, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  Scalar acc(wb);
  for (const auto& t : ev.terms) {
    Scalar c = t.coeff ? expr::eval(t.coeff, env, wb) : Scalar::of_long(1, wb);
    if (c.is_zero()) continue;
    acc += c * eval_term_body(t, env, opts);
  }
  return acc;
}

Real evaluable_scale(const Evaluable& ev, const expr::Env& env, const EvalOptions& opts) {
  mpfr_prec_t wb = opts.work_bits();
  Real scale = Real::of_long(0, wb);
  for (const auto& t : ev.terms) {
    Scalar c = t.coeff ? expr::eval(t.coeff, env, wb) : Scalar::of_long(1, wb);
    if (c.is_zero()) continue;
    scale = max(scale, abs1(c * eval_term_body(t, env, opts)));
  }
  return scale;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

json expr_or_null(const expr::Ptr& e) { return e ? expr::to_json(e) : json(); }

json evaluable_to_json(const Evaluable& ev);

json term_to_json(const EvalTerm& t) {
  json j;
  if (t.coeff) j["coeff"] = expr::to_json(t.coeff);
  if (const auto* pfq = std::get_if<PfqBody>(&t.body)) {
    json p;
    p["tops"] = json::array();
    for (const auto& e : pfq->tops) p["tops"].push_back(expr::to_json(e));
    p["bottoms"] = json::array();
    for (const auto& e : pfq->bottoms) p["bottoms"].push_back(expr::to_json(e));
    j["pfq"] = std::move(p);
  } else if (const auto* sb = std::get_if<SumBody>(&t.body)) {
    json s;
    s["start"] = sb->start;
    s["sign"] = sb->sign_base;
    s["gammas"] = json::array();
    for (const auto& g : sb->gammas) {
      s["gammas"].push_back(
          json{{"offset", expr::to_json(g.offset)}, {"scale", g.scale}, {"power", g.power}});
    }
    s["linears"] = json::array();
    for (const auto& l : sb->linears) {
      s["linears"].push_back(json{{"offset", expr::to_json(l.offset)}, {"power", l.power}});
    }
    s["weight"] = json::array();
    for (const auto& m : sb->weight) {
      json mj;
      if (m.coeff) mj["coeff"] = expr::to_json(m.coeff);
      mj["psis"] = json::array();
      for (const auto& pf : m.psis) {
        mj["psis"].push_back(
            json{{"m", pf.order}, {"offset", expr::to_json(pf.offset)}, {"sign", pf.sign}});
      }
      s["weight"].push_back(std::move(mj));
    }
    j["sum"] = std::move(s);
  } else if (const auto* lb = std::get_if<LaurentBody>(&t.body)) {
    json l;
    l["var"] = lb->var;
    l["order"] = lb->order;
    l["lo"] = lb->lo_order;
    l["hi"] = lb->hi_order;
    if (lb->eps_exp != 0) l["eps_exp"] = lb->eps_exp;
    l["family"] = evaluable_to_json(*lb->family);
    j["laurent"] = std::move(l);
  } else {
    j["expr"] = expr::to_json(std::get<expr::Ptr>(t.body));
  }
  return j;
}

json evaluable_to_json(const Evaluable& ev) {
  json terms = json::array();
  for (const auto& t : ev.terms) terms.push_back(term_to_json(t));
  return json{{"terms", std::move(terms)}};
}

json record_to_json(const IdentityRecord& r) {
  json j;
  j["id"] = r.id;
  j["note"] = r.note;
  j["status"] = status_name(r.status);
  if (!r.tags.empty()) j["tags"] = r.tags;
  if (r.tol_exp != 0) j["tol_exp"] = r.tol_exp;
  if (r.budget != 0) j["budget"] = r.budget;
  json dom = json::array();
  for (const auto& c : r.domain) {
    json cj;
    cj["op"] = c.op == Constraint::Op::Less      ? "lt"
               : c.op == Constraint::Op::Greater ? "gt"
                                                 : "noninteger";
    cj["lhs"] = expr::to_json(c.lhs);
    if (c.rhs) cj["rhs"] = expr::to_json(c.rhs);
    dom.push_back(std::move(cj));
  }
  if (!dom.empty()) j["domain"] = std::move(dom);
  json samples = json::array();
  for (const auto& s : r.samples) {
    json sj;
    for (const auto& [name, val] : s.values) {
      if (val.second.empty()) {
        sj[name] = val.first;
      } else {
        sj[name] = json::array({val.first, val.second});
      }
    }
    samples.push_back(std::move(sj));
  }
  j["samples"] = std::move(samples);
  if (r.uniform) {
    json u;
    u["count"] = r.uniform->count;
    for (const auto& [name, range] : r.uniform->real_ranges) {
      u["real"][name] = json::array({range.first, range.second});
    }
    for (const auto& [name, range] : r.uniform->integer_ranges) {
      u["integer"][name] = json::array({range.first, range.second});
    }
    j["uniform"] = std::move(u);
  }
  json parts = json::array();
  for (const auto& p : r.parts) {
    parts.push_back(json{{"lhs", evaluable_to_json(p.lhs)}, {"rhs", evaluable_to_json(p.rhs)}});
  }
  j["parts"] = std::move(parts);
  return j;
}

// --------------------------- parsing ---------------------------------------

expr::Ptr parse_expr_field(const json& j, const std::string& ctx) {
  return expr::from_json(j, ctx);
}

Evaluable evaluable_from_json(const json& j, const std::string& id, const std::string& ctx);

EvalTerm term_from_json(const json& j, const std::string& id, const std::string& ctx) {
  if (!j.is_object()) throw SchemaError(id, ctx, "term must be an object");
  EvalTerm t;
  if (j.contains("coeff")) t.coeff = parse_expr_field(j["coeff"], ctx + "/coeff");
  int bodies = int(j.contains("pfq")) + int(j.contains("sum")) + int(j.contains("laurent")) +
               int(j.contains("expr"));
  if (bodies != 1) throw SchemaError(id, ctx, "term needs exactly one of pfq/sum/laurent/expr");
  if (j.contains("pfq")) {
    const auto& p = j["pfq"];
    if (!p.is_object() || !p.contains("tops") || !p.contains("bottoms")) {
      throw SchemaError(id, ctx, "pfq needs tops and bottoms");
    }
    PfqBody body;
    for (size_t i = 0; i < p["tops"].size(); ++i) {
      body.tops.push_back(parse_expr_field(p["tops"][i], ctx + "/tops"));
    }
    for (size_t i = 0; i < p["bottoms"].size(); ++i) {
      body.bottoms.push_back(parse_expr_field(p["bottoms"][i], ctx + "/bottoms"));
    }
    if (body.tops.size() != body.bottoms.size() + 1) {
      throw SchemaError(id, ctx, "pfq at unit argument needs one more top than bottoms");
    }
    t.body = std::move(body);
  } else if (j.contains("sum")) {
    const auto& s = j["sum"];
    SumBody body;
    body.start = s.value("start", 0L);
    body.sign_base = s.value("sign", 1);
    if (body.sign_base != 1 && body.sign_base != -1)
      throw SchemaError(id, ctx, "sum sign must be +-1");
    for (const auto& g : s.value("gammas", json::array())) {
      SumBody::G gg;
      gg.offset = parse_expr_field(g.at("offset"), ctx + "/gammas");
      gg.scale = g.value("scale", 1);
      gg.power = g.value("power", 1L);
      if (gg.scale != 1 && gg.scale != -1) throw SchemaError(id, ctx, "gamma scale must be +-1");
      body.gammas.push_back(std::move(gg));
    }
    for (const auto& l : s.value("linears", json::array())) {
      SumBody::L ll;
      ll.offset = parse_expr_field(l.at("offset"), ctx + "/linears");
      ll.power = l.value("power", 1L);
      body.linears.push_back(std::move(ll));
    }
    for (const auto& m : s.value("weight", json::array())) {
      SumBody::Mono mm;
      if (m.contains("coeff")) mm.coeff = parse_expr_field(m["coeff"], ctx + "/weight");
      for (const auto& pf : m.value("psis", json::array())) {
        SumBody::PsiF f;
        f.order = pf.value("m", 0U);
        if (f.order > 3) throw SchemaError(id, ctx, "psi weight order must be <= 3");
        f.offset = parse_expr_field(pf.at("offset"), ctx + "/weight/psis");
        f.sign = pf.value("sign", 1);
        mm.psis.push_back(std::move(f));
      }
      if (mm.psis.size() > 2) throw SchemaError(id, ctx, "weight monomial has more than two psis");
      body.weight.push_back(std::move(mm));
    }
    t.body = std::move(body);
  } else if (j.contains("laurent")) {
    const auto& l = j["laurent"];
    LaurentBody body;
    body.var = l.value("var", std::string("eps"));
    if (!l.contains("order")) throw SchemaError(id, ctx, "laurent needs an order");
    body.order = l["order"].get<int>();
    body.lo_order = l.value("lo", -2);
    body.hi_order = l.value("hi", 0);
    body.eps_exp = l.value("eps_exp", 0L);
    if (body.order < body.lo_order || body.order > body.hi_order) {
      throw SchemaError(id, ctx, "laurent order outside [lo, hi]");
    }
    if (!l.contains("family")) throw SchemaError(id, ctx, "laurent needs a family");
    body.family =
        std::make_shared<Evaluable>(evaluable_from_json(l["family"], id, ctx + "/family"));
    t.body = std::move(body);
  } else {
    t.body = parse_expr_field(j["expr"], ctx + "/expr");
  }
  return t;
}

Evaluable evaluable_from_json(const json& j, const std::string& id, const std::string& ctx) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) {
    throw SchemaError(id, ctx, "evaluable needs a non-empty terms array");
  }
  Evaluable ev;
  for (size_t i = 0; i < j["terms"].size(); ++i) {
    ev.terms.push_back(term_from_json(j["terms"][i], id, ctx + "/terms[" + std::to_string(i) + "]"));
  }
  return ev;
}

void collect_evaluable_symbols(const Evaluable& ev, std::map<std::string, int>& out);

void collect_term_symbols(const EvalTerm& t, std::map<std::string, int>& out) {
  if (t.coeff) expr::collect_symbols(t.coeff, out);
  if (const auto* pfq = std::get_if<PfqBody>(&t.body)) {
    for (const auto& e : pfq->tops) expr::collect_symbols(e, out);
    for (const auto& e : pfq->bottoms) expr::collect_symbols(e, out);
  } else if (const auto* sb = std::get_if<SumBody>(&t.body)) {
    for (const auto& g : sb->gammas) expr::collect_symbols(g.offset, out);
    for (const auto& l : sb->linears) expr::collect_symbols(l.offset, out);
    for (const auto& m : sb->weight) {
      if (m.coeff) expr::collect_symbols(m.coeff, out);
      for (const auto& pf : m.psis) expr::collect_symbols(pf.offset, out);
    }
  } else if (const auto* lb = std::get_if<LaurentBody>(&t.body)) {
    std::map<std::string, int> inner;
    collect_evaluable_symbols(*lb->family, inner);
    inner.erase(lb->var);
    for (const auto& [k, v] : inner) out[k] += v;
  } else {
    expr::collect_symbols(std::get<expr::Ptr>(t.body), out);
  }
}

void collect_evaluable_symbols(const Evaluable& ev, std::map<std::string, int>& out) {
  for (const auto& t : ev.terms) collect_term_symbols(t, out);
}

void validate_record(const IdentityRecord& r) {
  if (r.id.empty()) throw SchemaError("", "id", "record without id");
  if (r.parts.empty()) throw SchemaError(r.id, "parts", "record without identity parts");
  if (r.samples.empty() && !r.uniform) {
    throw SchemaError(r.id, "samples", "record without any sampling strategy");
  }
  // every free symbol must be bound by every sample
  std::map<std::string, int> symbols;
  for (const auto& p : r.parts) {
    collect_evaluable_symbols(p.lhs, symbols);
    collect_evaluable_symbols(p.rhs, symbols);
  }
  for (const auto& c : r.domain) {
    expr::collect_symbols(c.lhs, symbols);
    if (c.rhs) expr::collect_symbols(c.rhs, symbols);
  }
  for (const auto& s : r.samples) {
    for (const auto& [name, cnt] : symbols) {
      (void)cnt;
      if (!s.values.count(name)) {
        throw SchemaError(r.id, "samples", "sample does not bind parameter '" + name + "'");
      }
    }
  }
  if (r.uniform) {
    for (const auto& [name, cnt] : symbols) {
      (void)cnt;
      if (!r.uniform->real_ranges.count(name) && !r.uniform->integer_ranges.count(name)) {
        throw SchemaError(r.id, "uniform", "no range for parameter '" + name + "'");
      }
    }
  }
}

IdentityRecord record_from_json(const json& j) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
    throw SchemaError("", "id", "record needs a string id");
  }
  IdentityRecord r;
  r.id = j["id"].get<std::string>();
  r.note = j.value("note", std::string());
  auto st = status_from(j.value("status", std::string("known")));
  if (!st) throw SchemaError(r.id, "status", "unknown status " + j["status"].dump());
  r.status = *st;
  for (const auto& t : j.value("tags", json::array())) r.tags.push_back(t.get<std::string>());
  r.tol_exp = j.value("tol_exp", 0L);
  r.budget = j.value("budget", 0UL);
  for (const auto& cj : j.value("domain", json::array())) {
    Constraint c;
    std::string op = cj.value("op", std::string());
    if (op == "lt") {
      c.op = Constraint::Op::Less;
    } else if (op == "gt") {
      c.op = Constraint::Op::Greater;
    } else if (op == "noninteger") {
      c.op = Constraint::Op::NonInteger;
    } else {
      throw SchemaError(r.id, "domain", "unknown op " + op);
    }
    c.lhs = parse_expr_field(cj.at("lhs"), r.id + "/domain");
    if (c.op != Constraint::Op::NonInteger) {
      c.rhs = parse_expr_field(cj.at("rhs"), r.id + "/domain");
    }
    r.domain.push_back(std::move(c));
  }
  for (const auto& sj : j.value("samples", json::array())) {
    Sample s;
    for (const auto& [name, v] : sj.items()) {
      if (v.is_string()) {
        s.values[name] = {v.get<std::string>(), ""};
      } else if (v.is_array() && v.size() == 2) {
        s.values[name] = {v[0].get<std::string>(), v[1].get<std::string>()};
      } else {
        throw SchemaError(r.id, "samples", "value must be a string or [re, im]");
      }
    }
    r.samples.push_back(std::move(s));
  }
  if (j.contains("uniform")) {
    UniformSampling u;
    const auto& uj = j["uniform"];
    u.count = uj.value("count", 3);
    for (const auto& [name, v] : uj.value("real", json::object()).items()) {
      u.real_ranges[name] = {v.at(0).get<double>(), v.at(1).get<double>()};
    }
    for (const auto& [name, v] : uj.value("integer", json::object()).items()) {
      u.integer_ranges[name] = {v.at(0).get<long>(), v.at(1).get<long>()};
    }
    r.uniform = std::move(u);
  }
  if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
    throw SchemaError(r.id, "parts", "record needs identity parts");
  }
  for (size_t i = 0; i < j["parts"].size(); ++i) {
    const auto& pj = j["parts"][i];
    std::string ctx = "parts[" + std::to_string(i) + "]";
    if (!pj.contains("lhs") || !pj.contains("rhs")) {
      throw SchemaError(r.id, ctx, "part needs lhs and rhs");
    }
    IdentityPart part;
    part.lhs = evaluable_from_json(pj["lhs"], r.id, ctx + "/lhs");
    part.rhs = evaluable_from_json(pj["rhs"], r.id, ctx + "/rhs");
    r.parts.push_back(std::move(part));
  }
  validate_record(r);
  return r;
}

}  // namespace

std::string corpus_to_json_text(const Corpus& c) {
  json j;
  j["format"] = "hyperid-corpus-v1";
  json records = json::array();
  for (const auto& r : c.records) records.push_back(record_to_json(r));
  j["records"] = std::move(records);
  return j.dump(1);
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", path, "cannot open corpus file");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("", path, std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", std::string()) != "hyperid-corpus-v1") {
    throw SchemaError("", path, "missing or unsupported format marker");
  }
  Corpus c;
  std::set<std::string> seen;
  for (const auto& rj : j.value("records", json::array())) {
    IdentityRecord r = record_from_json(rj);
    if (!seen.insert(r.id).second) {
      throw SchemaError(r.id, "id", "duplicate record id");
    }
    c.records.push_back(std::move(r));
  }
  if (c.records.empty()) throw SchemaError("", path, "corpus has no records");
  return c;
}

}  // namespace hyperid::corpus

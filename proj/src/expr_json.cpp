#include "hyperid/expr_json.hpp"

#include "hyperid/errors.hpp"

namespace hyperid::expr {

using nlohmann::json;

json to_json(const Ptr& e) {
  json j;
  switch (e->kind) {
    case Kind::Number:
      j["k"] = "num";
      j["v"] = e->num.get_str();
      return j;
    case Kind::Symbol:
      j["k"] = "sym";
      j["v"] = e->name;
      return j;
    case Kind::Constant:
      j["k"] = "const";
      j["v"] = e->name;
      return j;
    case Kind::Add:
      j["k"] = "add";
      break;
    case Kind::Mul:
      j["k"] = "mul";
      break;
    case Kind::Div:
      j["k"] = "div";
      break;
    case Kind::Neg:
      j["k"] = "neg";
      break;
    case Kind::Pow:
      j["k"] = "pow";
      break;
    case Kind::Call:
      j["k"] = "call";
      j["f"] = e->name;
      if (e->name == "psi") j["m"] = e->order;
      break;
    case Kind::Sum:
      j["k"] = "sum";
      j["var"] = e->name;
      break;
  }
  json args = json::array();
  for (const auto& a : e->args) args.push_back(to_json(a));
  j["a"] = std::move(args);
  return j;
}

Ptr from_json(const json& j, const std::string& context) {
  auto bad = [&](const std::string& msg) -> SchemaError {
    return SchemaError("", context, msg);
  };
  if (j.is_string()) {
    // convenience leaf: an expression string in the mini-language
    try {
      return parse(j.get<std::string>());
    } catch (const std::exception& ex) {
      throw bad(ex.what());
    }
  }
  if (!j.is_object() || !j.contains("k") || !j["k"].is_string()) {
    throw bad("expression node must be a tagged object");
  }
  std::string k = j["k"].get<std::string>();
  auto get_args = [&](size_t lo, size_t hi) {
    if (!j.contains("a") || !j["a"].is_array()) throw bad("missing args array in '" + k + "'");
    const auto& a = j["a"];
    if (a.size() < lo || a.size() > hi) {
      throw bad("node '" + k + "' expects " + std::to_string(lo) +
                (hi == lo ? "" : ".." + std::to_string(hi)) + " args, got " +
                std::to_string(a.size()));
    }
    std::vector<Ptr> out;
    for (size_t i = 0; i < a.size(); ++i) {
      out.push_back(from_json(a[i], context + "/a[" + std::to_string(i) + "]"));
    }
    return out;
  };

  if (k == "num") {
    if (!j.contains("v") || !j["v"].is_string()) throw bad("num node needs string v");
    try {
      mpq_class q(j["v"].get<std::string>(), 10);
      q.canonicalize();
      return number(q);
    } catch (const std::exception&) {
      throw bad("bad rational literal: " + j["v"].dump());
    }
  }
  if (k == "sym") {
    if (!j.contains("v") || !j["v"].is_string()) throw bad("sym node needs string v");
    return symbol(j["v"].get<std::string>());
  }
  if (k == "const") {
    if (!j.contains("v") || !j["v"].is_string()) throw bad("const node needs string v");
    std::string c = j["v"].get<std::string>();
    if (c != "pi" && c != "euler" && c != "zeta3" && c != "zeta5") {
      throw bad("unknown constant: " + c);
    }
    return constant(c);
  }
  if (k == "add") return add(get_args(1, 64));
  if (k == "mul") return mul(get_args(1, 64));
  if (k == "div") {
    auto a = get_args(2, 2);
    return div(a[0], a[1]);
  }
  if (k == "neg") return neg(get_args(1, 1)[0]);
  if (k == "pow") {
    auto a = get_args(2, 2);
    return pow(a[0], a[1]);
  }
  if (k == "call") {
    if (!j.contains("f") || !j["f"].is_string()) throw bad("call node needs function name f");
    std::string f = j["f"].get<std::string>();
    auto a = get_args(1, 1);
    if (f == "psi") {
      unsigned m = 0;
      if (j.contains("m")) {
        if (!j["m"].is_number_unsigned() || j["m"].get<unsigned>() > 8) {
          throw bad("psi order out of range");
        }
        m = j["m"].get<unsigned>();
      }
      return psi(m, a[0]);
    }
    static const char* fns[] = {"gamma", "lngamma", "sinpi", "cospi", "cotpi", "expipi", "sqrt"};
    for (const char* fn : fns) {
      if (f == fn) return call(f, a[0]);
    }
    throw bad("unknown node kind: call " + f);
  }
  if (k == "sum") {
    if (!j.contains("var") || !j["var"].is_string()) throw bad("sum node needs var");
    auto a = get_args(3, 3);
    return finite_sum(j["var"].get<std::string>(), a[0], a[1], a[2]);
  }
  throw bad("unknown node kind: " + k);
}

}  // namespace hyperid::expr

#include "hyperid/expr.hpp"

#include <set>

#include "hyperid/constants.hpp"
#include "hyperid/errors.hpp"
#include "hyperid/special.hpp"

namespace hyperid::expr {

namespace {

Ptr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

Ptr number(long n) { return number(mpq_class(n)); }

Ptr number(const mpq_class& q) {
  Node n;
  n.kind = Kind::Number;
  n.num = q;
  return make(std::move(n));
}

Ptr rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return number(q);
}

Ptr symbol(const std::string& name) {
  Node n;
  n.kind = Kind::Symbol;
  n.name = name;
  return make(std::move(n));
}

Ptr constant(const std::string& name) {
  Node n;
  n.kind = Kind::Constant;
  n.name = name;
  return make(std::move(n));
}

Ptr add(std::vector<Ptr> terms) {
  if (terms.size() == 1) return terms[0];
  Node n;
  n.kind = Kind::Add;
  n.args = std::move(terms);
  return make(std::move(n));
}

Ptr mul(std::vector<Ptr> factors) {
  if (factors.size() == 1) return factors[0];
  Node n;
  n.kind = Kind::Mul;
  n.args = std::move(factors);
  return make(std::move(n));
}

Ptr div(Ptr a, Ptr b) {
  Node n;
  n.kind = Kind::Div;
  n.args = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Ptr neg(Ptr a) {
  Node n;
  n.kind = Kind::Neg;
  n.args = {std::move(a)};
  return make(std::move(n));
}

Ptr pow(Ptr base, Ptr exponent) {
  Node n;
  n.kind = Kind::Pow;
  n.args = {std::move(base), std::move(exponent)};
  return make(std::move(n));
}

Ptr call(const std::string& fn, Ptr arg) {
  Node n;
  n.kind = Kind::Call;
  n.name = fn;
  n.args = {std::move(arg)};
  return make(std::move(n));
}

Ptr psi(unsigned order, Ptr arg) {
  Node n;
  n.kind = Kind::Call;
  n.name = "psi";
  n.order = order;
  n.args = {std::move(arg)};
  return make(std::move(n));
}

Ptr finite_sum(const std::string& var, Ptr lo, Ptr hi, Ptr body) {
  Node n;
  n.kind = Kind::Sum;
  n.name = var;
  n.args = {std::move(lo), std::move(hi), std::move(body)};
  return make(std::move(n));
}

namespace {

long eval_integer(const Ptr& e, const Env& env, mpfr_prec_t bits, const char* what) {
  Scalar v = eval(e, env, bits);
  if (!(abs(v.im()) <= pole_tolerance(bits))) throw DomainError(std::string(what) + " is not real");
  auto [frac, n] = nearest_integer(v.re());
  if (!(abs(frac) <= pole_tolerance(bits))) {
    throw DomainError(std::string(what) + " does not bind to an integer: " + v.str(8));
  }
  return n;
}

}  // namespace

Scalar eval(const Ptr& e, const Env& env, mpfr_prec_t bits) {
  switch (e->kind) {
    case Kind::Number: {
      Real r(bits);
      mpfr_set_q(r.raw(), e->num.get_mpq_t(), MPFR_RNDN);
      return Scalar(std::move(r));
    }
    case Kind::Symbol: {
      auto it = env.find(e->name);
      if (it == env.end()) throw DomainError("unbound parameter: " + e->name);
      return it->second.at_prec(bits);
    }
    case Kind::Constant: {
      if (e->name == "pi") return Scalar(constants::pi(bits));
      if (e->name == "euler") return Scalar(constants::euler_gamma(bits));
      if (e->name == "zeta3") return Scalar(constants::zeta(3, bits));
      if (e->name == "zeta5") return Scalar(constants::zeta(5, bits));
      throw DomainError("unknown constant: " + e->name);
    }
    case Kind::Add: {
      Scalar acc(bits);
      for (const auto& a : e->args) acc += eval(a, env, bits);
      return acc;
    }
    case Kind::Mul: {
      Scalar acc = Scalar::of_long(1, bits);
      for (const auto& a : e->args) acc *= eval(a, env, bits);
      return acc;
    }
    case Kind::Div:
      return eval(e->args[0], env, bits) / eval(e->args[1], env, bits);
    case Kind::Neg:
      return -eval(e->args[0], env, bits);
    case Kind::Pow:
      return pow(eval(e->args[0], env, bits), eval(e->args[1], env, bits));
    case Kind::Call: {
      Scalar x = eval(e->args[0], env, bits);
      if (e->name == "gamma") return gamma(x);
      if (e->name == "lngamma") return ln_gamma(x);
      if (e->name == "psi") return polygamma(e->order, x);
      if (e->name == "sinpi") return sin_pi(x);
      if (e->name == "cospi") return cos_pi(x);
      if (e->name == "cotpi") return cot_pi(x);
      if (e->name == "expipi") return exp_i_pi(x);
      if (e->name == "sqrt") return sqrt(x);
      throw DomainError("unknown function: " + e->name);
    }
    case Kind::Sum: {
      long lo = eval_integer(e->args[0], env, bits, "sum lower bound");
      long hi = eval_integer(e->args[1], env, bits, "sum upper bound");
      Scalar acc(bits);
      if (hi < lo) return acc;  // empty sum
      Env inner = env;
      for (long j = lo; j <= hi; ++j) {
        inner[e->name] = Scalar::of_long(j, bits);
        acc += eval(e->args[2], inner, bits);
      }
      return acc;
    }
  }
  throw DomainError("corrupt expression node");
}

void check_poles(const Ptr& e, const Env& env, mpfr_prec_t bits) {
  if (e->kind == Kind::Call &&
      (e->name == "gamma" || e->name == "lngamma" || e->name == "psi")) {
    Scalar x = eval(e->args[0], env, bits);
    long n = 0;
    if (near_nonpositive_integer(x, pole_tolerance(bits), &n)) {
      throw GammaPole(to_string(e->args[0]), "argument " + x.str(8));
    }
  }
  if (e->kind == Kind::Sum) return;  // bound variable; checked during eval
  for (const auto& a : e->args) check_poles(a, env, bits);
}

void collect_symbols(const Ptr& e, std::map<std::string, int>& out) {
  if (e->kind == Kind::Symbol) {
    ++out[e->name];
    return;
  }
  if (e->kind == Kind::Sum) {
    std::map<std::string, int> inner;
    for (const auto& a : e->args) collect_symbols(a, inner);
    inner.erase(e->name);
    for (auto& [k, v] : inner) out[k] += v;
    return;
  }
  for (const auto& a : e->args) collect_symbols(a, out);
}

namespace {

int precedence_of(const Ptr& e) {
  switch (e->kind) {
    case Kind::Add:
      return 1;
    case Kind::Neg:
      return 2;
    case Kind::Mul:
    case Kind::Div:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Ptr& e, int parent_prec, std::string& out) {
  int prec = precedence_of(e);
  bool paren = prec < parent_prec;
  if (paren) out += '(';
  switch (e->kind) {
    case Kind::Number: {
      if (e->num < 0) {
        // negative literals print through Neg-style parentheses when needed
        out += e->num.get_str();
      } else {
        out += e->num.get_str();
      }
      break;
    }
    case Kind::Symbol:
      out += e->name;
      break;
    case Kind::Constant:
      out += e->name;
      break;
    case Kind::Add:
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += " + ";
        print(e->args[i], prec, out);
      }
      break;
    case Kind::Mul:
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) out += '*';
        print(e->args[i], prec + 1, out);
      }
      break;
    case Kind::Div:
      print(e->args[0], prec, out);
      out += '/';
      print(e->args[1], prec + 1, out);
      break;
    case Kind::Neg:
      out += '-';
      print(e->args[0], prec + 1, out);
      break;
    case Kind::Pow:
      print(e->args[0], prec + 1, out);
      out += '^';
      print(e->args[1], prec, out);
      break;
    case Kind::Call:
      if (e->name == "psi" && e->order > 0) {
        out += "psi(" + std::to_string(e->order) + ", ";
        print(e->args[0], 0, out);
        out += ')';
      } else {
        out += e->name + "(";
        print(e->args[0], 0, out);
        out += ')';
      }
      break;
    case Kind::Sum:
      out += "sum(" + e->name + ", ";
      print(e->args[0], 0, out);
      out += ", ";
      print(e->args[1], 0, out);
      out += ", ";
      print(e->args[2], 0, out);
      out += ')';
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string to_string(const Ptr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

}  // namespace hyperid::expr

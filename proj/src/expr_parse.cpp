#include <cctype>
#include <stdexcept>

#include "hyperid/errors.hpp"
#include "hyperid/expr.hpp"

namespace hyperid::expr {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw DomainError("expression parse error at offset " + std::to_string(i) + ": " + msg +
                      " in \"" + s + "\"");
  }

  Ptr parse_expr() {
    Ptr lhs = parse_term();
    std::vector<Ptr> terms{lhs};
    while (true) {
      if (eat('+')) {
        terms.push_back(parse_term());
      } else if (eat('-')) {
        terms.push_back(neg(parse_term()));
      } else {
        break;
      }
    }
    return add(std::move(terms));
  }

  Ptr parse_term() {
    Ptr acc = parse_unary();
    while (true) {
      if (eat('*')) {
        Ptr rhs = parse_unary();
        acc = mul({acc, rhs});
      } else if (eat('/')) {
        Ptr rhs = parse_unary();
        acc = div(acc, rhs);
      } else {
        break;
      }
    }
    return acc;
  }

  Ptr parse_unary() {
    if (eat('-')) return neg(parse_unary());
    return parse_power();
  }

  Ptr parse_power() {
    Ptr base = parse_primary();
    if (eat('^')) {
      Ptr ex = parse_unary();
      return pow(std::move(base), std::move(ex));
    }
    return base;
  }

  Ptr parse_primary() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (c == '(') {
      ++i;
      Ptr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Ptr parse_number() {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string intpart = s.substr(start, i - start);
    if (i < s.size() && s[i] == '.') {
      ++i;
      size_t fs = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string frac = s.substr(fs, i - fs);
      if (frac.empty()) fail("digits expected after decimal point");
      mpz_class den(10);
      mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), frac.size());
      mpq_class q(mpz_class(intpart + frac, 10), den);  // explicit base: no octal
      q.canonicalize();
      return number(q);
    }
    return number(mpq_class(mpz_class(intpart, 10)));
  }

  Ptr parse_ident() {
    size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      ++i;
    }
    std::string name = s.substr(start, i - start);
    if (name == "pi" || name == "euler" || name == "zeta3" || name == "zeta5") {
      return constant(name);
    }
    skip();
    if (i < s.size() && s[i] == '(') {
      ++i;
      if (name == "sum") {
        skip();
        size_t vs = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
          ++i;
        }
        std::string var = s.substr(vs, i - vs);
        if (var.empty()) fail("sum needs a loop variable");
        if (!eat(',')) fail("expected ',' after sum variable");
        Ptr lo = parse_expr();
        if (!eat(',')) fail("expected ',' after sum lower bound");
        Ptr hi = parse_expr();
        if (!eat(',')) fail("expected ',' after sum upper bound");
        Ptr body = parse_expr();
        if (!eat(')')) fail("expected ')' closing sum");
        return finite_sum(var, std::move(lo), std::move(hi), std::move(body));
      }
      if (name == "psi") {
        Ptr first = parse_expr();
        if (eat(',')) {
          // psi(m, x)
          if (first->kind != Kind::Number || first->num.get_den() != 1) {
            fail("psi order must be a small integer");
          }
          long m = first->num.get_num().get_si();
          if (m < 0 || m > 8) fail("psi order out of range");
          Ptr arg = parse_expr();
          if (!eat(')')) fail("expected ')'");
          return psi(static_cast<unsigned>(m), std::move(arg));
        }
        if (!eat(')')) fail("expected ')'");
        return psi(0, std::move(first));
      }
      static const char* fns[] = {"gamma", "lngamma", "sinpi", "cospi",
                                  "cotpi", "expipi", "sqrt"};
      bool known = false;
      for (const char* f : fns) known = known || name == f;
      if (!known) fail("unknown function: " + name);
      Ptr arg = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return call(name, std::move(arg));
    }
    return symbol(name);
  }
};

}  // namespace

Ptr parse(const std::string& text) {
  Parser p(text);
  Ptr e = p.parse_expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return e;
}

}  // namespace hyperid::expr

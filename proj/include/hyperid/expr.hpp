#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hyperid/scalar.hpp"

namespace hyperid::expr {

enum class Kind { Number, Symbol, Constant, Add, Mul, Div, Neg, Pow, Call, Sum };

struct Node;
using Ptr = std::shared_ptr<const Node>;

/// Expression tree over { rationals, named parameters, pi, euler, zeta3,
/// zeta5, + - * / ^, gamma, lngamma, psi^(m) (m <= 3), sinpi, cospi, cotpi,
/// expipi, finite indexed sums }. Trees are immutable and shareable; they are
/// evaluated against a parameter environment at any requested precision.
struct Node {
  Kind kind;
  mpq_class num;          // Number payload
  std::string name;       // Symbol/Constant name, Call function, Sum loop var
  unsigned order = 0;     // psi order
  std::vector<Ptr> args;  // children; Sum children are {lo, hi, body}
};

using Env = std::map<std::string, Scalar, std::less<>>;

Ptr number(long n);
Ptr number(const mpq_class& q);
Ptr rational(long num, long den);
Ptr symbol(const std::string& name);
Ptr constant(const std::string& name);  // pi | euler | zeta3 | zeta5
Ptr add(std::vector<Ptr> terms);
Ptr mul(std::vector<Ptr> factors);
Ptr div(Ptr a, Ptr b);
Ptr neg(Ptr a);
Ptr pow(Ptr base, Ptr exponent);
Ptr call(const std::string& fn, Ptr arg);
Ptr psi(unsigned order, Ptr arg);
Ptr finite_sum(const std::string& var, Ptr lo, Ptr hi, Ptr body);

/// Evaluates at the given bit precision. Unknown symbols and non-integer sum
/// bounds raise DomainError; gamma/psi poles raise PoleError.
Scalar eval(const Ptr& e, const Env& env, mpfr_prec_t bits);

/// Walks the tree and throws GammaPole naming the offending argument when a
/// gamma/lngamma/psi argument lies within pole tolerance of a non-positive
/// integer.
void check_poles(const Ptr& e, const Env& env, mpfr_prec_t bits);

/// Mini-language used by the corpus sources and the CLI, e.g.
///   "2*(euler+psi(n))^2/(n*(n-1))"  or  "sum(j,0,n-1, (-1)^j/gamma(j+1))".
Ptr parse(const std::string& text);
std::string to_string(const Ptr& e);

/// Free parameter names (symbols minus bound sum variables).
void collect_symbols(const Ptr& e, std::map<std::string, int>& out);

}  // namespace hyperid::expr

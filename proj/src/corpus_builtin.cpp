#include <initializer_list>

#include "hyperid/corpus.hpp"

// The shipped identity catalog. Each record carries two independently
// evaluable sides; sums are stated in the engine's gamma/linear/polygamma
// normal form, closed forms in the expression mini-language. The generator
// tool serializes this table to data/corpus.json.

namespace hyperid::corpus {

namespace {

using expr::parse;
using expr::Ptr;

EvalTerm pfq(const char* coeff, std::initializer_list<const char*> tops,
             std::initializer_list<const char*> bots) {
  EvalTerm t;
  if (coeff && coeff[0] && std::string(coeff) != "1") t.coeff = parse(coeff);
  PfqBody b;
  for (const char* s : tops) b.tops.push_back(parse(s));
  for (const char* s : bots) b.bottoms.push_back(parse(s));
  t.body = std::move(b);
  return t;
}

EvalTerm closed(const char* e) {
  EvalTerm t;
  t.body = parse(e);
  return t;
}

EvalTerm sumt(const char* coeff, SumBody sb) {
  EvalTerm t;
  if (coeff && coeff[0] && std::string(coeff) != "1") t.coeff = parse(coeff);
  t.body = std::move(sb);
  return t;
}

EvalTerm laur(const char* coeff, LaurentBody lb) {
  EvalTerm t;
  if (coeff && coeff[0] && std::string(coeff) != "1") t.coeff = parse(coeff);
  t.body = std::move(lb);
  return t;
}

Evaluable E(std::vector<EvalTerm> ts) {
  Evaluable ev;
  ev.terms = std::move(ts);
  return ev;
}

SumBody::G G(const char* off, long pow = 1, int scale = 1) { return {parse(off), scale, pow}; }
SumBody::L L(const char* off, long pow) { return {parse(off), pow}; }
SumBody::Mono W(const char* coeff) { return {parse(coeff), {}}; }
SumBody::Mono W1(const char* coeff, unsigned m, const char* off, int sign = 1) {
  return {parse(coeff), {{m, parse(off), sign}}};
}
SumBody::Mono W2(const char* coeff, unsigned m1, const char* o1, int s1, unsigned m2,
                 const char* o2, int s2) {
  return {parse(coeff), {{m1, parse(o1), s1}, {m2, parse(o2), s2}}};
}

SumBody SB(long start, int sign, std::vector<SumBody::G> gs, std::vector<SumBody::L> ls,
           std::vector<SumBody::Mono> ws) {
  SumBody b;
  b.start = start;
  b.sign_base = sign;
  b.gammas = std::move(gs);
  b.linears = std::move(ls);
  b.weight = std::move(ws);
  return b;
}

// "a=0.3 b=1/2 z=2:1/3" -> sample; "re:im" marks a complex value
Sample S(const std::string& spec) {
  Sample s;
  size_t i = 0;
  while (i < spec.size()) {
    while (i < spec.size() && spec[i] == ' ') ++i;
    size_t eq = spec.find('=', i);
    if (eq == std::string::npos) break;
    size_t end = spec.find(' ', eq);
    if (end == std::string::npos) end = spec.size();
    std::string name = spec.substr(i, eq - i);
    std::string val = spec.substr(eq + 1, end - eq - 1);
    size_t colon = val.find(':');
    if (colon == std::string::npos) {
      s.values[name] = {val, ""};
    } else {
      s.values[name] = {val.substr(0, colon), val.substr(colon + 1)};
    }
    i = end;
  }
  return s;
}

Constraint lt(const char* l, const char* r) {
  return {Constraint::Op::Less, parse(l), parse(r)};
}
Constraint gt(const char* l, const char* r) {
  return {Constraint::Op::Greater, parse(l), parse(r)};
}
Constraint nonint(const char* l) { return {Constraint::Op::NonInteger, parse(l), nullptr}; }

struct Reg {
  Corpus& c;

  IdentityRecord& add(const char* id, const char* note, Status st = Status::ProvedInPaper) {
    IdentityRecord r;
    r.id = id;
    r.note = note;
    r.status = st;
    c.records.push_back(std::move(r));
    return c.records.back();
  }
};

// S1(a), S2(a,b), S4(a): the three digamma-weighted gamma-ratio sums used by
// several records
SumBody s1_sum() {
  return SB(1, 1, {G("1-a"), G("a"), G("0", -2)}, {L("0", -3)},
            {W1("1", 0, "1-a"), W1("1", 0, "a"), W1("-2", 0, "0")});
}
SumBody s2_sum() {
  return SB(0, 1, {G("1-a"), G("a"), G("1", -2)}, {L("a-b", -1)},
            {W1("1", 0, "1-a"), W1("1", 0, "a"), W1("-2", 0, "1")});
}
SumBody s4_sum() {
  return SB(1, 1, {G("1-a"), G("a"), G("0", -2)}, {L("0", -4)},
            {W1("1", 0, "1-a"), W1("1", 0, "a"), W1("-2", 0, "0")});
}

void section_functional(Reg& reg) {
  {
    // first reduction step of the 4-part transformation at e=2a, f=g=a+1
    auto& r = reg.add("MStep1", "reduction of 4F3(a,b,c,d;2a,1+a,1+a;1) into two relatives");
    const char* pref = "gamma(1-d)*gamma(2*a+1)*gamma(1+a)";
    r.parts.push_back(
        {E({pfq("1", {"a", "b", "c", "d"}, {"2*a", "1+a", "1+a"})}),
         E({pfq(("" + std::string(pref) +
                 "*gamma(c-b)/(2*gamma(1+a-b)*gamma(c)*gamma(2*a-b)*(a-b)*gamma(1+b-d))")
                    .c_str(),
                {"b", "b-a", "b-a", "1+b-2*a"}, {"1+b-d", "1+b-a", "1+b-c"}),
            pfq((std::string(pref) +
                 "*gamma(b-c)/(2*gamma(a-c+1)*(a-c)*gamma(2*a-c)*gamma(1+c-d)*gamma(b))")
                    .c_str(),
                {"c", "c-a", "c-a", "1+c-2*a"}, {"1+c-d", "1+c-a", "1+c-b"}),
            closed((std::string(pref) + "*gamma(b-a)*gamma(c-a)/(2*gamma(c)*gamma(1+a-d)*gamma(b))")
                       .c_str())})});
    r.samples = {S("a=0.41 b=0.23 c=0.67 d=0.11"), S("a=0.35 b=0.52 c=0.81 d=0.22"),
                 S("a=0.57 b=0.29 c=0.44 d=0.19"), S("a=0.41 b=0.23:0.1 c=0.67 d=0.11")};
  }
  {
    // b = d specialization: two infinite digamma-free sums plus a remainder
    auto& r = reg.add("MStep2", "two-sum form of 4F3(a,c,d,d;2a,1+a,1+a;1)");
    const char* pref = "gamma(1+a)*gamma(2*a+1)*gamma(1-d)/(gamma(c)*gamma(d))";
    r.parts.push_back(
        {E({pfq("1", {"a", "c", "d", "d"}, {"2*a", "1+a", "1+a"})}),
         E({sumt((std::string(pref) +
                  "*sinpi(c-a)*sinpi(2*a-c)/(2*pi*sinpi(d-c))")
                     .c_str(),
                 SB(0, 1, {G("1+c-2*a"), G("c-a"), G("c"), G("1+c-d", -2), G("1", -1)},
                    {L("c-a", -1)}, {W("-1")})),
            sumt((std::string(pref) + "*sinpi(a-d)*sinpi(2*a-d)/(2*pi*sinpi(d-c))").c_str(),
                 SB(0, 1, {G("1+d-2*a"), G("d-a"), G("d"), G("1", -2), G("1-c+d", -1)},
                    {L("d-a", -1)}, {W("-1")})),
            closed(
                (std::string(pref) + "*gamma(d-a)*gamma(c-a)/(2*gamma(1+a-d))").c_str())})});
    r.domain = {lt("c-3*a+2*d", "2")};
    r.samples = {S("a=0.41 c=0.67 d=0.11"), S("a=0.52 c=0.44 d=0.19"),
                 S("a=0.35 c=0.81 d=0.22")};
  }
  {
    // c -> d limit: the S(k)-weighted representation
    auto& r = reg.add("Mstep3", "digamma-weighted form of 4F3(a,d,d,d;2a,1+a,1+a;1)");
    std::vector<SumBody::G> base = {G("d"), G("d-a"), G("1+d-2*a"), G("1", -3)};
    r.parts.push_back(
        {E({pfq("2*pi^2*gamma(d)^2/(gamma(1+a)*gamma(1-d)*gamma(2*a+1))",
                {"a", "d", "d", "d"}, {"2*a", "1+a", "1+a"})}),
         E({sumt("-pi*sinpi(3*a-2*d)", SB(0, 1, base, {L("d-a", -1)}, {W("-1")})),
            sumt("sinpi(2*a-d)*sinpi(a-d)*2", SB(0, 1, base, {L("d-a", -2)}, {W("1")})),
            sumt("sinpi(2*a-d)*sinpi(a-d)",
                 SB(0, 1, base, {L("d-a", -1)},
                    {W1("-1", 0, "1+d-2*a"), W1("-1", 0, "1+d-a"), W1("-1", 0, "d"),
                     W1("3", 0, "1")})),
            closed("pi^4/(sinpi(a-d)^2*gamma(1+a-d)^3)")})});
    r.domain = {lt("d-a", "1/3")};
    r.samples = {S("a=0.41 d=0.11"), S("a=0.52 d=0.17"), S("a=0.35 d=0.22")};
  }
  {
    auto& r = reg.add("Miller1Final", "h(a)/a^2 via the unit-parameter 5F4 and (euler+psi(a))^2");
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("a*pi*(1-a)*gamma(2*a)/(gamma(a)^2*sinpi(a))",
                {"1", "1", "1", "1+a", "2-a"}, {"2", "2", "2", "2"}),
            closed("2*pi*(euler+psi(a))^2*gamma(2*a)/(gamma(a)^2*sinpi(a))")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7"), S("a=0.6:0.2")};
  }
  {
    auto& r = reg.add("Heq", "contiguity between the two unit-parameter 5F4 relatives");
    r.parts.push_back({E({pfq("1", {"1", "1", "a+1", "1-a"}, {"2", "2", "2"})}),
                       E({pfq("a", {"1", "1", "1", "1+a", "1-a"}, {"2", "2", "2", "2"}),
                          pfq("-(a-1)", {"1", "1", "1", "1+a", "2-a"}, {"2", "2", "2", "2"})})});
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=1.6"), S("a=0.4:0.3")};
  }
  {
    auto& r = reg.add("Miller2Final", "functional equation between h(a) and h(1-a)");
    r.tags = {"functional-equation"};
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("gamma(2*a)*gamma(1-a)^2/((1-a)^2*gamma(2-2*a)*gamma(a)^2)",
                {"1-a", "1-a", "1-a", "1-a"}, {"2-2*a", "2-a", "2-a"}),
            closed("-4*pi^2*gamma(2*a)*cospi(a)*(euler+psi(a)+pi*cotpi(a)/2)/"
                   "(sinpi(a)^2*gamma(a)^2)")})});
    r.domain = {gt("a", "0"), lt("a", "1"), nonint("2*a")};
    r.samples = {S("a=0.25"), S("a=0.35"), S("a=0.42")};
  }
}

void section_evolution(Reg& reg) {
  {
    auto& r = reg.add("3F2-def", "series form of 3F2(a,a,b;2a,b+1;1)", Status::Known);
    r.parts.push_back({E({pfq("1", {"a", "a", "b"}, {"2*a", "b+1"})}),
                       E({sumt("b*gamma(2*a)/gamma(a)^2",
                               SB(0, 1, {G("a", 2), G("1", -1), G("2*a", -1)}, {L("b", -1)}, {}))})});
    r.samples = {S("a=0.7 b=0.4"), S("a=0.3 b=0.9"), S("a=1.2 b=0.5"), S("a=0.6:0.2 b=0.4")};
  }
  {
    auto& r = reg.add("Heq1", "h(a) from the b-derivative rule at b=a");
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("1", {"a", "a", "a"}, {"2*a", "a+1"}),
            pfq("-a^2/(2*(a+1)^2)", {"a+1", "a+1", "a+1", "a+1"}, {"a+2", "a+2", "2*a+1"})})});
    r.samples = {S("a=0.5"), S("a=0.3"), S("a=1.4"), S("a=0.5:0.3")};
  }
  {
    auto& r = reg.add("Entry", "Watson-contiguous closed form of 3F2(a,a,a;2a,a+1;1)",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "a"}, {"2*a", "a+1"})}),
         E({closed("a*2^(2*a)*(psi(1,a/2)-psi(1,a/2+1/2))*gamma(a+1/2)/(4*sqrt(pi)*gamma(a))")})});
    r.samples = {S("a=1/4"), S("a=1/3"), S("a=3/5"), S("a=0.4:0.3")};
  }
  {
    auto& r = reg.add("H0a", "h(a)/a^2 with the digamma-weighted factorial-ratio sum");
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({sumt("pi*gamma(2*a)/(sinpi(a)*gamma(a)^3)",
                 SB(0, 1, {G("1"), G("1-a", -1)}, {L("1-a", -2)}, {W1("1", 0, "1-a")})),
            pfq("psi(1-a)*pi*gamma(2*a)/(gamma(2-a)*(a-1)*gamma(a)^3*sinpi(a))",
                {"1", "1", "1-a"}, {"2-a", "2-a"}),
            closed("-sinpi(2*a)*(2*euler+psi(1-a)+psi(a))*gamma(1-a)*pi*gamma(2*a)/"
                   "(gamma(a)*sinpi(a)^2)")})});
    r.domain = {gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("TT", "Whipple-contiguous closed form of 3F2(1,1,1-a;2-a,2-a;1)",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1-a"}, {"2-a", "2-a"})}),
         E({closed("(psi(1,1/2-a/2)+psi(1,a/2)-pi^2/sinpi(a/2)^2)*(a-1)^2/2")})});
    r.domain = {lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.6"), S("a=0.85"), S("a=0.4:0.2")};
  }
  {
    auto& r = reg.add("Eq4", "h(a)/a^2 after substituting the contiguous closed form");
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({sumt("pi*gamma(2*a)/(sinpi(a)*gamma(a)^3)",
                 SB(0, 1, {G("1"), G("1-a", -1)}, {L("1-a", -2)}, {W1("1", 0, "1-a")})),
            closed("gamma(2*a)/gamma(a)^2*(-4*euler*pi^2*cospi(a)/sinpi(a)^2"
                   " - psi(1-a)*psi(1,a/2) + 2*psi(1-a)*psi(1,a)"
                   " - 2*pi^2*cospi(a)*psi(a)/sinpi(a)^2)")})});
    r.domain = {gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("FromB7", "3F2(a,a,b;2a,b+1;1) by argument inversion");
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "b"}, {"2*a", "b+1"})}),
         E({closed("pi*sinpi(2*a)*gamma(b+1)*gamma(1+b-2*a)*gamma(2*a)/"
                   "(sinpi(a)^2*gamma(b+1-a)^2*gamma(a)^2)"),
            pfq("b*pi^2*gamma(2*a)/(sinpi(a)^2*gamma(a)^4*gamma(2-2*a)*(b+1-2*a))",
                {"1-a", "1-a", "b+1-2*a"}, {"2-2*a", "b+2-2*a"})})});
    r.domain = {lt("a", "1"), nonint("2*a"), nonint("b+1-2*a")};
    r.samples = {S("a=0.3 b=0.8"), S("a=0.45 b=0.7"), S("a=0.2 b=0.55")};
  }
  {
    auto& r = reg.add("FromMiller2b", "h(a)/a^2 mixing h(1-a) and the unit-parameter 4F3");
    r.tags = {"functional-equation"};
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("4*pi^2*gamma(2*a)^2*cospi(a)^2/(gamma(a)^4*(2*a-1)*(a-1)*sinpi(a)^2)",
                {"1-a", "1-a", "1-a"}, {"2-a", "2-2*a"}),
            pfq("-pi*a*gamma(1-a)^2*(a-1)/(gamma(1-2*a)*sinpi(a))",
                {"1", "1", "2-a", "1+a"}, {"2", "2", "2"}),
            pfq("gamma(2*a)*gamma(1-a)^2/(gamma(a)^2*gamma(2-2*a)*(a-1)^2)",
                {"1-a", "1-a", "1-a", "1-a"}, {"2-2*a", "2-a", "2-a"}),
            closed("pi^4*cospi(a)/(gamma(a)^2*gamma(1-2*a)*sinpi(a)^4)")})});
    r.domain = {gt("a", "0"), lt("a", "1/2")};
    r.samples = {S("a=0.3"), S("a=0.2"), S("a=0.42")};
  }
  {
    auto& r = reg.add("Miller2d", "second form of the functional equation");
    r.tags = {"functional-equation"};
    r.parts.push_back(
        {E({pfq("gamma(a)*sinpi(a)/(a^2*gamma(a+1/2))",
                {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("-4^(2*a-1)*gamma(a+1/2)*cospi(a)/((a-1)^2*(a-1/2)*gamma(a))",
                {"1-a", "1-a", "1-a", "1-a"}, {"2-2*a", "2-a", "2-a"}),
            closed("2^(2*a)*sqrt(pi)*cospi(a)*(psi(1,a/2)-2*psi(1,a))"),
            pfq("-pi^(3/2)*a*(a-1)*2^(2*a)*cotpi(a)", {"1", "1", "2-a", "a+1"}, {"2", "2", "2"}),
            closed("-pi^(5/2)*2^(2*a)*cotpi(a)^2")})});
    r.domain = {gt("a", "0"), lt("a", "1"), nonint("2*a")};
    r.samples = {S("a=0.3"), S("a=0.35"), S("a=0.42")};
  }
  {
    auto& r = reg.add("Sm1b", "mixture form of 3F2(a,a,b;2a,b+1;1) carrying a free parameter");
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "b"}, {"2*a", "b+1"})}),
         E({pfq("-2^(2*a-1)*b*sqrt(pi)*gamma(a+1/2)/((a-b)*gamma(a)*sinpi(a))",
                {"a", "a-b", "1-a"}, {"1", "1+a-b"}),
            pfq("b*gamma(2*a)*sinpi(a-d)/((a-b)^2*gamma(a)^2*sinpi(d))",
                {"a", "a-b", "a-b", "1-a"}, {"1", "1+a-b", "1+a-b"}),
            sumt("-b*gamma(2*a)*sinpi(a-d)*sinpi(a)/(pi*gamma(a)^2*sinpi(d))", s2_sum()),
            closed("-gamma(2*a)*gamma(b+1)*gamma(a-b)^2*sinpi(b-d)/"
                   "(gamma(a)^2*gamma(2*a-b)*sinpi(d))")})});
    r.domain = {nonint("d"), nonint("a-b")};
    r.samples = {S("a=0.4 b=0.9 d=0.25"), S("a=0.3 b=0.7 d=0.17"), S("a=0.55 b=0.35 d=0.5")};
  }
  {
    auto& r = reg.add("Sm3d", "h(a)/a^2 through the absolutely convergent weighted sum");
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({sumt("4^a*gamma(a+1/2)/(6*sqrt(pi)*gamma(a))", s1_sum()),
            closed("4^a*gamma(a+1/2)/(3*gamma(a)*sinpi(a))*(-pi^(5/2)/6"
                   " + (euler+psi(a))*cotpi(a)*pi^(3/2) + 4*(euler+psi(a))^2*sqrt(pi))")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("MdEqa", "h(a) after the derivative rule with the mixture at d=a");
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("1", {"a", "a", "a"}, {"2*a", "a+1"}),
            pfq("-pi*gamma(2*a+1)*a*(a-1)/(2*sinpi(a)*gamma(a)^2)",
                {"1", "1", "a+1", "2-a"}, {"2", "2", "2"}),
            pfq("-pi*gamma(2*a+1)*a^2*(a-1)/(2*sinpi(a)*gamma(a)^2)",
                {"1", "1", "1", "a+1", "2-a"}, {"2", "2", "2", "2"}),
            closed("pi*gamma(2*a+1)/(sinpi(a)*gamma(a)^2)*((psi(a)+euler)^2*a"
                   " + psi(a)+euler)")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=1.4")};
  }
  {
    auto& r = reg.add("Hb3B", "interim mixture form of 3F2(a,a,b;2a,1+b;1)/b");
    r.parts.push_back(
        {E({pfq("1/b", {"a", "a", "b"}, {"2*a", "1+b"})}),
         E({pfq("a*pi*(a-1)*gamma(2*a)/(gamma(a)^2*sinpi(a)*(1+a-b))",
                {"1", "2-a", "1+a", "1+a-b"}, {"2", "2", "a-b+2"}),
            closed("2^(2*a-1)*sqrt(pi)*gamma(a+1/2)*gamma(b)*gamma(a-b)/"
                   "(gamma(a)*sinpi(a)*gamma(1+b-a)*gamma(2*a-b))"),
            closed("-2^(2*a-1)*sqrt(pi)*gamma(a+1/2)/(gamma(a)*sinpi(a)*(a-b))")})});
    r.domain = {nonint("a-b")};
    r.samples = {S("a=0.4 b=0.9"), S("a=0.3 b=0.7"), S("a=0.6 b=0.22")};
  }
  {
    auto& r = reg.add("C1A", "simplified two-term form of 3F2(a,a,b;2a,b+1;1)");
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "b"}, {"2*a", "b+1"})}),
         E({pfq("-pi*b*gamma(2*a)/(gamma(a)^2*sinpi(a)*(a-b))",
                {"a", "1-a", "a-b"}, {"1", "1+a-b"}),
            closed("pi^2*gamma(2*a)*gamma(b+1)/(gamma(a)^2*sinpi(a)*sinpi(a-b)*"
                   "gamma(b+1-a)^2*gamma(2*a-b))")})});
    r.domain = {nonint("a-b")};
    r.samples = {S("a=0.4 b=0.9"), S("a=0.3 b=0.7"), S("a=0.55 b=0.35")};
  }
  {
    auto& r = reg.add("hb2c", "derivative-route mixture with the weighted sum");
    r.parts.push_back(
        {E({pfq("gamma(a)^2/(gamma(2*a)*b)", {"a", "a", "b"}, {"2*a", "1+b"})}),
         E({pfq("-pi/(sinpi(a)*(a-b))", {"a", "1-a", "a-b"}, {"1", "1+a-b"}),
            pfq("sinpi(a-b)/(sinpi(b)*(a-b)^2)",
                {"a", "1-a", "a-b", "a-b"}, {"1", "1+a-b", "1+a-b"}),
            sumt("-sinpi(a-b)*sinpi(a)/(pi*sinpi(b))", s2_sum())})});
    r.domain = {nonint("a-b"), nonint("b")};
    r.samples = {S("a=0.4 b=0.9"), S("a=0.3 b=0.7"), S("a=0.55 b=0.35")};
  }
  {
    auto& r = reg.add("Hfb", "h(a)/a^2 from the same route after the derivative");
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({sumt("-gamma(2*a)/gamma(a)^2", s1_sum()),
            pfq("-2*pi*(a-1)*gamma(2*a+1)/(sinpi(a)*gamma(a)^2)",
                {"1", "1", "1", "2-a", "a+1"}, {"2", "2", "2", "2"}),
            closed("2*pi^2*gamma(2*a)/(gamma(a)^2*sinpi(a))*(pi/6"
                   " - (euler+psi(a))*cospi(a)/sinpi(a))")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Note1", "difference of two weighted sums as a 5F4");
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("a"), G("1-a"), G("0", -2)}, {L("0", -3)},
                         {W1("1", 0, "1"), W1("-1", 0, "0")}))}),
         E({pfq("-a*(a-1)*pi/sinpi(a)", {"1", "1", "1", "1+a", "2-a"}, {"2", "2", "2", "2"})})});
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Thomae1", "the four two-part relatives of 3F2(a,a,b;2a,b+1;1)",
                      Status::Known);
    auto lhs = [] { return E({pfq("1", {"a", "a", "b"}, {"2*a", "b+1"})}); };
    r.parts.push_back({lhs(), E({pfq("gamma(b+1)*gamma(2*a)/(gamma(b)*gamma(1+a)^2)",
                                     {"1", "1", "2*a-b"}, {"1+a", "1+a"})})});
    r.parts.push_back({lhs(), E({pfq("gamma(2*a)/(gamma(a)*gamma(1+a))",
                                     {"1", "b-a+1", "a"}, {"1+a", "b+1"})})});
    r.parts.push_back({lhs(), E({pfq("gamma(b+1)/(gamma(b-a+1)*gamma(1+a))",
                                     {"2*a-b", "a", "a"}, {"1+a", "2*a"})})});
    r.parts.push_back({lhs(), E({pfq("gamma(2*a)/(gamma(2*a-b)*gamma(b+1))",
                                     {"b-a+1", "b-a+1", "b"}, {"b+1", "b+1"})})});
    r.domain = {lt("b", "2*a"), gt("b", "a-1"), nonint("a-b")};
    r.samples = {S("a=0.7 b=0.4"), S("a=0.45 b=0.6"), S("a=0.55 b=0.8")};
  }
}

void section_integer_limits(Reg& reg) {
  {
    auto& r = reg.add("Ansm1a", "terminating unit-parameter 5F4 at integer offsets",
                      Status::IntegerOnly);
    r.parts.push_back({E({pfq("1", {"1", "1", "1", "1+n", "2-n"}, {"2", "2", "2", "2"})}),
                       E({closed("2*(euler+psi(n))^2/(n*(n-1))")})});
    r.samples = {S("n=2"), S("n=3"), S("n=4"), S("n=5")};
  }
  {
    auto& r = reg.add("Z3", "unit-parameter 4F3 equals zeta(3)", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "1"}, {"2", "2", "2"})}), E({closed("zeta3")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("OldEq8", "h(n) reduced to a 5F4 and finite digamma sums",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"n", "n", "n", "n"}, {"2*n", "n+1", "n+1"})}),
         E({pfq("gamma(2*n+1)^2/(4*gamma(1+n)^4)",
                {"1", "1", "n", "n", "2*n"}, {"1+n", "1+n", "1+n", "1+n"}),
            closed("(-1)^n*2*n*gamma(2*n+1)/gamma(n)^2*((euler+psi(n))*psi(1,n)"
                   " + sum(k,0,n-2,(-1)^k*gamma(n+k+1)*(psi(n-1-k)-psi(n+k+1))/"
                   "(gamma(k+1)^2*gamma(n-1-k)*(k+1)^4))/4)")})});
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4"), S("n=5")};
  }
  {
    auto& r = reg.add("Cx0b", "3F2(n,n,b;2n,b+1;1) as a finite alternating digamma sum",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"n", "n", "b"}, {"2*n", "b+1"})}),
         E({closed("gamma(2*n)/gamma(2*n-b)*(b*(-1)^n*sum(k,0,n-1,"
                   "gamma(n+k-b)*(-1)^k*psi(n-k)/(gamma(k+1)^2*gamma(n-k)))"
                   " + (psi(b)-2*psi(n))*gamma(n-b)^2/(gamma(-b)*gamma(n)^2))")})});
    r.domain = {nonint("b")};
    r.samples = {S("n=1 b=0.3"), S("n=2 b=0.45"), S("n=3 b=0.7"), S("n=4 b=0.35")};
  }
  {
    auto& r = reg.add("Cx0d", "h(n)/n^2 as finite digamma sums", Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1/n^2", {"n", "n", "n", "n"}, {"2*n", "n+1", "n+1"})}),
         E({closed("gamma(2*n)*(-1)^n*(sum(k,1,n-1,(-1)^k*psi(n-k)*(psi(k)-psi(n))/"
                   "(k^2*gamma(n-k)*gamma(k)))/gamma(n)"
                   " + (psi(n)*pi^2/12 - 3/2*psi(n)^3 - 3*psi(n)^2*euler"
                   " + 3/2*(psi(1,n)-euler^2)*psi(n) + 2*psi(1,n)*euler + psi(2,n)/2)"
                   "/gamma(n)^2)")})});
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4"), S("n=5")};
  }
  {
    auto& r = reg.add("Hexp", "double-pole expansion of h at negative integers",
                      Status::IntegerOnly);
    auto family = std::make_shared<Evaluable>(
        E({pfq("1", {"eps-n", "eps-n", "eps-n", "eps-n"},
               {"2*eps-2*n", "eps-n+1", "eps-n+1"})}));
    auto lb = [&](int order) {
      LaurentBody b;
      b.var = "eps";
      b.order = order;
      b.lo_order = -2;
      b.hi_order = 2;
      b.eps_exp = -10;
      b.family = family;
      return b;
    };
    r.parts.push_back({E({laur("1", lb(-2))}),
                       E({closed("n*(-1)^n*gamma(n+1)^2/(2*gamma(2*n))")})});
    r.parts.push_back(
        {E({laur("1", lb(-1))}),
         E({closed("-gamma(n+1)^2*(-1)^n*(2*n*euler-2*n*psi(2*n)+4*n*psi(n+1)+1)/"
                   "(2*gamma(2*n))")})});
    r.parts.push_back(
        {E({laur("1", lb(0))}),
         E({closed("(-1)^n*gamma(n+1)^2/gamma(2*n)*(euler-psi(2*n)+2*psi(n+1)"
                   " + n*(2*euler*(psi(n+1)-psi(2*n)) + psi(2*n)^2 - 4*psi(n+1)*psi(2*n)"
                   " + 3*psi(n+1)^2 - pi^2/12 + 3/2*psi(1,n+1) - psi(1,2*n)))")})});
    r.tol_exp = -24;
    r.samples = {S("n=2"), S("n=3")};
  }
}

void section_continuation(Reg& reg) {
  {
    auto& r = reg.add("AnsIm", "alternating digamma-ratio series in closed form",
                      Status::Conjectural);
    r.parts.push_back(
        {E({sumt("1", SB(1, -1, {G("0", -1), G("a", -1, -1)}, {L("0", -2)},
                         {W2("1", 0, "a", -1, 0, "0", 1), W1("-psi(a)", 0, "a", -1)}))}),
         E({closed("(3/2*psi(a)^3 + 3*euler*psi(a)^2 + (3/2*euler^2 - pi^2/12"
                   " - 3/2*psi(1,a))*psi(a) - 2*euler*psi(1,a) - psi(2,a)/2)/gamma(a)")})});
    r.domain = {gt("a", "1"), nonint("a")};
    r.samples = {S("a=2.5"), S("a=1.4"), S("a=3.2"), S("a=2:1/3")};
  }
  {
    auto& r = reg.add("AnsImb", "companion alternating series without the psi(a) shift",
                      Status::Conjectural);
    r.parts.push_back(
        {E({sumt("1", SB(1, -1, {G("0", -1), G("a", -1, -1)}, {L("0", -2)},
                         {W2("1", 0, "a", -1, 0, "0", 1)}))}),
         E({closed("psi(a)^3/(2*gamma(a)) + 2*euler*psi(a)^2/gamma(a)"
                   " - (pi^2 - 18*euler^2 + 6*psi(1,a))*psi(a)/(12*gamma(a))"
                   " - (4*euler*psi(1,a) + psi(2,a))/(2*gamma(a))")})});
    r.domain = {gt("a", "1"), nonint("a")};
    r.samples = {S("a=2.5"), S("a=1.4"), S("a=3.2"), S("a=2:1/3")};
  }
  {
    auto& r = reg.add("AnsImB", "h(a)/a^2 through the contiguous 4F3 and odd polygamma");
    r.parts.push_back(
        {E({pfq("1/a^2", {"a", "a", "a", "a"}, {"2*a", "a+1", "a+1"})}),
         E({pfq("-gamma(a+1/2)*4^a/(sqrt(pi)*gamma(1+a)*a^2)",
                {"1", "1", "a", "a"}, {"1+a", "1+a", "1+a"}),
            closed("-(psi(2,a/2)-psi(2,a/2+1/2))*gamma(a+1/2)*4^a/(8*sqrt(pi)*gamma(a))")})});
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=1.3"), S("a=0.7:0.2")};
  }
}

void section_new_forms(Reg& reg) {
  {
    auto& r = reg.add("4F3", "closed form of the Saalschutzian 4F3(1,1,2-a,a+1;2,2,2;1)");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "2-a", "a+1"}, {"2", "2", "2"})}),
         E({closed("2*(psi(a)+euler)/(a*(a-1))"
                   " + sinpi(a)*(psi(1,a/2)-psi(1,a/2+1/2))/(2*a*pi*(a-1))")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=1/3"), S("a=2/5"), S("a=1.7"), S("a=0.6:0.3")};
  }
  {
    auto& r = reg.add("Y1b1", "two-parameter generalization with a 4F3 remainder");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "d"}, {"2", "2", "2"})}),
         E({pfq("-sinpi(c)*gamma(c)*gamma(1-d)/(c*gamma(2+c-d)*pi)",
                {"1", "c", "c", "c"}, {"2", "c+1", "2+c-d"}),
            closed("-(psi(c-1)+psi(2-d)+2*euler)/((c-1)*(d-1))"
                   " - sinpi(c)*gamma(c)*gamma(1-d)/(gamma(1+c-d)*(c-1)^3*pi)")})});
    r.domain = {lt("c+d", "4"), nonint("c"), nonint("d"), nonint("c-d")};
    r.samples = {S("c=0.7 d=0.3"), S("c=1.3 d=0.8"), S("c=0.45 d=1.6")};
  }
  {
    auto& r = reg.add("Y1b2", "reduced two-parameter form with a 3F2 remainder");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "d"}, {"2", "2", "2"})}),
         E({pfq("-sinpi(c)*gamma(c)*gamma(1-d)/(gamma(1+c-d)*(c-1)^3*pi)",
                {"c-1", "c-1", "c-1"}, {"c", "1+c-d"}),
            closed("-(2*euler+psi(c-1)+psi(2-d))/((c-1)*(d-1))")})});
    r.domain = {lt("c+d", "4"), nonint("c"), nonint("d"), nonint("c-d")};
    r.samples = {S("c=0.7 d=0.3"), S("c=1.3 d=0.8"), S("c=0.45 d=1.6")};
  }
  {
    auto& r = reg.add("H12", "symmetry-induced transformation of 3F2(c,c,c;c+1,1+a;1)");
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "1+a"})}),
         E({pfq("pi^2*c*gamma(1+a)/((c-a)^3*gamma(a-c)^2*sinpi(c)^2*gamma(c)^2*gamma(1-a))",
                {"c-a", "c-a", "c-a"}, {"c+1-a", "1-a"}),
            closed("-pi*sinpi(a)*gamma(c-a)*c*gamma(1+a)/(sinpi(c)^2*gamma(c))")})});
    r.domain = {gt("2+a-2*c", "0"), nonint("c"), nonint("a"), nonint("c-a")};
    r.samples = {S("c=0.7 a=0.3"), S("c=0.9 a=0.45"), S("c=0.5 a=0.8")};
  }
  {
    auto& r = reg.add("t1a", "first Thomae relative of the c-family");
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "1+a"})}),
         E({pfq("c*gamma(2-2*c+a)*gamma(1+a)/((1-c)^2*gamma(1-c+a)^2)",
                {"1", "1-c", "2-2*c+a"}, {"2-c", "2-c"}),
            closed("-c*sinpi(a)*gamma(1-c)*gamma(c-a)*gamma(1+a)/sinpi(c)")})});
    // paper-asserted window 2c-1 < a < c+2, c < 3; the relative converges for
    // a < c, so sampling stays inside the intersection
    r.tags = {"window-asserted"};
    r.domain = {gt("a", "2*c-1"), lt("a", "c"), nonint("c"), nonint("a"), nonint("c-a")};
    r.samples = {S("c=0.7 a=0.55"), S("c=0.6 a=0.35"), S("c=0.8 a=0.72")};
  }
  {
    auto& r = reg.add("t3", "second Thomae relative, unit parametric excess");
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "1+a"})}),
         E({pfq("-pi*c*gamma(c-a)*gamma(1-c)*a*gamma(2-2*c+a)/"
                "((c-1)*sinpi(a)*gamma(1-a)^2*gamma(1-c+a)^2)",
                {"1-c", "1-c", "c-a"}, {"2-c", "1-a"}),
            closed("-pi*c*gamma(c-a)*gamma(1-c)*a/(gamma(1-a)*sinpi(c))")})});
    r.domain = {gt("2+a-2*c", "0"), nonint("c"), nonint("a"), nonint("c-a")};
    r.samples = {S("c=0.7 a=0.3"), S("c=0.9 a=0.45"), S("c=0.5 a=0.8")};
  }
  {
    auto& r = reg.add("t4", "third Thomae relative");
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "1+a"})}),
         E({pfq("c*gamma(1+a)*gamma(2-2*c+a)/((c-a)*gamma(1-c+a)^2*(1-c))",
                {"1", "1", "c-a"}, {"2-c", "c+1-a"}),
            closed("-pi*c*a*gamma(c-a)*gamma(1-c)/(gamma(1-a)*sinpi(c))")})});
    r.domain = {gt("2+a-2*c", "0"), lt("c", "1"), nonint("c"), nonint("a"), nonint("c-a")};
    r.samples = {S("c=0.7 a=0.3"), S("c=0.5 a=0.8"), S("c=0.9 a=0.45")};
  }
  {
    auto& r = reg.add("t6", "fourth Thomae relative");
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "1+a"})}),
         E({pfq("c*a*sinpi(c-a)^2*gamma(1-c)*gamma(c-a)^3*gamma(2-2*c+a)/"
                "(pi*(1-c)*sinpi(a)*gamma(1-a)^2)",
                {"1-c", "1-c", "c-a"}, {"2-c", "1-a"}),
            closed("-pi*c*a*gamma(c-a)*gamma(1-c)/(gamma(1-a)*sinpi(c))")})});
    r.tags = {"window-asserted"};
    r.domain = {lt("c", "1"), gt("a", "2*c-2"), gt("2+a-2*c", "0"), nonint("c"), nonint("a"),
                nonint("c-a")};
    r.samples = {S("c=0.7 a=0.3"), S("c=0.5 a=0.8"), S("c=0.9 a=0.45")};
  }
  {
    auto& r = reg.add("T0", "integer-shift limit of the second relative", Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1/gamma(1+c+n)", {"c", "c", "c"}, {"c+1", "1+c+n"})}),
         E({closed("(psi(n+1)-psi(2-c+n))*c*pi/(gamma(n+1)*gamma(c)*sinpi(c))"),
            pfq("-c*gamma(2-c+n)^2/((c-2-n)*gamma(n+2)*gamma(2-c)*gamma(n+1)^2)",
                {"1", "1", "2-c+n", "2-c+n"}, {"2-c", "n+2", "3-c+n"}),
            closed("-c*(-1)^n*gamma(2-c+n)/gamma(n+1)^2*sum(k,0,n,"
                   "(-1)^k*gamma(1-c+k)*(psi(n-k+1)-psi(c+n-k))/"
                   "((c-k-1)*gamma(1-c-n+k)*gamma(n-k+1)*gamma(k+1)))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4 n=2"), S("c=0.7 n=1"), S("c=0.3 n=3")};
  }
  {
    auto& r = reg.add("BC0", "known closed form at the integer shift", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "1+c+n"})}),
         E({closed("-c*gamma(1-c)*psi(c)*gamma(1+c+n)/gamma(n+1)"
                   " - c*gamma(2-c+n)*gamma(1+c+n)/gamma(n+1)*sum(k,0,n,"
                   "(-1)^k*psi(k+1)/((c-k-1)*gamma(n-k+1)*gamma(k+1)))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4 n=2"), S("c=0.7 n=1"), S("c=0.3 n=3")};
  }
  {
    auto& r = reg.add("BC1b", "comparison transformation with finite digamma sums",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1/(c*gamma(2+n)*gamma(c-n)*gamma(1+n))",
                {"1", "1", "c", "c"}, {"c-n", "2+n", "c+1"})}),
         E({closed("(psi(c)-psi(2+n-c)-psi(1+n))*gamma(c-n-1)/gamma(c)^2"
                   " - sum(k,0,n,(-1)^k*psi(k+1)/((n-k+1-c)*gamma(n-k+1)*gamma(k+1)))/gamma(c)"
                   " - (-1)^n/(gamma(c)*gamma(1+n))*sum(k,0,n,"
                   "(psi(2-c+k+n)-psi(k+1))*(-1)^k*gamma(2-c+k+n)/"
                   "(gamma(2-c+k)*(1-c+k)*gamma(k+1)*gamma(n-k+1)))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=2.4 n=1"), S("c=3.3 n=2"), S("c=1.7 n=3")};
  }
  {
    auto& r = reg.add("T3Cbm1", "terminating Saalschutzian closed form");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "a", "-n"}, {"2", "2", "a-n-1"})}),
         E({closed("(euler+psi(2+n)+psi(a-1)-psi(a-2-n))*(2+n-a)/((1+n)*(1-a))")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3 n=2"), S("a=2.6 n=3"), S("a=0.45 n=1")};
  }
  {
    auto& r = reg.add("Ht0", "shifted-parameter reduction with reversal symmetry",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("gamma(1+n)*gamma(a)/(gamma(1+a+n)*(1+n))",
                {"1+n", "1+n", "1+n"}, {"2+n", "1+a+n"})}),
         E({closed("gamma(1+n)*gamma(a-n)*sum(k,0,n-1,(-1)^k*(psi(a-k)+psi(n-k)-psi(k+1))/"
                   "((n-k)*gamma(a-k)*gamma(k+1)))"
                   " - (-1)^n/2*((psi(a-n)-psi(a))*(3*psi(a-n)-2*euler-2*psi(1+n)-psi(a))"
                   " - 3*psi(1,a-n) + psi(1,a))")})});
    r.domain = {gt("a", "n"), nonint("a")};
    r.samples = {S("a=2.5 n=2"), S("a=1.7 n=1"), S("a=3.3 n=3")};
  }
  {
    auto& r = reg.add("HTxA", "finite alternating Euler sum in closed form",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({closed("sum(k,0,n-1,(-1)^k*psi(k+1)/((k+1)^2*gamma(n-k)*gamma(k+1)))")}),
         E({closed("(pi^2-18*euler^2-24*euler*psi(1+n)-6*psi(1+n)^2-6*psi(1,1+n))/"
                   "(12*gamma(1+n))")})});
    r.tags = {"euler-sum"};
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4"), S("n=5"), S("n=6")};
  }
  {
    auto& r = reg.add("HTx0A", "balanced form of the shifted series", Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("gamma(1+n)^2/(gamma(2+2*n)*(1+n))",
                {"1+n", "1+n", "1+n"}, {"2+n", "2+2*n"})}),
         E({closed("-gamma(1+n)*sum(k,0,n-1,(-1)^k*psi(k+1)/((n-k)^2*gamma(n-k)*gamma(k+1)))"
                   " - (euler*psi(1+n)+psi(1+n)^2-psi(1,1+n))*(-1)^n")})});
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4")};
  }
  {
    auto& r = reg.add("Clm1A", "vanishing-residue identity for the shifted 4F3",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"1", "c", "c", "c"}, {"2", "c+1", "2+c-n"})}),
         E({closed("-c*gamma(2+c-n)/(c-1)*((-1)^n*gamma(1-c)*gamma(n-1)"
                   " + 1/((c-1)^2*gamma(c-n+1)))")})});
    r.domain = {lt("c+n", "4"), nonint("c"), gt("n", "1")};
    r.samples = {S("c=0.4 n=3"), S("c=0.3 n=2"), S("c=0.6 n=3")};
  }
  {
    auto& r = reg.add("Clm1B", "reduced closed form of the shifted 3F2", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"c", "c", "c"}, {"c+1", "2+c-n"})}),
         E({closed("c*(-1)^n*gamma(1-c)*gamma(n-1)*gamma(2+c-n)")})});
    // the series converges only for c + n < 3; larger n needs continuation
    r.domain = {lt("c+n", "3"), nonint("c"), gt("n", "1")};
    r.samples = {S("c=0.4 n=2"), S("c=0.25 n=2"), S("c=0.6 n=2")};
  }
  {
    auto& r = reg.add("Clm0", "next-to-leading term of the d -> n limit",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "n"}, {"2", "2", "2"})}),
         E({sumt("-sinpi(c)*(-1)^n/(gamma(c)*pi*gamma(n))",
                 SB(0, 1, {G("c-1", 2), G("1", -1), G("1+c-n", -1)}, {L("c-1", -1)},
                    {W1("1", 0, "1+c-n")})),
            closed("-(2*psi(n)+psi(c)+2*euler)/((c-1)*(n-1))"
                   " + (2*c+n-3)/((n-1)^2*(c-1)^2)")})});
    r.domain = {lt("c+n", "4"), nonint("c"), gt("n", "1")};
    r.samples = {S("c=0.4 n=2"), S("c=0.7 n=2"), S("c=1.3 n=2"), S("c=0.6 n=3")};
  }
  {
    auto& r = reg.add("Hccc", "known closed form of 3F2(c,c,c;c+1,c+1;1)", Status::Known);
    r.parts.push_back({E({pfq("1", {"c", "c", "c"}, {"c+1", "c+1"})}),
                       E({closed("-pi*c^2*(psi(c)+euler)/sinpi(c)")})});
    r.domain = {lt("c", "2"), nonint("c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=1.3"), S("c=0.5:0.3")};
  }
  {
    auto& r = reg.add("D1", "4F3(1,1,1,c;2,2,2;1) with the digamma-ratio sum");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "c"}, {"2", "2", "2"})}),
         E({sumt("sinpi(c)/(pi*gamma(c))",
                 SB(0, 1, {G("c-1"), G("1", -1)}, {L("c-1", -2)}, {W1("1", 0, "c")})),
            closed("euler*(psi(c-1)+euler)/(c-1) + pi^2/(6*(c-1))")})});
    r.domain = {lt("c", "3"), nonint("c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=2.3")};
  }
  {
    auto& r = reg.add("Prud9", "tabulated 4F3(a,a,a,b;1+a,1+a,1+a;1)", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"a", "a", "a", "b"}, {"1+a", "1+a", "1+a"})}),
         E({closed("a^3*gamma(a)*gamma(1-b)*(psi(1,a)-psi(1,1+a-b)"
                   "+(psi(a)-psi(1+a-b))^2)/(2*gamma(1+a-b))")})});
    r.domain = {lt("b", "3"), nonint("b")};
    r.samples = {S("a=0.7 b=0.4"), S("a=1.3 b=0.8"), S("a=0.5 b=1.6"), S("a=0.7:0.3 b=0.4")};
  }
  {
    auto& r = reg.add("D1S", "the digamma-ratio sum in closed form");
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {G("c-1"), G("1", -1)}, {L("c-1", -2)}, {W1("1", 0, "c")}))}),
         E({closed("-gamma(c-1)*pi^3/(4*sinpi(c))"
                   " - pi*gamma(c-1)/sinpi(c)*((euler+psi(2-c))^2/2 + euler^2"
                   " + euler*psi(c-1) - psi(1,2-c)/2)")})});
    r.domain = {lt("c", "3"), nonint("c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=2.3")};
  }
  {
    auto& r = reg.add("5F4b1-family", "terminating instances of the derivative formula",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("(1+m)", {"1", "1", "1", "1", "-m"}, {"2", "2", "2", "2"})}),
         E({closed("(psi(2+m)+euler)^3/6 + (pi^2/12 - psi(1,2+m)/2)*(psi(2+m)+euler)"
                   " + zeta3/3 + psi(2,2+m)/6")})});
    r.samples = {S("m=1"), S("m=2"), S("m=3"), S("m=4")};
  }
  {
    auto& r = reg.add("Z1", "weighted inverse fourth powers and zeta(5)", Status::Known);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {}, {L("1", -4)}, {W("-euler"), W1("-1", 0, "1")}))}),
         E({closed("zeta3*pi^2/6 - 2*zeta5")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("R3d", "generalized shifted Euler-sum identity", Status::Conjectural);
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {G("1"), G("3+a", -1)}, {L("1", -2)}, {W1("1", 0, "2")}))}),
         E({sumt("1/2", SB(0, -1, {G("1", -1), G("a+1", -1, -1)}, {L("1", -3)},
                          {W2("1", 0, "1", 1, 0, "1", 1), W1("-1", 1, "1")})),
            closed("((psi(1,2+a)-psi(2+a)^2)*(3/4*euler^2-pi^2/8) - euler*psi(2+a)^3/6"
                   " + (euler*psi(1,2+a)/2 - euler^3 + pi^2*euler/3 - 2*zeta3)*psi(2+a)"
                   " - 5*euler^4/12 + pi^2*euler^2/6 - (psi(2,2+a)/6 + 10*zeta3/3)*euler"
                   " + 5*pi^4/144)/gamma(2+a)")})});
    r.domain = {gt("a", "-1"), nonint("a")};
    r.samples = {S("a=0.3"), S("a=1.6"), S("a=2:1/3")};
  }
  {
    auto& r = reg.add("Rhs", "second parameter derivative as an alternating series",
                      Status::Known);
    auto family = std::make_shared<Evaluable>(E({pfq(
        "1/(gamma(1+eps)*gamma(a+1))", {"1", "1", "1", "1", "-a"}, {"2", "2", "2", "1+eps"})}));
    LaurentBody lb;
    lb.var = "eps";
    lb.order = 2;
    lb.lo_order = 0;
    lb.hi_order = 2;
    lb.eps_exp = -12;
    lb.family = family;
    r.parts.push_back(
        {E({laur("2", lb)}),
         E({sumt("1", SB(0, -1, {G("1", -1), G("a+1", -1, -1)}, {L("1", -3)},
                          {W2("1", 0, "1", 1, 0, "1", 1), W1("-1", 1, "1")}))})});
    r.domain = {nonint("a")};
    r.tol_exp = -32;
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=1.2")};
  }
  {
    auto& r = reg.add("Z2", "shifted Euler sum with a pi^4 remainder", Status::Known);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {}, {L("1", -3), L("2", -1)}, {W1("1", 0, "1")}))}),
         E({closed("-(euler+1)*zeta3 - (1-pi^2/6)*euler + pi^4/360 + 1")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("C2A", "limiting relative at negative integer offsets",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"c-1", "c-1", "c-1"}, {"c", "c+n+1"})}),
         E({closed("pi*(c-1)*gamma(c+n+1)/(sinpi(c)*gamma(2+n))*((-1)^n/gamma(c-3-n)*"
                   "sum(k,0,n+1,(-1)^k*psi(k+1)/(gamma(n-k+2)*(c-k-2)*gamma(k+1)))"
                   " + psi(c-1)/gamma(c-1))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4 n=1"), S("c=0.7 n=2"), S("c=1.3 n=1")};
  }
  {
    auto& r = reg.add("C2A1", "terminating 4F3 with the finite alternating sum",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "-n"}, {"2", "2", "2"})}),
         E({closed("-gamma(c-1)*(-1)^n/((c-1)*gamma(c-3-n)*(n+1))*"
                   "sum(k,0,n+1,(-1)^k*psi(k+1)/(gamma(n-k+2)*(c-k-2)*gamma(k+1)))"
                   " + (psi(2+n)+2*euler)/((c-1)*(1+n))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4 n=1"), S("c=0.7 n=2"), S("c=1.3 n=3")};
  }
  {
    auto& r = reg.add("C2Ad", "c-derivative of the terminating relative", Status::IntegerOnly);
    r.parts.push_back(
        {E({closed("sum(k,0,n,gamma(k+1)*psi(c+k)*gamma(c+k)*(-1)^k/"
                   "(gamma(n-k+1)*gamma(k+2)^3))")}),
         E({closed("(-1)^n*(psi(c-3-n)-2*psi(c-1))*gamma(c-1)^2/(gamma(2+n)*gamma(c-3-n))*"
                   "sum(k,0,n+1,(-1)^k*psi(k+1)/(gamma(n-k+2)*(c-k-2)*gamma(k+1)))"
                   " + (psi(2+n)+2*euler)*psi(c-1)*gamma(c-1)/gamma(2+n)"
                   " + gamma(c-1)^2*(-1)^n/(gamma(2+n)*gamma(c-3-n))*"
                   "sum(k,0,n+1,(-1)^k*psi(k+1)/(gamma(n-k+2)*(c-k-2)^2*gamma(k+1)))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4 n=1"), S("c=0.7 n=2"), S("c=1.3 n=2")};
  }
  {
    auto& r = reg.add("C2bd", "solved form mixing both finite sums", Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "-n"}, {"2", "2", "2"})}),
         E({closed("gamma(c-1)*(-1)^n/(gamma(c-3-n)*(psi(c-3-n)-2*psi(c-1))*(c-1)*(n+1))*"
                   "sum(k,0,n+1,(-1)^k*psi(k+1)/(gamma(n-k+2)*(c-k-2)^2*gamma(k+1)))"
                   " - gamma(1+n)/((psi(c-3-n)-2*psi(c-1))*gamma(c))*"
                   "sum(k,0,n,gamma(k+1)*psi(c+k)*gamma(c+k)*(-1)^k/"
                   "(gamma(n-k+1)*gamma(k+2)^3))"
                   " + (psi(c-1)-psi(c-3-n))*(psi(2+n)+2*euler)/"
                   "((2*psi(c-1)-psi(c-3-n))*(c-1)*(n+1))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4 n=1"), S("c=0.7 n=2")};
  }
  {
    auto& r = reg.add("Cnm1", "Watson-contiguous value at offset -1", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"c-1", "c-1", "c-1"}, {"c", "2*c-1"})}),
         E({closed("4^c*gamma(c-1/2)/(sqrt(pi)*gamma(c))*((psi(1,c)/2-psi(1,c/2)/4)*(c-1)^2"
                   "+1/4)")})});
    r.domain = {nonint("c"), nonint("2*c")};
    r.samples = {S("c=0.4"), S("c=0.8"), S("c=1.6"), S("c=0.7:0.2")};
  }
  {
    auto& r = reg.add("Cn0", "Watson-contiguous value at offset 0");
    r.parts.push_back(
        {E({pfq("1", {"c-1", "c-1", "c-1"}, {"c", "2*c"})}),
         E({closed("4^c*gamma(1/2+c)/(sqrt(pi)*gamma(c+1))*((psi(1,c)-psi(1,c/2)/2)*(c-1)^2"
                   "+(c^2-c+1)/(2*c^2))")})});
    r.domain = {nonint("c"), nonint("2*c")};
    r.samples = {S("c=0.4"), S("c=0.8"), S("c=1.6")};
  }
  {
    auto& r = reg.add("Cn1", "Watson-contiguous value at offset 1");
    r.parts.push_back(
        {E({pfq("1", {"c-1", "c-1", "c-1"}, {"c", "2*c+1"})}),
         E({closed("4^c*gamma(1/2+c)/(sqrt(pi)*gamma(c+2))*(c*(2*psi(1,c)-psi(1,c/2))*(c-1)^2"
                   "+(c^4+c^3-2*c^2+3*c+1)/(c*(c+1)^2))")})});
    r.domain = {nonint("c"), nonint("2*c")};
    r.samples = {S("c=0.4"), S("c=0.8"), S("c=1.6")};
  }
  {
    auto& r = reg.add("Cn2", "Watson-contiguous value at offset 2");
    r.parts.push_back(
        {E({pfq("1", {"c-1", "c-1", "c-1"}, {"c", "2*c+2"})}),
         E({closed("4^c*gamma(3/2+c)/(sqrt(pi)*gamma(c+3))*(-2*c*(psi(1,c/2)-2*psi(1,c))*"
                   "(c-1)^2+(2*c^6+10*c^5+12*c^4-14*c^3+10*c^2+44*c+8)/"
                   "((c+2)^2*(c+1)^2*c))")})});
    r.domain = {nonint("c"), nonint("2*c")};
    r.samples = {S("c=0.4"), S("c=0.8"), S("c=1.6")};
  }
  {
    auto& r = reg.add("Y3m1", "unit 4F3 with paired parameters c, 2-c");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "2-c"}, {"2", "2", "2"})}),
         E({closed("(2*euler+2*psi(c)+(psi(1,c/2)-2*psi(1,c))*sinpi(c)/pi)/(c-1)^2"
                   " - 1/(c-1)^3 - sinpi(c)/(pi*(c-1)^4)")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=1.3")};
  }
  {
    auto& r = reg.add("Y30", "unit 4F3 with paired parameters c, 1-c");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "1-c"}, {"2", "2", "2"})}),
         E({closed("sinpi(c)/pi*((psi(1,c/2)-2*psi(1,c))/(c*(c-1))-(c^2-c+1)/"
                   "(c^3*(c-1)^3)) + 2*(psi(c+1)+euler)/(c*(c-1)) - (2*c-1)/"
                   "(c^2*(c-1)^2)")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=1.3")};
  }
  {
    auto& r = reg.add("Y31", "unit 4F3 with paired parameters c, -c");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "-c"}, {"2", "2", "2"})}),
         E({closed("2*(psi(c+2)+euler)/((c-1)*(c+1)) + (1-3*c^2)/(c*(c+1)^2*(c-1)^2)"
                   " - gamma(c)*sinpi(c)/(pi*gamma(c+2)*(c-1)^3)*(c*(2*psi(1,c)-psi(1,c/2))*"
                   "(c-1)^2+(c^4+c^3-2*c^2+3*c+1)/(c*(c+1)^2))")})});
    r.domain = {nonint("c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=1.3")};
  }
  {
    auto& r = reg.add("Y32", "unit 4F3 with paired parameters c, -1-c");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "c", "-1-c"}, {"2", "2", "2"})}),
         E({closed("2*(psi(3+c)+euler)/((c-1)*(c+2))"
                   " - 2*(2*c+1)*(c^2+c-1)/(c*(c+1)*(c+2)^2*(c-1)^2)"
                   " + gamma(c)*sinpi(c)*4^c*gamma(3/2+c)/(pi^(3/2)*(c+2)*(c-1)^3*"
                   "gamma(2*c+2))*(2*c*(psi(1,c/2)-2*psi(1,c))*(c-1)^2"
                   "+(-2*c^6-10*c^5-12*c^4+14*c^3-10*c^2-44*c-8)/((c+2)^2*c*(c+1)^2))")})});
    r.domain = {nonint("c"), nonint("2*c")};
    r.samples = {S("c=0.4"), S("c=0.7"), S("c=1.3")};
  }
  {
    auto& r = reg.add("Y2", "free-bottom transformation of the unit 4F3");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "1"}, {"2", "2", "d"})}),
         E({sumt("1/gamma(1-d)",
                 SB(0, 1, {G("3-d"), G("1", -1)}, {L("1", -3)}, {W1("1", 0, "1")})),
            closed("(d-1)/6*psi(d)^3 + ((d-1)/12*(18*euler^2-pi^2-6*psi(1,d))-2*euler)*psi(d)"
                   " + (1/2-(d-1)*euler)*(psi(1,d)-psi(d)^2) + (d-1)/6*psi(2,d)"
                   " + 2/3*(d-1)*euler^3 - 3/2*euler^2 + 4/3*zeta3*d + pi^2/12"
                   " - 4/3*zeta3")})});
    r.domain = {gt("d", "0"), nonint("d")};
    r.samples = {S("d=0.7"), S("d=1.4"), S("d=2.3")};
  }
  {
    auto& r = reg.add("NeqA", "weighted gamma-ratio sum in gamma/zeta closed form");
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {G("2-d"), G("1", -1)}, {L("1", -2)}, {W1("1", 1, "1")})),
            sumt("-1", SB(0, 1, {G("2-d"), G("1", -1)}, {L("1", -3)}, {W1("1", 0, "1")}))}),
         E({closed("gamma(1-d)*(-psi(d)^3/3 - 3*psi(d)^2*euler/2 - (2*euler^2+pi^2/6)*psi(d)"
                   " + psi(1,d)*euler/2 + psi(2,d)/6 - 5*euler^3/6 - pi^2*euler/4"
                   " + zeta3/3)")})});
    r.domain = {gt("d", "0"), nonint("d")};
    r.samples = {S("d=0.7"), S("d=0.3"), S("d=1.6")};
  }
  {
    auto& r = reg.add("Yna", "integer-bottom instance with the finite replacement sum",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "1"}, {"2", "2", "n"})}),
         E({closed("gamma(n)*sum(k,0,n-3,(-1)^k*psi(1+k)/((1+k)^3*gamma(1+k)*gamma(n-2-k)))"),
            closed("(n-1)/6*psi(n)^3 + ((n-1)/12*(18*euler^2-pi^2-6*psi(1,n))-2*euler)*psi(n)"
                   " + (1/2-(n-1)*euler)*(psi(1,n)-psi(n)^2) + (n-1)/6*psi(2,n)"
                   " + 2/3*(n-1)*euler^3 - 3/2*euler^2 + 4/3*zeta3*n + pi^2/12"
                   " - 4/3*zeta3")})});
    r.samples = {S("n=3"), S("n=4"), S("n=5"), S("n=6")};
  }
}

void section_comparisons(Reg& reg) {
  {
    auto& r = reg.add("S1Id", "unit-parameter 5F4 through the weighted sum");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "2-a", "a+1"}, {"2", "2", "2", "2"})}),
         E({sumt("-sinpi(a)/(3*a*(a-1)*pi)", s1_sum()),
            closed("-2/(3*a*(a-1))*(euler^2+(psi(a)+psi(1-a))*euler+psi(a)^2"
                   "+pi*psi(a)*cospi(a)/sinpi(a)-pi^2/6)")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("5F4", "unit-parameter 5F4 with the shifted 4F3 remainder");
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "2-a", "a+1"}, {"2", "2", "2", "2"})}),
         E({closed("(psi(1,a/2+1/2)-psi(1,a/2))*sinpi(a)/(2*a^2*(a-1)*pi)"
                   " + 2*(euler+psi(a))^2/(a*(a-1))"),
            pfq("4^(-a)*sinpi(a)*gamma(a)/(a*sqrt(pi)*(a+1)^2*gamma(a+1/2)*(a-1))",
                {"a+1", "a+1", "a+1", "a+1"}, {"2*a+1", "a+2", "a+2"})})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=1.4")};
  }
  {
    auto& r = reg.add("R12", "shifted h-relative through the weighted sum");
    r.parts.push_back(
        {E({pfq("1", {"a+1", "a+1", "a+1", "a+1"}, {"a+2", "a+2", "2*a+1"})}),
         E({sumt("-gamma(a+1/2)*4^a*(a+1)^2/(3*sqrt(pi)*gamma(a))", s1_sum()),
            closed("gamma(a+1/2)*4^a*(a+1)^2/(3*gamma(a))*(-8*sqrt(pi)*euler^2/sinpi(a)"
                   " - 2*sqrt(pi)*(7*psi(a)+psi(1-a))*euler/sinpi(a)"
                   " - 3*(psi(1,a/2+1/2)-psi(1,a/2))/(2*a*sqrt(pi))"
                   " + (pi^(5/2)/3-8*sqrt(pi)*psi(a)^2)/sinpi(a)"
                   " - 2*pi^(3/2)*cospi(a)*psi(a)/sinpi(a)^2)")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("SxS1", "factorial-ratio sum related to the weighted sum");
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {G("1"), G("1-a", -1)}, {L("1-a", -2)}, {W1("1", 0, "1-a")}))}),
         E({sumt("sinpi(a)*gamma(a)/(3*pi)", s1_sum()),
            closed("2*psi(a)*gamma(a)*euler/3 + 14/3*psi(1-a)*gamma(a)*euler"
                   " + 8/3*gamma(a)*euler^2 + (psi(1-a)*(psi(1,a/2)-2*psi(1,a))*sinpi(a)/pi"
                   " - pi^2/9 + 8/3*psi(a)*psi(1-a))*gamma(a)")})});
    r.domain = {gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Sx3", "mirror transformation between two slow sums");
    r.tags = {"slow", "functional-equation"};
    r.tol_exp = -12;
    r.budget = 2000000;
    r.parts.push_back(
        {E({sumt("gamma(a)",
                 SB(0, 1, {G("1"), G("a", -1)}, {L("a", -2)}, {W1("1", 0, "a")}))}),
         E({sumt("gamma(1-a)",
                 SB(0, 1, {G("1"), G("1-a", -1)}, {L("1-a", -2)}, {W1("1", 0, "1-a")})),
            closed("-4*pi^2*cospi(a)*euler/sinpi(a)^2"
                   " + (psi(1,1/2-a/2)-2*psi(1,1-a))*psi(a)"
                   " + (2*psi(1,a)-psi(1,a/2))*psi(1-a)")})});
    r.domain = {gt("a", "0"), lt("a", "1"), nonint("2*a")};
    r.samples = {S("a=0.35"), S("a=0.65")};
  }
  {
    auto& r = reg.add("S1Sum", "antisymmetric part of the weighted sum");
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("1-a"), G("a"), G("0", -2)}, {L("0", -3)},
                         {W1("1", 0, "a"), W1("-1", 0, "1-a")}))}),
         E({closed("2*psi(2,a) - psi(2,a/2)/2 - 2*pi*psi(1,a)/sinpi(a)"
                   " + 2*(euler+psi(a))*pi^2*cospi(a)/sinpi(a)^2")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("S1_new", "second definition of the weighted sum");
    r.parts.push_back(
        {E({sumt("1", s1_sum())}),
         E({sumt("-2", SB(1, 1, {G("1-a"), G("a"), G("0", -2)}, {L("0", -3)},
                          {W1("1", 0, "0"), W1("-1", 0, "a")})),
            closed("psi(2,a/2)/2 - 2*psi(2,a) + 2*pi*psi(1,a)/sinpi(a)"
                   " - 2*(euler+psi(a))*pi^2*cospi(a)/sinpi(a)^2")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("AnsImG", "integer reduction of the alternating identity",
                      Status::IntegerOnly);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {G("1"), G("n", -1)}, {L("n", -2)}, {W1("1", 0, "n")}))}),
         E({closed("psi(n)*sum(k,1,n-1,gamma(n-k)*psi(k)*(-1)^k/(gamma(n-k+1)^2*gamma(k)))"
                   " + (-1)^n*sum(k,1,n-1,(-1)^k*psi(n-k)*(psi(k)-psi(n))/"
                   "(k^2*gamma(k)*gamma(n-k)))"
                   " - (-1)^n/gamma(n)*(psi(n)^3/2 + 2*euler*psi(n)^2"
                   " - (pi^2/12-3*euler^2/2+psi(1,n)/2)*psi(n) - 2*euler*psi(1,n)"
                   " - psi(2,n)/2)")})});
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4"), S("n=5")};
  }
  {
    auto& r = reg.add("AnsSums1", "euler sum with inverse squares", Status::IntegerOnly);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {}, {L("1", -2)}, {W1("1", 0, "1")}))}),
         E({closed("zeta3 - pi^2*euler/6")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("AnsSums2", "euler sum shifted once", Status::IntegerOnly);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {}, {L("1", -1), L("2", -2)}, {W1("1", 0, "2")}))}),
         E({closed("(1+euler)*pi^2/6 - 2*euler - zeta3")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("AnsSums3", "euler sum shifted twice", Status::IntegerOnly);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1",
                 SB(0, 1, {}, {L("1", -1), L("2", -1), L("3", -2)}, {W1("1", 0, "3")}))}),
         E({closed("-(1/8+euler/12)*pi^2 + 3*euler/4 + 3/4 + zeta3/2")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("AnsSums4", "euler sum shifted three times", Status::IntegerOnly);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({sumt("1", SB(0, 1, {}, {L("1", -1), L("2", -1), L("3", -1), L("4", -2)},
                         {W1("1", 0, "4")}))}),
         E({closed("(11/216+euler/36)*pi^2 - 31*euler/108 - 5/18 - zeta3/6")})});
    r.samples = {S("")};
  }
  {
    auto& r = reg.add("Newsum2", "finite alternating Euler sum with even polygamma",
                      Status::IntegerOnly);
    r.tags = {"euler-sum"};
    r.parts.push_back(
        {E({closed("sum(k,0,n,(-1)^k*psi(1+k)/(gamma(n-k+1)*(n-k+1)^2*gamma(1+k)))")}),
         E({closed("(psi(n+2)^2+euler*psi(n+2)-psi(1,n+2))*(-1)^n/gamma(n+2)"
                   " - (psi(1,n/2+1)-psi(1,n/2+3/2))/(2*gamma(n+2))")})});
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4"), S("n=5"), S("n=6")};
  }
  {
    auto& r = reg.add("Smm1H", "vanishing-residue form of the doubled 4F3");
    r.parts.push_back(
        {E({pfq("1", {"a", "1-a", "a-b", "a-b"}, {"1", "1+a-b", "1+a-b"})}),
         E({sumt("sinpi(a)*(a-b)^2/pi", s2_sum()),
            closed("pi*gamma(1+a-b)^2/(gamma(1-b)*sinpi(a)*gamma(2*a-b))")})});
    r.domain = {nonint("a"), nonint("b"), nonint("a-b")};
    r.samples = {S("a=0.4 b=0.9"), S("a=0.3 b=0.7"), S("a=0.6 b=0.15")};
  }
  {
    auto& r = reg.add("Smm1A", "weighted sum at the shifted argument");
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("a-1"), G("-a"), G("0", -2)}, {L("0", -1)},
                         {W1("1", 0, "-a"), W1("-2", 0, "0"), W1("1", 0, "a-1")}))}),
         E({closed("1/((a-1)^2*a^2) + 2*pi/(a*sinpi(a)*(a-1))")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.4"), S("a=0.7"), S("a=0.3")};
  }
  {
    auto& r = reg.add("6F5", "unit-parameter 6F5 through the fourth-power weighted sum");
    r.parts.push_back(
        {E({pfq("a*(a-1)", {"1", "1", "1", "1", "2-a", "1+a"}, {"2", "2", "2", "2", "2"})}),
         E({sumt("-sinpi(a)/(4*pi)", s4_sum()),
            closed("-zeta3/6 - psi(2,a)/12 - pi*(euler+psi(a))^2*cospi(a)/(2*sinpi(a))"
                   " + (euler+psi(a))*pi^2/6 - (euler+psi(a))^3/3")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Smm1dL0", "squared-factorial weighted sum in closed form");
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("a"), G("1-a"), G("2", -2)}, {},
                         {W1("1", 0, "1-a"), W1("-2", 0, "1"), W1("1", 0, "a")}))}),
         E({closed("2*psi(1,a/2)/(a*(a-1)) - 2*pi*(a^2-a-3)*psi(a)/(a*(a-1)*sinpi(a))"
                   " - 4*psi(1,a)/(a*(a-1)) - pi^2*(a^2-a-1)*cospi(a)/(a*(a-1)*sinpi(a)^2)"
                   " - (2*a^2-2*a+2)/(a^3*(a-1)^3)"
                   " - (2*pi*(a^2-a-3)*euler/(a*(a-1)) + 3*pi/(a^2*(a-1)^2))/sinpi(a)")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Eq82", "infinite-to-finite reduction of the 5F4 at integers",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("gamma(2*n+1)/(n^5*gamma(n)^2)",
                {"1", "1", "n", "n", "2*n"}, {"n+1", "n+1", "n+1", "n+1"})}),
         E({closed("(2*gamma(n)*sum(k,1,n-1,(-1)^k*psi(n-k)*(psi(k)-psi(n))/"
                   "(k^2*gamma(n-k)*gamma(k)))"
                   " + 2*sum(k,1,n-1,gamma(k+n)*(-1)^k*(psi(n-k)-psi(k+n))/"
                   "(gamma(k)^2*gamma(n-k)*k^4))"
                   " - (5*psi(n)+4*euler)*psi(1,n) - 3*psi(n)^3 - 6*psi(n)^2*euler"
                   " + (pi^2/6-3*euler^2)*psi(n) + psi(2,n))*(-1)^n")})});
    r.samples = {S("n=1"), S("n=2"), S("n=3"), S("n=4"), S("n=5")};
  }
}

void section_collection(Reg& reg) {
  {
    auto& r = reg.add("Mk", "order reduction by an integer top-bottom offset (n = 2)",
                      Status::Known);
    std::vector<EvalTerm> rhs;
    for (int k = 0; k <= 2; ++k) {
      std::string ks = std::to_string(k);
      rhs.push_back(pfq(("2*gamma(e)*gamma(f)*gamma(g)/(gamma(a)*gamma(b)*gamma(c))"
                         "*gamma(a+" + ks + ")*gamma(b+" + ks + ")*gamma(c+" + ks + ")/"
                         "(gamma(" + ks + "+1)*gamma(3-" + ks + ")*gamma(e+" + ks +
                         ")*gamma(f+" + ks + ")*gamma(g+" + ks + "))")
                            .c_str(),
                        {("a+" + ks).c_str(), ("b+" + ks).c_str(), ("c+" + ks).c_str()},
                        {("f+" + ks).c_str(), ("g+" + ks).c_str()}));
    }
    r.parts.push_back({E({pfq("1", {"a", "b", "c", "e+2"}, {"e", "f", "g"})}), E(std::move(rhs))});
    r.domain = {gt("f+g-a-b-c", "2.2")};
    r.samples = {S("a=0.3 b=0.5 c=0.7 e=1.4 f=2.6 g=2.9"),
                 S("a=0.4 b=0.6 c=0.2 e=1.2 f=2.8 g=2.5"),
                 S("a=0.25 b=0.45 c=0.8 e=1.6 f=2.4 g=3.1"),
                 S("a=0.5 b=0.3 c=0.6 e=1.3 f=2.7 g=2.6"),
                 S("a=0.35 b=0.55 c=0.75 e=1.5 f=2.9 g=2.8")};
  }
  {
    auto& r = reg.add("HRKX", "k-balanced terminating closed form (k = 3)", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"a", "b", "-n"}, {"c", "3-n+a+b-c"})}),
         E({closed("-pi*(-1)^(n+1)*gamma(a-c+1)*gamma(3-n+a+b-c)*gamma(n+1)*2*gamma(c)/"
                   "(sinpi(c-b)*gamma(3-n+b-c)*gamma(3+b-c+a)*gamma(n+c)*gamma(a))"
                   "*sum(j,0,2,gamma(a+j)/(gamma(1+n-j)*gamma(c-b-2+j)*"
                   "gamma(a-n-c+1+j)*gamma(1+j)*gamma(3-j)))")})});
    r.domain = {gt("n", "1"), nonint("c-b"), nonint("c-a")};
    r.samples = {S("a=0.4 b=0.7 c=2.3 n=2"), S("a=0.3 b=0.8 c=1.6 n=3"),
                 S("a=0.55 b=0.35 c=2.7 n=4"), S("a=0.45 b=0.9 c=2.1 n=2"),
                 S("a=0.6 b=0.25 c=1.8 n=3")};
  }
  {
    auto& r = reg.add("SARoy", "two-balanced terminating closed form", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"a", "b", "-n"}, {"c", "2-n+a+b-c"})}),
         E({closed("gamma(c-b+n-1)*gamma(n+c-a)*gamma(c-a-b-1)*gamma(c)/"
                   "(gamma(c-b-1)*gamma(c-a)*gamma(c-b+n-1-a)*gamma(n+c))"
                   "*(1 - n*a/((c-b-1)*(n+c-1-a)))")})});
    r.domain = {nonint("c-b"), nonint("c-a"), nonint("c-a-b")};
    r.samples = {S("a=0.4 b=0.7 c=2.3 n=3"), S("a=0.3 b=0.8 c=2.6 n=2"),
                 S("a=0.55 b=0.35 c=2.7 n=4"), S("a=0.45 b=0.9 c=3.1 n=2"),
                 S("a=0.6 b=0.25 c=1.8 n=3")};
  }
  {
    auto& r = reg.add("And1", "closed form of 3F2(1,a,m+b;2+m,a+b;1)", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "a", "m+b"}, {"2+m", "a+b"})}),
         E({closed("(-1)^m*sinpi(a)*sinpi(b)*gamma(1-b-m)*gamma(b+a)*gamma(1-a)*gamma(2+m)/"
                   "((a-1-m)*pi^2*(b-1)) - (1+m)*(b+a-1)/((a-1-m)*(b-1))")})});
    r.domain = {nonint("a"), nonint("b"), nonint("a+b")};
    r.samples = {S("a=0.35 b=0.8 m=2"), S("a=0.6 b=0.3 m=1"), S("a=0.45 b=0.7 m=3"),
                 S("a=0.25 b=0.55 m=2"), S("a=0.7 b=0.2 m=4")};
  }
  {
    auto& r = reg.add("WhipXf1", "transformation of a terminating 1-balanced 4F3",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"a", "b", "c", "-n"}, {"d", "e", "a+b+c+1-d-e-n"})}),
         E({pfq("gamma(n+e-a)*gamma(b+c+1-d-e)*gamma(e)*gamma(a+b+c+1-d-e-n)/"
                "(gamma(e-a)*gamma(b+c+1-d-e-n)*gamma(n+e)*gamma(a+b+c+1-d-e))",
                {"a", "-n", "d-b", "d-c"}, {"d", "d+e-b-c", "a+1-n-e"})})});
    r.domain = {nonint("b+c+1-d-e"), nonint("a+b+c+1-d-e")};
    r.samples = {S("a=0.3 b=0.55 c=1.7 d=1.2 e=2.0 n=3"),
                 S("a=0.4 b=0.7 c=1.3 d=1.1 e=1.8 n=2"),
                 S("a=0.25 b=0.8 c=1.5 d=1.35 e=1.75 n=2"),
                 S("a=0.5 b=0.65 c=1.2 d=1.45 e=1.65 n=4"),
                 S("a=0.35 b=0.45 c=1.6 d=1.25 e=1.9 n=3")};
  }
  {
    auto& r = reg.add("WhipXf2", "special 1-balanced value with a quadratic prefactor",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"-n", "a", "b", "c"}, {"c-1", "e", "a+b+2-n-e"})}),
         E({closed("(-e^2+(a+b-n+2)*e-(b+1)*(a-c+1)*(n-1)/(c-1)+(n-b-1)*a*c/(c-1))"
                   "*gamma(a+b+2-n-e)*gamma(n+e-a-1)*gamma(b+1-e)*gamma(e)/"
                   "(gamma(b+2-n-e)*gamma(a+b+2-e)*gamma(n+e)*gamma(e-a))")})});
    r.domain = {nonint("b-e"), nonint("a+b-e")};
    r.samples = {S("a=0.3 b=0.55 c=1.7 e=2.0 n=3"), S("a=0.4 b=0.7 c=1.3 e=1.8 n=2"),
                 S("a=0.25 b=0.8 c=1.5 e=1.75 n=2")};
  }
  {
    auto& r = reg.add("pFq", "repeated-parameter instance of the derivative formula",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"a", "b", "b"}, {"b+1", "b+1"})}),
         E({closed("-b^2*gamma(1-a)*gamma(b)*(psi(b)-psi(1+b-a))/gamma(1+b-a)")})});
    r.domain = {lt("a", "2"), nonint("a")};
    r.samples = {S("a=0.3 b=0.7"), S("a=1.3 b=0.5"), S("a=0.8 b=1.2"), S("a=0.3:0.2 b=0.7")};
  }
  {
    auto& r = reg.add("5F4b1", "four-times-repeated instance", Status::Known);
    r.parts.push_back(
        {E({pfq("(1-a)", {"1", "1", "1", "1", "a"}, {"2", "2", "2", "2"})}),
         E({closed("(psi(2-a)+euler)^3/6 + (pi^2/12-psi(1,2-a)/2)*(psi(2-a)+euler)"
                   " + zeta3/3 + psi(2,2-a)/6")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.7"), S("a=1.6"), S("a=0.4:0.3")};
  }
  {
    auto& r = reg.add("6F5b1", "five-times-repeated instance", Status::Known);
    r.parts.push_back(
        {E({pfq("(1-a)", {"1", "1", "1", "1", "1", "a"}, {"2", "2", "2", "2", "2"})}),
         E({closed("psi(1,2-a)^2/8 + pi^4/160 - psi(3,2-a)/24 + (psi(2-a)+euler)^4/24"
                   " + (zeta3/3+psi(2,2-a)/6)*(psi(2-a)+euler)"
                   " - ((psi(2-a)+euler)^2/4+pi^2/24)*psi(1,2-a)"
                   " + pi^2*(psi(2-a)+euler)^2/24")})});
    r.domain = {nonint("a")};
    r.samples = {S("a=0.3"), S("a=0.7"), S("a=1.6")};
  }
  {
    auto& r = reg.add("SSEq31", "double-shifted 3F2 as two terminating pieces",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("gamma(b)*gamma(c)/(gamma(b+1+m)*gamma(c+1+n))",
                {"a", "b", "c"}, {"b+1+m", "c+1+n"})}),
         E({pfq("gamma(b)*gamma(1-a)*gamma(c-b)/"
                "(gamma(1+b-a)*gamma(n+1+c-b)*gamma(m+1))",
                {"b", "-m", "b-c-n"}, {"1+b-a", "1+b-c"}),
            pfq("gamma(c)*gamma(1-a)*gamma(b-c)/"
                "(gamma(1+c-a)*gamma(m+1+b-c)*gamma(n+1))",
                {"c", "-n", "c-b-m"}, {"1+c-a", "1+c-b"})})});
    r.domain = {nonint("a"), nonint("b-c")};
    r.samples = {S("a=0.3 b=0.5 c=0.8 m=1 n=2"), S("a=0.6 b=0.4 c=0.9 m=2 n=1"),
                 S("a=0.45 b=0.7 c=0.25 m=0 n=0")};
  }
  {
    auto& r = reg.add("Eq2p2", "free-bottom 4F3 with the even-polygamma sum",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "1", "1"}, {"2", "2", "d"})}),
         E({closed("(d-1)*(psi(2,d-1)/2-(psi(1,d-1)+pi^2/6)*(euler+psi(d-1))+2*zeta3)"),
            sumt("-(d-1)/gamma(2-d)",
                 SB(0, 1, {G("3-d"), G("1", -1)}, {L("1", -2)}, {W1("1", 1, "2")}))})});
    r.domain = {gt("d", "0"), nonint("d")};
    r.samples = {S("d=0.7"), S("d=1.4"), S("d=2.3")};
  }
  {
    auto& r = reg.add("Cxs1", "finite alternating gamma-ratio sum", Status::IntegerOnly);
    r.parts.push_back(
        {E({closed("sum(k,0,n-1,gamma(n+k-b)*(-1)^k/(gamma(k+1)^2*gamma(n-k)))")}),
         E({closed("-(-1)^n*gamma(n-b)^2/(gamma(1-b)*gamma(n)^2)")})});
    r.domain = {nonint("b")};
    r.samples = {S("n=2 b=0.3"), S("n=3 b=0.7"), S("n=4 b=0.45"), S("n=1 b=0.6")};
  }
  {
    auto& r = reg.add("CxSum", "its b-derivative", Status::IntegerOnly);
    r.parts.push_back(
        {E({closed("sum(k,0,n-1,gamma(n+k-b)*(-1)^k*psi(n+k-b)/(gamma(k+1)^2*gamma(n-k)))")}),
         E({closed("-(-1)^n*pi*(2*psi(n-b)-psi(1-b))*gamma(b)/"
                   "(sinpi(b)*gamma(n)^2*gamma(b+1-n)^2)")})});
    r.domain = {nonint("b")};
    r.samples = {S("n=2 b=0.3"), S("n=3 b=0.7"), S("n=4 b=0.45"), S("n=1 b=0.6")};
  }
  {
    auto& r = reg.add("Lemma2b", "Whipple-contiguous ratio sum", Status::Known);
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("0"), G("a", -1)}, {L("a-1", -1)}, {}))}),
         E({closed("(psi(1,a/2)-psi(1,a/2+1/2))/(2*gamma(a))")})});
    r.domain = {gt("a", "0"), nonint("a")};
    r.samples = {S("a=0.4"), S("a=0.8"), S("a=1.5"), S("a=0.6:0.3")};
  }
  {
    auto& r = reg.add("Lemma2", "its a-derivative", Status::Known);
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("0"), G("a", -1)}, {L("a-1", -1)}, {W1("1", 0, "a")}))}),
         E({sumt("-1", SB(1, 1, {G("0"), G("a", -1)}, {L("a-1", -2)}, {})),
            closed("((psi(1,a/2)-psi(1,a/2+1/2))*psi(a)/2 - psi(2,a/2)/4"
                   " + psi(2,a/2+1/2)/4)/gamma(a)")})});
    r.domain = {gt("a", "0"), nonint("a")};
    r.samples = {S("a=0.4"), S("a=0.8"), S("a=1.5")};
  }
  {
    auto& r = reg.add("Lemma3a", "index shift between the two 4F3 shapes", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "2", "2-a", "a+1"}, {"3", "3", "3"})}),
         E({pfq("8*pi/((1-a)*gamma(1-a)*gamma(a)*a*sinpi(a))",
                {"1", "1", "a", "1-a"}, {"2", "2", "2"}),
            closed("-8/((1-a)*a)")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Lemma3b", "its closed form", Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "2", "2-a", "a+1"}, {"3", "3", "3"})}),
         E({closed("sinpi(a)/(a^2*(a-1)^2*pi)*(16*psi(1,a)-8*psi(1,a/2)"
                   "+8*(a^2-a+1)/(a^2*(a-1)^2))"
                   " - 16*psi(a+1)/(a^2*(a-1)^2) - 16*euler/(a^2*(a-1)^2)"
                   " + 8*(a^4-2*a^3+a^2+2*a-1)/(a^3*(a-1)^3)")})});
    r.domain = {nonint("a"), gt("a", "0"), lt("a", "1")};
    r.samples = {S("a=0.3"), S("a=0.45"), S("a=0.7")};
  }
  {
    auto& r = reg.add("Lemma4", "integer instance with finite alternating sums",
                      Status::IntegerOnly);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "n"}, {"n+1", "n+1"})}),
         E({closed("-(sum(k,0,n-3,(-1)^k*psi(1+k)/(gamma(n-k-1)*(n-k-1)^2*gamma(1+k)))"
                   " + sum(k,0,n-3,(-1)^k/(gamma(n-k-1)*(n-k-1)^3*gamma(1+k))))*n^2*gamma(n)"
                   " + (-1)^n*(1/2-(psi(n)+1)*n^3+n^2*(euler^2/2+2*euler*psi(n)+pi^2/12"
                   "+3/2*psi(n)^2+psi(n)-2*psi(1,n)+psi(1,n+1)/2+2))")})});
    r.samples = {S("n=3"), S("n=4"), S("n=5"), S("n=6")};
  }
  {
    auto& r = reg.add("ht", "Whipple-contiguous closed form at general argument",
                      Status::Known);
    r.parts.push_back(
        {E({pfq("1", {"1", "1", "a"}, {"a+1", "a+1"})}),
         E({closed("a^2/4*psi(1,a/2+1)+a^2/4*psi(1,a/2)-a^2/2*psi(1,a/2+1/2)+1")})});
    r.domain = {gt("a", "0"), nonint("a")};
    r.samples = {S("a=0.4"), S("a=0.8"), S("a=2.3"), S("a=0.5:0.4")};
  }
  {
    auto& r = reg.add("Lemma5", "the generalization of the derivative route", Status::Known);
    r.parts.push_back(
        {E({sumt("1", SB(1, 1, {G("0"), G("a", -1)}, {L("a-1", -1)}, {W1("1", 0, "a")}))}),
         E({sumt("-1", SB(1, 1, {G("0"), G("a-1", -1)}, {L("a-1", -3)}, {})),
            closed("(2*psi(1,a/2)*psi(a)-2*psi(1,a/2+1/2)*psi(a)-psi(2,a/2)"
                   "+psi(2,a/2+1/2))/(4*gamma(a))")})});
    r.domain = {gt("a", "0"), nonint("a")};
    r.samples = {S("a=0.4"), S("a=0.8"), S("a=1.5")};
  }
  {
    auto& r = reg.add("Lemma6", "alternating digamma-over-gamma pair", Status::Known);
    // lead-in reduction (with the algebraic denominator corrected to a-1)
    r.parts.push_back({E({pfq("1", {"1", "1", "2-a"}, {"2", "2"})}),
                       E({closed("(psi(a)+euler)/(a-1)")})});
    r.parts.push_back(
        {E({sumt("1", SB(1, -1, {G("0", -1), G("a", -1, -1)}, {L("0", -2)},
                         {W1("1", 0, "a", -1)}))}),
         E({closed("psi(1,a)/gamma(a)-psi(a)^2/gamma(a)-euler*psi(a)/gamma(a)")})});
    r.domain = {gt("a", "1"), nonint("a")};
    r.samples = {S("a=2.5"), S("a=1.7"), S("a=3.3")};
  }
}

}  // namespace

Corpus builtin_corpus() {
  Corpus c;
  Reg reg{c};
  section_functional(reg);
  section_evolution(reg);
  section_integer_limits(reg);
  section_continuation(reg);
  section_new_forms(reg);
  section_comparisons(reg);
  section_collection(reg);
  return c;
}

}  // namespace hyperid::corpus

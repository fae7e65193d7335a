#include "loopforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace loopforge {

TermPtr Term::make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->var = std::move(name);
  return t;
}
TermPtr Term::one() {
  auto t = std::make_shared<Term>();
  t->kind = Kind::One;
  return t;
}
static TermPtr binary(Term::Kind k, TermPtr x, TermPtr y) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->a = std::move(x);
  t->b = std::move(y);
  return t;
}
TermPtr Term::mul(TermPtr x, TermPtr y) {
  return binary(Kind::Mul, std::move(x), std::move(y));
}
TermPtr Term::ldiv(TermPtr x, TermPtr y) {
  return binary(Kind::LDiv, std::move(x), std::move(y));
}
TermPtr Term::rdiv(TermPtr x, TermPtr y) {
  return binary(Kind::RDiv, std::move(x), std::move(y));
}
TermPtr Term::inv(TermPtr x) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Inv;
  t->a = std::move(x);
  return t;
}

bool structurally_equal(const TermPtr& s, const TermPtr& t) {
  if (s == t) return true;
  if (!s || !t || s->kind != t->kind) return false;
  switch (s->kind) {
    case Term::Kind::Var: return s->var == t->var;
    case Term::Kind::One: return true;
    case Term::Kind::Inv: return structurally_equal(s->a, t->a);
    default:
      return structurally_equal(s->a, t->a) && structurally_equal(s->b, t->b);
  }
}

namespace {

bool is_binary(const TermPtr& t) {
  return t->kind == Term::Kind::Mul || t->kind == Term::Kind::LDiv ||
         t->kind == Term::Kind::RDiv;
}

void serialize_operand(const TermPtr& t, std::string& out);

void serialize_node(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Term::Kind::Var: out += t->var; break;
    case Term::Kind::One: out += '1'; break;
    case Term::Kind::Inv:
      serialize_operand(t->a, out);
      out += '\'';
      break;
    case Term::Kind::Mul:
    case Term::Kind::LDiv:
    case Term::Kind::RDiv:
      serialize_operand(t->a, out);
      out += t->kind == Term::Kind::Mul ? '*'
             : t->kind == Term::Kind::LDiv ? '\\' : '/';
      serialize_operand(t->b, out);
      break;
  }
}

void serialize_operand(const TermPtr& t, std::string& out) {
  if (is_binary(t)) {
    out += '(';
    serialize_node(t, out);
    out += ')';
  } else {
    serialize_node(t, out);
  }
}

}  // namespace

std::string serialize_term(const TermPtr& t) {
  std::string out;
  serialize_node(t, out);
  return out;
}

TermPtr mirror_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::One: return t;
    case Term::Kind::Inv: return Term::inv(mirror_term(t->a));
    case Term::Kind::Mul: return Term::mul(mirror_term(t->b), mirror_term(t->a));
    // x \ y in the opposite loop is y / x here, and conversely.
    case Term::Kind::LDiv: return Term::rdiv(mirror_term(t->b), mirror_term(t->a));
    case Term::Kind::RDiv: return Term::ldiv(mirror_term(t->b), mirror_term(t->a));
  }
  return t;
}

namespace {
void collect_vars(const TermPtr& t, std::vector<std::string>& vars) {
  if (!t) return;
  if (t->kind == Term::Kind::Var) {
    if (std::find(vars.begin(), vars.end(), t->var) == vars.end())
      vars.push_back(t->var);
    return;
  }
  collect_vars(t->a, vars);
  collect_vars(t->b, vars);
}
}  // namespace

Identity::Identity(std::string nm, TermPtr l, TermPtr r)
    : name(std::move(nm)), lhs(std::move(l)), rhs(std::move(r)) {
  collect_vars(lhs, vars);
  collect_vars(rhs, vars);
}

Identity mirror(const Identity& id) {
  return Identity(id.name, mirror_term(id.lhs), mirror_term(id.rhs));
}

std::string serialize_identity(const Identity& id) {
  return serialize_term(id.lhs) + " = " + serialize_term(id.rhs);
}

// --- parser ----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (c) ++pos;
    return c;
  }

  TermPtr parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      TermPtr t = parse_expr();
      if (peek() != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return apply_postfix(std::move(t));
    }
    if (c == '1') {
      ++pos;
      return apply_postfix(Term::one());
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < src.size() &&
             (std::islower(static_cast<unsigned char>(src[pos])) ||
              std::isdigit(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_'))
        name += src[pos++];
      return apply_postfix(Term::make_var(std::move(name)));
    }
    throw ParseError(std::string("expected variable, '1' or '(', found '") +
                         (c ? std::string(1, c) : std::string("end")) + "'",
                     pos);
  }

  TermPtr apply_postfix(TermPtr t) {
    while (peek() == '\'') {
      ++pos;
      t = Term::inv(std::move(t));
    }
    return t;
  }

  static bool is_binop(char c) { return c == '*' || c == '\\' || c == '/'; }

  TermPtr parse_expr() {
    TermPtr left = parse_atom();
    char c = peek();
    if (!is_binop(c)) return left;
    ++pos;
    TermPtr right = parse_atom();
    TermPtr t = c == '*'    ? Term::mul(std::move(left), std::move(right))
                : c == '\\' ? Term::ldiv(std::move(left), std::move(right))
                            : Term::rdiv(std::move(left), std::move(right));
    // A second operator at the same level would require a silent
    // association choice; reject it.
    if (is_binop(peek()))
      throw AmbiguityError(
          "unparenthesized operator chain; write the association explicitly",
          pos);
    return t;
  }
};

}  // namespace

TermPtr parse_term(const std::string& src) {
  Parser p(src);
  TermPtr t = p.parse_expr();
  if (p.peek() != '\0')
    throw ParseError("trailing input after term", p.pos);
  return t;
}

Identity parse_identity(const std::string& src) {
  Parser p(src);
  TermPtr lhs = p.parse_expr();
  if (p.peek() != '=') throw ParseError("expected '='", p.pos);
  p.take();
  TermPtr rhs = p.parse_expr();
  if (p.peek() != '\0')
    throw ParseError("trailing input after identity", p.pos);
  return Identity("", std::move(lhs), std::move(rhs));
}

std::vector<Identity> parse_identity_file(const std::string& text) {
  std::vector<Identity> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string name;
    std::string body = line;
    // `name : lhs = rhs`; a ':' before the '=' separates the label.
    std::size_t colon = line.find(':');
    std::size_t eq = line.find('=');
    if (colon != std::string::npos && eq != std::string::npos && colon < eq) {
      name = line.substr(0, colon);
      std::size_t b = name.find_first_not_of(" \t");
      std::size_t e = name.find_last_not_of(" \t");
      name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
      body = line.substr(colon + 1);
    }
    Identity id = parse_identity(body);
    id.name = name;
    out.push_back(std::move(id));
  }
  return out;
}

// --- evaluation --------------------------------------------------------------

namespace {

// Postfix program for fast repeated evaluation inside holds().
struct Op {
  enum Code { PushVar, PushOne, Mul, LDiv, RDiv, Inv } code;
  int slot = 0;  // PushVar
};

void compile(const TermPtr& t, const std::vector<std::string>& vars,
             std::vector<Op>& prog) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = std::find(vars.begin(), vars.end(), t->var);
      prog.push_back({Op::PushVar, static_cast<int>(it - vars.begin())});
      break;
    }
    case Term::Kind::One: prog.push_back({Op::PushOne, 0}); break;
    case Term::Kind::Inv:
      compile(t->a, vars, prog);
      prog.push_back({Op::Inv, 0});
      break;
    default:
      compile(t->a, vars, prog);
      compile(t->b, vars, prog);
      prog.push_back({t->kind == Term::Kind::Mul    ? Op::Mul
                      : t->kind == Term::Kind::LDiv ? Op::LDiv
                                                    : Op::RDiv,
                      0});
  }
}

Elem run(const CayleyLoop& L, const std::vector<Op>& prog,
         const std::vector<Elem>& assignment, std::vector<Elem>& stack) {
  stack.clear();
  for (const Op& op : prog) {
    switch (op.code) {
      case Op::PushVar: stack.push_back(assignment[op.slot]); break;
      case Op::PushOne: stack.push_back(0); break;
      case Op::Inv: stack.back() = L.inverse(stack.back()); break;
      default: {
        Elem b = stack.back();
        stack.pop_back();
        Elem a = stack.back();
        stack.back() = op.code == Op::Mul    ? L.mul(a, b)
                       : op.code == Op::LDiv ? L.ldiv(a, b)
                                             : L.rdiv(a, b);
      }
    }
  }
  return stack.back();
}

}  // namespace

Elem eval(const CayleyLoop& L, const TermPtr& t,
          const std::map<std::string, Elem>& env) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = env.find(t->var);
      if (it == env.end()) throw UnboundVariableError(t->var);
      return it->second;
    }
    case Term::Kind::One: return 0;
    case Term::Kind::Inv: return L.inverse(eval(L, t->a, env));
    case Term::Kind::Mul: return L.mul(eval(L, t->a, env), eval(L, t->b, env));
    case Term::Kind::LDiv: return L.ldiv(eval(L, t->a, env), eval(L, t->b, env));
    case Term::Kind::RDiv: return L.rdiv(eval(L, t->a, env), eval(L, t->b, env));
  }
  throw LoopError("corrupt term");
}

CheckResult holds(const CayleyLoop& L, const Identity& id) {
  const int n = L.order();
  const int k = static_cast<int>(id.vars.size());
  std::vector<Op> lhs, rhs;
  compile(id.lhs, id.vars, lhs);
  compile(id.rhs, id.vars, rhs);

  CheckResult res;
  std::vector<Elem> assignment(k, 0);
  std::vector<Elem> stack;
  stack.reserve(8);
  while (true) {
    ++res.evaluations;
    if (run(L, lhs, assignment, stack) != run(L, rhs, assignment, stack)) {
      res.holds = false;
      res.witness = assignment;
      return res;
    }
    // Odometer with the last variable fastest: lexicographic order.
    int i = k - 1;
    while (i >= 0 && assignment[i] == n - 1) assignment[i--] = 0;
    if (i < 0) break;
    ++assignment[i];
  }
  return res;
}

// --- catalog -----------------------------------------------------------------

namespace {

std::vector<Identity> build_catalog() {
  auto named = [](const char* name, const char* src) {
    Identity id = parse_identity(src);
    id.name = name;
    return id;
  };
  std::vector<Identity> cat;
  cat.push_back(named("ASSOC", "(x*y)*z = x*(y*z)"));
  cat.push_back(named("FLEX", "x*(y*x) = (x*y)*x"));
  cat.push_back(named("LALT", "y*(y*x) = (y*y)*x"));
  cat.push_back(named("RALT", "x*(y*y) = (x*y)*y"));
  cat.push_back(named("M1", "(x*(y*z))*x = (x*y)*(z*x)"));
  cat.push_back(named("M2", "(x*z)*(y*x) = x*((z*y)*x)"));
  cat.push_back(named("N1", "((x*y)*z)*y = x*(y*(z*y))"));
  cat.push_back(named("N2", "((y*z)*y)*x = y*(z*(y*x))"));
  cat.push_back(named("C", "((x*y)*y)*z = x*(y*(y*z))"));
  cat.push_back(named("W1", "(z*x)*((y*x)*y) = (z*((x*y)*x))*y"));
  {
    Identity w2 = mirror(cat.back());
    w2.name = "W2";
    cat.push_back(std::move(w2));
  }
  cat.push_back(named("RIF3", "(x*y)*(z*(x*y)) = ((x*(y*z))*x)*y"));
  {
    Identity r4 = mirror(cat.back());
    r4.name = "RIF4";
    cat.push_back(std::move(r4));
  }
  cat.push_back(named("RIFC", "((x*(y*z))*x)*y = x*(y*((z*x)*y))"));
  return cat;
}

}  // namespace

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> cat = build_catalog();
  return cat;
}

const Identity& catalog_identity(const std::string& name) {
  for (const Identity& id : catalog())
    if (id.name == name) return id;
  throw LoopError("unknown catalog identity: " + name);
}

}  // namespace loopforge

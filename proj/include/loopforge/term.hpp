#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge {

// Immutable term tree over the loop signature (*, \, /, ', 1).
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, One, Mul, LDiv, RDiv, Inv };
  Kind kind;
  std::string var;   // Kind::Var
  TermPtr a, b;      // binary children; Inv uses a only

  static TermPtr make_var(std::string name);
  static TermPtr one();
  static TermPtr mul(TermPtr x, TermPtr y);
  static TermPtr ldiv(TermPtr x, TermPtr y);   // x \ y
  static TermPtr rdiv(TermPtr x, TermPtr y);   // x / y
  static TermPtr inv(TermPtr x);
};

bool structurally_equal(const TermPtr& s, const TermPtr& t);
std::string serialize_term(const TermPtr& t);

// Swaps multiplication arguments and exchanges the two divisions, so that
// a term evaluates in a loop exactly as the mirrored term evaluates in the
// opposite loop. Involution.
TermPtr mirror_term(const TermPtr& t);

// A universally quantified equation. vars is the list of distinct variable
// names in order of first occurrence (left side first).
struct Identity {
  std::string name;
  TermPtr lhs, rhs;
  std::vector<std::string> vars;

  Identity() = default;
  Identity(std::string nm, TermPtr l, TermPtr r);
};

Identity mirror(const Identity& id);
std::string serialize_identity(const Identity& id);

// Result of checking an identity over all assignments.
struct CheckResult {
  bool holds = true;
  // Falsifying assignment aligned with Identity::vars; present iff !holds.
  std::optional<std::vector<Elem>> witness;
  unsigned long long evaluations = 0;
};

// --- grammar --------------------------------------------------------------
// atom     := variable | '1' | '(' expr ')'   followed by any number of
//             postfix ' (inverse)
// expr     := atom [ ('*'|'\'|'/') atom ]
// identity := expr '=' expr
//
// At most one binary operator per parenthesization level: chains such as
// x*y*z are rejected with AmbiguityError, so every association is written
// out explicitly. Variables are nonempty lowercase identifiers.

TermPtr parse_term(const std::string& src);
Identity parse_identity(const std::string& src);

// Identity file format: one identity per line as `name : LHS = RHS` (name
// optional), '#' starts a comment line.
std::vector<Identity> parse_identity_file(const std::string& text);

// Structural evaluation; env must bind every variable of t.
// Throws UnboundVariableError / NotIPError (the latter only when an
// inverse is actually evaluated at an element whose one-sided inverses
// disagree).
Elem eval(const CayleyLoop& L, const TermPtr& t,
          const std::map<std::string, Elem>& env);

// Exhaustive check over all |L|^|vars| assignments in lexicographic order
// (first variable slowest). The first falsifier becomes the witness.
CheckResult holds(const CayleyLoop& L, const Identity& id);

// Named identities used throughout: FLEX, LALT, RALT, M1, M2, N1, N2, C,
// W1, W2, RIF3, RIF4, RIFC, ASSOC. W2 and RIF4 are the structural mirrors
// of W1 and RIF3.
const std::vector<Identity>& catalog();
const Identity& catalog_identity(const std::string& name);

}  // namespace loopforge

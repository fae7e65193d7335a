#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "loopforge/errors.hpp"

namespace loopforge {

// Element index within a fixed loop; always in 0..n-1, 0 is the identity.
using Elem = int;

// A finite loop stored as its Cayley table (an n x n Latin square whose
// row 0 and column 0 are the identity map). Immutable after construction;
// divisions are precomputed so mul/ldiv/rdiv are table lookups.
class CayleyLoop {
 public:
  // Validates the grid: square, Latin in rows and columns, identity at 0.
  // Throws NotLatinError / NoIdentityAtZeroError.
  static CayleyLoop from_table(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }

  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  // Unique x with a*x = b.
  Elem ldiv(Elem a, Elem b) const { return ldiv_[a * n_ + b]; }
  // Unique x with x*a = b.
  Elem rdiv(Elem b, Elem a) const { return rdiv_[a * n_ + b]; }

  // Solves z*x = 1 resp. x*z = 1.
  Elem left_inverse(Elem x) const { return rdiv(0, x); }
  Elem right_inverse(Elem x) const { return ldiv(x, 0); }

  // Two-sided inverse; throws NotIPError when the one-sided inverses of x
  // disagree.
  Elem inverse(Elem x) const;

  // Right-associated power x^k; x^0 = 1, x^(k+1) = x * x^k. Negative k
  // uses the two-sided inverse and therefore throws NotIPError on loops
  // where that inverse does not exist at x.
  Elem power(Elem x, long long k) const;

  // Smallest k > 0 with x^k = 1. Always exists: the orbit of the identity
  // under left translation by x is a cycle of a permutation.
  int element_order(Elem x) const;

  bool operator==(const CayleyLoop& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  const std::vector<int>& raw_table() const { return table_; }

 private:
  CayleyLoop(int n, std::vector<int> table);

  int n_ = 0;
  std::vector<int> table_;  // row-major
  std::vector<int> ldiv_;   // ldiv_[a*n+b] = a \ b
  std::vector<int> rdiv_;   // rdiv_[a*n+b] = b / a
};

// Least subset containing seed and the identity that is closed under
// mul, ldiv and rdiv. Elements are sorted.
struct SubloopClosure {
  std::vector<Elem> elements;
  std::vector<Elem> generators;
};

SubloopClosure subloop_closure(const CayleyLoop& L, const std::vector<Elem>& seed);

// The induced loop on a mul-closed subset containing 0 (elements sorted);
// element i of the result corresponds to elements[i]. Throws if the subset
// is not closed.
CayleyLoop subloop_table(const CayleyLoop& L, const std::vector<Elem>& elements);

// Three-sided nucleus: all a associating with every pair in each position.
std::vector<Elem> nucleus(const CayleyLoop& L);

// Componentwise product; pair (a, b) becomes index a*|L2| + b.
CayleyLoop direct_product(const CayleyLoop& L1, const CayleyLoop& L2);

// Transpose of the table: x o y = y * x.
CayleyLoop opposite(const CayleyLoop& L);

// Doubling construction on a group G: elements 0..n-1 are g, n..2n-1 are
// g*u, with g*h = gh, g*(hu) = (hg)u, (gu)*h = (gh^-1)u, (gu)*(hu) = h^-1 g.
// Throws NotAGroupError when G is not associative.
CayleyLoop chein_double(const CayleyLoop& G);

bool is_associative(const CayleyLoop& L);
bool is_commutative(const CayleyLoop& L);
// Associative and every element squares to the identity.
bool is_boolean_group(const CayleyLoop& L);

// Backtracking isomorphism test (identity maps to identity). Prunes on
// translation cycle-type fingerprints and extends partial maps through
// products, so it is exact and fast enough for orders <= 30.
bool isomorphic(const CayleyLoop& L1, const CayleyLoop& L2);

// Isomorphism-invariant fingerprint used as a pre-filter by isomorphic();
// equal loops get equal fingerprints.
std::uint64_t iso_fingerprint(const CayleyLoop& L);

// --- text format ---------------------------------------------------------
// Line 1: n. Next n lines: n whitespace-separated entries. '#' starts a
// comment line. serialize_loop emits the canonical form (single spaces,
// one trailing newline); parse(serialize(L)) == L exactly.

CayleyLoop parse_loop(const std::string& text);
std::string serialize_loop(const CayleyLoop& L);
CayleyLoop load_loop_file(const std::string& path);

// Small constructions used throughout tests and the corpus.
CayleyLoop cyclic_group(int n);
CayleyLoop boolean_group(int k);  // (Z2)^k, order 2^k
CayleyLoop symmetric_group_s3();

}  // namespace loopforge

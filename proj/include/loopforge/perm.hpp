#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge {

// Permutation of 0..n-1. Composition is diagrammatic throughout this
// project: (i)(p*q) = ((i)p)q, i.e. p acts first.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Diagrammatic product: apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
Permutation pow(const Permutation& p, long long k);
std::string cycle_notation(const Permutation& p);

// y -> x*y (row x of the table) and y -> y*x (column x).
Permutation l_map(const CayleyLoop& L, Elem x);
Permutation r_map(const CayleyLoop& L, Elem x);

// T(x) = R(x)L(x)^-1, L(x,y) = L(x)L(y)L(yx)^-1, R(x,y) = R(x)R(y)R(xy)^-1.
Permutation t_map(const CayleyLoop& L, Elem x);
Permutation l_inner(const CayleyLoop& L, Elem x, Elem y);
Permutation r_inner(const CayleyLoop& L, Elem x, Elem y);

// All 2n^2 + n labeled inner-mapping generators; each fixes 0.
std::vector<std::pair<std::string, Permutation>> inner_generators(
    const CayleyLoop& L);
// Streaming variant that avoids materializing the full list.
void for_each_inner_generator(
    const CayleyLoop& L,
    const std::function<bool(const std::string&, const Permutation&)>& visit);

// A permutation group given by generators; elements are populated by
// closure() up to cap, in a deterministic breadth-first order.
struct GeneratedGroup {
  enum class Status { NotPopulated, Complete, CapExceeded };

  int degree = 0;
  std::vector<Permutation> generators;
  std::size_t cap = 1'000'000;
  Status status = Status::NotPopulated;
  std::vector<Permutation> elements;

  bool complete() const { return status == Status::Complete; }
};

GeneratedGroup make_group(int degree, std::vector<Permutation> generators,
                          std::size_t cap = 1'000'000);

// Breadth-first product closure; sets status to Complete or CapExceeded
// (elements then holds the partial set of size cap).
void closure(GeneratedGroup& g);

// Multiplication group <L(x), R(x) : x> and inner mapping group
// (generated by T, L(x,y), R(x,y)).
GeneratedGroup mlt(const CayleyLoop& L, std::size_t cap = 1'000'000);
GeneratedGroup mlt1(const CayleyLoop& L, std::size_t cap = 1'000'000);

// The inversion permutation x -> x^-1; requires two-sided inverses
// everywhere (throws NotIPError otherwise).
Permutation j_perm(const CayleyLoop& L);

// theta^J = J theta J.
Permutation conj_by_j(const CayleyLoop& L, const Permutation& p);

struct RifCheck {
  bool holds = true;
  std::string witness;  // label of the first generator with g^J != g
};

// Checks conj_by_j(g) == g on every inner-mapping generator. Sufficient
// for the whole inner mapping group because conjugation by J is an
// automorphism of it.
RifCheck is_rif_inner(const CayleyLoop& L);

// Full-closure variant (slow oracle): checks theta^J = theta on every
// element of mlt1. Returns nullopt when the closure exceeds cap.
std::optional<RifCheck> is_rif_inner_full(const CayleyLoop& L,
                                          std::size_t cap = 1'000'000);

// Stabilizer of `point` inside <generators>, computed from orbit coset
// representatives (generators u_b s u_{bs}^-1) and then closed. This path
// never consults the inner-mapping generators, so it serves as an
// independent cross-check of mlt1.
GeneratedGroup stabilizer_schreier(int degree,
                                   const std::vector<Permutation>& generators,
                                   int point, std::size_t cap = 1'000'000);

}  // namespace loopforge

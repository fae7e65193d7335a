#include "loopforge/perm.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace loopforge {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw LoopError("images do not form a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError(p.degree(), q.degree());
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q(p(i));
  return Permutation(std::move(img));
}

Permutation invert(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p(i)] = i;
  return Permutation(std::move(img));
}

Permutation pow(const Permutation& p, long long k) {
  Permutation base = k < 0 ? invert(p) : p;
  if (k < 0) k = -k;
  Permutation acc = Permutation::identity(p.degree());
  for (long long i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

std::string cycle_notation(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p(i) == i) continue;
    any = true;
    out << '(' << i;
    seen[i] = 1;
    for (int j = p(i); j != i; j = p(j)) {
      seen[j] = 1;
      out << ' ' << j;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation l_map(const CayleyLoop& L, Elem x) {
  std::vector<int> img(L.order());
  for (int y = 0; y < L.order(); ++y) img[y] = L.mul(x, y);
  return Permutation(std::move(img));
}

Permutation r_map(const CayleyLoop& L, Elem x) {
  std::vector<int> img(L.order());
  for (int y = 0; y < L.order(); ++y) img[y] = L.mul(y, x);
  return Permutation(std::move(img));
}

Permutation t_map(const CayleyLoop& L, Elem x) {
  // R(x) then L(x)^-1: y -> x \ (y*x).
  std::vector<int> img(L.order());
  for (int y = 0; y < L.order(); ++y) img[y] = L.ldiv(x, L.mul(y, x));
  return Permutation(std::move(img));
}

Permutation l_inner(const CayleyLoop& L, Elem x, Elem y) {
  // L(x), L(y), then L(yx)^-1: z -> (yx) \ (y*(x*z)).
  const Elem yx = L.mul(y, x);
  std::vector<int> img(L.order());
  for (int z = 0; z < L.order(); ++z)
    img[z] = L.ldiv(yx, L.mul(y, L.mul(x, z)));
  return Permutation(std::move(img));
}

Permutation r_inner(const CayleyLoop& L, Elem x, Elem y) {
  // R(x), R(y), then R(xy)^-1: z -> ((z*x)*y) / (xy).
  const Elem xy = L.mul(x, y);
  std::vector<int> img(L.order());
  for (int z = 0; z < L.order(); ++z)
    img[z] = L.rdiv(L.mul(L.mul(z, x), y), xy);
  return Permutation(std::move(img));
}

void for_each_inner_generator(
    const CayleyLoop& L,
    const std::function<bool(const std::string&, const Permutation&)>& visit) {
  const int n = L.order();
  for (Elem x = 0; x < n; ++x)
    if (!visit("T(" + std::to_string(x) + ")", t_map(L, x))) return;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!visit("L(" + std::to_string(x) + "," + std::to_string(y) + ")",
                 l_inner(L, x, y)))
        return;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!visit("R(" + std::to_string(x) + "," + std::to_string(y) + ")",
                 r_inner(L, x, y)))
        return;
}

std::vector<std::pair<std::string, Permutation>> inner_generators(
    const CayleyLoop& L) {
  std::vector<std::pair<std::string, Permutation>> out;
  out.reserve(2 * L.order() * L.order() + L.order());
  for_each_inner_generator(L, [&](const std::string& label,
                                  const Permutation& p) {
    out.emplace_back(label, p);
    return true;
  });
  return out;
}

GeneratedGroup make_group(int degree, std::vector<Permutation> generators,
                          std::size_t cap) {
  GeneratedGroup g;
  g.degree = degree;
  g.generators = std::move(generators);
  g.cap = cap;
  return g;
}

void closure(GeneratedGroup& g) {
  std::unordered_set<Permutation, PermutationHash> seen;
  g.elements.clear();
  auto push = [&](Permutation p) {
    if (seen.insert(p).second) {
      g.elements.push_back(std::move(p));
      return true;
    }
    return false;
  };
  push(Permutation::identity(g.degree));
  // Deduplicate generators first; keeps the frontier small.
  std::vector<Permutation> gens;
  {
    std::unordered_set<Permutation, PermutationHash> gset;
    for (const auto& p : g.generators)
      if (gset.insert(p).second) gens.push_back(p);
  }
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const Permutation& s : gens) {
      Permutation w = compose(g.elements[i], s);
      push(std::move(w));
      if (g.elements.size() > g.cap) {
        g.elements.erase(g.elements.begin() + static_cast<long>(g.cap),
                         g.elements.end());
        g.status = GeneratedGroup::Status::CapExceeded;
        return;
      }
    }
  }
  g.status = GeneratedGroup::Status::Complete;
}

GeneratedGroup mlt(const CayleyLoop& L, std::size_t cap) {
  std::vector<Permutation> gens;
  gens.reserve(2 * L.order());
  for (Elem x = 0; x < L.order(); ++x) {
    gens.push_back(l_map(L, x));
    gens.push_back(r_map(L, x));
  }
  return make_group(L.order(), std::move(gens), cap);
}

GeneratedGroup mlt1(const CayleyLoop& L, std::size_t cap) {
  std::vector<Permutation> gens;
  gens.reserve(2 * L.order() * L.order() + L.order());
  for_each_inner_generator(L, [&](const std::string&, const Permutation& p) {
    gens.push_back(p);
    return true;
  });
  return make_group(L.order(), std::move(gens), cap);
}

Permutation j_perm(const CayleyLoop& L) {
  std::vector<int> img(L.order());
  for (Elem x = 0; x < L.order(); ++x) img[x] = L.inverse(x);
  return Permutation(std::move(img));
}

Permutation conj_by_j(const CayleyLoop& L, const Permutation& p) {
  Permutation j = j_perm(L);
  return compose(j, compose(p, j));
}

RifCheck is_rif_inner(const CayleyLoop& L) {
  const Permutation j = j_perm(L);
  RifCheck res;
  for_each_inner_generator(L, [&](const std::string& label,
                                  const Permutation& g) {
    // g^J computed pointwise to avoid allocations.
    for (int i = 0; i < L.order(); ++i) {
      if (j(g(j(i))) != g(i)) {
        res.holds = false;
        res.witness = label;
        return false;
      }
    }
    return true;
  });
  return res;
}

std::optional<RifCheck> is_rif_inner_full(const CayleyLoop& L,
                                          std::size_t cap) {
  const Permutation j = j_perm(L);
  GeneratedGroup g = mlt1(L, cap);
  closure(g);
  if (!g.complete()) return std::nullopt;
  RifCheck res;
  for (const Permutation& p : g.elements) {
    if (!(compose(j, compose(p, j)) == p)) {
      res.holds = false;
      res.witness = cycle_notation(p);
      return res;
    }
  }
  return res;
}

GeneratedGroup stabilizer_schreier(int degree,
                                   const std::vector<Permutation>& generators,
                                   int point, std::size_t cap) {
  // BFS orbit of `point`, keeping one coset representative per orbit point.
  std::vector<int> index_of(degree, -1);
  std::vector<Permutation> reps;
  std::vector<int> orbit;
  orbit.push_back(point);
  index_of[point] = 0;
  reps.push_back(Permutation::identity(degree));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation& s : generators) {
      int img = s(orbit[i]);
      if (index_of[img] < 0) {
        index_of[img] = static_cast<int>(orbit.size());
        orbit.push_back(img);
        reps.push_back(compose(reps[i], s));
      }
    }
  }
  std::vector<Permutation> schreier;
  std::unordered_set<Permutation, PermutationHash> dedup;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation& s : generators) {
      int img = s(orbit[i]);
      Permutation gen = compose(compose(reps[i], s), invert(reps[index_of[img]]));
      if (!gen.is_identity() && dedup.insert(gen).second)
        schreier.push_back(std::move(gen));
    }
  }
  return make_group(degree, std::move(schreier), cap);
}

}  // namespace loopforge

#include "loopforge/suites.hpp"

#include <sstream>

#include "loopforge/perm.hpp"

namespace loopforge {

namespace {

// splitmix64: deterministic, seedable, good enough for sampling exponents.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::string tuple_str(std::initializer_list<long long> xs) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (long long v : xs) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

SuiteResult suite_p_factorization(const CayleyLoop& L) {
  SuiteResult res;
  res.name = "p_factorization";
  const int n = L.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xyx = L.mul(x, L.mul(y, x));
      bool ok = true;
      for (Elem z = 0; z < n && ok; ++z) {
        // z P(x) P(y) P(x) vs z P(xyx), with P(a): w -> (a*w)*a
        Elem w = L.mul(L.mul(x, z), x);
        w = L.mul(L.mul(y, w), y);
        w = L.mul(L.mul(x, w), x);
        ok = w == L.mul(L.mul(xyx, z), xyx);
      }
      if (ok)
        ++res.passed;
      else {
        ++res.failed;
        if (res.first_failure.empty())
          res.first_failure = "P factorization fails at " + tuple_str({x, y});
      }
    }
  }
  return res;
}

SuiteResult suite_c_translation_squares(const CayleyLoop& L) {
  SuiteResult res;
  res.name = "c_translation_squares";
  const int n = L.order();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = L.mul(x, y);
      const Elem yxy = L.mul(y, xy);        // y(xy)
      const Elem xyx = L.mul(xy, x);        // (xy)x
      bool ok = true;
      for (Elem z = 0; z < n && ok; ++z) {
        Elem sq = L.mul(L.mul(z, xy), xy);
        ok = sq == L.mul(L.mul(z, x), yxy) && sq == L.mul(L.mul(z, xyx), y);
      }
      if (ok)
        ++res.passed;
      else {
        ++res.failed;
        if (res.first_failure.empty())
          res.first_failure =
              "translation square identity fails at " + tuple_str({x, y});
      }
    }
  }
  return res;
}

SuiteResult suite_square_sandwich(const CayleyLoop& L) {
  SuiteResult res;
  res.name = "square_sandwich";
  const int n = L.order();
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = L.inverse(x);
    for (Elem y = 0; y < n; ++y) {
      const Elem y2 = L.mul(y, y);
      const Elem a = L.mul(y2, xi);   // y^2 x^-1
      const Elem b = L.mul(xi, y2);   // x^-1 y^2
      const Elem xy2 = L.mul(x, y2);
      const Elem y2x = L.mul(y2, x);
      bool ok = true;
      for (Elem z = 0; z < n && ok; ++z) {
        ok = L.mul(L.mul(L.mul(z, x), a), x) == L.mul(z, xy2) &&
             L.mul(x, L.mul(b, L.mul(x, z))) == L.mul(y2x, z);
      }
      if (ok)
        ++res.passed;
      else {
        ++res.failed;
        if (res.first_failure.empty())
          res.first_failure = "square sandwich fails at " + tuple_str({x, y});
      }
    }
  }
  return res;
}

SuiteResult suite_parity_shift(const CayleyLoop& L, const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "parity_shift";
  const int n = L.order();
  const int R = cfg.shift_range;
  Rng rng(cfg.seed ^ (static_cast<std::uint64_t>(n) << 32));
  auto r_of = [&](Elem e) { return r_map(L, e); };
  auto l_of = [&](Elem e) { return l_map(L, e); };

  for (int t = 0; t < cfg.sampled_tuples; ++t) {
    Elem x = rng.uniform(0, n - 1);
    Elem y = rng.uniform(0, n - 1);
    int m = rng.uniform(-R, R);
    int nn = rng.uniform(-R, R);
    int k = rng.uniform(-R, R);
    if (k % 2 != 0 && (m + nn) % 2 != 0) {
      // Resample k even so the tuple satisfies the parity hypothesis.
      k = 2 * rng.uniform(-R / 2, R / 2);
    }
    const Elem yi = L.inverse(y);
    const Elem xm = L.power(x, m), xn = L.power(x, nn);
    const Elem xmk = L.power(x, m + k), xnk = L.power(x, nn - k);

    bool ok =
        compose(r_of(L.mul(y, xm)), r_of(L.mul(xn, yi))) ==
            compose(r_of(L.mul(y, xmk)), r_of(L.mul(xnk, yi))) &&
        compose(r_of(L.mul(xm, y)), r_of(L.mul(yi, xn))) ==
            compose(r_of(L.mul(xmk, y)), r_of(L.mul(yi, xnk))) &&
        compose(l_of(L.mul(xm, y)), l_of(L.mul(yi, xn))) ==
            compose(l_of(L.mul(xmk, y)), l_of(L.mul(yi, xnk))) &&
        compose(l_of(L.mul(y, xm)), l_of(L.mul(xn, yi))) ==
            compose(l_of(L.mul(y, xmk)), l_of(L.mul(xnk, yi)));
    if (ok)
      ++res.passed;
    else {
      ++res.failed;
      if (res.first_failure.empty())
        res.first_failure =
            "translation shift fails at (x,y,m,n,k)=" + tuple_str({x, y, m, nn, k});
    }
  }
  return res;
}

SuiteResult suite_power_merge(const CayleyLoop& L, const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "power_merge";
  if (!is_flexible(L).holds || !is_power_alternative(L).holds) {
    res.applicable = false;
    res.first_failure = "three-factor powers would be ambiguous here";
    return res;
  }
  const int n = L.order();
  const int R = cfg.merge_range;
  Rng rng(cfg.seed ^ 0xAB5E17ull ^ static_cast<std::uint64_t>(n));
  for (int t = 0; t < cfg.sampled_tuples; ++t) {
    Elem x = rng.uniform(0, n - 1);
    Elem y = rng.uniform(0, n - 1);
    int i = rng.uniform(-R, R), j = rng.uniform(-R, R);
    int m = rng.uniform(-R, R), nn = rng.uniform(-R, R);
    Elem lhs = L.mul(L.mul(L.power(x, i), L.power(y, m)),
                     L.mul(L.power(y, nn), L.power(x, j)));
    Elem rhs = L.mul(L.mul(L.power(x, i), L.power(y, m + nn)), L.power(x, j));
    if (lhs == rhs)
      ++res.passed;
    else {
      ++res.failed;
      if (res.first_failure.empty())
        res.first_failure =
            "power merge fails at (x,y,i,m,n,j)=" + tuple_str({x, y, i, m, nn, j});
    }
  }
  return res;
}

SuiteResult suite_conjugate_powers(const CayleyLoop& L,
                                   const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "conjugate_powers";
  const int n = L.order();
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = L.inverse(x);
    for (Elem y = 0; y < n; ++y) {
      const Elem conj = L.mul(L.mul(xi, y), x);
      bool ok = true;
      for (int k = -cfg.conj_range; k <= cfg.conj_range && ok; ++k)
        ok = L.power(conj, k) == L.mul(L.mul(xi, L.power(y, k)), x);
      if (ok)
        ++res.passed;
      else {
        ++res.failed;
        if (res.first_failure.empty())
          res.first_failure = "conjugate power fails at " + tuple_str({x, y});
      }
    }
  }
  return res;
}

SuiteResult suite_commutative_diassociative(const CayleyLoop& L) {
  SuiteResult res;
  res.name = "commutative_diassociative";
  PropertyValue d = is_diassociative(L);
  if (d.holds)
    ++res.passed;
  else {
    ++res.failed;
    res.first_failure = "commutative loop is not diassociative at " +
                        tuple_str({(*d.witness)[0], (*d.witness)[1]});
  }
  return res;
}

SuiteResult suite_inclusions(const PropertyReport& report,
                             const CayleyLoop& L) {
  SuiteResult res;
  res.name = "inclusions";
  for (const InclusionEdge& e : inclusion_edges()) {
    if (e.check(report, L))
      ++res.passed;
    else {
      ++res.failed;
      if (res.first_failure.empty()) res.first_failure = e.name;
    }
  }
  return res;
}

std::vector<SuiteResult> run_suites(const CayleyLoop& L,
                                    const PropertyReport& report,
                                    const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  out.push_back(suite_inclusions(report, L));
  if (report.value("rif")) out.push_back(suite_p_factorization(L));
  if (report.value("c_loop")) out.push_back(suite_c_translation_squares(L));
  if (report.value("arif")) {
    out.push_back(suite_square_sandwich(L));
    out.push_back(suite_parity_shift(L, cfg));
    out.push_back(suite_power_merge(L, cfg));
    out.push_back(suite_conjugate_powers(L, cfg));
    if (report.value("commutative"))
      out.push_back(suite_commutative_diassociative(L));
  }
  return out;
}

}  // namespace loopforge

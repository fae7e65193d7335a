#include "loopforge/varieties.hpp"

#include <algorithm>
#include <stdexcept>

#include "loopforge/perm.hpp"

namespace loopforge {

const PropertyValue& PropertyReport::at(const std::string& name) const {
  for (const auto& [k, v] : entries)
    if (k == name) return v;
  throw LoopError("no such property: " + name);
}

namespace {

PropertyValue from_check(const CheckResult& c) {
  PropertyValue v;
  v.holds = c.holds;
  if (c.witness) v.witness = c.witness;
  return v;
}

PropertyValue check_named(const CayleyLoop& L, const char* name) {
  return from_check(holds(L, catalog_identity(name)));
}

}  // namespace

PropertyValue is_ip(const CayleyLoop& L) {
  const int n = L.order();
  PropertyValue v;
  for (Elem x = 0; x < n; ++x) {
    if (L.left_inverse(x) != L.right_inverse(x)) {
      v.holds = false;
      v.witness = std::vector<Elem>{x};
      v.note = "one-sided inverses differ";
      return v;
    }
  }
  for (Elem x = 0; x < n; ++x) {
    Elem xi = L.left_inverse(x);
    for (Elem y = 0; y < n; ++y) {
      if (L.mul(xi, L.mul(x, y)) != y || L.mul(L.mul(y, x), xi) != y) {
        v.holds = false;
        v.witness = std::vector<Elem>{x, y};
        v.note = "inverse cancellation fails";
        return v;
      }
    }
  }
  return v;
}

PropertyValue is_flexible(const CayleyLoop& L) { return check_named(L, "FLEX"); }
PropertyValue is_left_alt(const CayleyLoop& L) { return check_named(L, "LALT"); }
PropertyValue is_right_alt(const CayleyLoop& L) { return check_named(L, "RALT"); }

PropertyValue is_alternative(const CayleyLoop& L) {
  PropertyValue l = is_left_alt(L);
  if (!l.holds) return l;
  return is_right_alt(L);
}

PropertyValue is_moufang(const CayleyLoop& L) {
  PropertyValue first = check_named(L, "M1");
  for (const char* name : {"M2", "N1", "N2"}) {
    PropertyValue other = check_named(L, name);
    if (other.holds != first.holds)
      throw std::logic_error(
          "the four Moufang identities are pairwise equivalent in loops; "
          "a disagreement means the checker is broken");
  }
  return first;
}

PropertyValue is_c_loop(const CayleyLoop& L) { return check_named(L, "C"); }

PropertyValue is_extra(const CayleyLoop& L) {
  PropertyValue m = is_moufang(L);
  if (!m.holds) {
    m.note = "not Moufang";
    return m;
  }
  PropertyValue c = is_c_loop(L);
  if (!c.holds) c.note = "not a C-loop";
  return c;
}

PropertyValue is_steiner(const CayleyLoop& L) {
  PropertyValue ip = is_ip(L);
  if (!ip.holds) {
    ip.note = "not IP";
    return ip;
  }
  for (Elem x = 0; x < L.order(); ++x)
    if (L.mul(x, x) != 0) {
      PropertyValue v;
      v.holds = false;
      v.witness = std::vector<Elem>{x};
      v.note = "element does not square to 1";
      return v;
    }
  return PropertyValue{};
}

PropertyValue is_rif(const CayleyLoop& L) {
  PropertyValue ip = is_ip(L);
  if (!ip.holds) {
    ip.note = "not IP";
    return ip;
  }
  RifCheck inner = is_rif_inner(L);
  CheckResult e3 = holds(L, catalog_identity("RIF3"));
  CheckResult e4 = holds(L, catalog_identity("RIF4"));
  bool equational = e3.holds && e4.holds;
  if (inner.holds != equational)
    throw std::logic_error(
        "inner-mapping and equational routes disagree on RIF");
  PropertyValue v;
  v.holds = inner.holds;
  if (!v.holds) {
    v.note = inner.witness;
    v.witness = e3.holds ? e4.witness : e3.witness;
  }
  return v;
}

PropertyValue is_arif(const CayleyLoop& L) {
  PropertyValue f = is_flexible(L);
  if (!f.holds) {
    f.note = "not flexible";
    return f;
  }
  PropertyValue w1 = check_named(L, "W1");
  if (!w1.holds) {
    w1.note = "W1 fails";
    return w1;
  }
  PropertyValue w2 = check_named(L, "W2");
  if (!w2.holds) w2.note = "W2 fails";
  return w2;
}

PropertyValue is_power_associative(const CayleyLoop& L) {
  for (Elem x = 0; x < L.order(); ++x) {
    auto cl = subloop_closure(L, {x});
    const auto& e = cl.elements;
    for (Elem a : e)
      for (Elem b : e)
        for (Elem c : e)
          if (L.mul(a, L.mul(b, c)) != L.mul(L.mul(a, b), c)) {
            PropertyValue v;
            v.holds = false;
            v.witness = std::vector<Elem>{x};
            v.note = "cyclic subloop is not a group";
            return v;
          }
  }
  return PropertyValue{};
}

PropertyValue is_power_alternative(const CayleyLoop& L) {
  const int n = L.order();
  const bool ip = is_ip(L).holds;
  for (Elem x = 0; x < n; ++x) {
    const int c = L.element_order(x);
    const Permutation lx = l_map(L, x);
    const Permutation rx = r_map(L, x);
    Permutation pl = Permutation::identity(n);
    Permutation pr = Permutation::identity(n);
    Elem xp = 0;
    for (int i = 0; i <= 2 * c; ++i) {
      if (!(l_map(L, xp) == pl) || !(r_map(L, xp) == pr)) {
        PropertyValue v;
        v.holds = false;
        v.witness = std::vector<Elem>{x, static_cast<Elem>(i)};
        v.note = "translation of a power is not the power of the translation";
        return v;
      }
      xp = L.mul(x, xp);
      pl = compose(pl, lx);
      pr = compose(pr, rx);
    }
    if (ip) {
      const Elem xi = L.inverse(x);
      const Permutation lxi = invert(lx);
      const Permutation rxi = invert(rx);
      Permutation nl = Permutation::identity(n);
      Permutation nr = Permutation::identity(n);
      Elem xn = 0;
      for (int i = 1; i <= 2 * c; ++i) {
        xn = L.mul(xi, xn);  // x^-i
        nl = compose(nl, lxi);
        nr = compose(nr, rxi);
        if (!(l_map(L, xn) == nl) || !(r_map(L, xn) == nr)) {
          PropertyValue v;
          v.holds = false;
          v.witness = std::vector<Elem>{x, static_cast<Elem>(-i)};
          v.note = "negative power fails";
          return v;
        }
      }
    }
  }
  return PropertyValue{};
}

PropertyValue is_diassociative(const CayleyLoop& L) {
  const int n = L.order();
  // Subsets already known to be associative and closed; any pair inside
  // one of them generates an associative subloop.
  std::vector<std::vector<char>> known;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      bool covered = false;
      for (const auto& set : known)
        if (set[x] && set[y]) {
          covered = true;
          break;
        }
      if (covered) continue;
      auto cl = subloop_closure(L, {x, y});
      const auto& e = cl.elements;
      for (Elem a : e)
        for (Elem b : e)
          for (Elem c : e)
            if (L.mul(a, L.mul(b, c)) != L.mul(L.mul(a, b), c)) {
              PropertyValue v;
              v.holds = false;
              v.witness = std::vector<Elem>{x, y};
              v.note = "two-generated subloop is not a group";
              return v;
            }
      std::vector<char> set(n, 0);
      for (Elem m : e) set[m] = 1;
      known.push_back(std::move(set));
    }
  }
  return PropertyValue{};
}

bool every_element_is_square(const CayleyLoop& L) {
  const int n = L.order();
  std::vector<char> sq(n, 0);
  for (Elem y = 0; y < n; ++y) sq[L.mul(y, y)] = 1;
  return std::all_of(sq.begin(), sq.end(), [](char c) { return c != 0; });
}

namespace {

PropertyValue from_bool(bool b) {
  PropertyValue v;
  v.holds = b;
  return v;
}

bool imp(bool a, bool b) { return !a || b; }

}  // namespace

const std::vector<InclusionEdge>& inclusion_edges() {
  static const std::vector<InclusionEdge> edges = {
      {"steiner_implies_rif",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("steiner"), r.value("rif"));
       }},
      {"moufang_implies_rif",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("moufang"), r.value("rif"));
       }},
      {"rif_implies_arif",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("rif"), r.value("arif"));
       }},
      {"flexible_c_implies_arif",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("flexible") && r.value("c_loop"), r.value("arif"));
       }},
      {"arif_implies_alternative_ip",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("arif"), r.value("ip") && r.value("alternative"));
       }},
      {"arif_implies_power_alternative",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("arif"), r.value("power_alternative"));
       }},
      {"arif_implies_diassociative",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("arif"), r.value("diassociative"));
       }},
      {"diassociative_implies_ip_flexible_alternative",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("diassociative"), r.value("ip") &&
                                                  r.value("flexible") &&
                                                  r.value("alternative"));
       }},
      {"odd_order_arif_implies_moufang",
       [](const PropertyReport& r, const CayleyLoop& L) {
         return imp(r.value("arif") && L.order() % 2 == 1,
                    r.value("moufang"));
       }},
      {"all_squares_arif_implies_moufang",
       [](const PropertyReport& r, const CayleyLoop& L) {
         return imp(r.value("arif") && every_element_is_square(L),
                    r.value("moufang"));
       }},
      {"power_alternative_implies_power_associative",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("power_alternative"),
                    r.value("power_associative"));
       }},
      {"steiner_implies_commutative",
       [](const PropertyReport& r, const CayleyLoop&) {
         return imp(r.value("steiner"), r.value("commutative"));
       }},
  };
  return edges;
}

PropertyReport classify(const CayleyLoop& L) {
  PropertyReport r;
  auto put = [&](const char* name, PropertyValue v) {
    r.entries.emplace_back(name, std::move(v));
  };
  put("associative", from_bool(is_associative(L)));
  put("commutative", from_bool(is_commutative(L)));
  put("boolean_group", from_bool(is_boolean_group(L)));
  put("ip", is_ip(L));
  put("flexible", is_flexible(L));
  put("left_alt", is_left_alt(L));
  put("right_alt", is_right_alt(L));
  put("alternative", is_alternative(L));
  put("moufang", is_moufang(L));
  put("c_loop", is_c_loop(L));
  put("extra", is_extra(L));
  put("steiner", is_steiner(L));
  put("rif", is_rif(L));
  put("arif", is_arif(L));
  put("power_associative", is_power_associative(L));
  put("power_alternative", is_power_alternative(L));
  put("diassociative", is_diassociative(L));

  for (const InclusionEdge& e : inclusion_edges())
    if (!e.check(r, L))
      throw std::logic_error("variety inclusion violated: " + e.name);
  return r;
}

}  // namespace loopforge

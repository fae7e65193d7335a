#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopforge/loop.hpp"
#include "loopforge/term.hpp"

namespace loopforge {

struct PropertyValue {
  bool holds = true;
  // Element-tuple witness (meaning depends on the property), when one exists.
  std::optional<std::vector<Elem>> witness;
  // Free-form witness when elements don't fit (e.g. an inner-mapping label).
  std::string note;
};

// Classification of one loop against every variety in the catalog, in a
// fixed order suitable for byte-stable reports.
struct PropertyReport {
  std::vector<std::pair<std::string, PropertyValue>> entries;

  const PropertyValue& at(const std::string& name) const;
  bool value(const std::string& name) const { return at(name).holds; }
};

// Individual predicates. Witnesses are the lexicographically first
// falsifiers where applicable.
PropertyValue is_ip(const CayleyLoop& L);
PropertyValue is_flexible(const CayleyLoop& L);
PropertyValue is_left_alt(const CayleyLoop& L);
PropertyValue is_right_alt(const CayleyLoop& L);
PropertyValue is_alternative(const CayleyLoop& L);
// Conjunction of the four Moufang identities; they are pairwise equivalent
// in loops, and a disagreement between them is reported as an internal
// error rather than a classification.
PropertyValue is_moufang(const CayleyLoop& L);
PropertyValue is_c_loop(const CayleyLoop& L);
PropertyValue is_extra(const CayleyLoop& L);
PropertyValue is_steiner(const CayleyLoop& L);
// Decided two ways (inner-mapping generators vs the equational
// characterization) which must agree; disagreement throws std::logic_error.
PropertyValue is_rif(const CayleyLoop& L);
PropertyValue is_arif(const CayleyLoop& L);
PropertyValue is_power_associative(const CayleyLoop& L);
// Translations of powers are powers of translations, checked for
// 0 <= i <= 2*element_order(x) on both sides, and for negative i through
// the inverse when the loop has the IP.
PropertyValue is_power_alternative(const CayleyLoop& L);
PropertyValue is_diassociative(const CayleyLoop& L);

bool every_element_is_square(const CayleyLoop& L);

// Full report over all 17 properties; verifies every inclusion edge
// between the varieties internally (a violation is a std::logic_error,
// since each edge is a theorem).
PropertyReport classify(const CayleyLoop& L);

// The inclusion edges asserted by classify, exposed for the test suites:
// each entry is (name, hypothesis-names, conclusion-names) evaluated
// against a report plus order parity / squareness side conditions.
struct InclusionEdge {
  std::string name;
  // Returns true when the edge is respected by the report.
  bool (*check)(const PropertyReport&, const CayleyLoop&);
};
const std::vector<InclusionEdge>& inclusion_edges();

}  // namespace loopforge

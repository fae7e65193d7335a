#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopforge/loop.hpp"
#include "loopforge/varieties.hpp"

namespace loopforge {

struct SuiteResult {
  std::string name;
  bool applicable = true;  // loop satisfies the suite's hypothesis
  long long passed = 0;
  long long failed = 0;
  std::string first_failure;  // human-readable, empty when clean
};

struct SuiteConfig {
  int sampled_tuples = 500;  // for the randomized suites
  std::uint64_t seed = 0x10095EEDull;
  int shift_range = 6;   // exponents for the parity-shift suite
  int merge_range = 4;   // exponents for the power-merge suite
  int conj_range = 6;    // exponent range for conjugate powers
};

// P(xyx) = P(x)P(y)P(x) with P(x) = L(x)R(x); hypothesis: RIF.
SuiteResult suite_p_factorization(const CayleyLoop& L);

// R(xy)^2 = R(x)R(y(xy)) = R((xy)x)R(y); hypothesis: C-loop.
SuiteResult suite_c_translation_squares(const CayleyLoop& L);

// R(x)R(y^2 x^-1)R(x) = R(xy^2) and the left-hand mirror; hypothesis: ARIF.
SuiteResult suite_square_sandwich(const CayleyLoop& L);

// The four translation-shift identities
//   R(y x^m)R(x^n y^-1) = R(y x^(m+k))R(x^(n-k) y^-1)   (and variants)
// sampled over exponents with k even or m+n even; hypothesis: ARIF.
SuiteResult suite_parity_shift(const CayleyLoop& L, const SuiteConfig& cfg);

// x^i y^m * y^n x^j = x^i y^(m+n) x^j over sampled exponents;
// hypothesis: ARIF (flexibility and power alternativity are re-verified
// before the unambiguous three-factor products are formed).
SuiteResult suite_power_merge(const CayleyLoop& L, const SuiteConfig& cfg);

// (x^-1 y x)^n = x^-1 y^n x for |n| <= conj_range; hypothesis: flexible
// power-alternative IP (holds in particular in every ARIF loop).
SuiteResult suite_conjugate_powers(const CayleyLoop& L, const SuiteConfig& cfg);

// Commutative ARIF loops are diassociative.
SuiteResult suite_commutative_diassociative(const CayleyLoop& L);

// Inclusion edges between the varieties evaluated on one report.
SuiteResult suite_inclusions(const PropertyReport& report, const CayleyLoop& L);

// Runs every suite whose hypothesis the report satisfies.
std::vector<SuiteResult> run_suites(const CayleyLoop& L,
                                    const PropertyReport& report,
                                    const SuiteConfig& cfg = {});

}  // namespace loopforge

// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its runtime. Budgets and tolerances are pinned here.

#include <doctest.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "loopforge/corpus.hpp"
#include "loopforge/finder.hpp"
#include "loopforge/perm.hpp"
#include "loopforge/report.hpp"
#include "loopforge/steiner.hpp"
#include "loopforge/suites.hpp"
#include "loopforge/words.hpp"
#include "support/naive_gen.hpp"

using namespace loopforge;
using namespace loopforge::testsupport;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int criterion, const std::string& what, bool ok, double secs) {
  std::cout << "[acceptance] criterion " << criterion << " (" << what
            << "): " << (ok ? "PASS" : "FAIL") << "  [" << secs << " s]\n";
}

const std::vector<CorpusEntry>& the_corpus() {
  static const std::vector<CorpusEntry> entries = corpus("data");
  return entries;
}

const std::map<std::string, PropertyReport>& all_reports() {
  static const std::map<std::string, PropertyReport> reports = [] {
    std::map<std::string, PropertyReport> m;
    for (const CorpusEntry& e : the_corpus()) m.emplace(e.name, classify(e.loop));
    return m;
  }();
  return reports;
}

}  // namespace

TEST_CASE("criterion 1: order-24 flexible C-loop end to end") {
  Timer timer;
  const CayleyLoop& L = corpus_entry(the_corpus(), "table1").loop;
  PropertyReport r = classify(L);
  bool ok = r.value("ip") && r.value("flexible") && r.value("c_loop") &&
            r.value("arif") && !r.value("rif") && !r.value("moufang") &&
            r.value("diassociative") && r.value("power_alternative");
  ok = ok && nucleus(L) == std::vector<Elem>{0, 1, 2};

  // The equational RIF characterization fails with a live witness.
  const Identity& rif3 = catalog_identity("RIF3");
  CheckResult c = holds(L, rif3);
  ok = ok && !c.holds && c.witness.has_value();
  if (c.witness) {
    std::map<std::string, Elem> env;
    for (std::size_t i = 0; i < rif3.vars.size(); ++i)
      env[rif3.vars[i]] = (*c.witness)[i];
    ok = ok && eval(L, rif3.lhs, env) != eval(L, rif3.rhs, env);
  }
  // Instantiated at (x,y,z) = (3,12,15) it reproduces the known inequality
  // with sides 16 and 15.
  std::map<std::string, Elem> env{{"x", 3}, {"y", 12}, {"z", 15}};
  Elem lhs = eval(L, rif3.lhs, env);
  Elem rhs = eval(L, rif3.rhs, env);
  ok = ok && lhs == 16 && rhs == 15;
  // Cross-check by chained table lookups.
  Elem a = L.mul(3, 12);
  ok = ok && L.mul(a, L.mul(15, a)) == 16;
  ok = ok && L.mul(L.mul(3, L.mul(L.mul(12, 15), 3)), 12) == 15;

  double secs = timer.seconds();
  ok = ok && secs < 10.0;
  report(1, "order-24 table classification and witness", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 2: order-12 non-flexible C-loop end to end") {
  Timer timer;
  const CayleyLoop& L = corpus_entry(the_corpus(), "table2").loop;
  PropertyReport r = classify(L);
  bool ok = r.value("c_loop") && !r.value("flexible") &&
            r.value("alternative") && r.value("ip");
  ok = ok && nucleus(L) == std::vector<Elem>{0, 1, 2};
  const PropertyValue& flex = r.at("flexible");
  ok = ok && flex.witness.has_value() &&
       *flex.witness == std::vector<Elem>{3, 6};
  ok = ok && L.mul(3, L.mul(6, 3)) == 7 && L.mul(L.mul(3, 6), 3) == 8;
  double secs = timer.seconds();
  ok = ok && secs < 5.0;
  report(2, "order-12 table classification and witness", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 3: 13-point triple system end to end") {
  Timer timer;
  TripleSystem ts = z13_system();
  bool ok = validate(ts).ok && ts.blocks.size() == 26;
  CayleyLoop L = steiner_loop(ts);
  auto pt = [](int p) { return p + 1; };
  ok = ok && L.mul(pt(1), pt(0)) == pt(10) && L.mul(pt(10), pt(5)) == pt(12) &&
       L.mul(pt(0), pt(5)) == pt(7) && L.mul(pt(1), pt(7)) == pt(12) &&
       L.mul(pt(1), pt(5)) == pt(4) && L.mul(pt(0), pt(4)) == pt(3);
  ok = ok && pi_all(L, {pt(1), pt(0), pt(5)}) == std::vector<Elem>{pt(12)};
  ok = ok && pi_all(L, {pt(0), pt(1), pt(5)}) ==
                 std::vector<Elem>{pt(3), pt(12)};
  double secs = timer.seconds();
  ok = ok && secs < 5.0;
  report(3, "triple system products and association sets", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 4: inclusion suite over the full corpus") {
  Timer timer;
  bool ok = the_corpus().size() >= 14;
  long long checked = 0, violations = 0;
  for (const CorpusEntry& e : the_corpus()) {
    const PropertyReport& r = all_reports().at(e.name);
    SuiteResult s = suite_inclusions(r, e.loop);
    checked += s.passed + s.failed;
    violations += s.failed;
    if (s.failed > 0) MESSAGE(e.name, ": ", s.first_failure);
  }
  ok = ok && violations == 0 && checked > 0;
  double secs = timer.seconds();
  ok = ok && secs < 600.0;
  report(4, "variety inclusions, zero violations across corpus", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 5: identity suites on RIF, C and ARIF corpus loops") {
  Timer timer;
  SuiteConfig cfg;  // 500 sampled tuples by default
  bool ok = true;
  int rif_loops = 0, c_loops = 0, arif_loops = 0;
  for (const CorpusEntry& e : the_corpus()) {
    const PropertyReport& r = all_reports().at(e.name);
    auto expect_clean = [&](const SuiteResult& s) {
      if (s.failed != 0) {
        MESSAGE(e.name, " ", s.name, ": ", s.first_failure);
        ok = false;
      }
    };
    if (r.value("rif")) {
      ++rif_loops;
      expect_clean(suite_p_factorization(e.loop));
    }
    if (r.value("c_loop")) {
      ++c_loops;
      expect_clean(suite_c_translation_squares(e.loop));
    }
    if (r.value("arif")) {
      ++arif_loops;
      expect_clean(suite_square_sandwich(e.loop));
      expect_clean(suite_parity_shift(e.loop, cfg));
      expect_clean(suite_power_merge(e.loop, cfg));
      expect_clean(suite_conjugate_powers(e.loop, cfg));
      if (r.value("commutative"))
        expect_clean(suite_commutative_diassociative(e.loop));
    }
  }
  ok = ok && rif_loops >= 10 && c_loops >= 10 && arif_loops >= 12;
  double secs = timer.seconds();
  ok = ok && secs < 600.0;
  report(5, "translation identity suites, zero failures", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 6: region witnesses match committed goldens") {
  Timer timer;
  bool ok = true;
  for (const CorpusEntry& e : the_corpus()) {
    const PropertyReport& r = all_reports().at(e.name);
    auto diffs = verify_expected(e, r);
    for (const auto& d : diffs) {
      MESSAGE(d);
      ok = false;
    }
    std::ifstream f("data/golden/" + e.name + ".json");
    if (!f) {
      MESSAGE("missing golden for ", e.name);
      ok = false;
      continue;
    }
    std::ostringstream want;
    want << f.rdbuf();
    std::string got = report_string(report_json(e.name, e.loop, r));
    if (got != want.str()) {
      MESSAGE("golden mismatch for ", e.name);
      ok = false;
    }
  }
  // The eight region witnesses, by name.
  auto region = [&](const char* name, std::initializer_list<const char*> yes,
                    std::initializer_list<const char*> no) {
    const PropertyReport& r = all_reports().at(name);
    for (const char* p : yes)
      if (!r.value(p)) ok = false;
    for (const char* p : no)
      if (r.value(p)) ok = false;
  };
  region("z2xz2", {"boolean_group", "extra"}, {});
  region("z3", {"associative", "extra"}, {"boolean_group"});
  region("chein_s3", {"moufang"}, {"extra", "associative"});
  region("steiner10", {"steiner"}, {"associative", "moufang"});
  region("steiner10_x_z3", {"rif", "flexible", "c_loop"},
         {"moufang", "steiner"});
  region("steiner10_x_chein_s3", {"rif"}, {"c_loop"});
  region("table1", {"flexible", "c_loop", "arif"}, {"rif"});
  region("table1_x_chein_s3", {"arif"}, {"c_loop", "rif"});
  double secs = timer.seconds();
  report(6, "eight inhabited regions with golden classifications", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 7: model finder against oracles and theorems") {
  Timer timer;
  bool ok = true;

  // (a) enumeration counts match the naive generator at orders <= 5.
  const std::size_t expected_classes[] = {0, 1, 1, 1, 2, 6};
  for (int n = 1; n <= 5; ++n) {
    SearchProblem p;
    p.n = n;
    p.mode = SearchMode::EnumerateUpToIso;
    SearchOutcome r = solve(p);
    std::size_t naive = iso_class_count(all_reduced_loops(n));
    if (r.models.size() != naive || naive != expected_classes[n]) {
      MESSAGE("enumeration mismatch at order ", n);
      ok = false;
    }
  }

  // (b) nonassociative exponent-two IP loops: none below order 10, and the
  // order-10 model is the affine-plane Steiner loop.
  for (int n = 1; n <= 9; ++n) {
    SearchProblem p;
    p.n = n;
    p.require_ip = true;
    p.require_exponent_two = true;
    p.forbid.push_back(catalog_identity("ASSOC"));
    SearchOutcome r = solve(p);
    if (r.status != SearchOutcome::Status::Unsat) {
      MESSAGE("expected UNSAT at order ", n, " within budget");
      ok = false;
    }
  }
  {
    SearchProblem p;
    p.n = 10;
    p.require_ip = true;
    p.require_exponent_two = true;
    p.forbid.push_back(catalog_identity("ASSOC"));
    SearchOutcome r = solve(p);
    bool sat_right = r.status == SearchOutcome::Status::Sat &&
                     isomorphic(r.models.at(0), steiner_loop(sts9_system()));
    if (!sat_right) {
      MESSAGE("order-10 search did not reproduce the Steiner loop");
      ok = false;
    }
  }

  // (c) sweep of every loop of order <= 6: classify() verifies all variety
  // inclusions internally; tally the three named theorems explicitly and
  // run the exhaustive translation suites on every hypothesis-satisfying
  // loop found by the enumeration.
  long long arif_count = 0;
  for (int n = 1; n <= 6; ++n) {
    SearchProblem p;
    p.n = n;
    p.mode = SearchMode::Enumerate;
    SearchOutcome r = solve(p);
    for (const CayleyLoop& L : r.models) {
      PropertyReport rep = classify(L);  // throws on any inclusion violation
      if (rep.value("arif")) {
        ++arif_count;
        if (!rep.value("diassociative") || !rep.value("power_alternative")) {
          MESSAGE("ARIF theorem violation at order ", n);
          ok = false;
        }
        if (n % 2 == 1 && !rep.value("moufang")) {
          MESSAGE("odd-order ARIF loop that is not Moufang at order ", n);
          ok = false;
        }
        SuiteConfig small;
        small.sampled_tuples = 20;
        if (suite_square_sandwich(L).failed != 0 ||
            suite_conjugate_powers(L, small).failed != 0) {
          MESSAGE("translation suite failure at order ", n);
          ok = false;
        }
      }
      if (rep.value("rif") && suite_p_factorization(L).failed != 0) {
        MESSAGE("P factorization failure at order ", n);
        ok = false;
      }
      if (rep.value("c_loop") &&
          suite_c_translation_squares(L).failed != 0) {
        MESSAGE("squared-translation failure at order ", n);
        ok = false;
      }
    }
  }
  ok = ok && arif_count > 0;

  double secs = timer.seconds();
  ok = ok && secs < 600.0;
  report(7, "finder vs naive oracle, Steiner sweep, order<=6 theorems", ok,
         secs);
  CHECK(ok);
}

TEST_CASE("criterion 8: word machinery bounds") {
  Timer timer;
  bool ok = true;

  // Block length of (a,a,a^-1,b,b^-1,b,a) is 3 whenever a and b lie in
  // distinct inverse pairs.
  int checked_pairs = 0;
  for (const CorpusEntry& e : the_corpus()) {
    if (e.loop.order() > 24) continue;
    if (!all_reports().at(e.name).value("ip")) continue;
    const CayleyLoop& L = e.loop;
    for (Elem a = 1; a < L.order() && checked_pairs < 2000; ++a)
      for (Elem b = 1; b < L.order() && checked_pairs < 2000; ++b) {
        if (b == a || b == L.inverse(a)) continue;
        Word w = {a, a, L.inverse(a), b, L.inverse(b), b, a};
        if (block_length(L, w) != 3) {
          MESSAGE("block length mismatch in ", e.name);
          ok = false;
        }
        ++checked_pairs;
      }
  }
  ok = ok && checked_pairs > 0;

  // Every ARIF corpus loop of order <= 24 associates all words up to
  // length 6 for every block bound.
  int d_checked = 0;
  for (const CorpusEntry& e : the_corpus()) {
    if (e.loop.order() > 24) continue;
    if (!all_reports().at(e.name).value("arif")) continue;
    DAssocResult r = d_associative(e.loop, 6, 6);
    if (!r.holds) {
      MESSAGE("association failure in ", e.name);
      ok = false;
    }
    ++d_checked;
  }
  ok = ok && d_checked >= 10;

  double secs = timer.seconds();
  ok = ok && secs < 300.0;
  report(8, "block lengths and bounded association", ok, secs);
  CHECK(ok);
}

TEST_CASE("criterion 9: independent oracles agree") {
  Timer timer;
  bool ok = true;

  // RIF two ways on every IP corpus loop.
  for (const CorpusEntry& e : the_corpus()) {
    if (!all_reports().at(e.name).value("ip")) continue;
    bool inner = is_rif_inner(e.loop).holds;
    bool equational = holds(e.loop, catalog_identity("RIF3")).holds &&
                      holds(e.loop, catalog_identity("RIF4")).holds;
    if (inner != equational) {
      MESSAGE("RIF routes disagree on ", e.name);
      ok = false;
    }
  }

  // Inner mapping group equals the Schreier stabilizer of 0, element for
  // element, on every corpus loop of order <= 14 whose closures complete
  // under the default cap. (The order-14 Steiner loop's groups exceed any
  // desk-scale cap; a capped closure is reported, never compared.)
  int compared = 0, capped = 0;
  for (const CorpusEntry& e : the_corpus()) {
    if (e.loop.order() > 14) continue;
    GeneratedGroup inner = mlt1(e.loop);
    closure(inner);
    GeneratedGroup stab =
        stabilizer_schreier(e.loop.order(), mlt(e.loop).generators, 0);
    closure(stab);
    if (!inner.complete() || !stab.complete()) {
      ++capped;
      std::cout << "[acceptance]   " << e.name
                << ": closure capped, comparison skipped\n";
      continue;
    }
    std::unordered_set<Permutation, PermutationHash> a(inner.elements.begin(),
                                                       inner.elements.end());
    std::unordered_set<Permutation, PermutationHash> b(stab.elements.begin(),
                                                       stab.elements.end());
    if (a != b) {
      MESSAGE("inner mapping group differs from stabilizer on ", e.name);
      ok = false;
    }
    ++compared;
  }
  ok = ok && compared >= 12;

  double secs = timer.seconds();
  report(9, "RIF dual route and Schreier stabilizer agreement (" +
                std::to_string(compared) + " compared, " +
                std::to_string(capped) + " capped)",
         ok, secs);
  CHECK(ok);
}

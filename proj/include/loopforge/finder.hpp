#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "loopforge/loop.hpp"
#include "loopforge/term.hpp"

namespace loopforge {

// Latin-square completion state. Row 0 and column 0 are always prefilled
// with the identity map; masks track the values still available per line.
struct PartialTable {
  int n = 0;
  std::vector<int> cells;             // row-major, -1 = unset
  std::vector<std::uint32_t> row_mask;
  std::vector<std::uint32_t> col_mask;

  static PartialTable fresh(int n);

  int at(int r, int c) const { return cells[r * n + c]; }
  std::uint32_t candidates(int r, int c) const {
    return row_mask[r] & col_mask[c];
  }
  int unset_count() const;
};

enum class SearchMode { First, Count, Enumerate, EnumerateUpToIso };

struct SearchBudget {
  long long max_nodes = 10'000'000;
  double max_seconds = 300.0;
};

struct SearchProblem {
  int n = 1;
  std::vector<Identity> constraints;
  std::vector<Identity> forbid;  // must FAIL (have a falsifying assignment)
  bool require_ip = false;
  bool require_exponent_two = false;
  SearchMode mode = SearchMode::First;
  SearchBudget budget;
  // When false, identities are only checked on complete tables
  // (Latin/flag propagation still runs). Used to measure pruning.
  bool identity_propagation = true;
  // Extra seeded cells (row, col, value), applied before the search.
  std::vector<std::tuple<int, int, int>> prefilled;
  std::size_t max_models = static_cast<std::size_t>(-1);
};

struct SearchStats {
  long long nodes = 0;         // value decisions tried
  long long propagations = 0;  // forced assignments
  double seconds = 0.0;
};

struct SearchOutcome {
  enum class Status { Sat, Unsat, BudgetExhausted };
  Status status = Status::Unsat;
  std::vector<CayleyLoop> models;   // per mode; empty for Count
  unsigned long long count = 0;     // models found (all modes)
  SearchStats stats;
  std::string reason;               // set for shortcut UNSAT results
};

// Exhaustive backtracking search with row/column candidate masks,
// ground-instance identity propagation and deterministic branching.
// Every model returned has been re-verified against all constraints,
// flags and forbids through the term evaluator. Budgets can be overridden
// with LOOPFORGE_BUDGET="<nodes>[,<seconds>]".
SearchOutcome solve(const SearchProblem& p);

// Minimum-remaining-values branching cell (lowest row, then column, on
// ties); nullopt when the table is complete.
std::optional<std::pair<int, int>> branching(const PartialTable& t);

// One propagation run to fixpoint on a copy of t under the problem's
// constraints and flags; nullopt signals a conflict.
std::optional<PartialTable> propagate(const PartialTable& t,
                                      const SearchProblem& p);

// Problem file: `n = <int>`, `flag: ip`, `flag: exp2`, `mode = <mode>`,
// `forbid: <identity>`, plus identity lines (optionally `name : lhs = rhs`).
SearchProblem parse_problem(const std::string& text);
SearchProblem load_problem_file(const std::string& path);

}  // namespace loopforge

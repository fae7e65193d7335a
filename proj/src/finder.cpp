#include "loopforge/finder.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace loopforge {

PartialTable PartialTable::fresh(int n) {
  PartialTable t;
  t.n = n;
  t.cells.assign(static_cast<std::size_t>(n) * n, -1);
  const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
  t.row_mask.assign(n, all);
  t.col_mask.assign(n, all);
  for (int i = 0; i < n; ++i) {
    t.cells[0 * n + i] = i;
    t.cells[i * n + 0] = i;
    t.row_mask[0] = 0;
    t.col_mask[0] = 0;
    if (i > 0) {
      t.row_mask[i] &= ~(1u << i);  // value i used at (i, 0)
      t.col_mask[i] &= ~(1u << i);  // value i used at (0, i)
    }
  }
  return t;
}

int PartialTable::unset_count() const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), -1));
}

std::optional<std::pair<int, int>> branching(const PartialTable& t) {
  int best_r = -1, best_c = -1, best = 33;
  for (int r = 1; r < t.n; ++r)
    for (int c = 1; c < t.n; ++c) {
      if (t.at(r, c) >= 0) continue;
      int k = std::popcount(t.candidates(r, c));
      if (k < best) {
        best = k;
        best_r = r;
        best_c = c;
      }
    }
  if (best_r < 0) return std::nullopt;
  return std::pair{best_r, best_c};
}

namespace {

constexpr int kUnset = -1;

// Partial evaluation outcome for one term under set cells.
struct PartialVal {
  enum Kind { Value, TopMul, TopLDiv, TopRDiv, Unknown } kind = Unknown;
  int value = -1;  // Kind::Value
  int a = -1, b = -1;
};

struct Engine {
  const SearchProblem& p;
  const int n;
  PartialTable t;
  std::vector<int> inv;          // two-sided inverse when known, else -1
  std::vector<int> cell_trail;   // flat cell indices in assignment order
  std::vector<int> inv_trail;    // elements whose inv was recorded
  SearchStats stats;
  std::chrono::steady_clock::time_point start;
  SearchBudget budget;
  bool out_of_budget = false;

  // results
  std::vector<CayleyLoop> models;
  unsigned long long model_count = 0;
  std::vector<std::uint64_t> iso_prints;  // EnumerateUpToIso pre-filter

  explicit Engine(const SearchProblem& prob)
      : p(prob), n(prob.n), t(PartialTable::fresh(prob.n)), inv(prob.n, -1) {
    budget = prob.budget;
    if (const char* env = std::getenv("LOOPFORGE_BUDGET")) {
      std::string s(env);
      auto comma = s.find(',');
      budget.max_nodes = std::stoll(s.substr(0, comma));
      if (comma != std::string::npos)
        budget.max_seconds = std::stod(s.substr(comma + 1));
    }
    inv[0] = 0;
    if (p.require_exponent_two)
      for (int x = 0; x < n; ++x) inv[x] = x;
  }

  bool budget_exceeded() {
    if (out_of_budget) return true;
    if (stats.nodes >= budget.max_nodes) return out_of_budget = true;
    if ((stats.nodes & 1023) == 0) {
      double sec = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
      if (sec > budget.max_seconds) return out_of_budget = true;
    }
    return false;
  }

  std::size_t mark() const { return cell_trail.size(); }

  void undo_to(std::size_t cmark, std::size_t imark) {
    while (cell_trail.size() > cmark) {
      int idx = cell_trail.back();
      cell_trail.pop_back();
      int v = t.cells[idx];
      t.cells[idx] = kUnset;
      t.row_mask[idx / n] |= 1u << v;
      t.col_mask[idx % n] |= 1u << v;
    }
    while (inv_trail.size() > imark) {
      inv[inv_trail.back()] = -1;
      inv_trail.pop_back();
    }
  }

  // Assign (r,c) = v; false on immediate contradiction.
  bool set_cell(int r, int c, int v) {
    int& cur = t.cells[r * n + c];
    if (cur >= 0) return cur == v;
    std::uint32_t bit = 1u << v;
    if (!(t.row_mask[r] & bit) || !(t.col_mask[c] & bit)) return false;
    cur = v;
    t.row_mask[r] &= ~bit;
    t.col_mask[c] &= ~bit;
    cell_trail.push_back(r * n + c);
    ++stats.propagations;
    return true;
  }

  // --- flag rules ---------------------------------------------------------

  bool apply_ip_rules(bool& changed) {
    // Inverses become known from zero-cells; then left/right cancellation
    // links every set cell to a forced partner cell.
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        if (t.at(a, b) != 0) continue;
        if (inv[a] == -1) {
          inv[a] = b;
          inv_trail.push_back(a);
          changed = true;
        } else if (inv[a] != b) {
          return false;
        }
        if (t.at(b, a) == kUnset) {
          if (!set_cell(b, a, 0)) return false;
          changed = true;
        } else if (t.at(b, a) != 0) {
          return false;
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      if (inv[a] == -1) continue;
      // inv[a] must also be a two-sided partner.
      if (t.at(a, inv[a]) == kUnset) {
        if (!set_cell(a, inv[a], 0)) return false;
        changed = true;
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int c = t.at(a, b);
        if (c == kUnset) continue;
        if (inv[a] >= 0) {  // a^-1 * (a*b) = b
          int want = t.at(inv[a], c);
          if (want == kUnset) {
            if (!set_cell(inv[a], c, b)) return false;
            changed = true;
          } else if (want != b) {
            return false;
          }
        }
        if (inv[b] >= 0) {  // (a*b) * b^-1 = a
          int want = t.at(c, inv[b]);
          if (want == kUnset) {
            if (!set_cell(c, inv[b], a)) return false;
            changed = true;
          } else if (want != a) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // --- ground identity instances -----------------------------------------

  PartialVal peval(const TermPtr& term, const std::vector<int>& env,
                   const std::vector<std::string>& vars) const {
    switch (term->kind) {
      case Term::Kind::Var: {
        for (std::size_t i = 0; i < vars.size(); ++i)
          if (vars[i] == term->var)
            return {PartialVal::Value, env[i], -1, -1};
        return {PartialVal::Unknown, -1, -1, -1};
      }
      case Term::Kind::One:
        return {PartialVal::Value, 0, -1, -1};
      case Term::Kind::Inv: {
        PartialVal s = peval(term->a, env, vars);
        if (s.kind == PartialVal::Value && inv[s.value] >= 0)
          return {PartialVal::Value, inv[s.value], -1, -1};
        return {PartialVal::Unknown, -1, -1, -1};
      }
      default: {
        PartialVal x = peval(term->a, env, vars);
        PartialVal y = peval(term->b, env, vars);
        if (x.kind != PartialVal::Value || y.kind != PartialVal::Value)
          return {PartialVal::Unknown, -1, -1, -1};
        if (term->kind == Term::Kind::Mul) {
          int v = t.at(x.value, y.value);
          if (v != kUnset) return {PartialVal::Value, v, -1, -1};
          return {PartialVal::TopMul, -1, x.value, y.value};
        }
        if (term->kind == Term::Kind::LDiv) {
          // x \ y: the column c with cell (x, c) = y, if already set.
          for (int c = 0; c < n; ++c)
            if (t.at(x.value, c) == y.value)
              return {PartialVal::Value, c, -1, -1};
          return {PartialVal::TopLDiv, -1, x.value, y.value};
        }
        // x / y: the row r with cell (r, y) = x.
        for (int r = 0; r < n; ++r)
          if (t.at(r, y.value) == x.value)
            return {PartialVal::Value, r, -1, -1};
        return {PartialVal::TopRDiv, -1, x.value, y.value};
      }
    }
  }

  // Forces `pv` (a blocked root) to evaluate to `target`.
  bool force(const PartialVal& pv, int target, bool& changed) {
    switch (pv.kind) {
      case PartialVal::TopMul:
        if (t.at(pv.a, pv.b) == kUnset) changed = true;
        return set_cell(pv.a, pv.b, target);
      case PartialVal::TopLDiv:
        // pv.a \ pv.b = target  =>  pv.a * target = pv.b
        if (t.at(pv.a, target) == kUnset) changed = true;
        return set_cell(pv.a, target, pv.b);
      case PartialVal::TopRDiv:
        // pv.a / pv.b = target  =>  target * pv.b = pv.a
        if (t.at(target, pv.b) == kUnset) changed = true;
        return set_cell(target, pv.b, pv.a);
      default:
        return true;
    }
  }

  bool apply_identity_rules(bool& changed) {
    for (const Identity& id : p.constraints) {
      const int k = static_cast<int>(id.vars.size());
      std::vector<int> env(k, 0);
      while (true) {
        PartialVal l = peval(id.lhs, env, id.vars);
        PartialVal r = peval(id.rhs, env, id.vars);
        if (l.kind == PartialVal::Value && r.kind == PartialVal::Value) {
          if (l.value != r.value) return false;
        } else if (l.kind == PartialVal::Value) {
          if (!force(r, l.value, changed)) return false;
        } else if (r.kind == PartialVal::Value) {
          if (!force(l, r.value, changed)) return false;
        }
        int i = k - 1;
        while (i >= 0 && env[i] == n - 1) env[i--] = 0;
        if (i < 0) break;
        ++env[i];
      }
    }
    return true;
  }

  // --- fixpoint -------------------------------------------------------------

  bool fixpoint() {
    bool changed = true;
    while (changed) {
      changed = false;
      // Latin singles: empty candidate set is a conflict, singletons fire.
      for (int r = 1; r < n; ++r)
        for (int c = 1; c < n; ++c) {
          if (t.at(r, c) >= 0) continue;
          std::uint32_t cand = t.candidates(r, c);
          if (cand == 0) return false;
          if (std::popcount(cand) == 1) {
            if (!set_cell(r, c, std::countr_zero(cand))) return false;
            changed = true;
          }
        }
      if (p.require_ip)
        if (!apply_ip_rules(changed)) return false;
      if (p.identity_propagation && !p.constraints.empty())
        if (!apply_identity_rules(changed)) return false;
    }
    return true;
  }

  // --- leaf handling ----------------------------------------------------------

  static bool uses_inverse(const TermPtr& t) {
    if (!t) return false;
    if (t->kind == Term::Kind::Inv) return true;
    return uses_inverse(t->a) || uses_inverse(t->b);
  }

  // True when the identity holds universally; an inverse evaluation on an
  // element without a two-sided inverse counts as a failure.
  static bool holds_on(const CayleyLoop& L, const Identity& id) {
    try {
      return holds(L, id).holds;
    } catch (const NotIPError&) {
      return false;
    }
  }

  // Builds the loop, re-verifies every requirement independently of the
  // propagator, and records it. Returns true iff the model is accepted.
  bool accept_leaf() {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) rows[r][c] = t.at(r, c);
    CayleyLoop L = CayleyLoop::from_table(rows);

    // Flag propagation is complete on full tables: a violation here is a
    // propagator defect, not a search outcome.
    if (p.require_exponent_two)
      for (int x = 0; x < n; ++x)
        if (L.mul(x, x) != 0)
          throw std::logic_error("exponent-two cell escaped propagation");
    if (p.require_ip) {
      for (int x = 0; x < n; ++x) {
        int xi = L.left_inverse(x);
        bool good = xi == L.right_inverse(x);
        for (int y = 0; y < n && good; ++y)
          good = L.mul(xi, L.mul(x, y)) == y && L.mul(L.mul(y, x), xi) == y;
        if (!good)
          throw std::logic_error("inverse linking escaped propagation");
      }
    }

    for (const Identity& id : p.constraints) {
      if (!holds_on(L, id)) {
        // Instance propagation is complete on full tables for
        // inverse-free identities; those cannot legitimately fail here.
        if (p.identity_propagation && !uses_inverse(id.lhs) &&
            !uses_inverse(id.rhs))
          throw std::logic_error("identity instance escaped propagation");
        return false;
      }
    }
    for (const Identity& id : p.forbid)
      if (holds_on(L, id)) return false;  // identity must fail somewhere

    ++model_count;
    if (p.mode == SearchMode::First) {
      models.push_back(std::move(L));
      return true;
    }
    if (p.mode == SearchMode::Enumerate) {
      if (models.size() < p.max_models) models.push_back(std::move(L));
    } else if (p.mode == SearchMode::EnumerateUpToIso) {
      std::uint64_t fp = iso_fingerprint(L);
      bool fresh = true;
      for (std::size_t i = 0; i < models.size(); ++i)
        if (iso_prints[i] == fp && isomorphic(models[i], L)) {
          fresh = false;
          break;
        }
      if (fresh) {
        iso_prints.push_back(fp);
        models.push_back(std::move(L));
      } else {
        --model_count;  // count isomorphism classes in this mode
      }
    }
    return false;  // keep searching
  }

  // Returns true when the search should stop (first model found or budget).
  bool dfs() {
    if (budget_exceeded()) return true;
    auto cell = branching(t);
    if (!cell) return accept_leaf();
    auto [r, c] = *cell;
    std::uint32_t cand = t.candidates(r, c);
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      ++stats.nodes;
      std::size_t cmark = mark(), imark = inv_trail.size();
      if (set_cell(r, c, v) && fixpoint()) {
        if (dfs()) return true;
      }
      undo_to(cmark, imark);
      if (budget_exceeded()) return true;
    }
    return false;
  }

  SearchOutcome run() {
    start = std::chrono::steady_clock::now();
    SearchOutcome out;

    // Exponent two plus inverses forces commutativity, and a commutative
    // exponent-two loop pairs off-diagonal occurrences of each value, so
    // odd orders above 1 are impossible by counting.
    if (p.require_exponent_two && p.require_ip && n > 2 && n % 2 == 1) {
      out.status = SearchOutcome::Status::Unsat;
      out.reason =
          "exponent two with inverses forces commutativity; "
          "value counting then requires even order";
      return out;
    }

    bool ok = true;
    if (p.require_exponent_two)
      for (int x = 0; x < n && ok; ++x) ok = set_cell(x, x, 0);
    for (auto [r, c, v] : p.prefilled) {
      if (r < 0 || r >= n || c < 0 || c >= n || v < 0 || v >= n)
        throw InvalidProblemError("prefilled cell out of range");
      if (ok) ok = set_cell(r, c, v);
    }
    if (ok) ok = fixpoint();
    if (ok) dfs();

    out.stats = stats;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    out.models = std::move(models);
    out.count = model_count;
    if (out_of_budget)
      out.status = SearchOutcome::Status::BudgetExhausted;
    else
      out.status = model_count > 0 ? SearchOutcome::Status::Sat
                                   : SearchOutcome::Status::Unsat;
    return out;
  }
};

}  // namespace

SearchOutcome solve(const SearchProblem& p) {
  if (p.n < 1) throw InvalidProblemError("order must be at least 1");
  if (p.n > 30) throw InvalidProblemError("orders above 30 are out of scope");
  Engine e(p);
  return e.run();
}

std::optional<PartialTable> propagate(const PartialTable& t,
                                      const SearchProblem& p) {
  if (t.n != p.n)
    throw InvalidProblemError("table order does not match the problem");
  Engine e(p);
  e.t = t;
  if (p.require_exponent_two)
    for (int x = 0; x < p.n; ++x)
      if (!e.set_cell(x, x, 0)) return std::nullopt;
  if (!e.fixpoint()) return std::nullopt;
  return e.t;
}

SearchProblem parse_problem(const std::string& text) {
  SearchProblem p;
  bool have_n = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::string body = line.substr(i);
    if (!body.empty() && body.back() == '\r') body.pop_back();
    if (body.rfind("n =", 0) == 0 || body.rfind("n=", 0) == 0) {
      std::istringstream ns(body.substr(body.find('=') + 1));
      std::string extra;
      if (!(ns >> p.n) || (ns >> extra))
        throw InvalidProblemError("malformed order line: " + body);
      have_n = true;
    } else if (body.rfind("flag:", 0) == 0) {
      std::string flag = body.substr(5);
      flag.erase(std::remove_if(flag.begin(), flag.end(), ::isspace),
                 flag.end());
      if (flag == "ip")
        p.require_ip = true;
      else if (flag == "exp2")
        p.require_exponent_two = true;
      else
        throw InvalidProblemError("unknown flag: " + flag);
    } else if (body.rfind("mode =", 0) == 0 || body.rfind("mode=", 0) == 0) {
      std::string m = body.substr(body.find('=') + 1);
      m.erase(std::remove_if(m.begin(), m.end(), ::isspace), m.end());
      if (m == "first")
        p.mode = SearchMode::First;
      else if (m == "count")
        p.mode = SearchMode::Count;
      else if (m == "enumerate")
        p.mode = SearchMode::Enumerate;
      else if (m == "enumerate_iso")
        p.mode = SearchMode::EnumerateUpToIso;
      else
        throw InvalidProblemError("unknown mode: " + m);
    } else if (body.rfind("forbid:", 0) == 0) {
      p.forbid.push_back(parse_identity(body.substr(7)));
    } else {
      auto ids = parse_identity_file(body);
      for (auto& id : ids) p.constraints.push_back(std::move(id));
    }
  }
  if (!have_n) throw InvalidProblemError("problem file is missing `n = <int>`");
  return p;
}

SearchProblem load_problem_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoopError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace loopforge

#pragma once

// Brute-force generators used as independent oracles for the model finder.
// Deliberately simple: plain cell-by-cell enumeration with used-value
// masks, no propagation, no branching heuristics.

#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge::testsupport {

// All loops of order n with the identity fixed at 0 (reduced tables).
inline std::vector<CayleyLoop> all_reduced_loops(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    rows[0][i] = i;
    rows[i][0] = i;
  }
  std::vector<CayleyLoop> out;
  std::vector<unsigned> row_used(n), col_used(n);
  for (int i = 0; i < n; ++i) {
    row_used[i] = 1u << i;
    col_used[i] = 1u << i;
  }
  row_used[0] = col_used[0] = (n >= 32 ? ~0u : (1u << n) - 1);

  struct Rec {
    int n;
    std::vector<std::vector<int>>& rows;
    std::vector<unsigned>& ru;
    std::vector<unsigned>& cu;
    std::vector<CayleyLoop>& out;
    void go(int idx) {
      if (idx == n * n) {
        out.push_back(CayleyLoop::from_table(rows));
        return;
      }
      int r = idx / n, c = idx % n;
      if (rows[r][c] >= 0) {
        go(idx + 1);
        return;
      }
      for (int v = 0; v < n; ++v) {
        unsigned bit = 1u << v;
        if ((ru[r] & bit) || (cu[c] & bit)) continue;
        rows[r][c] = v;
        ru[r] |= bit;
        cu[c] |= bit;
        go(idx + 1);
        rows[r][c] = -1;
        ru[r] &= ~bit;
        cu[c] &= ~bit;
      }
    }
  } rec{n, rows, row_used, col_used, out};
  rec.go(0);
  return out;
}

// All Latin squares of order n possessing a two-sided identity element
// anywhere, each relabeled so that the identity sits at 0.
inline std::vector<CayleyLoop> all_loops_any_identity(int n) {
  std::vector<CayleyLoop> out;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, -1));
  std::vector<unsigned> row_used(n, 0), col_used(n, 0);

  struct Rec {
    int n;
    std::vector<std::vector<int>>& rows;
    std::vector<unsigned>& ru;
    std::vector<unsigned>& cu;
    std::vector<CayleyLoop>& out;
    void emit() {
      int e = -1;
      for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          ok = rows[cand][x] == x && rows[x][cand] == x;
        if (ok) e = cand;
      }
      if (e < 0) return;
      // Swap labels 0 and e, and the corresponding rows/columns.
      std::vector<int> sigma(n);
      for (int i = 0; i < n; ++i) sigma[i] = i;
      std::swap(sigma[0], sigma[e]);
      std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          relabeled[sigma[a]][sigma[b]] = sigma[rows[a][b]];
      out.push_back(CayleyLoop::from_table(relabeled));
    }
    void go(int idx) {
      if (idx == n * n) {
        emit();
        return;
      }
      int r = idx / n, c = idx % n;
      for (int v = 0; v < n; ++v) {
        unsigned bit = 1u << v;
        if ((ru[r] & bit) || (cu[c] & bit)) continue;
        rows[r][c] = v;
        ru[r] |= bit;
        cu[c] |= bit;
        go(idx + 1);
        ru[r] &= ~bit;
        cu[c] &= ~bit;
      }
      rows[r][c] = -1;
    }
  } rec{n, rows, row_used, col_used, out};
  rec.go(0);
  return out;
}

// Isomorphism-class count with the shared pairwise test.
inline std::size_t iso_class_count(const std::vector<CayleyLoop>& loops) {
  std::vector<const CayleyLoop*> reps;
  for (const CayleyLoop& L : loops) {
    bool fresh = true;
    for (const CayleyLoop* r : reps)
      if (isomorphic(*r, L)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(&L);
  }
  return reps.size();
}

}  // namespace loopforge::testsupport

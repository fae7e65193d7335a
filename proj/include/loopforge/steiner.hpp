#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge {

// A Steiner triple system: 3-element blocks on points 0..v-1 covering
// every unordered pair exactly once.
struct TripleSystem {
  int v = 0;
  std::vector<std::array<int, 3>> blocks;
};

struct SystemValidation {
  bool ok = true;
  // Each problem is either a pair covered twice or a pair not covered.
  struct Problem {
    enum class Kind { PairDuplicated, PairMissing } kind;
    int x, y;
  };
  std::vector<Problem> problems;
};

SystemValidation validate(const TripleSystem& ts);

// The cyclic system on Z13 with blocks {n, n+2, n+8} and {n, n+3, n+4}
// for every n mod 13; 26 blocks.
TripleSystem z13_system();

// The affine system on the 3x3 grid (rows, columns and both diagonal
// directions); 12 blocks on 9 points.
TripleSystem sts9_system();

// The 7-point system {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}.
TripleSystem fano_system();

// Adjoins an identity at index 0 (point p becomes element p+1): x*x = 1,
// and x*y is the third point of the block through x and y. Throws
// InvalidSystemError when ts does not validate.
CayleyLoop steiner_loop(const TripleSystem& ts);

// Recovers the triple system {{x, y, xy}} from a Steiner loop (element
// e+1 becomes point e). Throws NotSteinerError.
TripleSystem loop_to_system(const CayleyLoop& L);

// Labeling layer between loop element indices and point labels: point p
// is element p+1, the identity prints as "e".
std::string point_label(Elem e);
Elem element_of_point_label(const std::string& label, int order);

// --- text format: line 1 `v = <int>`, then one block per line -------------
TripleSystem parse_system(const std::string& text);
std::string serialize_system(const TripleSystem& ts);
TripleSystem load_system_file(const std::string& path);

}  // namespace loopforge

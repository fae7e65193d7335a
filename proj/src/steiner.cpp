#include "loopforge/steiner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace loopforge {

SystemValidation validate(const TripleSystem& ts) {
  SystemValidation res;
  const int v = ts.v;
  std::vector<int> cover(static_cast<std::size_t>(v) * v, 0);
  for (const auto& b : ts.blocks) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int x = b[i], y = b[j];
        if (x < 0 || x >= v || y < 0 || y >= v || x == y) {
          res.ok = false;
          res.problems.push_back(
              {SystemValidation::Problem::Kind::PairDuplicated, x, y});
          continue;
        }
        ++cover[x * v + y];
        ++cover[y * v + x];
      }
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      int c = cover[x * v + y];
      if (c == 0) {
        res.ok = false;
        res.problems.push_back(
            {SystemValidation::Problem::Kind::PairMissing, x, y});
      } else if (c > 1) {
        res.ok = false;
        res.problems.push_back(
            {SystemValidation::Problem::Kind::PairDuplicated, x, y});
      }
    }
  return res;
}

TripleSystem z13_system() {
  TripleSystem ts;
  ts.v = 13;
  for (int n = 0; n < 13; ++n)
    ts.blocks.push_back({n, (n + 2) % 13, (n + 8) % 13});
  for (int n = 0; n < 13; ++n)
    ts.blocks.push_back({n, (n + 3) % 13, (n + 4) % 13});
  return ts;
}

TripleSystem sts9_system() {
  TripleSystem ts;
  ts.v = 9;
  auto idx = [](int r, int c) { return 3 * r + c; };
  for (int r = 0; r < 3; ++r)
    ts.blocks.push_back({idx(r, 0), idx(r, 1), idx(r, 2)});
  for (int c = 0; c < 3; ++c)
    ts.blocks.push_back({idx(0, c), idx(1, c), idx(2, c)});
  for (int s = 0; s < 3; ++s)  // lines of slope 1 and slope 2
    ts.blocks.push_back({idx(0, s), idx(1, (s + 1) % 3), idx(2, (s + 2) % 3)});
  for (int s = 0; s < 3; ++s)
    ts.blocks.push_back({idx(0, s), idx(1, (s + 2) % 3), idx(2, (s + 1) % 3)});
  return ts;
}

TripleSystem fano_system() {
  TripleSystem ts;
  ts.v = 7;
  ts.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
               {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return ts;
}

CayleyLoop steiner_loop(const TripleSystem& ts) {
  SystemValidation val = validate(ts);
  if (!val.ok)
    throw InvalidSystemError("triple system does not validate (" +
                             std::to_string(val.problems.size()) +
                             " problems)");
  const int n = ts.v + 1;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    rows[0][i] = i;
    rows[i][0] = i;
    rows[i][i] = 0;
  }
  for (const auto& b : ts.blocks) {
    const int x = b[0] + 1, y = b[1] + 1, z = b[2] + 1;
    rows[x][y] = rows[y][x] = z;
    rows[x][z] = rows[z][x] = y;
    rows[y][z] = rows[z][y] = x;
  }
  return CayleyLoop::from_table(rows);
}

TripleSystem loop_to_system(const CayleyLoop& L) {
  const int n = L.order();
  for (Elem x = 0; x < n; ++x) {
    if (L.mul(x, x) != 0)
      throw NotSteinerError("element does not square to the identity");
    for (Elem y = 0; y < n; ++y)
      if (L.mul(x, y) != L.mul(y, x))
        throw NotSteinerError("loop is not commutative");
  }
  TripleSystem ts;
  ts.v = n - 1;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Elem z = L.mul(x, y);
      if (z == 0 || z <= y)
        continue;  // each block recorded once, from its two smallest points
      ts.blocks.push_back({x - 1, y - 1, z - 1});
    }
  SystemValidation val = validate(ts);
  if (!val.ok)
    throw NotSteinerError("products do not form a triple system");
  return ts;
}

std::string point_label(Elem e) {
  return e == 0 ? "e" : std::to_string(e - 1);
}

Elem element_of_point_label(const std::string& label, int order) {
  if (label == "e") return 0;
  int p = std::stoi(label);
  if (p < 0 || p + 1 >= order)
    throw LoopError("point label out of range: " + label);
  return p + 1;
}

TripleSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TripleSystem ts;
  bool have_v = false;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ls(line);
    if (!have_v) {
      std::string key, eq;
      if (!(ls >> key >> eq >> ts.v) || key != "v" || eq != "=")
        throw ParseError("expected `v = <int>` on first data line", 0);
      have_v = true;
      continue;
    }
    std::array<int, 3> b{};
    if (!(ls >> b[0] >> b[1] >> b[2]))
      throw ParseError("expected three point indices", 0);
    ts.blocks.push_back(b);
  }
  if (!have_v) throw ParseError("empty system file", 0);
  return ts;
}

std::string serialize_system(const TripleSystem& ts) {
  std::ostringstream out;
  out << "v = " << ts.v << '\n';
  for (const auto& b : ts.blocks)
    out << b[0] << ' ' << b[1] << ' ' << b[2] << '\n';
  return out.str();
}

TripleSystem load_system_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoopError("cannot open system file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_system(buf.str());
}

}  // namespace loopforge

#include "loopforge/loop.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace loopforge {

CayleyLoop::CayleyLoop(int n, std::vector<int> table)
    : n_(n), table_(std::move(table)), ldiv_(n * n), rdiv_(n * n) {
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      int p = table_[a * n_ + b];
      ldiv_[a * n_ + p] = b;  // a*b = p  =>  a \ p = b
      rdiv_[b * n_ + p] = a;  // a*b = p  =>  p / b = a
    }
  }
}

CayleyLoop CayleyLoop::from_table(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw LoopError("empty table");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw LoopError("table is not square: row " + std::to_string(r) +
                      " has " + std::to_string(rows[r].size()) + " entries");
    for (int c = 0; c < n; ++c) {
      int v = rows[r][c];
      if (v < 0 || v >= n)
        throw LoopError("entry out of range at (" + std::to_string(r) + "," +
                        std::to_string(c) + "): " + std::to_string(v));
      flat[r * n + c] = v;
    }
  }
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = flat[r * n + c];
      if (seen[v]) throw NotLatinError(true, r, v);
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = flat[r * n + c];
      if (seen[v]) throw NotLatinError(false, c, v);
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (flat[0 * n + x] != x || flat[x * n + 0] != x)
      throw NoIdentityAtZeroError();
  return CayleyLoop(n, std::move(flat));
}

Elem CayleyLoop::inverse(Elem x) const {
  Elem li = left_inverse(x);
  Elem ri = right_inverse(x);
  if (li != ri)
    throw NotIPError("element " + std::to_string(x) + " has left inverse " +
                     std::to_string(li) + " but right inverse " +
                     std::to_string(ri));
  return li;
}

Elem CayleyLoop::power(Elem x, long long k) const {
  Elem base = x;
  if (k < 0) {
    base = inverse(x);
    k = -k;
  }
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(base, r);
  return r;
}

int CayleyLoop::element_order(Elem x) const {
  Elem r = mul(x, 0);
  int k = 1;
  while (r != 0) {
    r = mul(x, r);
    ++k;
  }
  return k;
}

SubloopClosure subloop_closure(const CayleyLoop& L,
                               const std::vector<Elem>& seed) {
  const int n = L.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> members;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  add(0);
  for (Elem s : seed) add(s);
  // Fixpoint over all pairs; membership grows monotonically.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [a, b] : {std::pair{members[i], members[j]},
                          std::pair{members[j], members[i]}}) {
        add(L.mul(a, b));
        add(L.ldiv(a, b));
        add(L.rdiv(b, a));
      }
    }
  }
  SubloopClosure out;
  out.generators = seed;
  out.elements = members;
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

CayleyLoop subloop_table(const CayleyLoop& L, const std::vector<Elem>& elements) {
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(L.order(), -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  if (m == 0 || elements[0] != 0)
    throw LoopError("subloop table requires a sorted subset containing 0");
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = L.mul(elements[i], elements[j]);
      if (pos[p] < 0)
        throw LoopError("subset is not closed under multiplication");
      rows[i][j] = pos[p];
    }
  return CayleyLoop::from_table(rows);
}

std::vector<Elem> nucleus(const CayleyLoop& L) {
  const int n = L.order();
  std::vector<Elem> out;
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = L.mul(a, L.mul(x, y)) == L.mul(L.mul(a, x), y) &&
             L.mul(x, L.mul(a, y)) == L.mul(L.mul(x, a), y) &&
             L.mul(x, L.mul(y, a)) == L.mul(L.mul(x, y), a);
    if (ok) out.push_back(a);
  }
  return out;
}

CayleyLoop direct_product(const CayleyLoop& L1, const CayleyLoop& L2) {
  const int n1 = L1.order(), n2 = L2.order(), n = n1 * n2;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          rows[a1 * n2 + a2][b1 * n2 + b2] =
              L1.mul(a1, b1) * n2 + L2.mul(a2, b2);
  return CayleyLoop::from_table(rows);
}

CayleyLoop opposite(const CayleyLoop& L) {
  const int n = L.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = L.mul(b, a);
  return CayleyLoop::from_table(rows);
}

CayleyLoop chein_double(const CayleyLoop& G) {
  if (!is_associative(G))
    throw NotAGroupError("doubling construction requires a group");
  const int n = G.order();
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n));
  auto inv = [&](int g) { return G.left_inverse(g); };
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      rows[g][h] = G.mul(g, h);
      rows[g][h + n] = G.mul(h, g) + n;
      rows[g + n][h] = G.mul(g, inv(h)) + n;
      rows[g + n][h + n] = G.mul(inv(h), g);
    }
  return CayleyLoop::from_table(rows);
}

bool is_associative(const CayleyLoop& L) {
  const int n = L.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = L.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (L.mul(ab, c) != L.mul(a, L.mul(b, c))) return false;
    }
  return true;
}

bool is_commutative(const CayleyLoop& L) {
  const int n = L.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (L.mul(a, b) != L.mul(b, a)) return false;
  return true;
}

bool is_boolean_group(const CayleyLoop& L) {
  for (int x = 0; x < L.order(); ++x)
    if (L.mul(x, x) != 0) return false;
  return is_associative(L);
}

namespace {

// Cycle type of a row/column as a sorted vector of cycle lengths.
std::vector<int> cycle_type(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  std::vector<int> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = images[j];
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

// Per-element invariant: (order of x, cycle type of L(x), cycle type of R(x),
// whether x*x == 1). Any isomorphism must respect it.
struct ElemKey {
  int order;
  std::vector<int> lcyc, rcyc;
  bool square_id;
  bool operator<(const ElemKey& o) const {
    return std::tie(order, lcyc, rcyc, square_id) <
           std::tie(o.order, o.lcyc, o.rcyc, o.square_id);
  }
  bool operator==(const ElemKey& o) const {
    return order == o.order && lcyc == o.lcyc && rcyc == o.rcyc &&
           square_id == o.square_id;
  }
};

std::vector<ElemKey> elem_keys(const CayleyLoop& L) {
  const int n = L.order();
  std::vector<ElemKey> keys(n);
  std::vector<int> col(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> row(n);
    for (int y = 0; y < n; ++y) {
      row[y] = L.mul(x, y);
      col[y] = L.mul(y, x);
    }
    keys[x] = {L.element_order(x), cycle_type(row), cycle_type(col),
               L.mul(x, x) == 0};
  }
  return keys;
}

struct IsoSearch {
  const CayleyLoop& A;
  const CayleyLoop& B;
  std::vector<int> map;      // A -> B, -1 unset
  std::vector<char> used;    // images taken in B
  std::vector<ElemKey> ka, kb;

  IsoSearch(const CayleyLoop& a, const CayleyLoop& b)
      : A(a), B(b), map(a.order(), -1), used(b.order(), 0),
        ka(elem_keys(a)), kb(elem_keys(b)) {}

  // Extend the map through all products of already-mapped elements.
  // Returns false on contradiction; records newly forced domain points.
  bool propagate(std::vector<int>& forced) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < A.order(); ++a) {
        if (map[a] < 0) continue;
        for (int b = 0; b < A.order(); ++b) {
          if (map[b] < 0) continue;
          int p = A.mul(a, b);
          int q = B.mul(map[a], map[b]);
          if (map[p] < 0) {
            if (used[q] || !(ka[p] == kb[q])) return false;
            map[p] = q;
            used[q] = 1;
            forced.push_back(p);
            changed = true;
          } else if (map[p] != q) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool search() {
    int next = -1;
    for (int a = 0; a < A.order(); ++a)
      if (map[a] < 0) {
        next = a;
        break;
      }
    if (next < 0) return true;
    for (int img = 0; img < B.order(); ++img) {
      if (used[img] || !(ka[next] == kb[img])) continue;
      map[next] = img;
      used[img] = 1;
      std::vector<int> forced;
      if (propagate(forced) && search()) return true;
      for (int f : forced) {
        used[map[f]] = 0;
        map[f] = -1;
      }
      used[img] = 0;
      map[next] = -1;
    }
    return false;
  }
};

}  // namespace

std::uint64_t iso_fingerprint(const CayleyLoop& L) {
  auto keys = elem_keys(L);
  std::sort(keys.begin(), keys.end());
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(L.order()));
  for (const auto& k : keys) {
    mix(static_cast<std::uint64_t>(k.order));
    mix(k.square_id ? 7 : 11);
    for (int c : k.lcyc) mix(static_cast<std::uint64_t>(c) * 31);
    for (int c : k.rcyc) mix(static_cast<std::uint64_t>(c) * 37);
  }
  return h;
}

bool isomorphic(const CayleyLoop& L1, const CayleyLoop& L2) {
  if (L1.order() != L2.order()) return false;
  IsoSearch s(L1, L2);
  auto sk1 = s.ka, sk2 = s.kb;
  std::sort(sk1.begin(), sk1.end());
  std::sort(sk2.begin(), sk2.end());
  if (!(sk1 == sk2)) return false;
  s.map[0] = 0;
  s.used[0] = 1;
  return s.search();
}

CayleyLoop parse_loop(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> data_lines;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    data_lines.push_back(line);
  }
  if (data_lines.empty()) throw ParseError("empty loop file", 0);
  int n = 0;
  {
    std::istringstream hl(data_lines[0]);
    if (!(hl >> n) || n < 1)
      throw ParseError("expected order on first data line", 0);
    std::string rest;
    if (hl >> rest) throw ParseError("trailing tokens after order", 0);
  }
  if (static_cast<int>(data_lines.size()) != n + 1)
    throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(data_lines.size() - 1),
                     0);
  std::vector<std::vector<int>> rows(n);
  for (int r = 0; r < n; ++r) {
    std::istringstream rl(data_lines[r + 1]);
    int v;
    while (rl >> v) rows[r].push_back(v);
    if (static_cast<int>(rows[r].size()) != n)
      throw ParseError("row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(n),
                       0);
  }
  return CayleyLoop::from_table(rows);
}

std::string serialize_loop(const CayleyLoop& L) {
  const int n = L.order();
  std::ostringstream out;
  out << n << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << L.mul(r, c);
    }
    out << '\n';
  }
  return out.str();
}

CayleyLoop load_loop_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoopError("cannot open loop file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_loop(buf.str());
}

CayleyLoop cyclic_group(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return CayleyLoop::from_table(rows);
}

CayleyLoop boolean_group(int k) {
  const int n = 1 << k;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = a ^ b;
  return CayleyLoop::from_table(rows);
}

CayleyLoop symmetric_group_s3() {
  // Permutations of {0,1,2} listed with the identity first; product is
  // composition left-to-right.
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int i = 0; i < 3; ++i) comp[i] = perms[b][perms[a][i]];
      rows[a][b] = index_of(comp);
    }
  return CayleyLoop::from_table(rows);
}

}  // namespace loopforge

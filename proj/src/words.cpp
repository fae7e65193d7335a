#include "loopforge/words.hpp"

#include <algorithm>

namespace loopforge {

std::vector<Elem> pi_all(const CayleyLoop& L, const Word& w, std::size_t cap) {
  if (w.size() > cap) throw LengthCapError(w.size(), cap);
  const int len = static_cast<int>(w.size());
  if (len == 0) return {0};
  // dp[i][j] = product set of the subword [i, i+j+1).
  std::vector<std::vector<std::vector<Elem>>> dp(
      len, std::vector<std::vector<Elem>>(len));
  for (int i = 0; i < len; ++i) dp[i][0] = {w[i]};
  for (int span = 2; span <= len; ++span) {
    for (int i = 0; i + span <= len; ++i) {
      std::vector<Elem>& out = dp[i][span - 1];
      for (int k = 1; k < span; ++k) {
        for (Elem u : dp[i][k - 1])
          for (Elem v : dp[i + k][span - k - 1]) {
            Elem p = L.mul(u, v);
            if (std::find(out.begin(), out.end(), p) == out.end())
              out.push_back(p);
          }
      }
    }
  }
  std::vector<Elem> res = dp[0][len - 1];
  std::sort(res.begin(), res.end());
  return res;
}

Elem pi_r(const CayleyLoop& L, const Word& w) {
  Elem r = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = L.mul(*it, r);
  return r;
}

Elem pi_k(const CayleyLoop& L, const Word& w, int k) {
  if (k < 1 || k > static_cast<int>(w.size()) - 1)
    throw BadSplitError(k, w.size());
  Word left(w.begin(), w.begin() + k);
  Word right(w.begin() + k, w.end());
  return L.mul(pi_r(L, left), pi_r(L, right));
}

namespace {

bool has_ip(const CayleyLoop& L) {
  const int n = L.order();
  for (Elem x = 0; x < n; ++x)
    if (L.left_inverse(x) != L.right_inverse(x)) return false;
  for (Elem x = 0; x < n; ++x) {
    Elem xi = L.left_inverse(x);
    for (Elem y = 0; y < n; ++y)
      if (L.mul(xi, L.mul(x, y)) != y || L.mul(L.mul(y, x), xi) != y)
        return false;
  }
  return true;
}

int block_length_unchecked(const CayleyLoop& L, const Word& w) {
  if (w.empty()) return 0;
  int blocks = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    Elem x = w[i], y = w[i + 1];
    if (x != y && x != L.inverse(y)) ++blocks;
  }
  return blocks;
}

// A word associates iff every subword's product set is a singleton and all
// splits of every subword agree; cancellation makes any subword ambiguity
// propagate upward, so a single mismatch decides the whole word.
bool associates(const CayleyLoop& L, const Word& w,
                std::vector<int>& scratch) {
  const int len = static_cast<int>(w.size());
  if (len <= 2) return true;
  scratch.assign(static_cast<std::size_t>(len) * len, -1);
  auto val = [&](int i, int span) -> int& {
    return scratch[static_cast<std::size_t>(i) * len + span - 1];
  };
  for (int i = 0; i < len; ++i) val(i, 1) = w[i];
  for (int span = 2; span <= len; ++span) {
    for (int i = 0; i + span <= len; ++i) {
      int first = L.mul(val(i, 1), val(i + 1, span - 1));
      for (int k = 2; k < span; ++k)
        if (L.mul(val(i, k), val(i + k, span - k)) != first) return false;
      val(i, span) = first;
    }
  }
  return true;
}

}  // namespace

int block_length(const CayleyLoop& L, const Word& w) {
  if (!has_ip(L)) throw NotIPError("block length needs inverses");
  return block_length_unchecked(L, w);
}

DAssocResult d_associative(const CayleyLoop& L, int block_bound, int max_len,
                           std::size_t cap) {
  if (static_cast<std::size_t>(max_len) > cap)
    throw LengthCapError(max_len, cap);
  if (!has_ip(L))
    throw NotIPError("association by blocks needs inverses");
  const int n = L.order();
  DAssocResult res;
  std::vector<int> scratch;
  Word w;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const Elem alphabet[4] = {a, b, L.inverse(a), L.inverse(b)};
      // Words of length <= 2 associate trivially.
      for (int len = 3; len <= max_len; ++len) {
        w.assign(len, alphabet[0]);
        std::vector<int> digits(len, 0);
        while (true) {
          if (block_length_unchecked(L, w) <= block_bound &&
              !associates(L, w, scratch)) {
            res.holds = false;
            res.witness = w;
            res.a = a;
            res.b = b;
            return res;
          }
          int i = len - 1;
          while (i >= 0 && digits[i] == 3) {
            digits[i] = 0;
            w[i] = alphabet[0];
            --i;
          }
          if (i < 0) break;
          ++digits[i];
          w[i] = alphabet[digits[i]];
        }
      }
    }
  }
  return res;
}

}  // namespace loopforge

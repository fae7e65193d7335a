#pragma once

#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge {

// A finite sequence of loop elements.
using Word = std::vector<Elem>;

// Set of all products of W under every association, as a sorted vector.
// Empty word gives {1}. Throws LengthCapError when |W| > cap.
std::vector<Elem> pi_all(const CayleyLoop& L, const Word& w,
                         std::size_t cap = 10);

// Right-associated product: pi_r((x) ++ W) = x * pi_r(W), pi_r(()) = 1.
Elem pi_r(const CayleyLoop& L, const Word& w);

// Split product after position k (1 <= k <= |W|-1): the product of the
// right-associated halves. Throws BadSplitError.
Elem pi_k(const CayleyLoop& L, const Word& w, int k);

// Number of maximal runs drawn from a single element/inverse pair:
// B(()) = 0, B((x)) = 1, and a new block starts whenever the next entry
// is neither the previous entry nor its inverse. Requires two-sided
// inverses everywhere (throws NotIPError).
int block_length(const CayleyLoop& L, const Word& w);

struct DAssocResult {
  bool holds = true;
  Word witness;          // first non-associating word, empty if holds
  Elem a = 0, b = 0;     // the pair whose alphabet produced the witness
};

// Checks that every word over {a, b, a^-1, b^-1}, for every pair a,b,
// with block length <= block_bound and length <= max_len associates
// (its product set is a singleton). Requires the inverse property.
// max_len is capped (the product-set cost grows with the Catalan numbers).
DAssocResult d_associative(const CayleyLoop& L, int block_bound, int max_len,
                           std::size_t cap = 10);

}  // namespace loopforge

// Partial composition of forests.
//
// insert(A, i, B) substitutes the forest B for the white vertex labelled i
// of A (set-labelled convention: the labels of B are kept, so
// labels(A) \ {i} and labels(B) must be disjoint).  Every group that hung
// below the removed vertex reattaches independently to any vertex of B,
// which makes the result a sum of forests.  The removed vertex's own slot
// is filled by B's roots: a single root takes the slot directly; several
// roots either merge into the surrounding group's member list or, when the
// slot was a root of A, become roots themselves.
//
// compose(A, i, B) is the classical convention on standard label sets
// {1..m} and {1..n}: A's labels above i shift up by n-1, B's labels shift
// onto {i..i+n-1}, then insert.
#pragma once

#include "hyperops/lincomb.hpp"

namespace hyperops {

// Structural terms of the substitution, before canonicalization.  Exposed
// for the sign-aware layer, which needs the tags riding on black labels.
std::vector<Forest> insert_terms(const Forest& a, int i, const Forest& b);

LinComb insert(const Key& a, int i, const Key& b);
LinComb insert(const LinComb& a, int i, const LinComb& b);  // bilinear

LinComb compose(const Key& a, int i, const Key& b);
LinComb compose(const LinComb& a, int i, const LinComb& b);

// The label maps used by compose's shift convention; exposed so callers
// (CLI, tests) can reproduce the relabelling.
std::map<int, int> shift_map_outer(int m, int i, int n);
std::map<int, int> shift_map_inner(int i, int n);

}  // namespace hyperops

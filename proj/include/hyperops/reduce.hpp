// The rewrite rule that eliminates hyperedges carried by black vertices.
//
// A group E with >= 2 members attached at a black vertex rewrites to the
// sum, over the members m of E, of the forest where m stays attached to
// the black vertex as a simple edge and the remaining members of E move
// one level up: they join the group the black vertex itself belongs to,
// or become roots of the forest when the black vertex is a root.  Normal
// forms are exactly the forests whose blacks carry only simple edges.
#pragma once

#include <cstdint>
#include <functional>

#include "hyperops/lincomb.hpp"

namespace hyperops {

enum class ReduceStrategy {
  DeepestFirst,   // rewrite a redex of maximal depth (default)
  ShallowFirst,   // rewrite the first redex in preorder
  RandomRedex,    // rewrite a uniformly random redex
};

// Applies one rewrite step to the chosen redex of f.  Returns the list of
// resulting forests (one per member of the rewritten group), or an empty
// list when f is already reduced.  Tags riding in black labels are
// preserved untouched; the rule itself is sign-free.
std::vector<Forest> rewrite_step(const Forest& f, ReduceStrategy strategy,
                                 std::uint64_t* rng_state = nullptr);

// Full normal form of a basis element, memoized.  The rule is a sum, so a
// normal form reached along several branches picks up an integer
// multiplicity; confluence (same combination under every strategy) is
// exercised by the tests rather than assumed.
const LinComb& reduce(const Key& k);
LinComb reduce(const LinComb& x);

// Un-memoized variant with a pluggable strategy, used by the confluence
// tests.  The optional step callback sees every rewrite (input, outputs).
LinComb reduce_with_strategy(
    const Key& k, ReduceStrategy strategy, std::uint64_t seed = 0,
    const std::function<void(const Forest&, const std::vector<Forest>&)>&
        on_step = nullptr);

// insert followed by reduce, extended bilinearly: the composition of the
// reduced-forest operad.
LinComb compose_reduced(const Key& a, int i, const Key& b);
LinComb compose_reduced(const LinComb& a, int i, const LinComb& b);
// Shift-convention variant on standard label sets.
LinComb compose_reduced_std(const Key& a, int i, const Key& b);
LinComb compose_reduced_std(const LinComb& a, int i, const LinComb& b);

}  // namespace hyperops

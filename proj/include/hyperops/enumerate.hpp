// Exhaustive enumeration of each family on the label set {1..n}.
// The generators build every structure exactly once by construction
// (label sets make all choices rigid), so no deduplication pass is needed;
// the test-suite still cross-checks distinctness of the canonical keys.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hyperops/forest.hpp"

namespace hyperops {

// All elements of the family on labels {1..n}, as sorted canonical keys.
// Results are memoized per (family, n); the reference stays valid for the
// lifetime of the process.
const std::vector<Key>& enumerate_family(Family fam, int n);

// Number of elements per bigrading (weight j, black count k).
std::map<std::pair<int, int>, long long> count_bigraded(Family fam, int n);

// Unordered set partitions of {0..n-1}, as blocks of indices.  Exposed for
// reuse by the shape enumerator and the tests.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

}  // namespace hyperops

// Exact arithmetic used throughout the workbench.  Everything is computed
// over the rationals; no floating point appears anywhere in the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperops {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
  return r;
}

// n^(n-1), the number of rooted trees on n labelled vertices.
inline Integer rooted_tree_count(int n) {
  Integer r = 1;
  for (int i = 0; i < n - 1; ++i) r *= n;
  return r;
}

}  // namespace hyperops

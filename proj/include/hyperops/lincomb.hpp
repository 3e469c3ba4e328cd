// Formal rational linear combinations of canonical forests.  Zero
// coefficients are never stored; an empty map is the zero element.
#pragma once

#include <map>
#include <string>

#include "hyperops/forest.hpp"
#include "hyperops/rational.hpp"

namespace hyperops {

using LinComb = std::map<Key, Rational>;

inline LinComb lc(const Key& k, const Rational& c = 1) {
  LinComb r;
  if (c != 0) r[k] = c;
  return r;
}

inline void add_to(LinComb& dst, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto it = dst.find(k);
  if (it == dst.end()) {
    dst.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

inline void add_to(LinComb& dst, const LinComb& src, const Rational& scale = 1) {
  for (const auto& [k, c] : src) add_to(dst, k, c * scale);
}

inline LinComb operator+(const LinComb& a, const LinComb& b) {
  LinComb r = a;
  add_to(r, b);
  return r;
}

inline LinComb operator-(const LinComb& a, const LinComb& b) {
  LinComb r = a;
  add_to(r, b, -1);
  return r;
}

inline LinComb operator*(const Rational& c, const LinComb& a) {
  LinComb r;
  if (c != 0)
    for (const auto& [k, v] : a) r[k] = c * v;
  return r;
}

inline bool is_zero(const LinComb& a) { return a.empty(); }

inline LinComb act(const LinComb& a, const std::map<int, int>& m) {
  LinComb r;
  for (const auto& [k, c] : a) add_to(r, act(k, m), c);
  return r;
}

std::string to_string(const LinComb& a);

}  // namespace hyperops

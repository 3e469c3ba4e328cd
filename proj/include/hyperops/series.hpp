// Exact generating functions.  A Series is a truncated exponential
// generating function in t whose coefficients are polynomials in two
// markers: u tracks the weight (hyperedge excess) and v the number of
// black vertices.  All arithmetic is exact over the rationals.
//
// Every family's generating function is computed two independent ways:
// as the compositional inverse (reversion) of a closed-form series, and as
// the limit of its implicit species fixed-point system; the tests insist
// the two agree and match brute-force enumeration.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperops/forest.hpp"
#include "hyperops/rational.hpp"

namespace hyperops {

// Sparse polynomial in the commuting markers u, v.
struct Poly2 {
  std::map<std::pair<int, int>, Rational> c;

  static Poly2 constant(const Rational& r);
  static Poly2 monomial(int du, int dv, const Rational& r = 1);
  bool zero() const { return c.empty(); }
  bool operator==(const Poly2&) const = default;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rational& r) const;
  Rational eval(const Rational& u, const Rational& v) const;
};

std::string to_string(const Poly2& p);

// Truncated series sum_{k=0..N} a[k] t^k with Poly2 coefficients.
struct Series {
  int N = 0;
  std::vector<Poly2> a;  // size N+1

  explicit Series(int order = 0) : N(order), a(order + 1) {}
  static Series t(int order);                  // the identity series
  static Series constant(int order, const Rational& r);
  bool operator==(const Series&) const = default;
};

Series operator+(const Series& x, const Series& y);
Series operator-(const Series& x, const Series& y);
Series operator*(const Series& x, const Series& y);
Series scale(const Series& x, const Poly2& p);
Series scale(const Series& x, const Rational& r);

// exp of a series with zero constant term.
Series ps_exp(const Series& x);
// log(1 + x) for x with zero constant term.
Series ps_log1p(const Series& x);
// x(y(t)) for y with zero constant term.
Series ps_compose(const Series& x, const Series& y);
// Compositional inverse of x = t + O(t^2) (the t-coefficient must be the
// constant polynomial 1).  Newton iteration.
Series ps_reverse(const Series& x);
// Independent oracle: the same inverse by the Lagrange inversion formula.
Series ps_reverse_lagrange(const Series& x);

// sum_{k>=1} u^{k-1} x^k / k!  — the "forest of k trees" operator: like
// exp(x)-1 but charging u for every tree beyond the first.
Series ps_forest(const Series& x, bool mark_u);

// Substitutes numbers for the markers.
Series subst_uv(const Series& x, const Rational& u, const Rational& v);

// --- family generating functions ---

// The closed-form argument whose reversion is the family's EGF.
Series hilbert_argument(Family fam, int order);
// EGF of the family (coefficients: Poly2 in u, v).  Via ps_reverse.
Series hilbert_series(Family fam, int order);
// The same series from the implicit species system, by fixed-point
// iteration; an independent route used for cross-checking.
Series species_series(Family fam, int order);
// Convenience: dimension table at arity n: (weight j, blacks k) -> count.
std::map<std::pair<int, int>, Integer> hilbert(Family fam, int n);
// Total dimension at arity n (all markers at 1).
Integer hilbert_total(Family fam, int n);

// --- Koszul duality data ---

// EGF of the quadratic dual of the hypertree operad's algebra of
// components: for f = rev(phi), the dual has EGF -phi(-t).
enum class DualPair { ComPreLie, ComGreg };
Series pair_series(DualPair p, int order);       // f itself, scalars
Series pair_dual_series(DualPair p, int order);  // f^! as EGF
// Checks the functional equation f(-f^!(-t)) = t through the given order.
bool koszul_check(const Series& f, const Series& fdual, std::string* why);
bool koszul_check(DualPair p, int order, std::string* why = nullptr);
// Dual dimensions n! * [t^n] f^!.
std::vector<Integer> dual_dims(DualPair p, int nmax);

}  // namespace hyperops

// Exact power-series layer: reversion, species fixed points, dimension
// counts, and the Koszul-duality functional equation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperops/enumerate.hpp"
#include "hyperops/series.hpp"

#include <map>
#include <string>
#include <vector>

using namespace hyperops;

namespace {

// Independent small-dimension formula for the dual of the commutative/
// pre-Lie pair: u_n = sum_{k=1}^{n} C(n,k) (k-1)!.
Integer dual_formula(int n) {
  Integer s = 0;
  for (int k = 1; k <= n; ++k) s += binomial(n, k) * factorial(k - 1);
  return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  const int N = 8;
  Series t = Series::t(N);

  // exp and log are mutually inverse on series with zero constant term.
  Series x = t + scale(t * t, Poly2::monomial(1, 0));
  Series e = ps_exp(x);
  CHECK(ps_log1p(e - Series::constant(N, 1)) == x);

  // Composition with the identity in both slots.
  CHECK(ps_compose(x, t) == x);
  CHECK(ps_compose(t, x) == x);

  // Derivative of exp(t) is exp(t).
  CHECK(derivative(ps_exp(t)) == ps_exp(t));
}

TEST_CASE("reversion: Newton iteration, Lagrange inversion, and compose-back") {
  const int N = 7;
  for (Family fam : {Family::RT, Family::Greg, Family::FH, Family::FG, Family::FRG}) {
    CAPTURE(family_name(fam));
    Series arg = hilbert_argument(fam, N);
    Series rev = ps_reverse(arg);
    CHECK(rev == ps_reverse_lagrange(arg));
    CHECK(ps_compose(arg, rev) == Series::t(N));
    CHECK(ps_compose(rev, arg) == Series::t(N));
  }
}

TEST_CASE("species fixed points agree with closed-form reversion") {
  const int N = 7;
  for (Family fam : {Family::RT, Family::Greg, Family::FH, Family::FG, Family::FRG}) {
    CAPTURE(family_name(fam));
    CHECK(species_series(fam, N) == hilbert_series(fam, N));
  }
}

TEST_CASE("bigraded dimensions match exhaustive enumeration") {
  for (Family fam : {Family::RT, Family::Greg, Family::FH, Family::FG, Family::FRG}) {
    int nmax = (fam == Family::RT || fam == Family::Greg) ? 5 : 4;
    for (int n = 1; n <= nmax; ++n) {
      CAPTURE(family_name(fam));
      CAPTURE(n);
      auto counted = count_bigraded(fam, n);
      auto fromSeries = hilbert(fam, n);
      REQUIRE(counted.size() == fromSeries.size());
      for (const auto& [key, cnt] : counted) {
        REQUIRE(fromSeries.count(key) == 1);
        CHECK(fromSeries.at(key) == Integer(cnt));
      }
    }
  }
}

TEST_CASE("total dimensions: known sequences") {
  // Rooted trees: n^{n-1}.
  for (int n = 1; n <= 7; ++n)
    CHECK(hilbert_total(Family::RT, n) == rooted_tree_count(n));

  const std::vector<long long> greg = {1, 3, 22, 262, 4336, 91984};
  const std::vector<long long> fh = {1, 3, 19, 195, 2791, 51303};
  for (int n = 1; n <= 6; ++n) {
    CHECK(hilbert_total(Family::Greg, n) == Integer(greg[n - 1]));
    CHECK(hilbert_total(Family::FH, n) == Integer(fh[n - 1]));
  }
  CHECK(hilbert_total(Family::FG, 2) == 4);
  CHECK(hilbert_total(Family::FG, 3) == 38);
  CHECK(hilbert_total(Family::FRG, 2) == 4);
}

TEST_CASE("arity-3 refined dimensions") {
  // Greg trees on 3 labels, graded by number of black vertices.
  std::map<std::pair<int, int>, Integer> greg3 = {
      {{0, 0}, 9}, {{0, 1}, 10}, {{0, 2}, 3}};
  CHECK(hilbert(Family::Greg, 3) == greg3);

  // Hypertree forests on 3 labels, graded by weight.
  std::map<std::pair<int, int>, Integer> fh3 = {
      {{0, 0}, 9}, {{1, 0}, 9}, {{2, 0}, 1}};
  CHECK(hilbert(Family::FH, 3) == fh3);

  // The black-count marginals of the full bigraded table at n = 3.
  std::map<int, Integer> byBlacks;
  for (const auto& [key, d] : hilbert(Family::FG, 3)) byBlacks[key.second] += d;
  CHECK(byBlacks == std::map<int, Integer>{{0, 19}, {1, 16}, {2, 3}});
}

TEST_CASE("black-marked specialization collapses to rooted trees") {
  const int N = 8;
  // Setting u = 1, v = -1 cancels every forest with a black vertex or a
  // non-simple edge against its rewrites, leaving the rooted-tree series.
  Series collapsed = subst_uv(hilbert_series(Family::FRG, N), 1, -1);
  CHECK(collapsed == hilbert_series(Family::RT, N));
  for (int n = 1; n <= N; ++n) {
    Rational expected(rooted_tree_count(n), factorial(n));
    CHECK(collapsed.a[n] == Poly2::constant(expected));
  }
}

TEST_CASE("dual dimension sequences") {
  auto comPreLie = dual_dims(DualPair::ComPreLie, 8);
  REQUIRE(comPreLie.size() == 9);
  const std::vector<long long> anchor = {1, 3, 8, 24, 89};
  for (int n = 1; n <= 5; ++n) CHECK(comPreLie[n] == Integer(anchor[n - 1]));
  for (int n = 1; n <= 8; ++n) CHECK(comPreLie[n] == dual_formula(n));

  auto comGreg = dual_dims(DualPair::ComGreg, 8);
  const std::vector<long long> anchorG = {1, 4, 10, 27, 93};
  for (int n = 1; n <= 5; ++n) CHECK(comGreg[n] == Integer(anchorG[n - 1]));
  for (int n = 1; n <= 8; ++n)
    CHECK(comGreg[n] == dual_formula(n) + Integer(n - 1));
}

TEST_CASE("Koszul functional equation holds for both pairs") {
  std::string why;
  CHECK(koszul_check(DualPair::ComPreLie, 8, &why));
  CHECK(why.empty());
  CHECK(koszul_check(DualPair::ComGreg, 8, &why));
  CHECK(why.empty());
}

TEST_CASE("Koszul check detects a perturbed dual") {
  const int N = 8;
  Series f = pair_series(DualPair::ComPreLie, N);
  Series fdual = pair_dual_series(DualPair::ComPreLie, N);
  std::string why;
  REQUIRE(koszul_check(f, fdual, &why));

  Series broken = fdual;
  broken.a[5] += Poly2::constant(Rational(1, 1000));
  CHECK_FALSE(koszul_check(f, broken, &why));
  CHECK(!why.empty());
}

TEST_CASE("primal pair series match the family dimensions") {
  const int N = 6;
  Series f = pair_series(DualPair::ComPreLie, N);
  for (int n = 1; n <= N; ++n)
    CHECK(f.a[n] == Poly2::constant(Rational(hilbert_total(Family::FH, n), factorial(n))));
  Series g = pair_series(DualPair::ComGreg, N);
  for (int n = 1; n <= 4; ++n)
    CHECK(g.a[n] == Poly2::constant(Rational(hilbert_total(Family::FG, n), factorial(n))));
}

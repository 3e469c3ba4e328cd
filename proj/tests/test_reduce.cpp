#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperops/enumerate.hpp"
#include "hyperops/insert.hpp"
#include "hyperops/reduce.hpp"

using namespace hyperops;

namespace {
Key K(const char* s) { return encode(parse_forest(s)); }
LinComb L(std::initializer_list<const char*> terms) {
  LinComb r;
  for (const char* s : terms) add_to(r, K(s), 1);
  return r;
}
}  // namespace

TEST_CASE("rewrite anchors") {
  // A hyperedge at a black root: the displaced member becomes a new root.
  CHECK(reduce(K("B<1,2><3>")) == L({"{B<1><3>, 2}", "{B<2><3>, 1}"}));
  // A hyperedge at a black below a white: displaced members climb into the
  // parent's member list.
  CHECK(reduce(K("1<B<2,3><4>>")) ==
        L({"1<{B<2><4>, 3}>", "1<{B<3><4>, 2}>"}));
  // g o_2 c rewrites into the two reduced forests.
  CHECK(reduce(compose(K("B<1><2>"), 2, K("{1, 2}"))) ==
        L({"{B<1><2>, 3}", "{B<1><3>, 2}"}));
}

TEST_CASE("reduced inputs are fixed points") {
  for (Family fam : {Family::FH, Family::FRG}) {
    for (const auto& k : enumerate_family(fam, 3)) CHECK(reduce(k) == lc(k));
  }
}

TEST_CASE("fixed points of reduce are exactly FRG") {
  for (int n = 2; n <= 4; ++n) {
    const auto& fg = enumerate_family(Family::FG, n);
    for (const auto& k : fg) {
      bool fixed = reduce(k) == lc(k);
      CHECK(fixed == valid(k, Family::FRG));
    }
  }
}

TEST_CASE("normal forms are reduced and weight homogeneous") {
  for (const auto& k : enumerate_family(Family::FG, 4)) {
    int j = weight(k), kb = black_count(k);
    for (const auto& [nf, c] : reduce(k)) {
      CHECK(c > 0);
      CHECK(is_reduced(nf));
      CHECK(valid(nf, Family::FRG));
      CHECK(weight(nf) == j);
      CHECK(black_count(nf) == kb);
    }
  }
}

TEST_CASE("strategies agree (confluence, exhaustive arity 3)") {
  for (const auto& k : enumerate_family(Family::FG, 3)) {
    auto nf0 = reduce_with_strategy(k, ReduceStrategy::DeepestFirst);
    auto nf1 = reduce_with_strategy(k, ReduceStrategy::ShallowFirst);
    auto nf2 = reduce_with_strategy(k, ReduceStrategy::RandomRedex, 99);
    CHECK(nf0 == nf1);
    CHECK(nf0 == nf2);
    CHECK(nf0 == reduce(k));
  }
}

TEST_CASE("every rewrite step strictly lowers the height") {
  for (const auto& k : enumerate_family(Family::FG, 4)) {
    reduce_with_strategy(k, ReduceStrategy::RandomRedex, 7,
                         [](const Forest& f, const std::vector<Forest>& out) {
                           long long h = height(f);
                           for (const auto& g : out) CHECK(height(g) < h);
                         });
  }
}

TEST_CASE("compose_reduced stays inside FRG and is associative on a sample") {
  Key g = K("B<1><2>");
  Key c = K("{1, 2}");
  auto gc = compose_reduced_std(g, 2, c);
  for (const auto& [k, coef] : gc) {
    (void)coef;
    CHECK(valid(k, Family::FRG));
  }
  // (g o_2 c) o_1 x vs g o_2 ... parallel-axiom smoke check:
  Key x = K("1<2>");
  auto left = compose_reduced_std(g, 1, x);   // arity 3
  LinComb l2;
  for (const auto& [k, coef] : left) add_to(l2, compose_reduced_std(k, 3, c), coef);
  auto right = compose_reduced_std(g, 2, c);  // arity 3
  LinComb r2;
  for (const auto& [k, coef] : right)
    add_to(r2, compose_reduced_std(k, 1, x), coef);
  CHECK(l2 == r2);
}

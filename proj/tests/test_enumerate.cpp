#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperops/enumerate.hpp"

using namespace hyperops;

namespace {
std::set<std::string> spelled(Family fam, int n) {
  std::set<std::string> out;
  for (const auto& k : enumerate_family(fam, n)) out.insert(to_string(k));
  return out;
}
}  // namespace

TEST_CASE("arity-2 bases") {
  CHECK(spelled(Family::RT, 2) == std::set<std::string>{"1<2>", "2<1>"});
  CHECK(spelled(Family::Greg, 2) ==
        std::set<std::string>{"1<2>", "2<1>", "B<1><2>"});
  CHECK(spelled(Family::FH, 2) ==
        std::set<std::string>{"1<2>", "2<1>", "{1, 2}"});
  CHECK(spelled(Family::FG, 2) ==
        std::set<std::string>{"1<2>", "2<1>", "{1, 2}", "B<1><2>"});
  CHECK(spelled(Family::FRG, 2) ==
        std::set<std::string>{"1<2>", "2<1>", "{1, 2}", "B<1><2>"});
}

TEST_CASE("known sizes") {
  CHECK(enumerate_family(Family::RT, 1).size() == 1);
  CHECK(enumerate_family(Family::RT, 4).size() == 64);
  CHECK(enumerate_family(Family::RT, 5).size() == 625);
  CHECK(enumerate_family(Family::Greg, 3).size() == 22);
  CHECK(enumerate_family(Family::Greg, 4).size() == 262);
  CHECK(enumerate_family(Family::FH, 3).size() == 19);
  CHECK(enumerate_family(Family::FH, 4).size() == 195);
  CHECK(enumerate_family(Family::FG, 2).size() == 4);
  CHECK(enumerate_family(Family::FG, 3).size() == 38);
}

TEST_CASE("bigraded counts, small anchors") {
  // Greg trees on 3 whites by black count: 9, 10, 3.
  auto g3 = count_bigraded(Family::Greg, 3);
  CHECK(g3[{0, 0}] == 9);
  CHECK(g3[{0, 1}] == 10);
  CHECK(g3[{0, 2}] == 3);

  // Hypertree forests on 3 whites by weight: 9, 9, 1.
  auto h3 = count_bigraded(Family::FH, 3);
  CHECK(h3[{0, 0}] == 9);
  CHECK(h3[{1, 0}] == 9);
  CHECK(h3[{2, 0}] == 1);

  // Greg hypertree forests on 3 whites by black count: 19, 16, 3.
  auto f3 = count_bigraded(Family::FG, 3);
  long long k0 = 0, k1 = 0, k2 = 0;
  for (const auto& [jk, c] : f3) {
    if (jk.second == 0) k0 += c;
    if (jk.second == 1) k1 += c;
    if (jk.second == 2) k2 += c;
  }
  CHECK(k0 == 19);
  CHECK(k1 == 16);
  CHECK(k2 == 3);
}

TEST_CASE("keys are distinct and valid by construction") {
  for (Family fam : {Family::RT, Family::Greg, Family::FH, Family::FG,
                     Family::FRG}) {
    for (int n = 1; n <= 4; ++n) {
      const auto& ks = enumerate_family(fam, n);
      std::set<Key> distinct(ks.begin(), ks.end());
      CHECK(distinct.size() == ks.size());
      for (const auto& k : ks) {
        CHECK(valid(k, fam));
        CHECK(white_count(decode(k)) == n);
      }
    }
  }
}

TEST_CASE("family containments") {
  // RT(n) is the black-free, weight-0 part of everything.
  auto rt = enumerate_family(Family::RT, 4);
  auto fh = enumerate_family(Family::FH, 4);
  auto fg = enumerate_family(Family::FG, 4);
  auto frg = enumerate_family(Family::FRG, 4);
  std::set<Key> sfh(fh.begin(), fh.end()), sfg(fg.begin(), fg.end()),
      sfrg(frg.begin(), frg.end());
  for (const auto& k : rt) {
    CHECK(sfh.count(k));
    CHECK(sfg.count(k));
    CHECK(sfrg.count(k));
  }
  // FRG is exactly the reduced part of FG.
  long long reduced_in_fg = 0;
  for (const auto& k : fg) reduced_in_fg += is_reduced(k);
  CHECK(reduced_in_fg == static_cast<long long>(frg.size()));
  for (const auto& k : frg) CHECK(sfg.count(k));
}

TEST_CASE("set partitions") {
  CHECK(set_partitions(0).size() == 1);  // the empty partition
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(5).size() == 52);
}

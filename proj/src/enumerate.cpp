#include "hyperops/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace hyperops {

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  // Standard recursion: item i joins an existing block or starts a new one.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(blocks);
      return;
    }
    for (auto& b : blocks) {
      b.push_back(i);
      self(self, i + 1);
      b.pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

namespace {

// Trees and forests are generated on {1..m} and relabelled onto arbitrary
// label sets by order isomorphism, so the heavy work is memoized per size.
struct Generators {
  std::map<std::pair<Family, int>, std::vector<Forest>> tree_memo;

  // All single trees of the family on labels {1..m}.
  const std::vector<Forest>& trees(Family fam, int m) {
    auto key = std::make_pair(fam, m);
    auto it = tree_memo.find(key);
    if (it != tree_memo.end()) return it->second;
    std::vector<Forest> out;
    if (m >= 1) {
      gen_white_rooted(fam, m, out);
      if (fam == Family::Greg || fam == Family::FG || fam == Family::FRG)
        gen_black_rooted(fam, m, out);
    }
    return tree_memo.emplace(key, std::move(out)).first->second;
  }

  // Relabels a structure built on {1..m} onto the sorted label set `ls`.
  static Vertex relabel(const Vertex& v, const std::vector<int>& ls) {
    Vertex out;
    out.label = v.label > 0 ? ls[v.label - 1] : v.label;
    out.groups.reserve(v.groups.size());
    for (const auto& g : v.groups) {
      Group ng;
      ng.reserve(g.size());
      for (const auto& mem : g) ng.push_back(relabel(mem, ls));
      out.groups.push_back(std::move(ng));
    }
    return out;
  }

  // All trees on an arbitrary sorted label set.
  std::vector<Vertex> trees_on(Family fam, const std::vector<int>& ls) {
    const auto& base = trees(fam, static_cast<int>(ls.size()));
    std::vector<Vertex> out;
    out.reserve(base.size());
    for (const auto& f : base) out.push_back(relabel(f.trees[0], ls));
    return out;
  }

  // Every way to pick one subtree per block of a partition of `rest`,
  // yielding the vector of chosen subtrees.
  void subtree_tuples(Family fam, const std::vector<std::vector<int>>& blocks,
                      const std::vector<int>& rest,
                      const std::function<void(std::vector<Vertex>&)>& sink) {
    std::vector<std::vector<Vertex>> choices;
    choices.reserve(blocks.size());
    for (const auto& b : blocks) {
      std::vector<int> ls;
      ls.reserve(b.size());
      for (int i : b) ls.push_back(rest[i]);
      std::sort(ls.begin(), ls.end());
      choices.push_back(trees_on(fam, ls));
    }
    std::vector<Vertex> current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == choices.size()) {
        sink(current);
        return;
      }
      for (const auto& t : choices[i]) {
        current.push_back(t);
        self(self, i + 1);
        current.pop_back();
      }
    };
    rec(rec, 0);
  }

  // Distributes the chosen subtrees into groups and emits the vertex.
  // White vertices of FH/FG/FRG may bundle several subtrees into one
  // hyperedge; RT/Greg vertices and FRG blacks keep every edge simple.
  void emit_with_groupings(int root_label, bool root_black, Family fam,
                           std::vector<Vertex>& subtrees,
                           std::vector<Forest>& out) {
    bool simple_only = fam == Family::RT || fam == Family::Greg ||
                       (root_black && fam == Family::FRG);
    auto push = [&](std::vector<Group>&& groups) {
      if (root_black && groups.size() < 2) return;
      Vertex v;
      v.label = root_black ? 0 : root_label;
      v.groups = std::move(groups);
      Forest f;
      f.trees.push_back(std::move(v));
      out.push_back(std::move(f));
    };
    if (simple_only) {
      std::vector<Group> groups;
      groups.reserve(subtrees.size());
      for (const auto& t : subtrees) groups.push_back(Group{t});
      push(std::move(groups));
      return;
    }
    for (const auto& part : set_partitions(static_cast<int>(subtrees.size()))) {
      std::vector<Group> groups;
      groups.reserve(part.size());
      for (const auto& block : part) {
        Group g;
        g.reserve(block.size());
        for (int i : block) g.push_back(subtrees[i]);
        groups.push_back(std::move(g));
      }
      push(std::move(groups));
    }
  }

  void gen_white_rooted(Family fam, int m, std::vector<Forest>& out) {
    for (int r = 1; r <= m; ++r) {
      std::vector<int> rest;
      for (int i = 1; i <= m; ++i)
        if (i != r) rest.push_back(i);
      if (rest.empty()) {
        Forest f;
        f.trees.push_back(Vertex{r, {}});
        out.push_back(std::move(f));
        continue;
      }
      for (const auto& blocks : set_partitions(static_cast<int>(rest.size()))) {
        subtree_tuples(fam, blocks, rest, [&](std::vector<Vertex>& subtrees) {
          emit_with_groupings(r, false, fam, subtrees, out);
        });
      }
    }
  }

  void gen_black_rooted(Family fam, int m, std::vector<Forest>& out) {
    if (m < 2) return;  // a black vertex needs at least two groups
    std::vector<int> all;
    for (int i = 1; i <= m; ++i) all.push_back(i);
    for (const auto& blocks : set_partitions(m)) {
      if (blocks.size() < 2) continue;
      subtree_tuples(fam, blocks, all, [&](std::vector<Vertex>& subtrees) {
        emit_with_groupings(0, true, fam, subtrees, out);
      });
    }
  }
};

Generators& gens() {
  static Generators g;
  return g;
}

}  // namespace

const std::vector<Key>& enumerate_family(Family fam, int n) {
  static std::map<std::pair<Family, int>, std::vector<Key>> memo;
  auto mk = std::make_pair(fam, n);
  auto it = memo.find(mk);
  if (it != memo.end()) return it->second;
  if (n < 1) throw std::invalid_argument("enumerate_family: arity must be >= 1");

  std::vector<Key> keys;
  auto& g = gens();
  if (fam == Family::RT || fam == Family::Greg) {
    for (const auto& f : g.trees(fam, n)) keys.push_back(encode(f));
  } else {
    // A forest: set partition of the labels into tree supports, one tree on
    // each block.
    for (const auto& blocks : set_partitions(n)) {
      std::vector<std::vector<Vertex>> choices;
      choices.reserve(blocks.size());
      for (const auto& b : blocks) {
        std::vector<int> ls;
        for (int i : b) ls.push_back(i + 1);
        std::sort(ls.begin(), ls.end());
        choices.push_back(g.trees_on(fam, ls));
      }
      Forest f;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
          keys.push_back(encode(f));
          return;
        }
        for (const auto& t : choices[i]) {
          f.trees.push_back(t);
          self(self, i + 1);
          f.trees.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  std::sort(keys.begin(), keys.end());
  assert(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  return memo.emplace(mk, std::move(keys)).first->second;
}

std::map<std::pair<int, int>, long long> count_bigraded(Family fam, int n) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& k : enumerate_family(fam, n)) {
    Forest f = decode(k);
    ++out[{weight(f), black_count(f)}];
  }
  return out;
}

}  // namespace hyperops

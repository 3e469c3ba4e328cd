#include "hyperops/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperops/insert.hpp"

namespace hyperops {

namespace {

struct Redex {
  int tree = -1;
  std::vector<std::pair<int, int>> steps;  // path to the black vertex
  int group = -1;                          // index of the oversized group
  int depth = 0;
};

void find_redexes(const Vertex& v, int tree, int depth,
                  std::vector<std::pair<int, int>>& path,
                  std::vector<Redex>& out) {
  if (v.black()) {
    for (std::size_t gi = 0; gi < v.groups.size(); ++gi)
      if (v.groups[gi].size() >= 2)
        out.push_back(Redex{tree, path, static_cast<int>(gi), depth});
  }
  for (std::size_t gi = 0; gi < v.groups.size(); ++gi)
    for (std::size_t mi = 0; mi < v.groups[gi].size(); ++mi) {
      path.emplace_back(static_cast<int>(gi), static_cast<int>(mi));
      find_redexes(v.groups[gi][mi], tree, depth + 1, path, out);
      path.pop_back();
    }
}

std::uint64_t next_rng(std::uint64_t& s) {
  // splitmix64; deterministic and independent of the standard library.
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<Forest> rewrite_step(const Forest& f, ReduceStrategy strategy,
                                 std::uint64_t* rng_state) {
  std::vector<Redex> redexes;
  std::vector<std::pair<int, int>> path;
  for (std::size_t t = 0; t < f.trees.size(); ++t)
    find_redexes(f.trees[t], static_cast<int>(t), 0, path, redexes);
  if (redexes.empty()) return {};

  std::size_t pick = 0;
  switch (strategy) {
    case ReduceStrategy::DeepestFirst: {
      int best = -1;
      for (std::size_t i = 0; i < redexes.size(); ++i)
        if (redexes[i].depth > best) { best = redexes[i].depth; pick = i; }
      break;
    }
    case ReduceStrategy::ShallowFirst:
      pick = 0;
      break;
    case ReduceStrategy::RandomRedex: {
      std::uint64_t dummy = 12345;
      std::uint64_t& s = rng_state ? *rng_state : dummy;
      pick = static_cast<std::size_t>(next_rng(s) % redexes.size());
      break;
    }
  }
  const Redex& rx = redexes[pick];

  std::vector<Forest> out;
  const Vertex& black0 = [&]() -> const Vertex& {
    const Vertex* p = &f.trees[rx.tree];
    for (auto [gi, mi] : rx.steps) p = &p->groups[gi][mi];
    return *p;
  }();
  std::size_t esize = black0.groups[rx.group].size();

  for (std::size_t keep = 0; keep < esize; ++keep) {
    Forest r = f;
    Vertex* p = &r.trees[rx.tree];
    Vertex* parent = nullptr;
    int parent_group = -1, parent_member = -1;
    for (auto [gi, mi] : rx.steps) {
      parent = p;
      parent_group = gi;
      parent_member = mi;
      p = &p->groups[gi][mi];
    }
    Group moved;
    Group& e = p->groups[rx.group];
    for (std::size_t m = 0; m < e.size(); ++m)
      if (m != keep) moved.push_back(std::move(e[m]));
    Vertex kept = std::move(e[keep]);
    e.clear();
    e.push_back(std::move(kept));
    if (parent == nullptr) {
      // The black vertex is a root: displaced members become new roots.
      for (auto& m : moved) r.trees.push_back(std::move(m));
    } else {
      Group& host = parent->groups[parent_group];
      (void)parent_member;
      for (auto& m : moved) host.push_back(std::move(m));
    }
    out.push_back(std::move(r));
  }
  return out;
}

const LinComb& reduce(const Key& k) {
  static std::map<Key, LinComb> memo;
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  Forest f = decode(k);
  LinComb result;
  auto steps = rewrite_step(f, ReduceStrategy::DeepestFirst);
  if (steps.empty()) {
    result = lc(k);
  } else {
    for (const auto& g : steps) add_to(result, reduce(encode(g)));
  }
  return memo.emplace(k, std::move(result)).first->second;
}

LinComb reduce(const LinComb& x) {
  LinComb r;
  for (const auto& [k, c] : x) add_to(r, reduce(k), c);
  return r;
}

LinComb reduce_with_strategy(
    const Key& k, ReduceStrategy strategy, std::uint64_t seed,
    const std::function<void(const Forest&, const std::vector<Forest>&)>&
        on_step) {
  std::uint64_t state = seed;
  LinComb out;
  // Work queue of (forest, multiplicity); no memoization so that every
  // rewrite path really runs under the requested strategy.
  std::vector<std::pair<Forest, Rational>> queue;
  queue.emplace_back(decode(k), 1);
  while (!queue.empty()) {
    auto [f, c] = std::move(queue.back());
    queue.pop_back();
    auto steps = rewrite_step(f, strategy, &state);
    if (steps.empty()) {
      add_to(out, encode(f), c);
      continue;
    }
    if (on_step) on_step(f, steps);
    for (auto& g : steps) queue.emplace_back(std::move(g), c);
  }
  return out;
}

LinComb compose_reduced(const Key& a, int i, const Key& b) {
  return reduce(insert(a, i, b));
}

LinComb compose_reduced(const LinComb& a, int i, const LinComb& b) {
  return reduce(insert(a, i, b));
}

LinComb compose_reduced_std(const Key& a, int i, const Key& b) {
  return reduce(compose(a, i, b));
}

LinComb compose_reduced_std(const LinComb& a, int i, const LinComb& b) {
  return reduce(compose(a, i, b));
}

}  // namespace hyperops

#include "hyperops/insert.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperops {

namespace {

// Appends one group to the vertex with the given preorder index (roots
// first, then groups in stored order).  Returns the number of vertices
// seen, so callers can chain the count across trees.
int add_group_at(Vertex& v, int target, int seen, const Group& g, bool& done) {
  if (seen == target) {
    v.groups.push_back(g);
    done = true;
    return seen + 1;
  }
  ++seen;
  for (auto& grp : v.groups)
    for (auto& m : grp) {
      if (done) return seen;
      seen = add_group_at(m, target, seen, g, done);
    }
  return seen;
}

int count_vertices(const Vertex& v) {
  int n = 1;
  for (const auto& g : v.groups)
    for (const auto& m : g) n += count_vertices(m);
  return n;
}

struct Slot {
  // Path to the white vertex labelled i: tree index, then a chain of
  // (group index, member index) steps.
  int tree = -1;
  std::vector<std::pair<int, int>> steps;
  const Vertex* vertex = nullptr;
};

bool find_slot(const Vertex& v, int label, Slot& slot) {
  if (v.label == label) {
    slot.vertex = &v;
    return true;
  }
  for (std::size_t gi = 0; gi < v.groups.size(); ++gi)
    for (std::size_t mi = 0; mi < v.groups[gi].size(); ++mi)
      if (find_slot(v.groups[gi][mi], label, slot)) {
        slot.steps.emplace_back(static_cast<int>(gi), static_cast<int>(mi));
        return true;
      }
  return false;
}

}  // namespace

std::vector<Forest> insert_terms(const Forest& a, int i, const Forest& b) {
  if (i <= 0) throw std::invalid_argument("insert: slot label must be positive");
  Slot slot;
  for (std::size_t t = 0; t < a.trees.size(); ++t)
    if (find_slot(a.trees[t], i, slot)) {
      slot.tree = static_cast<int>(t);
      std::reverse(slot.steps.begin(), slot.steps.end());
      break;
    }
  if (slot.tree < 0)
    throw std::invalid_argument("insert: label " + std::to_string(i) +
                                " does not occur in the host forest");
  {
    std::vector<int> la = labels(a), lb = labels(b);
    std::set<int> sa(la.begin(), la.end());
    sa.erase(i);
    for (int l : lb)
      if (sa.count(l))
        throw std::invalid_argument("insert: label sets overlap at " +
                                    std::to_string(l));
  }

  const Vertex& vi = *slot.vertex;
  int nb = 0;
  for (const auto& t : b.trees) nb += count_vertices(t);
  int q = static_cast<int>(vi.groups.size());

  // One term per assignment of vi's groups to vertices of B.
  std::vector<int> assign(q, 0);
  std::vector<Forest> out;
  for (;;) {
    // Build B with the reattached groups.
    Forest bb = b;
    bool bad = false;
    for (int gi = 0; gi < q && !bad; ++gi) {
      bool done = false;
      int seen = 0;
      for (auto& t : bb.trees) {
        seen = add_group_at(t, assign[gi], seen, vi.groups[gi], done);
        if (done) break;
      }
      if (!done) bad = true;
    }
    if (bad) throw std::logic_error("insert: vertex index out of range");

    // Splice bb into the slot.
    Forest r;
    r.trees.reserve(a.trees.size() + bb.trees.size());
    for (std::size_t t = 0; t < a.trees.size(); ++t)
      if (static_cast<int>(t) != slot.tree) r.trees.push_back(a.trees[t]);
    if (slot.steps.empty()) {
      // vi was a root: every tree of bb joins the forest.
      for (auto& t : bb.trees) r.trees.push_back(std::move(t));
    } else {
      Vertex host = a.trees[slot.tree];
      Vertex* p = &host;
      for (std::size_t s = 0; s + 1 < slot.steps.size(); ++s)
        p = &p->groups[slot.steps[s].first][slot.steps[s].second];
      auto [gi, mi] = slot.steps.back();
      Group& g = p->groups[gi];
      g.erase(g.begin() + mi);
      for (auto& t : bb.trees) g.push_back(std::move(t));
      r.trees.push_back(std::move(host));
    }
    out.push_back(std::move(r));

    // Next assignment.
    int gi = 0;
    while (gi < q && ++assign[gi] == nb) assign[gi++] = 0;
    if (gi == q) break;
    if (q == 0) break;
  }
  if (q == 0 && out.empty()) throw std::logic_error("insert: no term built");
  return out;
}

LinComb insert(const Key& a, int i, const Key& b) {
  LinComb r;
  for (const auto& f : insert_terms(decode(a), i, decode(b)))
    add_to(r, encode(f), 1);
  return r;
}

LinComb insert(const LinComb& a, int i, const LinComb& b) {
  LinComb r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_to(r, insert(ka, i, kb), ca * cb);
  return r;
}

std::map<int, int> shift_map_outer(int m, int i, int n) {
  std::map<int, int> mm;
  for (int j = 1; j <= m; ++j) mm[j] = j <= i ? j : j + n - 1;
  return mm;
}

std::map<int, int> shift_map_inner(int i, int n) {
  std::map<int, int> mm;
  for (int j = 1; j <= n; ++j) mm[j] = j + i - 1;
  return mm;
}

namespace {
void require_standard(const Key& k, const char* who) {
  Forest f = decode(k);
  auto ls = labels(f);
  for (std::size_t j = 0; j < ls.size(); ++j)
    if (ls[j] != static_cast<int>(j) + 1) {
      std::ostringstream os;
      os << who << ": labels must be 1.." << ls.size() << ", got "
         << to_string(f);
      throw std::invalid_argument(os.str());
    }
}
}  // namespace

LinComb compose(const Key& a, int i, const Key& b) {
  require_standard(a, "compose");
  require_standard(b, "compose");
  Forest fa = decode(a), fb = decode(b);
  int m = white_count(fa), n = white_count(fb);
  if (i < 1 || i > m)
    throw std::invalid_argument("compose: slot out of range");
  Key a2 = encode(act(fa, shift_map_outer(m, i, n)));
  Key b2 = encode(act(fb, shift_map_inner(i, n)));
  return insert(a2, i, b2);
}

LinComb compose(const LinComb& a, int i, const LinComb& b) {
  LinComb r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_to(r, compose(ka, i, kb), ca * cb);
  return r;
}

std::string to_string(const LinComb& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a) {
    if (c > 0 && !first) os << " + ";
    if (c < 0) os << (first ? "-" : " - ");
    Rational abs = c < 0 ? Rational(-c) : c;
    if (abs != 1) os << abs << "*";
    os << to_string(k);
    first = false;
  }
  return os.str();
}

}  // namespace hyperops

#include "hyperops/forest.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperops {

Family family_from_string(const std::string& s) {
  if (s == "RT" || s == "rt") return Family::RT;
  if (s == "Greg" || s == "greg" || s == "G") return Family::Greg;
  if (s == "FH" || s == "fh") return Family::FH;
  if (s == "FG" || s == "fg") return Family::FG;
  if (s == "FRG" || s == "frg") return Family::FRG;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::RT: return "RT";
    case Family::Greg: return "Greg";
    case Family::FH: return "FH";
    case Family::FG: return "FG";
    case Family::FRG: return "FRG";
  }
  return "?";
}

namespace {

// Canonicalizes v in place and returns its encoding.  Tags (negative
// labels) are invisible to the encoding: all blacks serialize as 0.
Key canon_vertex(Vertex& v) {
  std::vector<std::pair<Key, Group>> groups;
  groups.reserve(v.groups.size());
  for (auto& g : v.groups) {
    std::vector<std::pair<Key, Vertex>> members;
    members.reserve(g.size());
    for (auto& m : g) {
      Vertex mv = std::move(m);
      Key mk = canon_vertex(mv);
      members.emplace_back(std::move(mk), std::move(mv));
    }
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Key gk;
    gk.push_back(static_cast<std::int32_t>(members.size()));
    Group ng;
    ng.reserve(members.size());
    for (auto& [mk, mv] : members) {
      gk.insert(gk.end(), mk.begin(), mk.end());
      ng.push_back(std::move(mv));
    }
    groups.emplace_back(std::move(gk), std::move(ng));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Key code;
  code.push_back(v.label > 0 ? v.label : 0);
  code.push_back(static_cast<std::int32_t>(groups.size()));
  v.groups.clear();
  v.groups.reserve(groups.size());
  for (auto& [gk, ng] : groups) {
    code.insert(code.end(), gk.begin(), gk.end());
    v.groups.push_back(std::move(ng));
  }
  return code;
}

Vertex decode_vertex(const Key& k, std::size_t& pos) {
  if (pos + 2 > k.size()) throw std::invalid_argument("truncated key");
  Vertex v;
  v.label = k[pos++];
  int ngroups = k[pos++];
  v.groups.reserve(ngroups);
  for (int i = 0; i < ngroups; ++i) {
    if (pos >= k.size()) throw std::invalid_argument("truncated key");
    int nmembers = k[pos++];
    Group g;
    g.reserve(nmembers);
    for (int j = 0; j < nmembers; ++j) g.push_back(decode_vertex(k, pos));
    v.groups.push_back(std::move(g));
  }
  return v;
}

}  // namespace

Forest canonicalize(const Forest& f) {
  Forest c = f;
  std::vector<std::pair<Key, Vertex>> trees;
  trees.reserve(c.trees.size());
  for (auto& t : c.trees) {
    Vertex tv = std::move(t);
    Key tk = canon_vertex(tv);
    trees.emplace_back(std::move(tk), std::move(tv));
  }
  std::sort(trees.begin(), trees.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  c.trees.clear();
  for (auto& [tk, tv] : trees) c.trees.push_back(std::move(tv));
  return c;
}

Key encode(const Forest& f) {
  Forest c = f;
  std::vector<Key> tks;
  tks.reserve(c.trees.size());
  for (auto& t : c.trees) tks.push_back(canon_vertex(t));
  std::sort(tks.begin(), tks.end());
  Key out;
  out.push_back(static_cast<std::int32_t>(tks.size()));
  for (auto& tk : tks) out.insert(out.end(), tk.begin(), tk.end());
  return out;
}

Forest decode(const Key& k) {
  if (k.empty()) throw std::invalid_argument("empty key");
  std::size_t pos = 0;
  int ntrees = k[pos++];
  Forest f;
  f.trees.reserve(ntrees);
  for (int i = 0; i < ntrees; ++i) f.trees.push_back(decode_vertex(k, pos));
  if (pos != k.size()) throw std::invalid_argument("trailing key data");
  return f;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) +
                                ": " + what + " in \"" + s + "\"");
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  Vertex parse_tree() {
    skip_ws();
    if (pos >= s.size()) fail("expected a vertex");
    Vertex v;
    if (s[pos] == 'B' || s[pos] == 'b') {
      v.label = 0;
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int n = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        n = n * 10 + (s[pos++] - '0');
      if (n == 0) fail("white labels start at 1");
      v.label = n;
    } else {
      fail("expected a label or 'B'");
    }
    while (eat('<')) {
      Group g;
      g.push_back(parse_tree());
      while (eat(',')) g.push_back(parse_tree());
      if (!eat('>')) fail("expected '>'");
      v.groups.push_back(std::move(g));
    }
    return v;
  }

  Forest parse() {
    Forest f;
    skip_ws();
    if (eat('{')) {
      f.trees.push_back(parse_tree());
      while (eat(',')) f.trees.push_back(parse_tree());
      if (!eat('}')) fail("expected '}'");
    } else {
      f.trees.push_back(parse_tree());
    }
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return f;
  }
};

void collect_labels(const Vertex& v, std::vector<int>& out) {
  if (v.label > 0) out.push_back(v.label);
  for (const auto& g : v.groups)
    for (const auto& m : g) collect_labels(m, out);
}

void print_vertex(const Vertex& v, std::ostringstream& os) {
  if (v.label > 0)
    os << v.label;
  else
    os << 'B';
  for (const auto& g : v.groups) {
    os << '<';
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) os << ',';
      print_vertex(g[i], os);
    }
    os << '>';
  }
}

}  // namespace

Forest parse_forest(const std::string& text) {
  Parser p{text};
  Forest f = p.parse();
  std::vector<int> ls;
  for (const auto& t : f.trees) collect_labels(t, ls);
  std::set<int> distinct(ls.begin(), ls.end());
  if (distinct.size() != ls.size())
    throw std::invalid_argument("repeated white label in \"" + text + "\"");
  return f;
}

std::string to_string(const Forest& f) {
  std::ostringstream os;
  if (f.trees.size() != 1) os << '{';
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) os << ", ";
    print_vertex(f.trees[i], os);
  }
  if (f.trees.size() != 1) os << '}';
  return os.str();
}

std::string to_string(const Key& k) { return to_string(decode(k)); }

namespace {
template <class F>
void walk(const Vertex& v, F&& f) {
  f(v);
  for (const auto& g : v.groups)
    for (const auto& m : g) walk(m, f);
}
}  // namespace

int white_count(const Forest& f) {
  int n = 0;
  for (const auto& t : f.trees)
    walk(t, [&](const Vertex& v) { n += v.label > 0; });
  return n;
}

int black_count(const Forest& f) {
  int n = 0;
  for (const auto& t : f.trees)
    walk(t, [&](const Vertex& v) { n += v.label <= 0; });
  return n;
}

int black_count(const Key& k) {
  // Blacks serialize as label 0; labels sit at self-delimiting positions,
  // so decode rather than scanning for zeros (counts also appear in keys).
  return black_count(decode(k));
}

int vertex_count(const Forest& f) {
  int n = 0;
  for (const auto& t : f.trees) walk(t, [&](const Vertex&) { ++n; });
  return n;
}

int weight(const Forest& f) {
  int w = static_cast<int>(f.trees.size()) - 1;
  for (const auto& t : f.trees)
    walk(t, [&](const Vertex& v) {
      for (const auto& g : v.groups) w += static_cast<int>(g.size()) - 1;
    });
  return w;
}

int weight(const Key& k) { return weight(decode(k)); }

std::vector<int> labels(const Forest& f) {
  std::vector<int> ls;
  for (const auto& t : f.trees) collect_labels(t, ls);
  std::sort(ls.begin(), ls.end());
  return ls;
}

int max_label(const Forest& f) {
  int m = 0;
  for (const auto& t : f.trees)
    walk(t, [&](const Vertex& v) { m = std::max(m, v.label); });
  return m;
}

namespace {
bool valid_vertex(const Vertex& v, Family fam) {
  if (v.black()) {
    if (fam == Family::RT || fam == Family::FH) return false;
    if (v.groups.size() < 2) return false;
  }
  for (const auto& g : v.groups) {
    if (g.empty()) return false;
    if (g.size() >= 2) {
      if (fam == Family::RT || fam == Family::Greg) return false;
      if (fam == Family::FRG && v.black()) return false;
    }
    for (const auto& m : g)
      if (!valid_vertex(m, fam)) return false;
  }
  return true;
}
}  // namespace

bool valid(const Forest& f, Family fam) {
  if (f.trees.empty()) return false;
  if ((fam == Family::RT || fam == Family::Greg) && f.trees.size() != 1)
    return false;
  std::vector<int> ls;
  for (const auto& t : f.trees) collect_labels(t, ls);
  std::set<int> distinct(ls.begin(), ls.end());
  if (distinct.size() != ls.size()) return false;
  for (int l : ls)
    if (l <= 0) return false;
  for (const auto& t : f.trees)
    if (!valid_vertex(t, fam)) return false;
  return true;
}

bool valid(const Key& k, Family fam) { return valid(decode(k), fam); }

bool is_reduced(const Forest& f) {
  bool ok = true;
  for (const auto& t : f.trees)
    walk(t, [&](const Vertex& v) {
      if (!v.black()) return;
      for (const auto& g : v.groups)
        if (g.size() >= 2) ok = false;
    });
  return ok;
}

bool is_reduced(const Key& k) { return is_reduced(decode(k)); }

namespace {
Vertex act_vertex(const Vertex& v, const std::map<int, int>& m) {
  Vertex out;
  if (v.label > 0) {
    auto it = m.find(v.label);
    if (it == m.end())
      throw std::invalid_argument("act: label " + std::to_string(v.label) +
                                  " missing from the relabelling map");
    if (it->second <= 0)
      throw std::invalid_argument("act: relabelling must stay positive");
    out.label = it->second;
  } else {
    out.label = v.label;
  }
  out.groups.reserve(v.groups.size());
  for (const auto& g : v.groups) {
    Group ng;
    ng.reserve(g.size());
    for (const auto& mem : g) ng.push_back(act_vertex(mem, m));
    out.groups.push_back(std::move(ng));
  }
  return out;
}
}  // namespace

Forest act(const Forest& f, const std::map<int, int>& m) {
  std::set<int> images;
  for (const auto& [from, to] : m) {
    (void)from;
    if (!images.insert(to).second)
      throw std::invalid_argument("act: relabelling map is not injective");
  }
  Forest out;
  out.trees.reserve(f.trees.size());
  for (const auto& t : f.trees) out.trees.push_back(act_vertex(t, m));
  return out;
}

Key act(const Key& k, const std::map<int, int>& m) {
  return encode(act(decode(k), m));
}

namespace {
// whites = white vertices on the chain [v..root] including v;
// leading = consecutive blacks at the bottom of that chain (from v upward,
// stopping at the first white).
void height_walk(const Vertex& v, int whites, int leading, long long& acc) {
  for (const auto& g : v.groups) {
    if (g.size() >= 2)
      acc += static_cast<long long>(g.size() - 1) * (whites + leading);
    for (const auto& m : g) {
      // Invariant: the incoming `leading` equals the leading-black count of
      // the chain starting at the current vertex, which is 0 whenever the
      // current vertex is white.  So a black child always extends it by 1,
      // and a white child resets it.
      int w = whites + (m.label > 0 ? 1 : 0);
      int l = m.label > 0 ? 0 : leading + 1;
      height_walk(m, w, l, acc);
    }
  }
}
}  // namespace

long long height(const Forest& f) {
  long long acc = 0;
  for (const auto& t : f.trees) {
    int w = t.label > 0 ? 1 : 0;
    int l = t.label > 0 ? 0 : 1;
    height_walk(t, w, l, acc);
  }
  return acc;
}

long long height(const Key& k) { return height(decode(k)); }

}  // namespace hyperops

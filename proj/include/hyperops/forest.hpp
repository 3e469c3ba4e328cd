// Core data model: forests of rooted hypertrees with optional black
// (unlabelled) vertices, their canonical forms, text syntax, and basic
// structural statistics.
//
// A vertex owns a set of *groups*.  One group is one hyperedge: the
// nonempty multiset of child subtrees that the hyperedge attaches to this
// vertex.  A group with a single member is an ordinary tree edge; a group
// with m members contributes m-1 to the weight of the forest.  A forest
// with several trees likewise contributes (#trees - 1) to the weight: a
// forest behaves exactly like one more hyperedge whose members are the
// roots.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperops {

struct Vertex;
using Group = std::vector<Vertex>;

struct Vertex {
  // label > 0: white vertex carrying that label.
  // label <= 0: black vertex.  Plain combinatorial code writes 0; the
  // sign-aware layer temporarily stores bookkeeping tags in non-positive
  // labels.  Every consumer outside that layer treats label <= 0 as black.
  int label = 0;
  std::vector<Group> groups;

  bool black() const { return label <= 0; }
  bool leaf() const { return groups.empty(); }
};

struct Forest {
  std::vector<Vertex> trees;
};

enum class Family { RT, Greg, FH, FG, FRG };

Family family_from_string(const std::string& s);  // throws std::invalid_argument
std::string family_name(Family f);

// Canonical key: a self-delimiting integer encoding of a forest, equal for
// two forests iff they are equal up to reordering of trees, groups and
// group members.  Layout:
//   forest := ntrees, tree...
//   tree   := label (0 for black), ngroups, group...
//   group  := nmembers, tree...
// with trees, groups and members each sorted by their own sub-encoding.
using Key = std::vector<std::int32_t>;

Key encode(const Forest& f);       // canonicalizes a copy, then serializes
Forest decode(const Key& k);       // inverse; blacks come back as label 0
Forest canonicalize(const Forest& f);

// Text syntax.  A tree is a label (digits) or 'B'/'b' for a black vertex,
// followed by zero or more groups '<m1,m2,...>'.  A forest with several
// trees is written '{t1, t2, ...}'; a single tree is written bare.
// Examples: "1<2><3>", "1<2,3>", "{1,2}", "B<1><2>".
Forest parse_forest(const std::string& text);  // throws std::invalid_argument
std::string to_string(const Forest& f);        // prints the stored order
std::string to_string(const Key& k);           // canonical spelling

// Structural statistics.
int white_count(const Forest& f);
int black_count(const Forest& f);
int black_count(const Key& k);
int vertex_count(const Forest& f);
int weight(const Forest& f);               // (#trees-1) + sum (|group|-1)
int weight(const Key& k);
std::vector<int> labels(const Forest& f);  // sorted white labels
int max_label(const Forest& f);

// Family membership.  Checks label distinctness/positivity, the black
// vertex rule (a black vertex must carry at least two groups), and the
// family's shape constraints: RT and Greg are single trees with simple
// edges only; FH has no blacks; FRG restricts blacks to simple edges.
bool valid(const Forest& f, Family fam);
bool valid(const Key& k, Family fam);

// True when no black vertex carries a group with two or more members,
// i.e. the forest is a normal form for the rewrite rule in reduce().
bool is_reduced(const Forest& f);
bool is_reduced(const Key& k);

// Relabelling of white vertices.  Every white label occurring in f must be
// a key of m, and m must be injective on them.
Forest act(const Forest& f, const std::map<int, int>& m);
Key act(const Key& k, const std::map<int, int>& m);

// Height of a forest: the sum over hyperedges (groups with >= 2 members)
// of weight(E) * pathcount(E), where pathcount counts the white vertices
// on the chain from the hyperedge's carrier vertex up to the root of its
// tree, plus the leading consecutive black vertices of that chain (blacks
// below the first white, counted from the carrier upward).  Hyperedge-free
// forests have height 0, and every step of the rewrite rule strictly
// lowers the height; both facts are exercised by the test-suite.
long long height(const Forest& f);
long long height(const Key& k);

}  // namespace hyperops

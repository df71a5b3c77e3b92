#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "textiles/textile.hpp"

namespace textiles {

// A directed graph with edges colored 1 (horizontal) or 2 (vertical).
struct TwoColoredGraph {
  DirectedGraph graph;
  std::map<std::string, int> degree;  // edge id -> 1 | 2

  int color(const std::string& edge) const;
  std::vector<std::string> edges_of_color(int c) const;  // sorted
};

// A commuting square left.top ~ bottom.right: left/right are color-2 edges,
// top/bottom color-1, with s(left) = r(top), r(left) = r(bottom),
// s(right) = s(top), r(right) = s(bottom).
struct CommutingSquare {
  std::string label;
  std::string top;
  std::string left;
  std::string bottom;
  std::string right;
};

// A rank-2 graph presented extensionally: 1-skeleton plus a complete,
// unambiguous set of commuting squares.
struct TwoGraph {
  TwoColoredGraph skeleton;
  std::vector<CommutingSquare> squares;  // sorted by label

  const CommutingSquare& square(const std::string& label) const;
  // In-edges of both colors at z, sorted.
  std::vector<std::string> incoming(const std::string& z) const;
};

// Checks KG0-KG2 on the given data and returns the assembled 2-graph; on
// failure throws an Error listing every violated completeness or uniqueness
// instance.
TwoGraph validate_twograph(TwoColoredGraph skeleton, std::vector<CommutingSquare> squares);

bool twograph_struct_equal(const TwoGraph& a, const TwoGraph& b, std::string* why = nullptr);

// LR textile system -> 2-graph: vertices E^0, color-1 edges E^1, color-2
// edges F^0 with s(w) = p(w), r(w) = q(w), one square per F-edge.  Throws if
// the system is not LR, naming a failing lifting instance.
TwoGraph textile_to_twograph(const TextileSystem& t);

// 2-graph -> LR textile system: E = (vertices, color-1 edges); F has the
// color-2 edges as vertices and the squares as edges (r = left, s = right);
// p reads tops, q reads bottoms.
TextileSystem twograph_to_textile(const TwoGraph& g);

bool is_essential_twograph(const TwoGraph& g);

// Per-vertex ordered partition of the incoming skeleton edges of both
// colors, subject to the pairing condition: the left and bottom edge of
// every square lie in the same class at their common range vertex.
struct TwoGraphInsplitPartition {
  PartitionClasses classes;

  std::size_t num_classes(const std::string& z) const;
  int class_of(const std::string& z, const std::string& edge) const;  // 1-based, 0 if absent
  bool is_trivial() const;
};

TwoGraphInsplitPartition trivial_twograph_partition(const TwoGraph& g);

struct PairingCheck {
  bool ok = false;
  std::vector<std::string> coverage_errors;    // partition shape problems
  std::vector<std::string> pairing_violations; // squares whose left/bottom split
};

PairingCheck check_pairing(const TwoGraph& g, const TwoGraphInsplitPartition& p);

struct TwoGraphInsplitResult {
  TwoGraph graph;
  std::string separator;
  std::map<std::string, std::pair<std::string, int>> vertex_origin;
  std::map<std::string, std::pair<std::string, int>> edge_origin;
  std::map<std::string, std::pair<std::string, int>> square_origin;

  const std::string& vertex_child(const std::string& parent, int i) const;
  const std::string& edge_child(const std::string& parent, int i) const;
  const std::string& square_child(const std::string& parent, int i) const;

 private:
  friend TwoGraphInsplitResult insplit_twograph(const TwoGraph&, const TwoGraphInsplitPartition&,
                                                const std::string&);
  std::map<std::pair<std::string, int>, std::string> vertex_child_;
  std::map<std::pair<std::string, int>, std::string> edge_child_;
  std::map<std::pair<std::string, int>, std::string> square_child_;
};

// 2-graph insplitting.  Vertices z^i; edges f^i (i up to m(s(f))) with
// s(f^i) = s(f)^i and r(f^i) = r(f)^j for f in class j at r(f); every square
// spawns one child per copy of its source corner.  The output is validated.
TwoGraphInsplitResult insplit_twograph(const TwoGraph& g, const TwoGraphInsplitPartition& p,
                                       const std::string& separator = "");

// All pairing-respecting partitions, canonically ordered (classes by least
// member; vertices combined odometer-style with the trivial partition
// first).  `limit` = 0 means no cap on the number of results; the per-vertex
// in-degree guard of 10 always applies.
std::vector<TwoGraphInsplitPartition> enumerate_pairing_partitions(const TwoGraph& g,
                                                                   std::size_t limit = 0);

TwoGraph rename_twograph(const TwoGraph& g, const std::map<std::string, std::string>& relabel);

}  // namespace textiles

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "textiles/error.hpp"

namespace textiles {

struct Edge {
  std::string id;
  std::string source;
  std::string range;
};

// Finite directed graph with string-labeled vertices and edges.  An edge
// points from its source to its range; paths compose right-to-left, so a
// path f1 f2 requires s(f1) = r(f2).  Vertex and edge labels live in one
// namespace and must not collide.  Immutable after construction.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& v) const;
  bool has_edge(const std::string& id) const;
  const Edge& edge(const std::string& id) const;
  const std::string& range(const std::string& id) const { return edge(id).range; }
  const std::string& source(const std::string& id) const { return edge(id).source; }

  // r^{-1}(v) and s^{-1}(v), each sorted by edge id.
  const std::vector<std::string>& into(const std::string& v) const;
  const std::vector<std::string>& out_of(const std::string& v) const;

  bool is_source_free() const;  // r onto
  bool is_essential() const;    // r and s both onto

  // All labels (vertices and edges) in use.
  std::set<std::string> labels() const;

 private:
  std::vector<std::string> vertices_;  // sorted
  std::vector<Edge> edges_;            // sorted by id
  std::map<std::string, std::size_t> edge_index_;
  std::map<std::string, std::vector<std::string>> into_;
  std::map<std::string, std::vector<std::string>> out_;
};

bool graphs_equal(const DirectedGraph& a, const DirectedGraph& b);

// Per-vertex ordered partition classes; the map key is the vertex, the value
// lists the classes in index order (indices are 1-based and meaningful).
using PartitionClasses = std::map<std::string, std::vector<std::set<std::string>>>;

// Partition of r^{-1}(v) for every vertex v.  Classes are nonempty, except
// that a vertex with no incoming edges carries exactly one empty class.
struct GraphInsplitPartition {
  PartitionClasses classes;

  std::size_t num_classes(const std::string& v) const;
  // 1-based class index of an edge at vertex v; 0 if not found.
  int class_of(const std::string& v, const std::string& edge) const;
  bool is_trivial() const;  // one class at every vertex
};

GraphInsplitPartition trivial_partition(const DirectedGraph& g);

// Throws Error naming the offending vertex/edge if P is not a valid
// insplitting partition for g.
void validate_graph_partition(const GraphInsplitPartition& p, const DirectedGraph& g);

// Deterministic child-name scheme used by every splitting move: children are
// parent + sep + index with sep a run of '^'.  The separator escalates until
// no child name collides with a reserved label.
std::string choose_separator(const std::set<std::string>& reserved,
                             const std::map<std::string, std::size_t>& copies);

struct InsplitGraphResult {
  DirectedGraph graph;
  std::string separator;
  // child label -> (parent label, 1-based copy index)
  std::map<std::string, std::pair<std::string, int>> vertex_origin;
  std::map<std::string, std::pair<std::string, int>> edge_origin;

  const std::string& vertex_child(const std::string& parent, int i) const;
  const std::string& edge_child(const std::string& parent, int i) const;

 private:
  friend InsplitGraphResult insplit_graph(const DirectedGraph&, const GraphInsplitPartition&,
                                          const std::set<std::string>&, const std::string&);
  std::map<std::pair<std::string, int>, std::string> vertex_child_;
  std::map<std::pair<std::string, int>, std::string> edge_child_;
};

// Directed-graph insplitting.  Child vertex v^i for each class i at v; child
// edge f^j for 1 <= j <= m(s(f)) with s(f^j) = s(f)^j and r(f^j) = r(f)^k
// where f lies in class k at r(f).  `reserved` adds labels (beyond g's own)
// that child names must avoid; `separator` forces the name scheme when the
// caller needs several splits to share it.
InsplitGraphResult insplit_graph(const DirectedGraph& g, const GraphInsplitPartition& p,
                                 const std::set<std::string>& reserved = {},
                                 const std::string& separator = "");

struct GraphIso {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

// Brute-force isomorphism search (backtracking over degree-compatible vertex
// assignments).  Intended for desk-scale graphs; may be slow on large input.
std::optional<GraphIso> graphs_isomorphic(const DirectedGraph& a, const DirectedGraph& b);

}  // namespace textiles

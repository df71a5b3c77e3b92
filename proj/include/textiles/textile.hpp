#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "textiles/graph.hpp"

namespace textiles {

// Graph homomorphism stored as explicit vertex and edge maps.
struct GraphHom {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;

  const std::string& v(const std::string& vertex) const;
  const std::string& e(const std::string& edge) const;
};

GraphHom identity_hom(const DirectedGraph& g);

// Checks totality and the commuting equations h(r(f)) = r(h(f)),
// h(s(f)) = s(h(f)).  Reports the first offending item via `why`.
bool validate_hom(const GraphHom& h, const DirectedGraph& dom, const DirectedGraph& cod,
                  std::string* why = nullptr);

bool homs_equal(const GraphHom& a, const GraphHom& b);

// A textile system (p, q : F -> E): two graph homomorphisms such that
// f |-> (r(f), p(f), s(f), q(f)) is injective on F-edges.  The four label
// sets F^0, F^1, E^0, E^1 are pairwise disjoint.
struct TextileSystem {
  DirectedGraph F;
  DirectedGraph E;
  GraphHom p;
  GraphHom q;
};

TextileSystem build_textile(DirectedGraph F, DirectedGraph E, GraphHom p, GraphHom q);

bool textile_struct_equal(const TextileSystem& a, const TextileSystem& b,
                          std::string* why = nullptr);

// The unit square attached to an F-edge: r(f) on the left, p(f) on top,
// s(f) on the right, q(f) on the bottom.
struct SquareView {
  std::string label;
  std::string left;
  std::string top;
  std::string right;
  std::string bottom;
};

std::vector<SquareView> squares_of(const TextileSystem& t);

struct LiftWitness {
  std::string vertex;               // F-vertex of the failing pair
  std::string edge;                 // E-edge of the failing pair
  std::vector<std::string> lifts;   // empty (no lift) or >= 2 (ambiguous)
};

// Path-lifting flags for p and q, each computed by exhaustive search over
// (F-vertex, E-edge) pairs.  x_lift means a lift always exists, x_unique
// means exactly one always exists.  LR = p_unique_r && q_unique_s.  Every
// pair with zero or several lifts is recorded.
struct LiftingReport {
  bool p_r_lift = false, p_unique_r = false;
  bool p_s_lift = false, p_unique_s = false;
  bool q_r_lift = false, q_unique_r = false;
  bool q_s_lift = false, q_unique_s = false;
  bool is_LR = false;
  std::vector<LiftWitness> p_r_anomalies, p_s_anomalies, q_r_anomalies, q_s_anomalies;
};

LiftingReport lifting_report(const TextileSystem& t);

// F essential and p, q surjective on both vertices and edges.
bool is_essential_textile(const TextileSystem& t);

// The inverted system: horizontal and vertical roles swap.  Involutive up to
// structural equality, and LR is preserved.
TextileSystem invert_textile(const TextileSystem& t);

struct TextileInsplitResult {
  TextileSystem system;
  InsplitGraphResult split;  // provenance of F's children
};

// Textile-system insplitting: F is insplit, E is unchanged, p and q are
// inherited through the parent maps.
TextileInsplitResult insplit_textile(const TextileSystem& t, const GraphInsplitPartition& p,
                                        const std::string& separator = "");

// Applies a label renaming to every component of the system.  Labels absent
// from the map are kept.  Used to compare constructions up to canonical
// relabelings.
TextileSystem rename_textile(const TextileSystem& t,
                             const std::map<std::string, std::string>& relabel);

}  // namespace textiles

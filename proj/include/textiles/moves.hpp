#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "textiles/blocks.hpp"
#include "textiles/twograph.hpp"

namespace textiles {

enum class PartitionKind { TwoGraphG, GraphF, GraphE };

// The three mutually determined partitions of an insplitting move: G on the
// skeleton of the associated 2-graph, F on the top graph, E on the bottom
// graph.  They satisfy F_v^i = vF^1 n p^-1(E^i at p(v)), E_z^i = G_z^i n zE^1
// and G_z^i = E_z^i u r_F(q^-1(E_z^i)).
struct DerivedPartitions {
  TwoGraphInsplitPartition g;
  GraphInsplitPartition f;
  GraphInsplitPartition e;
  std::optional<GraphInsplitPartition> h;  // on F_B; filled by the pipeline only
  PartitionKind provenance = PartitionKind::TwoGraphG;
};

// Derivation entry points; each checks its own hypotheses and throws an
// Error with a named witness when they fail.  A partition given on F is
// index-normalized first: at each z the lexicographically least vertex of
// p^-1(z) anchors the class order.
DerivedPartitions derive_partitions(const TextileSystem& t, const TwoGraphInsplitPartition& g);
DerivedPartitions derive_partitions_from_f(const TextileSystem& t,
                                           const GraphInsplitPartition& f);
DerivedPartitions derive_partitions_from_e(const TextileSystem& t,
                                           const GraphInsplitPartition& e);

// The four-move reconstruction: insplit by the derived F-partition, invert,
// insplit by the H-partition, invert again, then prune to the diagonal
// children and relabel them by the squares of the 2-graph insplit.
struct PipelineResult {
  TextileSystem a, b, c, d;
  TextileSystem pruned;
  std::map<std::string, std::string> diagonal;  // surviving F_D edge -> its name in `pruned`
  std::map<std::string, std::string> relabel;   // pruned F-edge -> square of the insplit 2-graph
  TwoGraph lambda;
  TwoGraphInsplitResult lambda_insplit;
  DerivedPartitions parts;
};

PipelineResult four_move_pipeline(const TextileSystem& t, const TwoGraphInsplitPartition& g);

// Single-move reconstructions.  Each returns an LR textile system whose
// 2-graph equals the 2-graph insplit (checked internally).
TextileSystem reconstruct_from_pairing(const TextileSystem& t, const TwoGraphInsplitPartition& g,
                           std::vector<std::string>* warnings = nullptr);

struct TopReconstruction {
  TextileSystem system;
  TwoGraphInsplitPartition gpart;
  GraphInsplitPartition fpart;  // normalized
  GraphInsplitPartition epart;
};

TopReconstruction reconstruct_from_top_partition(const TextileSystem& t, const GraphInsplitPartition& fpart);

struct BaseReconstruction {
  TextileSystem system;
  GraphInsplitPartition fpart;
  TwoGraphInsplitPartition gpart;
};

BaseReconstruction reconstruct_from_base_partition(const TextileSystem& t, const GraphInsplitPartition& epart);

// One partition of any flavor.
struct AnyPartition {
  PartitionKind kind = PartitionKind::TwoGraphG;
  TwoGraphInsplitPartition twograph;
  GraphInsplitPartition graph;
};

struct RoundtripReport {
  bool ok = false;
  std::vector<std::string> mismatches;
};

// Runs the derivation cycle starting from the given partition, checks that
// every recovered partition equals the original classwise, and that the
// three single-move constructions build structurally equal systems.
RoundtripReport roundtrip_equivalences(const TextileSystem& t, const AnyPartition& start);

}  // namespace textiles

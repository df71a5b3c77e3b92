#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "textiles/twograph.hpp"

namespace textiles {

struct RandomTwoGraphOptions {
  int max_vertices = 2;
  int extra_edges = 2;  // edges of each color beyond the minimum cover
};

// Samples a small essential 2-graph: commuting vertex matrices for the two
// colors (so a complete square set exists), then a uniformly random
// completion bijection per corner pair.  Deterministic for a fixed seed.
TwoGraph random_twograph(std::uint64_t seed, const RandomTwoGraphOptions& opts = {});

// Convenience: the LR textile system of a random 2-graph.
TextileSystem random_lr_textile(std::uint64_t seed, const RandomTwoGraphOptions& opts = {});

// A partition of r^-1 with two classes at one vertex of in-degree >= 2 and
// trivial elsewhere; absent when every vertex has in-degree < 2.
std::optional<GraphInsplitPartition> random_nontrivial_partition(const DirectedGraph& g,
                                                                 std::mt19937_64& rng);

}  // namespace textiles

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "textiles/textile.hpp"

namespace textiles {

// A w x h array of F-edge labels; cells are stored row-major with row 0 the
// bottom row, matching the N^2 orientation.  Admissibility is the local
// nearest-neighbor condition: s(x) = r(right neighbor of x) and
// p(x) = q(cell above x).
struct RectBlock {
  int width = 0;
  int height = 0;
  std::vector<std::string> cells;

  RectBlock() = default;
  RectBlock(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h) {}

  const std::string& at(int col, int row) const {
    return cells[static_cast<std::size_t>(row) * width + col];
  }
  std::string& at(int col, int row) {
    return cells[static_cast<std::size_t>(row) * width + col];
  }
  bool operator==(const RectBlock& o) const {
    return width == o.width && height == o.height && cells == o.cells;
  }
  bool operator<(const RectBlock& o) const { return cells < o.cells; }
};

struct SizeGuard {
  long max_cells = 36;
  double max_frontier = 1e6;
};

// Reads TEXTILES_MAX_CELLS / TEXTILES_MAX_FRONTIER when set.
SizeGuard size_guard_from_env();

bool block_valid(const TextileSystem& t, const RectBlock& b, std::string* why = nullptr);

// All locally admissible w x h blocks in lexicographic order of the cell
// label sequence (bottom row first, left to right).
std::vector<RectBlock> enumerate_blocks(const TextileSystem& t, int w, int h,
                                        const SizeGuard& guard = size_guard_from_env());

// The transpose lives over the inverted system: cell (i,j) -> (j,i).
RectBlock transpose_block(const RectBlock& b);

// Builds the row above `row`: a strip y with q(y_i) = p(row_i), horizontally
// consistent, choosing the lexicographically smallest vertex and edge at
// each step.  Requires q to have r-path lifting and q|F^0 onto; both are
// checked before the search.
std::vector<std::string> lift_row(const TextileSystem& t, const std::vector<std::string>& row);

// A block map with window ell = (ell1, ell2): the table sends each
// admissible (ell1+1) x (ell2+1) window, keyed by its cell sequence, to one
// target symbol.  Applying it to a w x h block yields (w-ell1) x (h-ell2).
struct BlockMap {
  int ell1 = 0;
  int ell2 = 0;
  std::map<std::vector<std::string>, std::string> table;
};

RectBlock apply_block_map(const BlockMap& bm, const RectBlock& b);

// The mutually inverse block maps of the insplitting conjugacy: Phi sends
// each child edge to its parent (window 0); Psi reads a horizontal domino
// (f, g) and emits f^j where g lies in class j at s(f) (window (1,0)).
std::pair<BlockMap, BlockMap> insplit_conjugacy_block_maps(const TextileSystem& t,
                                                      const GraphInsplitPartition& p);

// Every adjacent pair of windows must map to target-adjacent symbols.
bool blockmap_consistent(const BlockMap& bm, const TextileSystem& src, const TextileSystem& dst,
                         std::string* why = nullptr,
                         const SizeGuard& guard = size_guard_from_env());

struct ConjugacyReport {
  bool ok = false;
  std::string detail;  // first counterexample, or a summary on success
};

// Desk-scale conjugacy check: for every block size up to max_w x max_h (with
// margins for the window sizes), phi maps X-blocks into Y-blocks, psi
// conversely, and both composites agree with the lower-left crop.
ConjugacyReport verify_conjugacy_on_blocks(const TextileSystem& x, const TextileSystem& y,
                                           const BlockMap& phi, const BlockMap& psi, int max_w,
                                           int max_h,
                                           const SizeGuard& guard = size_guard_from_env());

}  // namespace textiles

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sample_systems.hpp"
#include "textiles/blocks.hpp"
#include "textiles/randgen.hpp"

using namespace textiles;

namespace {

// Independent oracle: try every |F^1|^(w*h) assignment and keep the ones
// satisfying both adjacency conditions cellwise.
std::vector<RectBlock> brute_force_blocks(const TextileSystem& t, int w, int h) {
  std::vector<std::string> alphabet;
  for (const auto& e : t.F.edges()) alphabet.push_back(e.id);
  std::vector<RectBlock> out;
  int total = w * h;
  std::vector<std::size_t> idx(total, 0);
  for (;;) {
    RectBlock b(w, h);
    for (int i = 0; i < total; ++i) b.cells[i] = alphabet[idx[i]];
    if (block_valid(t, b)) out.push_back(b);
    int i = total - 1;
    while (i >= 0 && ++idx[i] == alphabet.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::set<std::vector<std::string>> cell_set(const std::vector<RectBlock>& blocks) {
  std::set<std::vector<std::string>> out;
  for (const auto& b : blocks) out.insert(b.cells);
  return out;
}

}  // namespace

TEST_CASE("1x1 blocks are the F-edges") {
  TextileSystem t = samples::chain_system();
  auto blocks = enumerate_blocks(t, 1, 1);
  REQUIRE(blocks.size() == t.F.edges().size());
  for (std::size_t i = 0; i < blocks.size(); ++i) CHECK(blocks[i].cells[0] == t.F.edges()[i].id);
}

TEST_CASE("2x2 enumeration matches the brute-force oracle") {
  TextileSystem t = samples::chain_system();
  auto fast = enumerate_blocks(t, 2, 2);
  auto slow = brute_force_blocks(t, 2, 2);
  CHECK(fast.size() == 6);  // frozen from the oracle
  CHECK(cell_set(fast) == cell_set(slow));
  CHECK(std::is_sorted(fast.begin(), fast.end()));

  TextileSystem q = samples::quad_tile_system();
  CHECK(cell_set(enumerate_blocks(q, 2, 2)) == cell_set(brute_force_blocks(q, 2, 2)));
  CHECK(cell_set(enumerate_blocks(q, 3, 1)) == cell_set(brute_force_blocks(q, 3, 1)));
  CHECK(cell_set(enumerate_blocks(q, 1, 3)) == cell_set(brute_force_blocks(q, 1, 3)));
}

TEST_CASE("blocks of the non-LR system still enumerate") {
  TextileSystem t = samples::non_lr_system();
  CHECK(cell_set(enumerate_blocks(t, 2, 2)) == cell_set(brute_force_blocks(t, 2, 2)));
}

TEST_CASE("restriction monotonicity") {
  TextileSystem t = samples::chain_system();
  auto smaller = cell_set(enumerate_blocks(t, 2, 2));
  for (const auto& b : enumerate_blocks(t, 3, 2)) {
    RectBlock crop(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) crop.at(c, r) = b.at(c, r);
    CHECK(smaller.count(crop.cells));
  }
}

TEST_CASE("size guard") {
  TextileSystem t = samples::chain_system();
  SizeGuard guard;
  guard.max_cells = 4;
  CHECK_THROWS_WITH_AS(enumerate_blocks(t, 3, 2, guard), doctest::Contains("size guard"), Error);
  guard.max_cells = 36;
  guard.max_frontier = 1;
  CHECK_THROWS_WITH_AS(enumerate_blocks(t, 2, 2, guard), doctest::Contains("frontier"), Error);
}

TEST_CASE("transposition") {
  TextileSystem t = samples::chain_system();
  TextileSystem hat = invert_textile(t);

  for (const auto& b : enumerate_blocks(t, 2, 3)) {
    CHECK(transpose_block(transpose_block(b)) == b);
    std::string why;
    CHECK(block_valid(hat, transpose_block(b), &why));
  }
  // the transposed 2x3 set is exactly the 3x2 set of the inverted system
  std::set<std::vector<std::string>> transposed;
  for (const auto& b : enumerate_blocks(t, 2, 3)) transposed.insert(transpose_block(b).cells);
  CHECK(transposed == cell_set(enumerate_blocks(hat, 3, 2)));
  // 1x1 blocks agree as sets
  CHECK(cell_set(enumerate_blocks(t, 1, 1)) == cell_set(enumerate_blocks(hat, 1, 1)));
}

TEST_CASE("lift_row builds the row above") {
  // the quad-tile system satisfies both hypotheses: q is onto on vertices
  // and every (vertex, edge) pair with q(v) = r(e) has a lift
  TextileSystem t = samples::quad_tile_system();
  auto lift = lift_row(t, {"e"});
  REQUIRE(lift.size() == 1);
  CHECK(t.q.e(lift[0]) == t.p.e("e"));

  // iterating the lift builds admissible blocks
  for (const auto& base : enumerate_blocks(t, 3, 1)) {
    RectBlock block(3, 4);
    std::vector<std::string> row(base.cells);
    for (int c = 0; c < 3; ++c) block.at(c, 0) = row[c];
    for (int r = 1; r < 4; ++r) {
      row = lift_row(t, row);
      for (int c = 0; c < 3; ++c) block.at(c, r) = row[c];
    }
    std::string why;
    CHECK(block_valid(t, block, &why));
  }
}

TEST_CASE("lift_row checks its hypotheses first") {
  // q lacks r-path lifting here (nothing with r = a1 maps to b2)
  CHECK_THROWS_WITH_AS(lift_row(samples::non_lr_system(), {"c1"}),
                       doctest::Contains("r-path lifting"), Error);

  // q misses a vertex
  DirectedGraph f({"u"}, {{"l", "u", "u"}});
  DirectedGraph e({"y", "z"}, {{"a", "z", "z"}, {"b", "y", "y"}});
  GraphHom p, q;
  p.vertex_map = {{"u", "z"}};
  q.vertex_map = {{"u", "z"}};
  p.edge_map = {{"l", "a"}};
  q.edge_map = {{"l", "a"}};
  TextileSystem partial = build_textile(f, e, p, q);
  CHECK_THROWS_WITH_AS(lift_row(partial, {"l"}), doctest::Contains("onto"), Error);
}

TEST_CASE("window-0 maps relabel cellwise") {
  TextileSystem t = samples::chain_system();
  BlockMap identity;
  for (const auto& e : t.F.edges()) identity.table[{e.id}] = e.id;
  for (const auto& b : enumerate_blocks(t, 3, 2)) CHECK(apply_block_map(identity, b) == b);
}

TEST_CASE("insplitting block maps on the quad-tile system") {
  TextileSystem t = samples::quad_tile_system();
  GraphInsplitPartition part = samples::quad_tile_partition();
  auto [phi, psi] = insplit_conjugacy_block_maps(t, part);
  TextileSystem ti = insplit_textile(t, part).system;

  // frozen table, read off the class structure by hand: the second edge of
  // the domino ends where the first starts, and its class picks the copy
  CHECK(psi.table.size() == 8);
  CHECK(psi.table.at({"e", "e"}) == "e^1");
  CHECK(psi.table.at({"e", "h"}) == "e^1");
  CHECK(psi.table.at({"f", "e"}) == "f^1");
  CHECK(psi.table.at({"f", "h"}) == "f^1");
  CHECK(psi.table.at({"g", "f"}) == "g^2");
  CHECK(psi.table.at({"g", "g"}) == "g^1");
  CHECK(psi.table.at({"h", "f"}) == "h^2");
  CHECK(psi.table.at({"h", "g"}) == "h^1");

  CHECK(blockmap_consistent(phi, ti, t));
  CHECK(blockmap_consistent(psi, t, ti));

  // phi sends insplit blocks to valid blocks; psi shrinks a 3x2 to 2x2
  for (const auto& b : enumerate_blocks(ti, 2, 2)) {
    std::string why;
    CHECK(block_valid(t, apply_block_map(phi, b), &why));
  }
  for (const auto& b : enumerate_blocks(t, 3, 2)) {
    RectBlock img = apply_block_map(psi, b);
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    std::string why;
    CHECK(block_valid(ti, img, &why));
  }

  ConjugacyReport rep = verify_conjugacy_on_blocks(ti, t, phi, psi, 4, 4);
  CHECK(rep.ok);
}

TEST_CASE("identity maps verify trivially") {
  TextileSystem t = samples::chain_system();
  BlockMap id;
  for (const auto& e : t.F.edges()) id.table[{e.id}] = e.id;
  ConjugacyReport rep = verify_conjugacy_on_blocks(t, t, id, id, 3, 3);
  CHECK(rep.ok);
}

TEST_CASE("a corrupted table entry is caught") {
  TextileSystem t = samples::quad_tile_system();
  GraphInsplitPartition part = samples::quad_tile_partition();
  auto [phi, psi] = insplit_conjugacy_block_maps(t, part);
  TextileSystem ti = insplit_textile(t, part).system;

  psi.table[{"g", "f"}] = "g^1";  // should be g^2
  ConjugacyReport rep = verify_conjugacy_on_blocks(ti, t, phi, psi, 2, 2);
  CHECK_FALSE(rep.ok);
  CHECK(!rep.detail.empty());
}

TEST_CASE("table misses are errors") {
  TextileSystem t = samples::chain_system();
  BlockMap partial;
  partial.table[{"lam1"}] = "lam1";
  RectBlock b(1, 1);
  b.cells = {"lam2"};
  CHECK_THROWS_WITH_AS(apply_block_map(partial, b), doctest::Contains("table miss"), Error);
  RectBlock tiny(1, 1);
  tiny.cells = {"lam1"};
  BlockMap wide;
  wide.ell1 = 1;
  CHECK_THROWS_WITH_AS(apply_block_map(wide, tiny), doctest::Contains("too small"), Error);
}

TEST_CASE("block maps commute with shifting at window level") {
  TextileSystem t = samples::quad_tile_system();
  auto [phi, psi] = insplit_conjugacy_block_maps(t, samples::quad_tile_partition());
  // shifting = cropping at an offset; applying then shifting must equal
  // shifting then applying, for all in-range offsets
  auto sub = [](const RectBlock& b, int dx, int dy, int w, int h) {
    RectBlock out(w, h);
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) out.at(c, r) = b.at(c + dx, r + dy);
    return out;
  };
  for (const auto& b : enumerate_blocks(t, 4, 3)) {
    RectBlock img = apply_block_map(psi, b);  // (4-1)x3
    for (int dx = 0; dx + 1 + psi.ell1 <= b.width; ++dx)
      for (int dy = 0; dy + 1 + psi.ell2 <= b.height; ++dy) {
        RectBlock window = sub(b, dx, dy, b.width - dx, b.height - dy);
        RectBlock a = apply_block_map(psi, window);
        RectBlock expected = sub(img, dx, dy, img.width - dx, img.height - dy);
        CHECK(a == expected);
      }
  }
}

TEST_CASE("blocks of LR systems factor through their boundary paths") {
  // the unique r-path lifting of p rebuilds a block from its top row and
  // left column; the unique s-path lifting of q rebuilds it from its bottom
  // row and right column.  (Bottom row plus left column does NOT determine
  // the block: two cells may share range and q-image.)
  for (const TextileSystem& t : {samples::chain_system(), samples::quad_tile_system(),
                                 random_lr_textile(5), random_lr_textile(9)}) {
    REQUIRE(lifting_report(t).is_LR);
    for (const auto& b : enumerate_blocks(t, 3, 3)) {
      RectBlock top_left(3, 3);
      for (int c = 0; c < 3; ++c) top_left.at(c, 2) = b.at(c, 2);
      for (int r = 0; r < 3; ++r) top_left.at(0, r) = b.at(0, r);
      for (int r = 1; r >= 0; --r) {
        for (int c = 1; c < 3; ++c) {
          // unique cell with this range and p-image
          const std::string& v = t.F.source(top_left.at(c - 1, r));
          const std::string& e = t.q.e(top_left.at(c, r + 1));
          std::string found;
          for (const auto& f : t.F.into(v))
            if (t.p.e(f) == e) {
              CHECK(found.empty());
              found = f;
            }
          REQUIRE_FALSE(found.empty());
          top_left.at(c, r) = found;
        }
      }
      CHECK(top_left == b);

      RectBlock bottom_right(3, 3);
      for (int c = 0; c < 3; ++c) bottom_right.at(c, 0) = b.at(c, 0);
      for (int r = 0; r < 3; ++r) bottom_right.at(2, r) = b.at(2, r);
      for (int r = 1; r < 3; ++r) {
        for (int c = 1; c >= 0; --c) {
          // unique cell with this source and q-image
          const std::string& w = t.F.range(bottom_right.at(c + 1, r));
          const std::string& e = t.p.e(bottom_right.at(c, r - 1));
          std::string found;
          for (const auto& f : t.F.out_of(w))
            if (t.q.e(f) == e) {
              CHECK(found.empty());
              found = f;
            }
          REQUIRE_FALSE(found.empty());
          bottom_right.at(c, r) = found;
        }
      }
      CHECK(bottom_right == b);
    }
  }
}

TEST_CASE("randomized conjugacy checks") {
  std::mt19937_64 rng(23);
  int done = 0;
  for (std::uint64_t seed = 200; done < 10; ++seed) {
    TextileSystem t = random_lr_textile(seed);
    auto part = random_nontrivial_partition(t.F, rng);
    if (!part) continue;
    ++done;
    auto [phi, psi] = insplit_conjugacy_block_maps(t, *part);
    TextileSystem ti = insplit_textile(t, *part).system;
    ConjugacyReport rep = verify_conjugacy_on_blocks(ti, t, phi, psi, 3, 3);
    CHECK_MESSAGE(rep.ok, rep.detail);
  }
}

// Acceptance suite: golden-fixture reproduction plus the property checks,
// one pass/fail line per criterion.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "textiles/moves.hpp"
#include "textiles/randgen.hpp"
#include "textiles/specdoc.hpp"

using namespace textiles;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  if (!in.good()) throw Error("cannot open fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Corpus {
  struct Instance {
    TwoGraph lambda;
    TextileSystem system;
    GraphInsplitPartition nontrivial;  // of F, with one vertex split in two
  };
  std::vector<Instance> instances;
};

Corpus build_corpus(std::size_t want) {
  Corpus corpus;
  std::mt19937_64 rng(424242);
  for (std::uint64_t seed = 1; corpus.instances.size() < want; ++seed) {
    RandomTwoGraphOptions opts;
    opts.max_vertices = 1 + static_cast<int>(seed % 3);
    TwoGraph lambda = random_twograph(seed, opts);
    TextileSystem t = twograph_to_textile(lambda);
    auto p = random_nontrivial_partition(t.F, rng);
    if (!p) continue;
    corpus.instances.push_back({std::move(lambda), std::move(t), std::move(*p)});
  }
  return corpus;
}

std::set<std::vector<std::string>> relabeled_cells(const std::vector<RectBlock>& blocks,
                                                   const std::map<std::string, std::string>& m) {
  std::set<std::vector<std::string>> out;
  for (const auto& b : blocks) {
    std::vector<std::string> cells;
    for (const auto& c : b.cells) {
      auto it = m.find(c);
      cells.push_back(it == m.end() ? c : it->second);
    }
    out.insert(std::move(cells));
  }
  return out;
}

void require(bool cond, const std::string& detail) {
  if (!cond) throw Error(detail);
}

SquareView square_named(const std::vector<SquareView>& squares, const std::string& label) {
  for (const auto& s : squares)
    if (s.label == label) return s;
  throw Error("missing square '" + label + "'");
}

void expect_square(const std::vector<SquareView>& squares, const std::string& label,
                   const std::string& left, const std::string& top, const std::string& right,
                   const std::string& bottom) {
  SquareView s = square_named(squares, label);
  require(s.left == left && s.top == top && s.right == right && s.bottom == bottom,
          "square '" + label + "' has boundary (" + s.left + ", " + s.top + ", " + s.right +
              ", " + s.bottom + "), expected (" + left + ", " + top + ", " + right + ", " +
              bottom + ")");
}

void expect_commuting_square(const TwoGraph& g, const std::string& label,
                             const std::string& left, const std::string& top,
                             const std::string& right, const std::string& bottom) {
  const CommutingSquare& s = g.square(label);
  require(s.left == left && s.top == top && s.right == right && s.bottom == bottom,
          "square '" + label + "' has boundary (" + s.left + ", " + s.top + ", " + s.right +
              ", " + s.bottom + "), expected (" + left + ", " + top + ", " + right + ", " +
              bottom + ")");
}

// --- criteria -------------------------------------------------------------

// JM insplitting of the quad-tile system: the six squares, boundary-exact,
// and the ambiguous lift (g^1, g^2).
std::string criterion1() {
  SpecDocument doc = parse_spec(slurp("bouquet_quad.spec"));
  TextileSystem t = doc.textile("T");
  TextileInsplitResult r = insplit_textile(t, doc.graph_partition("P"));
  auto squares = squares_of(r.system);
  require(squares.size() == 6, "expected 6 squares, got " + std::to_string(squares.size()));
  expect_square(squares, "e^1", "u^1", "a", "u^1", "a");
  expect_square(squares, "f^1", "v^2", "b", "u^1", "b");
  expect_square(squares, "g^1", "v^1", "a", "v^1", "a");
  expect_square(squares, "g^2", "v^1", "a", "v^2", "a");
  expect_square(squares, "h^1", "u^1", "b", "v^1", "b");
  expect_square(squares, "h^2", "u^1", "b", "v^2", "b");
  LiftingReport lr = lifting_report(r.system);
  require(!lr.is_LR, "insplit system is unexpectedly LR");
  bool witness = false;
  for (const auto& w : lr.p_r_anomalies)
    if (w.vertex == "v^1" && w.edge == "a" && w.lifts == std::vector<std::string>{"g^1", "g^2"})
      witness = true;
  require(witness, "witness pair (g^1, g^2) not reported");
  return "6 squares boundary-exact; LR fails with witness (g^1, g^2)";
}

// The two-vertex chain, end to end.
std::string criterion2() {
  SpecDocument doc = parse_spec(slurp("two_vertex_chain.spec"));
  TextileSystem t = doc.textile("T");

  // (a) the 2-graph matches the fixture's skeleton and squares
  TwoGraph lambda = textile_to_twograph(t);
  std::string why;
  require(twograph_struct_equal(lambda, doc.twograph("L"), &why), "2-graph mismatch: " + why);

  // (b) the insplit 2-graph: 3 vertices, 4 + 4 edges, 5 squares
  TwoGraphInsplitPartition g = doc.twograph_partition("G");
  TwoGraphInsplitResult ins = insplit_twograph(lambda, g);
  require(ins.graph.skeleton.graph.vertices().size() == 3, "expected 3 vertices");
  require(ins.graph.skeleton.edges_of_color(1).size() == 4, "expected 4 horizontal edges");
  require(ins.graph.skeleton.edges_of_color(2).size() == 4, "expected 4 vertical edges");
  require(ins.graph.squares.size() == 5, "expected 5 squares");
  expect_commuting_square(ins.graph, "lam1^1", "f1^1", "e1^1", "f1^1", "e1^1");
  expect_commuting_square(ins.graph, "lam2^1", "f2^1", "e1^1", "f1^1", "e2^1");
  expect_commuting_square(ins.graph, "lam3^1", "f3^1", "e2^1", "f2^1", "e3^1");
  expect_commuting_square(ins.graph, "lam4^1", "f3^2", "e3^1", "f3^1", "e3^2");
  expect_commuting_square(ins.graph, "lam4^2", "f3^2", "e3^2", "f3^2", "e3^2");

  // (c) stage sizes of the four-move pipeline
  PipelineResult pipe = four_move_pipeline(t, g);
  require(pipe.a.F.edges().size() == 5, "|F_A^1| != 5");
  require(pipe.b.F.vertices().size() == 3, "|F_B^0| != 3");
  require(pipe.c.F.edges().size() == 7, "|F_C^1| != 7");
  require(pipe.d.F.edges().size() == 7, "|F_D^1| != 7");
  require(pipe.pruned.F.edges().size() == 5, "|pruned F^1| != 5");

  // (d) pruned block sets match the insplit 2-graph's system up to 3x3
  TextileSystem ti = twograph_to_textile(pipe.lambda_insplit.graph);
  for (int w = 1; w <= 3; ++w)
    for (int h = 1; h <= 3; ++h)
      require(relabeled_cells(enumerate_blocks(pipe.pruned, w, h), pipe.relabel) ==
                  relabeled_cells(enumerate_blocks(ti, w, h), {}),
              "block sets differ at " + std::to_string(w) + "x" + std::to_string(h));

  // (e) the bottom graphs are genuinely non-isomorphic
  require(!graphs_isomorphic(pipe.d.E, ti.E).has_value(),
          "E_D is unexpectedly isomorphic to the insplit bottom graph");
  return "2-graph, insplit boundaries, stage sizes (5,3,7,7,5), blocks equal to 3x3, "
         "bottom graphs non-isomorphic";
}

// The rigid square set admits only the trivial partition.
std::string criterion3() {
  SpecDocument doc = parse_spec(slurp("rigid_squares.spec"));
  auto partitions = enumerate_pairing_partitions(doc.twograph("L"));
  require(partitions.size() == 1, "expected exactly one partition");
  require(partitions[0].is_trivial(), "the only partition should be trivial");
  return "only the trivial partition exists";
}

// Insplitting always removes LR.
std::string criterion4(const Corpus& corpus) {
  for (const auto& inst : corpus.instances) {
    require(lifting_report(inst.system).is_LR, "corpus instance is not LR");
    TextileInsplitResult r = insplit_textile(inst.system, inst.nontrivial);
    require(!lifting_report(r.system).is_LR, "an insplit system stayed LR");
  }
  return std::to_string(corpus.instances.size()) + " insplit systems, none LR";
}

// The insplitting block maps are mutually inverse conjugacies.
std::string criterion5(const Corpus& corpus) {
  long blocks = 0;
  for (const auto& inst : corpus.instances) {
    auto [phi, psi] = insplit_conjugacy_block_maps(inst.system, inst.nontrivial);
    TextileSystem ti = insplit_textile(inst.system, inst.nontrivial).system;
    ConjugacyReport rep = verify_conjugacy_on_blocks(ti, inst.system, phi, psi, 4, 4);
    require(rep.ok, rep.detail);
    ++blocks;
  }
  return std::to_string(blocks) + " systems verified up to 4x4";
}

// The 2-graph construction succeeds exactly on LR systems, and converting
// back and forth is the identity.
std::string criterion6(const Corpus& corpus) {
  std::size_t broken = 0;
  for (const auto& inst : corpus.instances) {
    TwoGraph lam = textile_to_twograph(inst.system);  // must succeed: LR
    std::string why;
    require(twograph_struct_equal(lam, inst.lambda, &why), "2-graph round trip failed: " + why);
    require(textile_struct_equal(twograph_to_textile(inst.lambda), inst.system, &why),
            "textile round trip failed: " + why);
  }
  // deliberately broken systems: nontrivial insplits are never LR, and
  // deleting an edge destroys a lift that LR requires
  for (std::size_t i = 0; i < corpus.instances.size() && broken < 75; ++i) {
    const auto& inst = corpus.instances[i];
    std::vector<TextileSystem> bad;
    bad.push_back(insplit_textile(inst.system, inst.nontrivial).system);
    if (inst.system.F.edges().size() > 1) {
      std::vector<Edge> fewer(inst.system.F.edges().begin() + 1, inst.system.F.edges().end());
      GraphHom p, q;
      p.vertex_map = inst.system.p.vertex_map;
      q.vertex_map = inst.system.q.vertex_map;
      for (const auto& e : fewer) {
        p.edge_map[e.id] = inst.system.p.e(e.id);
        q.edge_map[e.id] = inst.system.q.e(e.id);
      }
      bad.push_back(build_textile(DirectedGraph(inst.system.F.vertices(), fewer),
                                  inst.system.E, std::move(p), std::move(q)));
    }
    for (const auto& b : bad) {
      require(!lifting_report(b).is_LR, "a deliberately broken system is still LR");
      bool threw = false;
      try {
        textile_to_twograph(b);
      } catch (const Error&) {
        threw = true;
      }
      require(threw, "textile_to_twograph accepted a non-LR system");
      ++broken;
    }
  }
  require(broken >= 50, "not enough broken systems generated");
  return std::to_string(corpus.instances.size()) + " LR systems and " + std::to_string(broken) +
         " broken ones behave as required";
}

// Essentiality agrees between a system and its 2-graph.
std::string criterion7(const Corpus& corpus) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    const auto& inst = corpus.instances[i];
    require(is_essential_textile(inst.system) == is_essential_twograph(inst.lambda),
            "essentiality flags disagree");
    ++checked;
    if (i % 10 != 0) continue;
    // a variant with an unreachable base vertex: still LR, no longer essential
    std::vector<std::string> vs = inst.system.E.vertices();
    vs.push_back("zz_isolated");
    TextileSystem variant = build_textile(
        inst.system.F, DirectedGraph(vs, inst.system.E.edges()), inst.system.p, inst.system.q);
    require(lifting_report(variant).is_LR, "variant lost LR");
    require(is_essential_textile(variant) ==
                is_essential_twograph(textile_to_twograph(variant)),
            "essentiality flags disagree on the non-essential variant");
    require(!is_essential_textile(variant), "variant should not be essential");
    ++checked;
  }
  return std::to_string(checked) + " agreement checks";
}

// The three single-move constructions agree, are LR, match the 2-graph
// insplit, and the derivation cycle recovers every partition.
std::string criterion8(const Corpus& corpus) {
  long combos = 0;
  for (const auto& inst : corpus.instances) {
    auto partitions = enumerate_pairing_partitions(inst.lambda, 20);
    for (const auto& g : partitions) {
      DerivedPartitions d = derive_partitions(inst.system, g);
      TextileSystem t1 = reconstruct_from_pairing(inst.system, g);
      TopReconstruction t2 = reconstruct_from_top_partition(inst.system, d.f);
      BaseReconstruction t3 = reconstruct_from_base_partition(inst.system, d.e);
      std::string why;
      require(textile_struct_equal(t1, t2.system, &why), "G- vs F-construction: " + why);
      require(textile_struct_equal(t1, t3.system, &why), "G- vs E-construction: " + why);
      require(lifting_report(t1).is_LR, "induced system is not LR");
      require(t2.gpart.classes == g.classes, "F-derived pairing partition differs");
      require(t3.gpart.classes == g.classes, "E-derived pairing partition differs");
      // textile_to_twograph(T~) = insplit 2-graph, via the pipeline's sep
      TwoGraph expect = insplit_twograph(inst.lambda, g).graph;
      require(twograph_struct_equal(textile_to_twograph(t1), expect, &why),
              "2-graph of the induced system differs: " + why);

      AnyPartition sg{PartitionKind::TwoGraphG, g, {}};
      AnyPartition sf{PartitionKind::GraphF, {}, d.f};
      AnyPartition se{PartitionKind::GraphE, {}, d.e};
      for (const auto& start : {sg, sf, se}) {
        RoundtripReport rep = roundtrip_equivalences(inst.system, start);
        require(rep.ok, rep.mismatches.empty() ? "roundtrip failed" : rep.mismatches[0]);
      }
      ++combos;
    }
  }
  return std::to_string(combos) + " (system, partition) combinations coherent";
}

// Nonemptiness via row lifting, where the hypotheses hold.
std::string criterion9(const Corpus& corpus) {
  std::size_t eligible = 0;
  for (const auto& inst : corpus.instances) {
    LiftingReport lr = lifting_report(inst.system);
    if (!lr.q_r_lift) continue;
    if (!inst.system.F.is_source_free()) continue;
    ++eligible;
    for (int w = 1; w <= 4; ++w)
      for (int h = 1; h <= 4; ++h)
        require(!enumerate_blocks(inst.system, w, h).empty(),
                "no " + std::to_string(w) + "x" + std::to_string(h) + " blocks");
    // blocks built by repeated lifting appear in the enumeration
    auto rows = enumerate_blocks(inst.system, 3, 1);
    auto all = relabeled_cells(enumerate_blocks(inst.system, 3, 4), {});
    for (std::size_t i = 0; i < rows.size() && i < 5; ++i) {
      RectBlock block(3, 4);
      std::vector<std::string> row = rows[i].cells;
      for (int c = 0; c < 3; ++c) block.at(c, 0) = row[c];
      for (int r = 1; r < 4; ++r) {
        row = lift_row(inst.system, row);
        for (int c = 0; c < 3; ++c) block.at(c, r) = row[c];
      }
      require(all.count(block.cells) == 1, "lifted block is not in the enumeration");
    }
  }
  require(eligible >= 20, "too few corpus instances satisfy the hypotheses: " +
                              std::to_string(eligible));
  return std::to_string(eligible) + " eligible systems, blocks nonempty up to 4x4";
}

// Inversion: involutive, and blocks transpose.
std::string criterion10(const Corpus& corpus) {
  for (const auto& inst : corpus.instances) {
    std::string why;
    require(textile_struct_equal(invert_textile(invert_textile(inst.system)), inst.system, &why),
            "double inversion changed the system: " + why);
    TextileSystem hat = invert_textile(inst.system);
    for (int w = 1; w <= 3; ++w) {
      for (int h = 1; h <= 4; ++h) {
        std::set<std::vector<std::string>> transposed;
        for (const auto& b : enumerate_blocks(inst.system, w, h))
          transposed.insert(transpose_block(b).cells);
        require(transposed == relabeled_cells(enumerate_blocks(hat, h, w), {}),
                "transposed block sets differ at " + std::to_string(w) + "x" +
                    std::to_string(h));
      }
    }
  }
  return "involution and transposed block sets hold on all " +
         std::to_string(corpus.instances.size()) + " instances";
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  Corpus corpus = build_corpus(200);

  std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"criterion 1 (insplit squares golden)", [&] { return criterion1(); }},
      {"criterion 2 (chain system end-to-end)", [&] { return criterion2(); }},
      {"criterion 3 (rigid squares)", [&] { return criterion3(); }},
      {"criterion 4 (insplitting removes LR)", [&] { return criterion4(corpus); }},
      {"criterion 5 (insplitting conjugacy)", [&] { return criterion5(corpus); }},
      {"criterion 6 (2-graph iff LR + round trips)", [&] { return criterion6(corpus); }},
      {"criterion 7 (essentiality agreement)", [&] { return criterion7(corpus); }},
      {"criterion 8 (construction coherence)", [&] { return criterion8(corpus); }},
      {"criterion 9 (row lifting fills blocks)", [&] { return criterion9(corpus); }},
      {"criterion 10 (inversion transposes blocks)", [&] { return criterion10(corpus); }},
  };

  int failures = 0;
  for (auto& [name, run] : criteria) {
    try {
      std::string detail = run();
      std::cout << "PASS " << name << ": " << detail << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << (failures ? "FAILED " : "PASSED ") << (criteria.size() - failures) << "/"
            << criteria.size() << " criteria in " << dt << " ms ("
            << corpus.instances.size() << " corpus instances)\n";
  return failures == 0 ? 0 : 1;
}

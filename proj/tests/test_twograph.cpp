#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sample_systems.hpp"
#include "textiles/randgen.hpp"

using namespace textiles;

TEST_CASE("the sample 2-graphs validate") {
  CHECK_NOTHROW(samples::chain_lambda());
  CHECK_NOTHROW(samples::rigid_twograph());
}

TEST_CASE("deleting a square breaks completeness") {
  TwoGraph g = samples::chain_lambda();
  std::vector<CommutingSquare> fewer;
  for (const auto& s : g.squares)
    if (s.label != "lam2") fewer.push_back(s);
  CHECK_THROWS_WITH_AS(validate_twograph(g.skeleton, fewer),
                       doctest::Contains("no square with left-top (f2, e1)"), Error);
}

TEST_CASE("duplicate pair breaks uniqueness") {
  TwoGraph g = samples::rigid_twograph();
  auto squares = g.squares;
  squares.push_back({"e2", "a", "u", "d", "u"});  // second square with left u, top a
  CHECK_THROWS_WITH_AS(validate_twograph(g.skeleton, squares), doctest::Contains("ambiguous"),
                       Error);
}

TEST_CASE("textile to 2-graph on the chain system") {
  TwoGraph g = textile_to_twograph(samples::chain_system());
  CHECK(g.skeleton.graph.vertices() == std::vector<std::string>{"v", "w"});
  CHECK(g.skeleton.edges_of_color(1) == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(g.skeleton.edges_of_color(2) == std::vector<std::string>{"f1", "f2", "f3"});
  REQUIRE(g.squares.size() == 4);
  CHECK(twograph_struct_equal(g, samples::chain_lambda()));
}

TEST_CASE("textile to 2-graph fails on the non-LR system") {
  CHECK_THROWS_WITH_AS(textile_to_twograph(samples::non_lr_system()),
                       doctest::Contains("not LR"), Error);
}

TEST_CASE("round trips between 2-graphs and textile systems") {
  TwoGraph lam = samples::chain_lambda();
  CHECK(twograph_struct_equal(textile_to_twograph(twograph_to_textile(lam)), lam));
  TextileSystem t = samples::chain_system();
  CHECK(textile_struct_equal(twograph_to_textile(textile_to_twograph(t)), t));

  TwoGraph rigid = samples::rigid_twograph();
  CHECK(twograph_struct_equal(textile_to_twograph(twograph_to_textile(rigid)), rigid));
}

TEST_CASE("2-graph to textile of the insplit chain") {
  TwoGraphInsplitResult ins = insplit_twograph(samples::chain_lambda(),
                                               samples::chain_g_partition());
  TextileSystem t = twograph_to_textile(ins.graph);
  CHECK(t.F.vertices() == std::vector<std::string>{"f1^1", "f2^1", "f3^1", "f3^2"});
  CHECK(t.F.edges().size() == 5);
  CHECK(t.E.vertices() == std::vector<std::string>{"v^1", "w^1", "w^2"});
  CHECK(t.E.edges().size() == 4);
  CHECK(lifting_report(t).is_LR);
}

TEST_CASE("pairing checks") {
  TwoGraph lam = samples::chain_lambda();
  CHECK(check_pairing(lam, samples::chain_g_partition()).ok);
  CHECK(check_pairing(lam, trivial_twograph_partition(lam)).ok);

  // splitting a and d apart from v at vertex s violates two squares
  TwoGraph rigid = samples::rigid_twograph();
  TwoGraphInsplitPartition p = trivial_twograph_partition(rigid);
  p.classes["s"] = {{"a", "v"}, {"d"}};
  PairingCheck pc = check_pairing(rigid, p);
  CHECK_FALSE(pc.ok);
  CHECK(pc.coverage_errors.empty());
  REQUIRE(pc.pairing_violations.size() == 1);
  CHECK(pc.pairing_violations[0].find("square 'f'") != std::string::npos);

  // coverage problems are reported separately
  TwoGraphInsplitPartition missing = p;
  missing.classes["s"] = {{"a"}, {"d"}};
  PairingCheck pc2 = check_pairing(rigid, missing);
  CHECK_FALSE(pc2.ok);
  CHECK_FALSE(pc2.coverage_errors.empty());
}

TEST_CASE("insplitting the chain 2-graph") {
  TwoGraph lam = samples::chain_lambda();
  TwoGraphInsplitResult ins = insplit_twograph(lam, samples::chain_g_partition());
  const TwoGraph& li = ins.graph;

  CHECK(li.skeleton.graph.vertices() == std::vector<std::string>{"v^1", "w^1", "w^2"});
  CHECK(li.skeleton.edges_of_color(1) ==
        std::vector<std::string>{"e1^1", "e2^1", "e3^1", "e3^2"});
  CHECK(li.skeleton.edges_of_color(2) ==
        std::vector<std::string>{"f1^1", "f2^1", "f3^1", "f3^2"});
  REQUIRE(li.squares.size() == 5);

  auto expect = [&](const std::string& label, const std::string& left, const std::string& top,
                    const std::string& right, const std::string& bottom) {
    const CommutingSquare& s = li.square(label);
    CHECK(s.left == left);
    CHECK(s.top == top);
    CHECK(s.right == right);
    CHECK(s.bottom == bottom);
  };
  expect("lam1^1", "f1^1", "e1^1", "f1^1", "e1^1");
  expect("lam2^1", "f2^1", "e1^1", "f1^1", "e2^1");
  expect("lam3^1", "f3^1", "e2^1", "f2^1", "e3^1");
  expect("lam4^1", "f3^2", "e3^1", "f3^1", "e3^2");
  expect("lam4^2", "f3^2", "e3^2", "f3^2", "e3^2");

  // skeleton incidence of the split edges
  CHECK(li.skeleton.graph.source("e3^1") == "w^1");
  CHECK(li.skeleton.graph.range("e3^1") == "w^2");
  CHECK(li.skeleton.graph.source("f2^1") == "v^1");
  CHECK(li.skeleton.graph.range("f2^1") == "w^1");
}

TEST_CASE("square counting under 2-graph insplitting") {
  TwoGraph lam = samples::chain_lambda();
  TwoGraphInsplitPartition g = samples::chain_g_partition();
  TwoGraphInsplitResult ins = insplit_twograph(lam, g);
  std::size_t expected = 0;
  for (const auto& s : lam.squares)
    expected += g.num_classes(lam.skeleton.graph.source(s.top));
  CHECK(expected == 5);
  CHECK(ins.graph.squares.size() == expected);
}

TEST_CASE("trivial 2-graph insplit renames only") {
  TwoGraph lam = samples::chain_lambda();
  TwoGraphInsplitResult ins = insplit_twograph(lam, trivial_twograph_partition(lam));
  std::map<std::string, std::string> back;
  for (const auto& [c, o] : ins.vertex_origin) back[c] = o.first;
  for (const auto& [c, o] : ins.edge_origin) back[c] = o.first;
  for (const auto& [c, o] : ins.square_origin) back[c] = o.first;
  CHECK(twograph_struct_equal(rename_twograph(ins.graph, back), lam));
}

TEST_CASE("essential 2-graphs") {
  CHECK(is_essential_twograph(samples::chain_lambda()));
  CHECK(is_essential_twograph(samples::rigid_twograph()));

  TwoGraph lam = samples::chain_lambda();
  TwoColoredGraph sk = lam.skeleton;
  std::vector<std::string> vs = sk.graph.vertices();
  vs.push_back("isolated");
  sk.graph = DirectedGraph(vs, sk.graph.edges());
  TwoGraph bigger = validate_twograph(sk, lam.squares);
  CHECK_FALSE(is_essential_twograph(bigger));
}

TEST_CASE("essentiality matches between the two presentations") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TwoGraph lam = random_twograph(seed);
    CHECK(is_essential_twograph(lam) == is_essential_textile(twograph_to_textile(lam)));
  }
}

TEST_CASE("random 2-graphs validate and convert") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TwoGraph lam = random_twograph(seed);
    CHECK(is_essential_twograph(lam));
    TextileSystem t = twograph_to_textile(lam);
    CHECK(lifting_report(t).is_LR);
    CHECK(twograph_struct_equal(textile_to_twograph(t), lam));
  }
}

TEST_CASE("insplit outputs validate over random inputs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    TwoGraph lam = random_twograph(seed);
    auto partitions = enumerate_pairing_partitions(lam, 6);
    for (const auto& p : partitions) {
      // validate_twograph runs inside insplit_twograph
      CHECK_NOTHROW(insplit_twograph(lam, p));
    }
  }
}

TEST_CASE("partition enumeration") {
  // the rigid 2-graph admits only the trivial partition
  auto rigid = enumerate_pairing_partitions(samples::rigid_twograph());
  REQUIRE(rigid.size() == 1);
  CHECK(rigid[0].is_trivial());

  // the chain 2-graph admits exactly the trivial one and the sample split
  auto chain = enumerate_pairing_partitions(samples::chain_lambda());
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].is_trivial());
  CHECK(chain[1].classes == samples::chain_g_partition().classes);

  // one vertex, one square of two loops: only trivial
  TwoColoredGraph sk;
  sk.graph = DirectedGraph({"z"}, {{"a", "z", "z"}, {"b", "z", "z"}});
  sk.degree = {{"a", 1}, {"b", 2}};
  TwoGraph tiny = validate_twograph(sk, {{"s0", "a", "b", "a", "b"}});
  auto only = enumerate_pairing_partitions(tiny);
  REQUIRE(only.size() == 1);
  CHECK(only[0].is_trivial());

  // every enumerated partition passes the pairing check
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TwoGraph lam = random_twograph(seed);
    for (const auto& p : enumerate_pairing_partitions(lam, 10)) CHECK(check_pairing(lam, p).ok);
  }
}

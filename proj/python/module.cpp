// Python bindings for the core operations: document parsing, validity and
// lifting reports, the three insplitting moves, inversion, conversions,
// block enumeration and the reconstruction pipelines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "textiles/randgen.hpp"
#include "textiles/specdoc.hpp"

namespace py = pybind11;
using namespace textiles;

namespace {

using PyClasses = std::map<std::string, std::vector<std::vector<std::string>>>;

PartitionClasses to_classes(const PyClasses& in) {
  PartitionClasses out;
  for (const auto& [v, cls] : in) {
    std::vector<std::set<std::string>> sets;
    for (const auto& c : cls) sets.emplace_back(c.begin(), c.end());
    out[v] = std::move(sets);
  }
  return out;
}

PyClasses from_classes(const PartitionClasses& in) {
  PyClasses out;
  for (const auto& [v, cls] : in) {
    std::vector<std::vector<std::string>> lists;
    for (const auto& c : cls) lists.emplace_back(c.begin(), c.end());
    out[v] = std::move(lists);
  }
  return out;
}

GraphInsplitPartition graph_partition(const PyClasses& in) { return {to_classes(in)}; }

TwoGraphInsplitPartition twograph_partition(const PyClasses& in) { return {to_classes(in)}; }

py::dict lifting_dict(const LiftingReport& r) {
  py::dict d;
  d["p_r_lift"] = r.p_r_lift;
  d["p_unique_r"] = r.p_unique_r;
  d["p_s_lift"] = r.p_s_lift;
  d["p_unique_s"] = r.p_unique_s;
  d["q_r_lift"] = r.q_r_lift;
  d["q_unique_r"] = r.q_unique_r;
  d["q_s_lift"] = r.q_s_lift;
  d["q_unique_s"] = r.q_unique_s;
  d["is_LR"] = r.is_LR;
  py::list anomalies;
  for (const auto* list : {&r.p_r_anomalies, &r.p_s_anomalies, &r.q_r_anomalies,
                           &r.q_s_anomalies})
    for (const auto& w : *list)
      anomalies.append(py::make_tuple(w.vertex, w.edge, w.lifts));
  d["anomalies"] = anomalies;
  return d;
}

std::vector<std::vector<std::string>> block_rows(const RectBlock& b) {
  std::vector<std::vector<std::string>> rows;
  for (int r = 0; r < b.height; ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < b.width; ++c) row.push_back(b.at(c, r));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_textiles, m) {
  m.doc() = "textile systems, rank-2 graphs and their insplitting moves";

  py::register_exception<textiles::Error>(m, "Error");

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<std::tuple<std::string, std::string, std::string>>&
                           edges) {
             std::vector<Edge> es;
             for (const auto& [id, src, rng] : edges) es.push_back({id, src, rng});
             return DirectedGraph(vertices, es);
           }),
           py::arg("vertices"), py::arg("edges"),
           "edges are (id, source, range) triples")
      .def_property_readonly("vertices", &DirectedGraph::vertices)
      .def_property_readonly("edges",
                             [](const DirectedGraph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : g.edges())
                                 out.emplace_back(e.id, e.source, e.range);
                               return out;
                             })
      .def("is_essential", &DirectedGraph::is_essential)
      .def("is_source_free", &DirectedGraph::is_source_free)
      .def("__repr__", [](const DirectedGraph& g) {
        return "<DirectedGraph " + std::to_string(g.vertices().size()) + " vertices, " +
               std::to_string(g.edges().size()) + " edges>";
      });

  py::class_<TextileSystem>(m, "TextileSystem")
      .def_readonly("F", &TextileSystem::F)
      .def_readonly("E", &TextileSystem::E)
      .def("p_vertex", [](const TextileSystem& t, const std::string& v) { return t.p.v(v); })
      .def("p_edge", [](const TextileSystem& t, const std::string& e) { return t.p.e(e); })
      .def("q_vertex", [](const TextileSystem& t, const std::string& v) { return t.q.v(v); })
      .def("q_edge", [](const TextileSystem& t, const std::string& e) { return t.q.e(e); })
      .def("squares",
           [](const TextileSystem& t) {
             std::vector<std::map<std::string, std::string>> out;
             for (const auto& s : squares_of(t))
               out.push_back({{"label", s.label},
                              {"left", s.left},
                              {"top", s.top},
                              {"right", s.right},
                              {"bottom", s.bottom}});
             return out;
           })
      .def("__repr__", [](const TextileSystem& t) {
        return "<TextileSystem |F^1|=" + std::to_string(t.F.edges().size()) +
               " |E^1|=" + std::to_string(t.E.edges().size()) + ">";
      });

  py::class_<TwoGraph>(m, "TwoGraph")
      .def_property_readonly("skeleton",
                             [](const TwoGraph& g) { return g.skeleton.graph; })
      .def_property_readonly("colors", [](const TwoGraph& g) { return g.skeleton.degree; })
      .def("squares",
           [](const TwoGraph& g) {
             std::vector<std::map<std::string, std::string>> out;
             for (const auto& s : g.squares)
               out.push_back({{"label", s.label},
                              {"left", s.left},
                              {"top", s.top},
                              {"right", s.right},
                              {"bottom", s.bottom}});
             return out;
           })
      .def("__repr__", [](const TwoGraph& g) {
        return "<TwoGraph " + std::to_string(g.skeleton.graph.vertices().size()) +
               " vertices, " + std::to_string(g.squares.size()) + " squares>";
      });

  py::class_<SpecDocument>(m, "Document")
      .def("textile", &SpecDocument::textile)
      .def("twograph", &SpecDocument::twograph)
      .def("graph_partition",
           [](const SpecDocument& d, const std::string& name) {
             return from_classes(d.graph_partition(name).classes);
           })
      .def("twograph_partition",
           [](const SpecDocument& d, const std::string& name) {
             return from_classes(d.twograph_partition(name).classes);
           })
      .def_property_readonly("textile_names",
                             [](const SpecDocument& d) {
                               std::vector<std::string> out;
                               for (const auto& [n, unused] : d.textiles) out.push_back(n);
                               return out;
                             })
      .def_property_readonly("twograph_names", [](const SpecDocument& d) {
        std::vector<std::string> out;
        for (const auto& [n, unused] : d.twographs) out.push_back(n);
        return out;
      });

  m.def("parse_document", &parse_spec, py::arg("text"),
        "Parse a document in the fixture format.");

  m.def("lifting_report",
        [](const TextileSystem& t) { return lifting_dict(lifting_report(t)); });
  m.def("is_essential_textile", &is_essential_textile);
  m.def("is_essential_twograph", &is_essential_twograph);
  m.def("invert_textile", &invert_textile);

  m.def(
      "insplit_textile",
      [](const TextileSystem& t, const PyClasses& classes) {
        return insplit_textile(t, graph_partition(classes)).system;
      },
      py::arg("system"), py::arg("classes"),
      "Insplit F along {vertex: [class, ...]} and inherit p, q.");

  m.def("textile_to_twograph", &textile_to_twograph);
  m.def("twograph_to_textile", &twograph_to_textile);

  m.def(
      "check_pairing",
      [](const TwoGraph& g, const PyClasses& classes) {
        PairingCheck pc = check_pairing(g, twograph_partition(classes));
        py::dict d;
        d["ok"] = pc.ok;
        d["coverage_errors"] = pc.coverage_errors;
        d["pairing_violations"] = pc.pairing_violations;
        return d;
      },
      py::arg("twograph"), py::arg("classes"));

  m.def(
      "insplit_twograph",
      [](const TwoGraph& g, const PyClasses& classes) {
        return insplit_twograph(g, twograph_partition(classes)).graph;
      },
      py::arg("twograph"), py::arg("classes"));

  m.def(
      "enumerate_pairing_partitions",
      [](const TwoGraph& g, std::size_t limit) {
        std::vector<PyClasses> out;
        for (const auto& p : enumerate_pairing_partitions(g, limit))
          out.push_back(from_classes(p.classes));
        return out;
      },
      py::arg("twograph"), py::arg("limit") = 0);

  m.def(
      "enumerate_blocks",
      [](const TextileSystem& t, int w, int h) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& b : enumerate_blocks(t, w, h)) out.push_back(block_rows(b));
        return out;
      },
      py::arg("system"), py::arg("width"), py::arg("height"),
      "Blocks as rows bottom-to-top, cells left-to-right.");

  m.def("lift_row", &lift_row, py::arg("system"), py::arg("row"),
        "The row above `row`, built by r-path lifting of q.");

  m.def(
      "verify_insplit_conjugacy",
      [](const TextileSystem& t, const PyClasses& classes, int max_w, int max_h) {
        GraphInsplitPartition p = graph_partition(classes);
        auto [phi, psi] = insplit_conjugacy_block_maps(t, p);
        TextileSystem ti = insplit_textile(t, p).system;
        ConjugacyReport rep = verify_conjugacy_on_blocks(ti, t, phi, psi, max_w, max_h);
        py::dict d;
        d["ok"] = rep.ok;
        d["detail"] = rep.detail;
        return d;
      },
      py::arg("system"), py::arg("classes"), py::arg("max_width") = 4,
      py::arg("max_height") = 4,
      "Check the mutually inverse block maps of an insplitting on all blocks "
      "up to the given size.");

  m.def(
      "four_move_pipeline",
      [](const TextileSystem& t, const PyClasses& classes, int max_block) {
        PipelineResult r = four_move_pipeline(t, twograph_partition(classes));
        TextileSystem ti = twograph_to_textile(r.lambda_insplit.graph);
        bool equal = true;
        for (int w = 1; w <= max_block && equal; ++w) {
          for (int h = 1; h <= max_block && equal; ++h) {
            std::set<std::vector<std::string>> lhs, rhs;
            for (const auto& b : enumerate_blocks(r.pruned, w, h)) {
              std::vector<std::string> cells;
              for (const auto& c : b.cells) cells.push_back(r.relabel.at(c));
              lhs.insert(std::move(cells));
            }
            for (const auto& b : enumerate_blocks(ti, w, h)) rhs.insert(b.cells);
            equal = lhs == rhs;
          }
        }
        py::dict d;
        d["A_edges"] = r.a.F.edges().size();
        d["B_vertices"] = r.b.F.vertices().size();
        d["C_edges"] = r.c.F.edges().size();
        d["D_edges"] = r.d.F.edges().size();
        d["pruned_edges"] = r.pruned.F.edges().size();
        d["blocks_equal"] = equal;
        d["pruned"] = r.pruned;
        d["insplit_twograph"] = r.lambda_insplit.graph;
        return d;
      },
      py::arg("system"), py::arg("classes"), py::arg("max_block") = 3,
      "Four-move reconstruction; compares the pruned block sets with the "
      "2-graph insplit.");

  m.def(
      "reconstruct_from_pairing",
      [](const TextileSystem& t, const PyClasses& classes) {
        return reconstruct_from_pairing(t, twograph_partition(classes));
      },
      py::arg("system"), py::arg("classes"));

  m.def(
      "reconstruct_from_top_partition",
      [](const TextileSystem& t, const PyClasses& classes) {
        TopReconstruction r = reconstruct_from_top_partition(t, graph_partition(classes));
        return py::make_tuple(r.system, from_classes(r.gpart.classes),
                              from_classes(r.epart.classes));
      },
      py::arg("system"), py::arg("classes"));

  m.def(
      "reconstruct_from_base_partition",
      [](const TextileSystem& t, const PyClasses& classes) {
        BaseReconstruction r = reconstruct_from_base_partition(t, graph_partition(classes));
        return py::make_tuple(r.system, from_classes(r.fpart.classes),
                              from_classes(r.gpart.classes));
      },
      py::arg("system"), py::arg("classes"));

  m.def(
      "roundtrip_equivalences",
      [](const TextileSystem& t, const std::string& start, const PyClasses& classes) {
        AnyPartition p;
        if (start == "G") {
          p.kind = PartitionKind::TwoGraphG;
          p.twograph = twograph_partition(classes);
        } else if (start == "F") {
          p.kind = PartitionKind::GraphF;
          p.graph = graph_partition(classes);
        } else if (start == "E") {
          p.kind = PartitionKind::GraphE;
          p.graph = graph_partition(classes);
        } else {
          throw Error("start must be G, F or E");
        }
        RoundtripReport rep = roundtrip_equivalences(t, p);
        py::dict d;
        d["ok"] = rep.ok;
        d["mismatches"] = rep.mismatches;
        return d;
      },
      py::arg("system"), py::arg("start"), py::arg("classes"));

  m.def("random_twograph",
        [](std::uint64_t seed) { return random_twograph(seed); }, py::arg("seed"));
  m.def("random_lr_textile",
        [](std::uint64_t seed) { return random_lr_textile(seed); }, py::arg("seed"));
}

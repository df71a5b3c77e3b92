// Command-line front end: validation, moves, conversions, block enumeration
// and the reconstruction pipelines, over documents in the fixture format.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "textiles/specdoc.hpp"

using json = nlohmann::json;
using namespace textiles;

namespace {

struct Io {
  std::string input;
  std::string output;
  bool machine = false;

  SpecDocument doc;
  SpecDocument fragment;
  json tree;

  void load() {
    std::ifstream in(input);
    if (!in.good()) throw Error("cannot open '" + input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    doc = parse_spec(buf.str());
  }

  // Human text goes to stdout unless --machine asked for the tree only.
  template <typename... Args>
  void say(Args&&... args) {
    if (machine) return;
    (std::cout << ... << args) << "\n";
  }

  void finish() {
    if (machine) std::cout << tree.dump(2) << "\n";
    bool empty = fragment.graphs.empty() && fragment.homs.empty() &&
                 fragment.textiles.empty() && fragment.twographs.empty() &&
                 fragment.partitions.empty();
    if (empty) return;
    std::string text = serialize(fragment);
    if (!output.empty()) {
      std::ofstream out(output);
      if (!out.good()) throw Error("cannot write '" + output + "'");
      out << text;
    } else if (!machine) {
      std::cout << "---\n" << text;
    }
  }
};

void attach_io(CLI::App* cmd, Io& io) {
  cmd->add_option("--input", io.input, "input document")->required();
  cmd->add_option("-o,--output", io.output, "write the result document here");
  cmd->add_flag("--machine", io.machine, "emit a JSON tree instead of the summary");
}

void add_graph(SpecDocument& doc, const std::string& name, const DirectedGraph& g) {
  doc.graphs.emplace(name, g);
}

void add_textile(SpecDocument& doc, const std::string& name, const TextileSystem& t) {
  add_graph(doc, name + "_F", t.F);
  add_graph(doc, name + "_E", t.E);
  doc.homs[name + "_p"] = {name + "_F", name + "_E", t.p};
  doc.homs[name + "_q"] = {name + "_F", name + "_E", t.q};
  doc.textiles[name] = {name + "_F", name + "_E", name + "_p", name + "_q"};
}

void add_twograph(SpecDocument& doc, const std::string& name, const TwoGraph& g) {
  add_graph(doc, name + "_G", g.skeleton.graph);
  SpecDocument::TwoGraphDecl decl;
  decl.graph = name + "_G";
  decl.colors = g.skeleton.degree;
  decl.squares = g.squares;
  doc.twographs[name] = std::move(decl);
}

json lifting_json(const LiftingReport& r) {
  return {{"p_r_lift", r.p_r_lift},     {"p_unique_r", r.p_unique_r},
          {"p_s_lift", r.p_s_lift},     {"p_unique_s", r.p_unique_s},
          {"q_r_lift", r.q_r_lift},     {"q_unique_r", r.q_unique_r},
          {"q_s_lift", r.q_s_lift},     {"q_unique_s", r.q_unique_s},
          {"is_LR", r.is_LR}};
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void summarize_textile(Io& io, const std::string& name, const TextileSystem& t) {
  LiftingReport r = lifting_report(t);
  io.say("textile ", name, ": |F^0|=", t.F.vertices().size(), " |F^1|=", t.F.edges().size(),
         " |E^0|=", t.E.vertices().size(), " |E^1|=", t.E.edges().size());
  io.say("  p: r-lift ", yn(r.p_r_lift), ", unique-r ", yn(r.p_unique_r), ", s-lift ",
         yn(r.p_s_lift), ", unique-s ", yn(r.p_unique_s));
  io.say("  q: r-lift ", yn(r.q_r_lift), ", unique-r ", yn(r.q_unique_r), ", s-lift ",
         yn(r.q_s_lift), ", unique-s ", yn(r.q_unique_s));
  io.say("  LR: ", yn(r.is_LR), "   essential: ", yn(is_essential_textile(t)));
  for (const auto& [dir, list] :
       {std::pair{"p r-lifting", &r.p_r_anomalies}, {"q s-lifting", &r.q_s_anomalies}}) {
    if (list->empty()) continue;
    const LiftWitness& w = list->front();
    io.say("  first ", dir, " anomaly at (", w.vertex, ", ", w.edge, "): ",
           w.lifts.empty() ? "no lift" : std::to_string(w.lifts.size()) + " lifts");
  }
}

json block_json(const RectBlock& b) {
  json rows = json::array();
  for (int r = 0; r < b.height; ++r) {
    json row = json::array();
    for (int c = 0; c < b.width; ++c) row.push_back(b.at(c, r));
    rows.push_back(row);
  }
  return rows;
}

std::pair<int, int> parse_size(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) throw Error("size must look like 2x3");
  int w = std::atoi(s.substr(0, x).c_str());
  int h = std::atoi(s.substr(x + 1).c_str());
  if (w < 1 || h < 1) throw Error("size must look like 2x3");
  return {w, h};
}

std::string partition_text(const PartitionClasses& classes) {
  std::string out;
  for (const auto& [v, cls] : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out += "  class " + v + " " + std::to_string(i + 1) + " = {";
      bool first = true;
      for (const auto& e : cls[i]) {
        if (!first) out += ", ";
        out += e;
        first = false;
      }
      out += "}\n";
    }
  }
  return out;
}

json partition_json(const PartitionClasses& classes) {
  json out = json::object();
  for (const auto& [v, cls] : classes) {
    json list = json::array();
    for (const auto& c : cls) list.push_back(json(c));
    out[v] = list;
  }
  return out;
}

// Accepts either --system T (textile) or --twograph L; returns the textile
// system and the name used for outputs.
TextileSystem resolve_system(Io& io, const std::string& system, const std::string& twograph,
                             std::string& name) {
  if (system.empty() == twograph.empty())
    throw Error("give exactly one of --system and --twograph");
  if (!system.empty()) {
    name = system;
    return io.doc.textile(system);
  }
  name = twograph;
  return twograph_to_textile(io.doc.twograph(twograph));
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

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"textile systems, rank-2 graphs and their insplitting moves"};
  app.require_subcommand(1);

  // validate
  Io validate_io;
  std::string validate_system, validate_twograph;
  bool validate_all = false;
  auto* validate = app.add_subcommand("validate", "check a document and report LR/essential");
  attach_io(validate, validate_io);
  validate->add_option("--system", validate_system, "textile system to validate");
  validate->add_option("--twograph", validate_twograph, "2-graph to validate");
  validate->add_flag("--all", validate_all, "validate everything in the document");
  validate->callback([&] {
    Io& io = validate_io;
    io.load();
    io.tree = {{"command", "validate"}, {"textiles", json::object()},
               {"twographs", json::object()}};
    std::vector<std::string> systems, twographs;
    if (validate_all) {
      for (const auto& [n, unused] : io.doc.textiles) systems.push_back(n);
      for (const auto& [n, unused] : io.doc.twographs) twographs.push_back(n);
    } else {
      if (!validate_system.empty()) systems.push_back(validate_system);
      if (!validate_twograph.empty()) twographs.push_back(validate_twograph);
      if (systems.empty() && twographs.empty())
        throw Error("give --system, --twograph or --all");
    }
    for (const auto& n : systems) {
      TextileSystem t = io.doc.textile(n);
      summarize_textile(io, n, t);
      io.tree["textiles"][n] = {{"lifting", lifting_json(lifting_report(t))},
                                {"essential", is_essential_textile(t)}};
    }
    for (const auto& n : twographs) {
      try {
        TwoGraph g = io.doc.twograph(n);
        io.say("twograph ", n, ": valid, ", g.squares.size(), " squares, essential: ",
               yn(is_essential_twograph(g)));
        io.tree["twographs"][n] = {{"valid", true},
                                   {"squares", g.squares.size()},
                                   {"essential", is_essential_twograph(g)}};
      } catch (const Error& e) {
        io.say("twograph ", n, ": INVALID");
        io.say(e.what());
        io.tree["twographs"][n] = {{"valid", false}, {"error", e.what()}};
      }
    }
    io.finish();
  });

  // invert
  Io invert_io;
  std::string invert_system;
  auto* invert = app.add_subcommand("invert", "invert a textile system");
  attach_io(invert, invert_io);
  invert->add_option("--system", invert_system, "textile system")->required();
  invert->callback([&] {
    Io& io = invert_io;
    io.load();
    TextileSystem hat = invert_textile(io.doc.textile(invert_system));
    io.say("inverted ", invert_system, ": |F^0|=", hat.F.vertices().size(),
           " |F^1|=", hat.F.edges().size(), " LR: ", yn(lifting_report(hat).is_LR));
    add_textile(io.fragment, invert_system + "_inv", hat);
    io.tree = {{"command", "invert"},
               {"result", invert_system + "_inv"},
               {"LR", lifting_report(hat).is_LR}};
    io.finish();
  });

  // insplit-jm
  Io jm_io;
  std::string jm_system, jm_partition;
  auto* jm = app.add_subcommand("insplit-jm", "textile-system insplitting of F");
  attach_io(jm, jm_io);
  jm->add_option("--system", jm_system, "textile system")->required();
  jm->add_option("--partition", jm_partition, "graph partition of F")->required();
  jm->callback([&] {
    Io& io = jm_io;
    io.load();
    TextileSystem t = io.doc.textile(jm_system);
    GraphInsplitPartition p = io.doc.graph_partition(jm_partition);
    TextileInsplitResult r = insplit_textile(t, p);
    LiftingReport lr = lifting_report(r.system);
    io.say("insplit ", jm_system, ": |F^0|=", r.system.F.vertices().size(),
           " |F^1|=", r.system.F.edges().size(), " LR: ", yn(lr.is_LR));
    add_textile(io.fragment, jm_system + "_I", r.system);
    io.tree = {{"command", "insplit-jm"}, {"result", jm_system + "_I"}, {"LR", lr.is_LR}};
    io.finish();
  });

  // insplit-2g
  Io tg_io;
  std::string tg_twograph, tg_partition;
  auto* tg = app.add_subcommand("insplit-2g", "2-graph insplitting");
  attach_io(tg, tg_io);
  tg->add_option("--twograph", tg_twograph, "2-graph")->required();
  tg->add_option("--partition", tg_partition, "pairing partition")->required();
  tg->callback([&] {
    Io& io = tg_io;
    io.load();
    TwoGraph g = io.doc.twograph(tg_twograph);
    TwoGraphInsplitPartition p = io.doc.twograph_partition(tg_partition);
    TwoGraphInsplitResult r = insplit_twograph(g, p);
    io.say("insplit ", tg_twograph, ": ", r.graph.skeleton.graph.vertices().size(),
           " vertices, ", r.graph.skeleton.graph.edges().size(), " edges, ",
           r.graph.squares.size(), " squares");
    add_twograph(io.fragment, tg_twograph + "_I", r.graph);
    io.tree = {{"command", "insplit-2g"},
               {"result", tg_twograph + "_I"},
               {"vertices", r.graph.skeleton.graph.vertices().size()},
               {"edges", r.graph.skeleton.graph.edges().size()},
               {"squares", r.graph.squares.size()}};
    io.finish();
  });

  // to-2graph
  Io t2_io;
  std::string t2_system;
  auto* t2 = app.add_subcommand("to-2graph", "2-graph of an LR textile system");
  attach_io(t2, t2_io);
  t2->add_option("--system", t2_system, "textile system")->required();
  t2->callback([&] {
    Io& io = t2_io;
    io.load();
    TwoGraph g = textile_to_twograph(io.doc.textile(t2_system));
    io.say("2-graph of ", t2_system, ": ", g.skeleton.graph.vertices().size(), " vertices, ",
           g.squares.size(), " squares");
    add_twograph(io.fragment, t2_system + "_L", g);
    io.tree = {{"command", "to-2graph"},
               {"result", t2_system + "_L"},
               {"squares", g.squares.size()}};
    io.finish();
  });

  // to-textile
  Io tt_io;
  std::string tt_twograph;
  auto* tt = app.add_subcommand("to-textile", "textile system of a 2-graph");
  attach_io(tt, tt_io);
  tt->add_option("--twograph", tt_twograph, "2-graph")->required();
  tt->callback([&] {
    Io& io = tt_io;
    io.load();
    TextileSystem t = twograph_to_textile(io.doc.twograph(tt_twograph));
    io.say("textile system of ", tt_twograph, ": |F^1|=", t.F.edges().size(),
           " LR: ", yn(lifting_report(t).is_LR));
    add_textile(io.fragment, tt_twograph + "_T", t);
    io.tree = {{"command", "to-textile"}, {"result", tt_twograph + "_T"}};
    io.finish();
  });

  // blocks
  Io blocks_io;
  std::string blocks_system, blocks_size = "2x2";
  auto* blocks_cmd = app.add_subcommand("blocks", "enumerate admissible blocks");
  attach_io(blocks_cmd, blocks_io);
  blocks_cmd->add_option("--system", blocks_system, "textile system")->required();
  blocks_cmd->add_option("--size", blocks_size, "width x height, e.g. 2x2");
  blocks_cmd->callback([&] {
    Io& io = blocks_io;
    io.load();
    auto [w, h] = parse_size(blocks_size);
    TextileSystem t = io.doc.textile(blocks_system);
    std::vector<RectBlock> out = enumerate_blocks(t, w, h);
    io.say(out.size(), " blocks (", w, "x", h, ") of ", blocks_system);
    json list = json::array();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!io.machine) {
        std::string line = "block " + std::to_string(i + 1) + ":";
        for (int r = 0; r < h; ++r) {
          line += " [";
          for (int c = 0; c < w; ++c) line += (c ? " " : "") + out[i].at(c, r);
          line += "]";
        }
        std::cout << line << "\n";
      }
      list.push_back(block_json(out[i]));
    }
    io.tree = {{"command", "blocks"}, {"count", out.size()}, {"blocks", list}};
    io.finish();
  });

  // pipeline61
  Io pipe_io;
  std::string pipe_system, pipe_twograph, pipe_partition;
  int pipe_max = 3;
  auto* pipe = app.add_subcommand(
      "pipeline61", "four-move reconstruction of a 2-graph insplit; compares block sets");
  attach_io(pipe, pipe_io);
  pipe->add_option("--system", pipe_system, "LR textile system");
  pipe->add_option("--twograph", pipe_twograph, "2-graph (used as its textile system)");
  pipe->add_option("--partition", pipe_partition, "pairing partition")->required();
  pipe->add_option("--max-block", pipe_max, "largest block edge length to compare");
  pipe->callback([&] {
    Io& io = pipe_io;
    io.load();
    std::string name;
    TextileSystem t = resolve_system(io, pipe_system, pipe_twograph, name);
    TwoGraphInsplitPartition g = io.doc.twograph_partition(pipe_partition);
    PipelineResult r = four_move_pipeline(t, g);
    io.say("stage A: |F^1| = ", r.a.F.edges().size());
    io.say("stage B: |F^0| = ", r.b.F.vertices().size());
    io.say("stage C: |F^1| = ", r.c.F.edges().size());
    io.say("stage D: |F^1| = ", r.d.F.edges().size());
    io.say("pruned:  |F^1| = ", r.pruned.F.edges().size());

    TextileSystem ti = twograph_to_textile(r.lambda_insplit.graph);
    bool equal = true;
    std::string mismatch;
    for (int w = 1; w <= pipe_max && equal; ++w) {
      for (int h = 1; h <= pipe_max && equal; ++h) {
        if (relabeled_cells(enumerate_blocks(r.pruned, w, h), r.relabel) !=
            relabeled_cells(enumerate_blocks(ti, w, h), {})) {
          equal = false;
          mismatch = std::to_string(w) + "x" + std::to_string(h);
        }
      }
    }
    if (equal)
      io.say("block sets EQUAL up to ", pipe_max, "x", pipe_max);
    else
      io.say("block sets DIFFER at ", mismatch);
    add_textile(io.fragment, name + "_A", r.a);
    add_textile(io.fragment, name + "_B", r.b);
    add_textile(io.fragment, name + "_C", r.c);
    add_textile(io.fragment, name + "_D", r.d);
    add_textile(io.fragment, name + "_pruned", r.pruned);
    add_twograph(io.fragment, name + "_LI", r.lambda_insplit.graph);
    io.tree = {{"command", "pipeline61"},
               {"stages",
                {{"A_edges", r.a.F.edges().size()},
                 {"B_vertices", r.b.F.vertices().size()},
                 {"C_edges", r.c.F.edges().size()},
                 {"D_edges", r.d.F.edges().size()},
                 {"pruned_edges", r.pruned.F.edges().size()}}},
               {"blocks_equal", equal},
               {"max_block", pipe_max}};
    io.finish();
    if (!equal) std::exit(1);
  });

  // priyanga
  Io pri_io;
  std::string pri_system, pri_twograph, pri_partition;
  auto* pri = app.add_subcommand(
      "priyanga", "single-move reconstruction: insplit F and E along a pairing partition");
  attach_io(pri, pri_io);
  pri->add_option("--system", pri_system, "LR textile system");
  pri->add_option("--twograph", pri_twograph, "2-graph (used as its textile system)");
  pri->add_option("--partition", pri_partition, "pairing partition")->required();
  pri->callback([&] {
    Io& io = pri_io;
    io.load();
    std::string name;
    TextileSystem t = resolve_system(io, pri_system, pri_twograph, name);
    std::vector<std::string> warnings;
    TextileSystem tilde = reconstruct_from_pairing(t, io.doc.twograph_partition(pri_partition), &warnings);
    for (const auto& w : warnings) io.say("warning: ", w);
    io.say("induced system: |F^1| = ", tilde.F.edges().size(),
           ", |E^0| = ", tilde.E.vertices().size(), ", LR: ", yn(lifting_report(tilde).is_LR));
    add_textile(io.fragment, name + "_tilde", tilde);
    io.tree = {{"command", "priyanga"}, {"result", name + "_tilde"}, {"warnings", warnings}};
    io.finish();
  });

  // lr-insplit
  Io lri_io;
  std::string lri_system, lri_partition;
  auto* lri = app.add_subcommand(
      "lr-insplit", "textile insplitting that upgrades to a 2-graph insplitting");
  attach_io(lri, lri_io);
  lri->add_option("--system", lri_system, "LR textile system")->required();
  lri->add_option("--partition", lri_partition, "graph partition of F")->required();
  lri->callback([&] {
    Io& io = lri_io;
    io.load();
    TextileSystem t = io.doc.textile(lri_system);
    TopReconstruction r = reconstruct_from_top_partition(t, io.doc.graph_partition(lri_partition));
    io.say("induced system: |F^1| = ", r.system.F.edges().size(),
           ", LR: ", yn(lifting_report(r.system).is_LR));
    io.say("derived pairing partition:");
    std::cout << partition_text(r.gpart.classes);
    add_textile(io.fragment, lri_system + "_tilde", r.system);
    io.tree = {{"command", "lr-insplit"},
               {"result", lri_system + "_tilde"},
               {"gpart", partition_json(r.gpart.classes)},
               {"epart", partition_json(r.epart.classes)}};
    io.finish();
  });

  // main-iii
  Io m3_io;
  std::string m3_system, m3_partition;
  auto* m3 = app.add_subcommand(
      "main-iii", "reconstruction from a partition of the bottom graph E");
  attach_io(m3, m3_io);
  m3->add_option("--system", m3_system, "LR textile system")->required();
  m3->add_option("--partition", m3_partition, "graph partition of E")->required();
  m3->callback([&] {
    Io& io = m3_io;
    io.load();
    TextileSystem t = io.doc.textile(m3_system);
    BaseReconstruction r = reconstruct_from_base_partition(t, io.doc.graph_partition(m3_partition));
    io.say("induced system: |F^1| = ", r.system.F.edges().size(),
           ", LR: ", yn(lifting_report(r.system).is_LR));
    io.say("derived F partition:");
    std::cout << partition_text(r.fpart.classes);
    add_textile(io.fragment, m3_system + "_tilde", r.system);
    io.tree = {{"command", "main-iii"},
               {"result", m3_system + "_tilde"},
               {"fpart", partition_json(r.fpart.classes)},
               {"gpart", partition_json(r.gpart.classes)}};
    io.finish();
  });

  // equiv-check
  Io eq_io;
  std::string eq_system, eq_start, eq_partition;
  auto* eq = app.add_subcommand("equiv-check",
                                "derivation cycle and agreement of the three constructions");
  attach_io(eq, eq_io);
  eq->add_option("--system", eq_system, "LR textile system")->required();
  eq->add_option("--start", eq_start, "G, F or E")->required()
      ->check(CLI::IsMember({"G", "F", "E"}));
  eq->add_option("--partition", eq_partition, "partition to start from")->required();
  eq->callback([&] {
    Io& io = eq_io;
    io.load();
    TextileSystem t = io.doc.textile(eq_system);
    AnyPartition start;
    if (eq_start == "G") {
      start.kind = PartitionKind::TwoGraphG;
      start.twograph = io.doc.twograph_partition(eq_partition);
    } else {
      start.kind = eq_start == "F" ? PartitionKind::GraphF : PartitionKind::GraphE;
      start.graph = io.doc.graph_partition(eq_partition);
    }
    RoundtripReport rep = roundtrip_equivalences(t, start);
    if (rep.ok) {
      io.say("equivalences OK: partitions recovered and all three systems agree");
    } else {
      io.say("equivalences FAILED:");
      for (const auto& m : rep.mismatches) io.say("  ", m);
    }
    io.tree = {{"command", "equiv-check"}, {"ok", rep.ok}, {"mismatches", rep.mismatches}};
    io.finish();
    if (!rep.ok) std::exit(1);
  });

  // compare-blocks
  Io cmp_io;
  std::string cmp_a, cmp_b, cmp_size = "3x3";
  auto* cmp = app.add_subcommand("compare-blocks", "compare block sets of two systems");
  attach_io(cmp, cmp_io);
  cmp->add_option("--system", cmp_a, "first textile system")->required();
  cmp->add_option("--system2", cmp_b, "second textile system")->required();
  cmp->add_option("--max", cmp_size, "largest size, e.g. 3x3");
  cmp->callback([&] {
    Io& io = cmp_io;
    io.load();
    auto [mw, mh] = parse_size(cmp_size);
    TextileSystem a = io.doc.textile(cmp_a);
    TextileSystem b = io.doc.textile(cmp_b);
    bool equal = true;
    std::string mismatch;
    for (int w = 1; w <= mw && equal; ++w) {
      for (int h = 1; h <= mh && equal; ++h) {
        if (relabeled_cells(enumerate_blocks(a, w, h), {}) !=
            relabeled_cells(enumerate_blocks(b, w, h), {})) {
          equal = false;
          mismatch = std::to_string(w) + "x" + std::to_string(h);
        }
      }
    }
    if (equal)
      io.say("block sets EQUAL up to ", mw, "x", mh);
    else
      io.say("block sets DIFFER at ", mismatch);
    io.tree = {{"command", "compare-blocks"}, {"equal", equal}};
    io.finish();
    if (!equal) std::exit(1);
  });

  // enum-partitions
  Io enum_io;
  std::string enum_twograph;
  std::size_t enum_limit = 0;
  auto* enum_cmd =
      app.add_subcommand("enum-partitions", "all pairing-respecting insplitting partitions");
  attach_io(enum_cmd, enum_io);
  enum_cmd->add_option("--twograph", enum_twograph, "2-graph")->required();
  enum_cmd->add_option("--limit", enum_limit, "stop after this many results");
  enum_cmd->callback([&] {
    Io& io = enum_io;
    io.load();
    TwoGraph g = io.doc.twograph(enum_twograph);
    auto partitions = enumerate_pairing_partitions(g, enum_limit);
    io.say(partitions.size(), partitions.size() == 1 ? " partition" : " partitions",
           " of ", enum_twograph);
    json list = json::array();
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      if (!io.machine) {
        std::cout << "partition " << i + 1 << (partitions[i].is_trivial() ? " (trivial)" : "")
                  << ":\n"
                  << partition_text(partitions[i].classes);
      }
      list.push_back(partition_json(partitions[i].classes));
    }
    io.tree = {{"command", "enum-partitions"}, {"count", partitions.size()},
               {"partitions", list}};
    io.finish();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const textiles::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "textiles/specdoc.hpp"

#include <algorithm>
#include <sstream>

namespace textiles {

ParseError::ParseError(std::vector<ParseIssue> issues)
    : Error(render(issues)), issues_(std::move(issues)) {}

std::string ParseError::render(const std::vector<ParseIssue>& issues) {
  std::string msg = "parse failed:";
  for (const auto& i : issues)
    msg += "\n  line " + std::to_string(i.line) + ": " + i.message;
  return msg;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "{a, b, c}" -> {a, b, c}; empty braces allowed.
bool parse_brace_set(const std::string& text, std::set<std::string>& out, std::string& err) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    err = "expected a {...} set";
    return false;
  }
  s = s.substr(1, s.size() - 2);
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      err = "empty member in {...} set";
      return false;
    }
    if (!out.insert(item).second) {
      err = "duplicate member '" + item + "' in {...} set";
      return false;
    }
  }
  return true;
}

struct RawGraph {
  int line = 0;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

struct Parser {
  std::vector<ParseIssue> issues;
  SpecDocument doc;
  std::map<std::string, RawGraph> raw_graphs;

  void err(int line, const std::string& m) { issues.push_back({line, m}); }

  void run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    enum Section { None, Graph, Hom, Textile, TwoGraphSec, Partition } section = None;
    std::string name;  // current section name

    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;

      if (line.front() == '[') {
        if (line.back() != ']') {
          err(lineno, "unterminated section header");
          section = None;
          continue;
        }
        std::string inner = trim(line.substr(1, line.size() - 2));
        auto toks = split_ws(inner);
        if (toks.empty()) {
          err(lineno, "empty section header");
          section = None;
          continue;
        }
        const std::string& kind = toks[0];
        if (kind == "graph" && toks.size() == 2) {
          section = Graph;
          name = toks[1];
          if (!raw_graphs.emplace(name, RawGraph{lineno, {}, {}}).second)
            err(lineno, "duplicate graph '" + name + "'");
        } else if (kind == "hom" && toks.size() == 5 && toks[2] == ":" && toks[3] != "->") {
          // [hom p : F -> E]
          err(lineno, "malformed hom header; expected [hom NAME : DOM -> COD]");
          section = None;
        } else if (kind == "hom" && toks.size() == 6 && toks[2] == ":" && toks[4] == "->") {
          section = Hom;
          name = toks[1];
          if (!doc.homs.emplace(name, SpecDocument::HomDecl{toks[3], toks[5], {}}).second)
            err(lineno, "duplicate hom '" + name + "'");
        } else if (kind == "textile" && toks.size() == 2) {
          section = Textile;
          name = toks[1];
          if (!doc.textiles.emplace(name, SpecDocument::TextileDecl{}).second)
            err(lineno, "duplicate textile '" + name + "'");
        } else if (kind == "twograph" && toks.size() == 2) {
          section = TwoGraphSec;
          name = toks[1];
          if (!doc.twographs.emplace(name, SpecDocument::TwoGraphDecl{}).second)
            err(lineno, "duplicate twograph '" + name + "'");
        } else if (kind == "partition" && toks.size() == 5 && toks[2] == ":" &&
                   (toks[3] == "graph" || toks[3] == "twograph")) {
          section = Partition;
          name = toks[1];
          SpecDocument::PartitionDecl decl;
          decl.kind = toks[3] == "graph" ? SpecDocument::PartitionDecl::Graph
                                         : SpecDocument::PartitionDecl::TwoGraph;
          decl.target = toks[4];
          if (!doc.partitions.emplace(name, std::move(decl)).second)
            err(lineno, "duplicate partition '" + name + "'");
        } else {
          err(lineno, "unrecognized section header '" + inner + "'");
          section = None;
        }
        continue;
      }

      auto toks = split_ws(line);
      switch (section) {
        case None:
          if (toks.size() == 2 && toks[0] == "format_version") {
            doc.format_version = std::atoi(toks[1].c_str());
            if (doc.format_version != 1)
              err(lineno, "unsupported format_version '" + toks[1] + "'");
          } else {
            err(lineno, "content outside any section");
          }
          break;
        case Graph: {
          RawGraph& g = raw_graphs[name];
          if (toks.size() == 2 && toks[0] == "vertex") {
            g.vertices.push_back(toks[1]);
          } else if (toks.size() == 5 && toks[0] == "edge" && toks[2] == ":") {
            err(lineno, "malformed edge line; expected edge ID : SRC -> RNG");
          } else if (toks.size() == 6 && toks[0] == "edge" && toks[2] == ":" && toks[4] == "->") {
            g.edges.push_back({toks[1], toks[3], toks[5]});
          } else {
            err(lineno, "expected 'vertex V' or 'edge ID : SRC -> RNG'");
          }
          break;
        }
        case Hom: {
          if (toks.size() == 4 && toks[0] == "map" && toks[2] == "->")
            doc.homs[name].hom.vertex_map[toks[1]] = toks[3];  // sorted into v/e later
          else
            err(lineno, "expected 'map X -> Y'");
          break;
        }
        case Textile: {
          if (toks.size() == 3 && toks[1] == "=" &&
              (toks[0] == "F" || toks[0] == "E" || toks[0] == "p" || toks[0] == "q")) {
            auto& d = doc.textiles[name];
            if (toks[0] == "F") d.f = toks[2];
            else if (toks[0] == "E") d.e = toks[2];
            else if (toks[0] == "p") d.p = toks[2];
            else d.q = toks[2];
          } else {
            err(lineno, "expected 'F = ...', 'E = ...', 'p = ...' or 'q = ...'");
          }
          break;
        }
        case TwoGraphSec: {
          auto& d = doc.twographs[name];
          if (toks.size() == 3 && toks[0] == "graph" && toks[1] == "=") {
            d.graph = toks[2];
          } else if (toks.size() >= 4 && toks[0] == "color" && toks[2] == "=") {
            int c = std::atoi(toks[1].c_str());
            if (c != 1 && c != 2) {
              err(lineno, "color must be 1 or 2");
              break;
            }
            std::string rest = line.substr(line.find('=') + 1);
            std::set<std::string> members;
            std::string why;
            if (!parse_brace_set(rest, members, why)) {
              err(lineno, why);
              break;
            }
            for (const auto& m : members) {
              if (d.colors.count(m)) err(lineno, "edge '" + m + "' colored twice");
              d.colors[m] = c;
            }
          } else if (toks.size() >= 2 && toks[0] == "square") {
            // square LABEL : left L, top T, right R, bottom B
            auto colon = line.find(':');
            if (colon == std::string::npos || toks.size() < 3 || toks[2] != ":") {
              err(lineno, "expected 'square LABEL : left L, top T, right R, bottom B'");
              break;
            }
            CommutingSquare sqr;
            sqr.label = toks[1];
            std::string rest = line.substr(colon + 1);
            std::map<std::string, std::string> sides;
            std::string item;
            std::istringstream items(rest);
            bool ok = true;
            while (std::getline(items, item, ',')) {
              auto kv = split_ws(item);
              if (kv.size() != 2 ||
                  (kv[0] != "left" && kv[0] != "top" && kv[0] != "right" && kv[0] != "bottom")) {
                err(lineno, "expected side assignments 'left L, top T, right R, bottom B'");
                ok = false;
                break;
              }
              if (!sides.emplace(kv[0], kv[1]).second) {
                err(lineno, "side '" + kv[0] + "' given twice");
                ok = false;
                break;
              }
            }
            if (!ok) break;
            if (sides.size() != 4) {
              err(lineno, "square needs all four sides");
              break;
            }
            sqr.left = sides["left"];
            sqr.top = sides["top"];
            sqr.right = sides["right"];
            sqr.bottom = sides["bottom"];
            d.squares.push_back(std::move(sqr));
          } else {
            err(lineno, "expected 'graph = ...', 'color C = {...}' or 'square ...'");
          }
          break;
        }
        case Partition: {
          if (toks.size() >= 4 && toks[0] == "class") {
            auto eq = line.find('=');
            if (eq == std::string::npos) {
              err(lineno, "expected 'class VERTEX INDEX = {...}'");
              break;
            }
            int idx = std::atoi(toks[2].c_str());
            if (idx < 1) {
              err(lineno, "class index must be a positive integer");
              break;
            }
            std::set<std::string> members;
            std::string why;
            if (!parse_brace_set(line.substr(eq + 1), members, why)) {
              err(lineno, why);
              break;
            }
            auto& cls = doc.partitions[name].classes[toks[1]];
            if (static_cast<int>(cls.size()) < idx) cls.resize(idx);
            if (!cls[idx - 1].empty()) {
              err(lineno, "class " + toks[2] + " at '" + toks[1] + "' given twice");
              break;
            }
            cls[idx - 1] = std::move(members);
          } else {
            err(lineno, "expected 'class VERTEX INDEX = {...}'");
          }
          break;
        }
      }
    }

    resolve();
  }

  // Cross-reference checks; theory validation is left to the module
  // validators at instantiation time.
  void resolve() {
    for (auto& [name, raw] : raw_graphs) {
      try {
        doc.graphs.emplace(name, DirectedGraph(raw.vertices, raw.edges));
      } catch (const Error& e) {
        err(raw.line, "graph '" + name + "': " + e.what());
      }
    }
    for (auto& [name, d] : doc.homs) {
      auto dom = doc.graphs.find(d.domain);
      auto cod = doc.graphs.find(d.codomain);
      if (dom == doc.graphs.end()) {
        err(0, "hom '" + name + "' references unknown graph '" + d.domain + "'");
        continue;
      }
      if (cod == doc.graphs.end()) {
        err(0, "hom '" + name + "' references unknown graph '" + d.codomain + "'");
        continue;
      }
      // Split the single map into vertex and edge parts; labels within a
      // graph are disjoint, so membership decides.
      GraphHom split;
      for (const auto& [x, y] : d.hom.vertex_map) {
        if (dom->second.has_vertex(x)) {
          split.vertex_map[x] = y;
        } else if (dom->second.has_edge(x)) {
          split.edge_map[x] = y;
        } else {
          err(0, "hom '" + name + "' maps unknown label '" + x + "'");
        }
      }
      d.hom = std::move(split);
    }
    for (auto& [name, d] : doc.textiles) {
      for (const auto& g : {d.f, d.e})
        if (!doc.graphs.count(g))
          err(0, "textile '" + name + "' references unknown graph '" + g + "'");
      for (const auto& h : {d.p, d.q})
        if (!doc.homs.count(h))
          err(0, "textile '" + name + "' references unknown hom '" + h + "'");
    }
    for (auto& [name, d] : doc.twographs) {
      auto git = doc.graphs.find(d.graph);
      if (git == doc.graphs.end()) {
        err(0, "twograph '" + name + "' references unknown graph '" + d.graph + "'");
        continue;
      }
      const DirectedGraph& g = git->second;
      for (const auto& [e, c] : d.colors)
        if (!g.has_edge(e)) err(0, "twograph '" + name + "' colors unknown edge '" + e + "'");
      for (const auto& e : g.edges())
        if (!d.colors.count(e.id))
          err(0, "twograph '" + name + "' leaves edge '" + e.id + "' uncolored");
      for (const auto& s : d.squares)
        for (const auto& side : {s.left, s.top, s.right, s.bottom})
          if (!g.has_edge(side))
            err(0, "twograph '" + name + "' square '" + s.label + "' references unknown edge '" +
                       side + "'");
    }
    for (auto& [name, d] : doc.partitions) {
      if (d.kind == SpecDocument::PartitionDecl::Graph) {
        auto git = doc.graphs.find(d.target);
        if (git == doc.graphs.end()) {
          err(0, "partition '" + name + "' references unknown graph '" + d.target + "'");
          continue;
        }
        for (const auto& [v, cls] : d.classes) {
          if (!git->second.has_vertex(v))
            err(0, "partition '" + name + "' names unknown vertex '" + v + "'");
          for (const auto& c : cls)
            for (const auto& e : c)
              if (!git->second.has_edge(e))
                err(0, "partition '" + name + "' names unknown edge '" + e + "'");
        }
      } else {
        auto tit = doc.twographs.find(d.target);
        if (tit == doc.twographs.end()) {
          err(0, "partition '" + name + "' references unknown twograph '" + d.target + "'");
          continue;
        }
        auto git = doc.graphs.find(tit->second.graph);
        if (git == doc.graphs.end()) continue;  // already reported
        for (const auto& [v, cls] : d.classes) {
          if (!git->second.has_vertex(v))
            err(0, "partition '" + name + "' names unknown vertex '" + v + "'");
          for (const auto& c : cls)
            for (const auto& e : c)
              if (!git->second.has_edge(e))
                err(0, "partition '" + name + "' names unknown edge '" + e + "'");
        }
      }
      for (const auto& [v, cls] : d.classes)
        for (std::size_t i = 0; i + 1 < cls.size(); ++i)
          if (cls[i].empty() && !cls.back().empty())
            err(0, "partition '" + name + "' skips class " + std::to_string(i + 1) + " at '" + v +
                       "'");
    }
  }
};

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  Parser p;
  p.run(text);
  if (!p.issues.empty()) throw ParseError(std::move(p.issues));
  return std::move(p.doc);
}

TextileSystem SpecDocument::textile(const std::string& name) const {
  auto it = textiles.find(name);
  if (it == textiles.end()) throw Error("unknown textile '" + name + "'");
  const TextileDecl& d = it->second;
  const auto& ph = homs.at(d.p);
  const auto& qh = homs.at(d.q);
  if (ph.domain != d.f || ph.codomain != d.e)
    throw Error("textile '" + name + "': hom '" + d.p + "' is not " + d.f + " -> " + d.e);
  if (qh.domain != d.f || qh.codomain != d.e)
    throw Error("textile '" + name + "': hom '" + d.q + "' is not " + d.f + " -> " + d.e);
  return build_textile(graphs.at(d.f), graphs.at(d.e), ph.hom, qh.hom);
}

textiles::TwoGraph SpecDocument::twograph(const std::string& name) const {
  auto it = twographs.find(name);
  if (it == twographs.end()) throw Error("unknown twograph '" + name + "'");
  TwoColoredGraph sk;
  sk.graph = graphs.at(it->second.graph);
  sk.degree = it->second.colors;
  return validate_twograph(std::move(sk), it->second.squares);
}

const SpecDocument::PartitionDecl& SpecDocument::partition_decl(const std::string& name) const {
  auto it = partitions.find(name);
  if (it == partitions.end()) throw Error("unknown partition '" + name + "'");
  return it->second;
}

GraphInsplitPartition SpecDocument::graph_partition(const std::string& name) const {
  const PartitionDecl& d = partition_decl(name);
  if (d.kind != PartitionDecl::Graph)
    throw Error("partition '" + name + "' is not a graph partition");
  const DirectedGraph& g = graphs.at(d.target);
  GraphInsplitPartition p;
  p.classes = d.classes;
  // vertices not mentioned get the trivial single class
  for (const auto& v : g.vertices()) {
    if (p.classes.count(v)) continue;
    const auto& in = g.into(v);
    p.classes[v] = {std::set<std::string>(in.begin(), in.end())};
  }
  return p;
}

TwoGraphInsplitPartition SpecDocument::twograph_partition(const std::string& name) const {
  const PartitionDecl& d = partition_decl(name);
  if (d.kind != PartitionDecl::TwoGraph)
    throw Error("partition '" + name + "' is not a twograph partition");
  const DirectedGraph& g = graphs.at(twographs.at(d.target).graph);
  TwoGraphInsplitPartition p;
  p.classes = d.classes;
  for (const auto& v : g.vertices()) {
    if (p.classes.count(v)) continue;
    const auto& in = g.into(v);
    p.classes[v] = {std::set<std::string>(in.begin(), in.end())};
  }
  return p;
}

namespace {

std::string brace_set(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += x;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string serialize(const SpecDocument& doc) {
  std::ostringstream out;
  out << "format_version " << doc.format_version << "\n";
  for (const auto& [name, g] : doc.graphs) {
    out << "\n[graph " << name << "]\n";
    for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
    for (const auto& e : g.edges())
      out << "edge " << e.id << " : " << e.source << " -> " << e.range << "\n";
  }
  for (const auto& [name, d] : doc.homs) {
    out << "\n[hom " << name << " : " << d.domain << " -> " << d.codomain << "]\n";
    for (const auto& [x, y] : d.hom.vertex_map) out << "map " << x << " -> " << y << "\n";
    for (const auto& [x, y] : d.hom.edge_map) out << "map " << x << " -> " << y << "\n";
  }
  for (const auto& [name, d] : doc.textiles) {
    out << "\n[textile " << name << "]\n";
    out << "F = " << d.f << "\n" << "E = " << d.e << "\n";
    out << "p = " << d.p << "\n" << "q = " << d.q << "\n";
  }
  for (const auto& [name, d] : doc.twographs) {
    out << "\n[twograph " << name << "]\n";
    out << "graph = " << d.graph << "\n";
    std::set<std::string> c1, c2;
    for (const auto& [e, c] : d.colors) (c == 1 ? c1 : c2).insert(e);
    out << "color 1 = " << brace_set(c1) << "\n";
    out << "color 2 = " << brace_set(c2) << "\n";
    std::vector<CommutingSquare> sq = d.squares;
    std::sort(sq.begin(), sq.end(),
              [](const CommutingSquare& a, const CommutingSquare& b) { return a.label < b.label; });
    for (const auto& s : sq)
      out << "square " << s.label << " : left " << s.left << ", top " << s.top << ", right "
          << s.right << ", bottom " << s.bottom << "\n";
  }
  for (const auto& [name, d] : doc.partitions) {
    out << "\n[partition " << name << " : "
        << (d.kind == SpecDocument::PartitionDecl::Graph ? "graph" : "twograph") << " "
        << d.target << "]\n";
    for (const auto& [v, cls] : d.classes)
      for (std::size_t i = 0; i < cls.size(); ++i)
        out << "class " << v << " " << i + 1 << " = " << brace_set(cls[i]) << "\n";
  }
  return out.str();
}

}  // namespace textiles

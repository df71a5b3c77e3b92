#include "textiles/twograph.hpp"

#include <algorithm>
#include <functional>

namespace textiles {

int TwoColoredGraph::color(const std::string& edge) const {
  auto it = degree.find(edge);
  if (it == degree.end()) throw Error("edge '" + edge + "' has no color");
  return it->second;
}

std::vector<std::string> TwoColoredGraph::edges_of_color(int c) const {
  std::vector<std::string> out;
  for (const auto& e : graph.edges())
    if (color(e.id) == c) out.push_back(e.id);
  return out;
}

const CommutingSquare& TwoGraph::square(const std::string& label) const {
  for (const auto& s : squares)
    if (s.label == label) return s;
  throw Error("unknown square '" + label + "'");
}

std::vector<std::string> TwoGraph::incoming(const std::string& z) const {
  return skeleton.graph.into(z);
}

TwoGraph validate_twograph(TwoColoredGraph skeleton, std::vector<CommutingSquare> squares) {
  std::vector<std::string> errors;
  auto err = [&](const std::string& m) { errors.push_back(m); };

  const DirectedGraph& g = skeleton.graph;
  for (const auto& e : g.edges()) {
    auto it = skeleton.degree.find(e.id);
    if (it == skeleton.degree.end())
      err("edge '" + e.id + "' has no color");
    else if (it->second != 1 && it->second != 2)
      err("edge '" + e.id + "' has color " + std::to_string(it->second) + "; expected 1 or 2");
  }
  for (const auto& [e, c] : skeleton.degree)
    if (!g.has_edge(e)) err("color given for unknown edge '" + e + "'");

  std::sort(squares.begin(), squares.end(),
            [](const CommutingSquare& a, const CommutingSquare& b) { return a.label < b.label; });
  std::set<std::string> labels = g.labels();
  for (const auto& s : squares) {
    if (labels.count(s.label))
      err("square label '" + s.label + "' collides with a skeleton label");
    if (!labels.insert(s.label).second) err("duplicate square label '" + s.label + "'");
  }

  auto side = [&](const CommutingSquare& s, const std::string& edge, int want,
                  const char* which) -> bool {
    if (!g.has_edge(edge)) {
      err("square '" + s.label + "': " + which + " edge '" + edge + "' is not in the skeleton");
      return false;
    }
    if (skeleton.degree.count(edge) && skeleton.color(edge) != want) {
      err("square '" + s.label + "': " + which + " edge '" + edge + "' has the wrong color");
      return false;
    }
    return true;
  };

  bool sides_ok = errors.empty();
  for (const auto& s : squares) {
    bool ok = side(s, s.left, 2, "left") & side(s, s.right, 2, "right") &
              side(s, s.top, 1, "top") & side(s, s.bottom, 1, "bottom");
    if (!ok) {
      sides_ok = false;
      continue;
    }
    if (g.source(s.left) != g.range(s.top))
      err("square '" + s.label + "': s(left) != r(top)");
    if (g.range(s.left) != g.range(s.bottom))
      err("square '" + s.label + "': r(left) != r(bottom)");
    if (g.source(s.right) != g.source(s.top))
      err("square '" + s.label + "': s(right) != s(top)");
    if (g.range(s.right) != g.source(s.bottom))
      err("square '" + s.label + "': r(right) != s(bottom)");
  }

  if (sides_ok) {
    // KG2: every 2-colored composable pair factors through exactly one square.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> by_left_top,
        by_bottom_right;
    std::map<std::tuple<std::string, std::string, std::string, std::string>, std::string> quads;
    for (const auto& s : squares) {
      by_left_top[{s.left, s.top}].push_back(s.label);
      by_bottom_right[{s.bottom, s.right}].push_back(s.label);
      auto key = std::make_tuple(s.left, s.top, s.bottom, s.right);
      auto [it, fresh] = quads.emplace(key, s.label);
      if (!fresh)
        err("squares '" + it->second + "' and '" + s.label + "' have identical boundaries");
    }
    auto check_one = [&](const std::string& x, const std::string& y, auto& bucket,
                         const char* kind) {
      auto it = bucket.find(std::make_pair(x, y));
      std::size_t n = it == bucket.end() ? 0 : it->second.size();
      if (n == 0) {
        err(std::string("no square with ") + kind + " (" + x + ", " + y + ")");
      } else if (n > 1) {
        std::string who;
        for (const auto& l : it->second) who += (who.empty() ? "" : ", ") + l;
        err(std::string("ambiguous ") + kind + " (" + x + ", " + y + "): squares " + who);
      }
    };
    std::vector<std::string> color1 = skeleton.edges_of_color(1);
    std::vector<std::string> color2 = skeleton.edges_of_color(2);
    for (const auto& w : color2)
      for (const auto& e : color1)
        if (g.source(w) == g.range(e)) check_one(w, e, by_left_top, "left-top");
    for (const auto& e : color1)
      for (const auto& w : color2)
        if (g.source(e) == g.range(w)) check_one(e, w, by_bottom_right, "bottom-right");
  }

  if (!errors.empty()) {
    std::string msg = "invalid 2-graph:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw Error(msg);
  }
  return {std::move(skeleton), std::move(squares)};
}

bool twograph_struct_equal(const TwoGraph& a, const TwoGraph& b, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!graphs_equal(a.skeleton.graph, b.skeleton.graph)) return fail("skeletons differ");
  if (a.skeleton.degree != b.skeleton.degree) return fail("edge colors differ");
  if (a.squares.size() != b.squares.size()) return fail("square counts differ");
  for (std::size_t i = 0; i < a.squares.size(); ++i) {
    const auto& x = a.squares[i];
    const auto& y = b.squares[i];
    if (x.label != y.label || x.left != y.left || x.top != y.top || x.bottom != y.bottom ||
        x.right != y.right)
      return fail("square '" + x.label + "' differs");
  }
  return true;
}

TwoGraph textile_to_twograph(const TextileSystem& t) {
  TwoColoredGraph sk;
  std::vector<std::string> vertices = t.E.vertices();
  std::vector<Edge> edges;
  for (const auto& e : t.E.edges()) {
    edges.push_back(e);
    sk.degree[e.id] = 1;
  }
  for (const auto& w : t.F.vertices()) {
    edges.push_back({w, t.p.v(w), t.q.v(w)});
    sk.degree[w] = 2;
  }
  sk.graph = DirectedGraph(std::move(vertices), std::move(edges));

  std::vector<CommutingSquare> squares;
  for (const auto& f : t.F.edges())
    squares.push_back({f.id, t.p.e(f.id), f.range, t.q.e(f.id), f.source});

  try {
    return validate_twograph(std::move(sk), std::move(squares));
  } catch (const Error& e) {
    throw Error(std::string("textile system is not LR; its squares do not form a 2-graph: ") +
                e.what());
  }
}

TextileSystem twograph_to_textile(const TwoGraph& g) {
  const DirectedGraph& sk = g.skeleton.graph;
  std::vector<Edge> e_edges;
  for (const auto& id : g.skeleton.edges_of_color(1)) e_edges.push_back(sk.edge(id));
  DirectedGraph E(sk.vertices(), std::move(e_edges));

  std::vector<std::string> f_vertices = g.skeleton.edges_of_color(2);
  std::vector<Edge> f_edges;
  GraphHom p, q;
  for (const auto& w : f_vertices) {
    p.vertex_map[w] = sk.source(w);
    q.vertex_map[w] = sk.range(w);
  }
  for (const auto& s : g.squares) {
    f_edges.push_back({s.label, s.right, s.left});
    p.edge_map[s.label] = s.top;
    q.edge_map[s.label] = s.bottom;
  }
  TextileSystem t = build_textile(DirectedGraph(std::move(f_vertices), std::move(f_edges)),
                                  std::move(E), std::move(p), std::move(q));
  if (!lifting_report(t).is_LR)
    throw Error("internal: textile system of a valid 2-graph must be LR");
  return t;
}

bool is_essential_twograph(const TwoGraph& g) {
  const DirectedGraph& sk = g.skeleton.graph;
  for (const auto& z : sk.vertices()) {
    bool in1 = false, in2 = false, out1 = false, out2 = false;
    for (const auto& e : sk.into(z)) (g.skeleton.color(e) == 1 ? in1 : in2) = true;
    for (const auto& e : sk.out_of(z)) (g.skeleton.color(e) == 1 ? out1 : out2) = true;
    if (!(in1 && in2 && out1 && out2)) return false;
  }
  return true;
}

std::size_t TwoGraphInsplitPartition::num_classes(const std::string& z) const {
  auto it = classes.find(z);
  return it == classes.end() ? 0 : it->second.size();
}

int TwoGraphInsplitPartition::class_of(const std::string& z, const std::string& edge) const {
  auto it = classes.find(z);
  if (it == classes.end()) return 0;
  for (std::size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i].count(edge)) return static_cast<int>(i) + 1;
  return 0;
}

bool TwoGraphInsplitPartition::is_trivial() const {
  for (const auto& [z, cls] : classes)
    if (cls.size() != 1) return false;
  return true;
}

TwoGraphInsplitPartition trivial_twograph_partition(const TwoGraph& g) {
  TwoGraphInsplitPartition p;
  for (const auto& z : g.skeleton.graph.vertices()) {
    auto in = g.incoming(z);
    p.classes[z] = {std::set<std::string>(in.begin(), in.end())};
  }
  return p;
}

PairingCheck check_pairing(const TwoGraph& g, const TwoGraphInsplitPartition& p) {
  PairingCheck out;
  const DirectedGraph& sk = g.skeleton.graph;
  for (const auto& [z, cls] : p.classes)
    if (!sk.has_vertex(z))
      out.coverage_errors.push_back("partition names unknown vertex '" + z + "'");
  for (const auto& z : sk.vertices()) {
    auto it = p.classes.find(z);
    if (it == p.classes.end()) {
      out.coverage_errors.push_back("partition missing vertex '" + z + "'");
      continue;
    }
    auto in = g.incoming(z);
    if (in.empty()) {
      if (it->second.size() != 1 || !it->second[0].empty())
        out.coverage_errors.push_back("vertex '" + z +
                                      "' has no incoming edges; expected a single empty class");
      continue;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (it->second[i].empty()) {
        out.coverage_errors.push_back("empty class " + std::to_string(i + 1) + " at '" + z + "'");
        continue;
      }
      for (const auto& e : it->second[i]) {
        if (!sk.has_edge(e) || sk.range(e) != z) {
          out.coverage_errors.push_back("edge '" + e + "' in class at '" + z +
                                        "' does not have range '" + z + "'");
          continue;
        }
        if (!seen.insert(e).second)
          out.coverage_errors.push_back("edge '" + e + "' appears in two classes at '" + z + "'");
      }
    }
    for (const auto& e : in)
      if (!seen.count(e))
        out.coverage_errors.push_back("edge '" + e + "' with range '" + z +
                                      "' is missing from the partition");
  }
  if (out.coverage_errors.empty()) {
    for (const auto& s : g.squares) {
      const std::string& z = sk.range(s.left);
      int cl = p.class_of(z, s.left);
      int cb = p.class_of(z, s.bottom);
      if (cl != cb)
        out.pairing_violations.push_back("square '" + s.label + "': left '" + s.left +
                                         "' (class " + std::to_string(cl) + ") and bottom '" +
                                         s.bottom + "' (class " + std::to_string(cb) +
                                         ") split at '" + z + "'");
    }
  }
  out.ok = out.coverage_errors.empty() && out.pairing_violations.empty();
  return out;
}

const std::string& TwoGraphInsplitResult::vertex_child(const std::string& parent, int i) const {
  auto it = vertex_child_.find({parent, i});
  if (it == vertex_child_.end())
    throw Error("no child " + std::to_string(i) + " of vertex '" + parent + "'");
  return it->second;
}

const std::string& TwoGraphInsplitResult::edge_child(const std::string& parent, int i) const {
  auto it = edge_child_.find({parent, i});
  if (it == edge_child_.end())
    throw Error("no child " + std::to_string(i) + " of edge '" + parent + "'");
  return it->second;
}

const std::string& TwoGraphInsplitResult::square_child(const std::string& parent, int i) const {
  auto it = square_child_.find({parent, i});
  if (it == square_child_.end())
    throw Error("no child " + std::to_string(i) + " of square '" + parent + "'");
  return it->second;
}

TwoGraphInsplitResult insplit_twograph(const TwoGraph& g, const TwoGraphInsplitPartition& p,
                                       const std::string& separator) {
  PairingCheck pc = check_pairing(g, p);
  if (!pc.ok) {
    std::string msg = "invalid 2-graph insplitting partition:";
    for (const auto& e : pc.coverage_errors) msg += "\n  " + e;
    for (const auto& e : pc.pairing_violations) msg += "\n  " + e;
    throw Error(msg);
  }

  const DirectedGraph& sk = g.skeleton.graph;
  std::string sep = separator;
  if (sep.empty()) {
    std::set<std::string> avoid = sk.labels();
    std::map<std::string, std::size_t> copies;
    for (const auto& z : sk.vertices()) copies[z] = p.num_classes(z);
    for (const auto& e : sk.edges()) copies[e.id] = p.num_classes(e.source);
    for (const auto& s : g.squares) {
      avoid.insert(s.label);
      copies[s.label] = p.num_classes(sk.source(s.top));
    }
    sep = choose_separator(avoid, copies);
  }

  TwoGraphInsplitResult res;
  res.separator = sep;
  std::vector<std::string> vertices;
  for (const auto& z : sk.vertices()) {
    for (std::size_t i = 1; i <= p.num_classes(z); ++i) {
      std::string child = z + sep + std::to_string(i);
      vertices.push_back(child);
      res.vertex_origin[child] = {z, static_cast<int>(i)};
      res.vertex_child_[{z, static_cast<int>(i)}] = child;
    }
  }
  TwoColoredGraph sk_i;
  std::vector<Edge> edges;
  for (const auto& e : sk.edges()) {
    int k = p.class_of(e.range, e.id);
    if (k == 0) throw Error("edge '" + e.id + "' not classified at its range");
    for (std::size_t i = 1; i <= p.num_classes(e.source); ++i) {
      std::string child = e.id + sep + std::to_string(i);
      edges.push_back({child, res.vertex_child_.at({e.source, static_cast<int>(i)}),
                       res.vertex_child_.at({e.range, k})});
      sk_i.degree[child] = g.skeleton.color(e.id);
      res.edge_origin[child] = {e.id, static_cast<int>(i)};
      res.edge_child_[{e.id, static_cast<int>(i)}] = child;
    }
  }
  sk_i.graph = DirectedGraph(std::move(vertices), std::move(edges));

  std::vector<CommutingSquare> squares;
  for (const auto& s : g.squares) {
    // Copy index of the left side is the class of the top edge at the shared
    // corner; bottom follows the right edge likewise.  One child per copy of
    // the source corner.
    int cl = p.class_of(sk.range(s.top), s.top);
    int cb = p.class_of(sk.range(s.right), s.right);
    const std::string& src = sk.source(s.top);
    for (std::size_t k = 1; k <= p.num_classes(src); ++k) {
      std::string child = s.label + sep + std::to_string(k);
      squares.push_back({child, res.edge_child_.at({s.top, static_cast<int>(k)}),
                         res.edge_child_.at({s.left, cl}),
                         res.edge_child_.at({s.bottom, cb}),
                         res.edge_child_.at({s.right, static_cast<int>(k)})});
      res.square_origin[child] = {s.label, static_cast<int>(k)};
      res.square_child_[{s.label, static_cast<int>(k)}] = child;
    }
  }
  res.graph = validate_twograph(std::move(sk_i), std::move(squares));
  return res;
}

namespace {

// Set partitions of {0..n-1} as restricted growth strings (a[0] = 0,
// a[i] <= 1 + max of the prefix), lexicographic, so the single-class
// partition comes first.
void rgs_enumerate(std::size_t n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<int> a(n, 0);
  for (;;) {
    visit(a);
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
      if (a[i] <= mx) break;  // a[i] may grow to mx + 1
    }
    if (i <= 0) return;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
  }
}

}  // namespace

std::vector<TwoGraphInsplitPartition> enumerate_pairing_partitions(const TwoGraph& g,
                                                                   std::size_t limit) {
  const DirectedGraph& sk = g.skeleton.graph;

  // Pairing forces the left and bottom edges of each square together; any
  // partition of the resulting blocks works, independently per vertex.
  struct VertexChoices {
    std::string vertex;
    std::vector<std::vector<std::set<std::string>>> options;  // each option = ordered classes
  };
  std::vector<VertexChoices> per_vertex;
  for (const auto& z : sk.vertices()) {
    auto in = g.incoming(z);
    if (in.size() > 10)
      throw Error("size guard: vertex '" + z + "' has " + std::to_string(in.size()) +
                  " incoming edges (limit 10)");
    VertexChoices vc;
    vc.vertex = z;
    if (in.empty()) {
      vc.options.push_back({std::set<std::string>{}});
      per_vertex.push_back(std::move(vc));
      continue;
    }
    // must-link components
    std::map<std::string, int> comp;
    int ncomp = 0;
    for (const auto& e : in) comp[e] = ncomp++;
    std::vector<int> parent(ncomp);
    for (int i = 0; i < ncomp; ++i) parent[i] = i;
    std::function<int(int)> root = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& s : g.squares) {
      if (sk.range(s.left) != z) continue;
      int a = root(comp.at(s.left));
      int b = root(comp.at(s.bottom));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::set<std::string>> blocks;
    for (const auto& e : in) blocks[root(comp.at(e))].insert(e);
    std::vector<std::set<std::string>> block_list;
    for (auto& [r, members] : blocks) block_list.push_back(members);
    // order blocks by least member
    std::sort(block_list.begin(), block_list.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });

    rgs_enumerate(block_list.size(), [&](const std::vector<int>& a) {
      int k = 0;
      for (int x : a) k = std::max(k, x + 1);
      std::vector<std::set<std::string>> classes(k);
      for (std::size_t i = 0; i < a.size(); ++i)
        classes[a[i]].insert(block_list[i].begin(), block_list[i].end());
      vc.options.push_back(std::move(classes));
      return true;
    });
    per_vertex.push_back(std::move(vc));
  }

  std::vector<TwoGraphInsplitPartition> out;
  std::vector<std::size_t> pick(per_vertex.size(), 0);
  for (;;) {
    TwoGraphInsplitPartition p;
    for (std::size_t i = 0; i < per_vertex.size(); ++i)
      p.classes[per_vertex[i].vertex] = per_vertex[i].options[pick[i]];
    out.push_back(std::move(p));
    if (limit && out.size() >= limit) return out;
    bool advanced = false;
    std::size_t i = per_vertex.size();
    while (i > 0) {
      --i;
      if (++pick[i] < per_vertex[i].options.size()) {
        advanced = true;
        break;
      }
      pick[i] = 0;
    }
    if (!advanced) return out;
  }
}

TwoGraph rename_twograph(const TwoGraph& g, const std::map<std::string, std::string>& relabel) {
  auto rn = [&](const std::string& x) {
    auto it = relabel.find(x);
    return it == relabel.end() ? x : it->second;
  };
  TwoColoredGraph sk;
  std::vector<std::string> vs;
  for (const auto& v : g.skeleton.graph.vertices()) vs.push_back(rn(v));
  std::vector<Edge> es;
  for (const auto& e : g.skeleton.graph.edges()) {
    es.push_back({rn(e.id), rn(e.source), rn(e.range)});
    sk.degree[rn(e.id)] = g.skeleton.color(e.id);
  }
  sk.graph = DirectedGraph(std::move(vs), std::move(es));
  std::vector<CommutingSquare> squares;
  for (const auto& s : g.squares)
    squares.push_back({rn(s.label), rn(s.top), rn(s.left), rn(s.bottom), rn(s.right)});
  return validate_twograph(std::move(sk), std::move(squares));
}

}  // namespace textiles

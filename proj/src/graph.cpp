#include "textiles/graph.hpp"

#include <algorithm>

namespace textiles {

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error("duplicate vertex label '" +
                *std::adjacent_find(vertices_.begin(), vertices_.end()) + "'");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return x.id < y.id; });
  std::set<std::string> vset(vertices_.begin(), vertices_.end());
  for (const auto& v : vertices_) {
    into_[v];
    out_[v];
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second)
      throw Error("duplicate edge id '" + e.id + "'");
    if (vset.count(e.id))
      throw Error("label '" + e.id + "' used for both a vertex and an edge");
    if (!vset.count(e.source))
      throw Error("edge '" + e.id + "' has unknown source '" + e.source + "'");
    if (!vset.count(e.range))
      throw Error("edge '" + e.id + "' has unknown range '" + e.range + "'");
    into_[e.range].push_back(e.id);
    out_[e.source].push_back(e.id);
  }
}

bool DirectedGraph::has_vertex(const std::string& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool DirectedGraph::has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }

const Edge& DirectedGraph::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw Error("unknown edge '" + id + "'");
  return edges_[it->second];
}

const std::vector<std::string>& DirectedGraph::into(const std::string& v) const {
  auto it = into_.find(v);
  if (it == into_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

const std::vector<std::string>& DirectedGraph::out_of(const std::string& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

bool DirectedGraph::is_source_free() const {
  for (const auto& v : vertices_)
    if (into(v).empty()) return false;
  return true;
}

bool DirectedGraph::is_essential() const {
  for (const auto& v : vertices_)
    if (into(v).empty() || out_of(v).empty()) return false;
  return true;
}

std::set<std::string> DirectedGraph::labels() const {
  std::set<std::string> out(vertices_.begin(), vertices_.end());
  for (const auto& e : edges_) out.insert(e.id);
  return out;
}

bool graphs_equal(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.vertices() != b.vertices()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const Edge& x = a.edges()[i];
    const Edge& y = b.edges()[i];
    if (x.id != y.id || x.source != y.source || x.range != y.range) return false;
  }
  return true;
}

std::size_t GraphInsplitPartition::num_classes(const std::string& v) const {
  auto it = classes.find(v);
  return it == classes.end() ? 0 : it->second.size();
}

int GraphInsplitPartition::class_of(const std::string& v, const std::string& edge) const {
  auto it = classes.find(v);
  if (it == classes.end()) return 0;
  for (std::size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i].count(edge)) return static_cast<int>(i) + 1;
  return 0;
}

bool GraphInsplitPartition::is_trivial() const {
  for (const auto& [v, cls] : classes)
    if (cls.size() != 1) return false;
  return true;
}

GraphInsplitPartition trivial_partition(const DirectedGraph& g) {
  GraphInsplitPartition p;
  for (const auto& v : g.vertices()) {
    const auto& in = g.into(v);
    p.classes[v] = {std::set<std::string>(in.begin(), in.end())};
  }
  return p;
}

void validate_graph_partition(const GraphInsplitPartition& p, const DirectedGraph& g) {
  for (const auto& [v, cls] : p.classes)
    if (!g.has_vertex(v)) throw Error("partition names unknown vertex '" + v + "'");
  for (const auto& v : g.vertices()) {
    auto it = p.classes.find(v);
    if (it == p.classes.end())
      throw Error("partition missing vertex '" + v + "'");
    const auto& cls = it->second;
    if (cls.empty()) throw Error("partition has no classes at vertex '" + v + "'");
    const auto& in = g.into(v);
    if (in.empty()) {
      // Degenerate case: a vertex without incoming edges carries one empty class.
      if (cls.size() != 1 || !cls[0].empty())
        throw Error("vertex '" + v + "' has no incoming edges; expected a single empty class");
      continue;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i].empty())
        throw Error("empty class " + std::to_string(i + 1) + " at vertex '" + v + "'");
      for (const auto& e : cls[i]) {
        if (!g.has_edge(e) || g.range(e) != v)
          throw Error("edge '" + e + "' in class at '" + v + "' is not in r^-1(" + v + ")");
        if (!seen.insert(e).second)
          throw Error("edge '" + e + "' appears in two classes at vertex '" + v + "'");
      }
    }
    for (const auto& e : in)
      if (!seen.count(e))
        throw Error("edge '" + e + "' with range '" + v + "' is missing from the partition");
  }
}

std::string choose_separator(const std::set<std::string>& reserved,
                             const std::map<std::string, std::size_t>& copies) {
  std::string sep = "^";
  for (;;) {
    bool clash = false;
    for (const auto& [parent, n] : copies) {
      for (std::size_t i = 1; i <= n && !clash; ++i)
        if (reserved.count(parent + sep + std::to_string(i))) clash = true;
      if (clash) break;
    }
    if (!clash) return sep;
    sep += "^";
  }
}

const std::string& InsplitGraphResult::vertex_child(const std::string& parent, int i) const {
  auto it = vertex_child_.find({parent, i});
  if (it == vertex_child_.end())
    throw Error("no child " + std::to_string(i) + " of vertex '" + parent + "'");
  return it->second;
}

const std::string& InsplitGraphResult::edge_child(const std::string& parent, int i) const {
  auto it = edge_child_.find({parent, i});
  if (it == edge_child_.end())
    throw Error("no child " + std::to_string(i) + " of edge '" + parent + "'");
  return it->second;
}

InsplitGraphResult insplit_graph(const DirectedGraph& g, const GraphInsplitPartition& p,
                                 const std::set<std::string>& reserved,
                                 const std::string& separator) {
  validate_graph_partition(p, g);

  std::string sep = separator;
  if (sep.empty()) {
    std::set<std::string> avoid = g.labels();
    avoid.insert(reserved.begin(), reserved.end());
    std::map<std::string, std::size_t> copies;
    for (const auto& v : g.vertices()) copies[v] = p.num_classes(v);
    for (const auto& e : g.edges()) copies[e.id] = p.num_classes(e.source);
    sep = choose_separator(avoid, copies);
  }

  InsplitGraphResult res;
  res.separator = sep;
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices()) {
    std::size_t m = p.num_classes(v);
    for (std::size_t i = 1; i <= m; ++i) {
      std::string child = v + sep + std::to_string(i);
      vertices.push_back(child);
      res.vertex_origin[child] = {v, static_cast<int>(i)};
      res.vertex_child_[{v, static_cast<int>(i)}] = child;
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    int k = p.class_of(e.range, e.id);
    if (k == 0) throw Error("edge '" + e.id + "' not classified at its range");
    std::size_t m = p.num_classes(e.source);
    for (std::size_t j = 1; j <= m; ++j) {
      std::string child = e.id + sep + std::to_string(j);
      edges.push_back({child, res.vertex_child_.at({e.source, static_cast<int>(j)}),
                       res.vertex_child_.at({e.range, k})});
      res.edge_origin[child] = {e.id, static_cast<int>(j)};
      res.edge_child_[{e.id, static_cast<int>(j)}] = child;
    }
  }
  res.graph = DirectedGraph(std::move(vertices), std::move(edges));
  return res;
}

namespace {

struct VertexSig {
  std::size_t in = 0, out = 0, loops = 0;
  auto operator<=>(const VertexSig&) const = default;
};

VertexSig signature(const DirectedGraph& g, const std::string& v) {
  VertexSig s;
  s.in = g.into(v).size();
  s.out = g.out_of(v).size();
  for (const auto& e : g.into(v))
    if (g.source(e) == v) ++s.loops;
  return s;
}

std::size_t count_between(const DirectedGraph& g, const std::string& u, const std::string& v) {
  std::size_t n = 0;
  for (const auto& e : g.out_of(u))
    if (g.range(e) == v) ++n;
  return n;
}

bool extend(const DirectedGraph& a, const DirectedGraph& b,
            const std::vector<std::string>& order, std::size_t depth,
            std::map<std::string, std::string>& vmap,
            std::map<std::string, std::string>& used,
            const std::map<std::string, VertexSig>& bsig) {
  if (depth == order.size()) return true;
  const std::string& va = order[depth];
  VertexSig sa = signature(a, va);
  for (const auto& vb : b.vertices()) {
    if (used.count(vb)) continue;
    if (bsig.at(vb) != sa) continue;
    bool ok = true;
    for (const auto& [ua, ub] : vmap) {
      if (count_between(a, va, ua) != count_between(b, vb, ub) ||
          count_between(a, ua, va) != count_between(b, ub, vb)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    vmap[va] = vb;
    used[vb] = va;
    if (extend(a, b, order, depth + 1, vmap, used, bsig)) return true;
    vmap.erase(va);
    used.erase(vb);
  }
  return false;
}

}  // namespace

std::optional<GraphIso> graphs_isomorphic(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
    return std::nullopt;

  std::multiset<VertexSig> sa, sb;
  std::map<std::string, VertexSig> bsig;
  for (const auto& v : a.vertices()) sa.insert(signature(a, v));
  for (const auto& v : b.vertices()) {
    VertexSig s = signature(b, v);
    sb.insert(s);
    bsig[v] = s;
  }
  if (sa != sb) return std::nullopt;

  // Most-constrained first: rare signatures early, ties by label.
  std::map<VertexSig, std::size_t> freq;
  for (const auto& s : sa) ++freq[s];
  std::vector<std::string> order = a.vertices();
  std::stable_sort(order.begin(), order.end(), [&](const std::string& x, const std::string& y) {
    return freq[signature(a, x)] < freq[signature(a, y)];
  });

  std::map<std::string, std::string> vmap, used;
  if (!extend(a, b, order, 0, vmap, used, bsig)) return std::nullopt;

  GraphIso iso;
  iso.vertex_map = vmap;
  // Pair parallel edges between matched vertex pairs in label order.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> abund, bbund;
  for (const auto& e : a.edges()) abund[{e.source, e.range}].push_back(e.id);
  for (const auto& e : b.edges()) bbund[{e.source, e.range}].push_back(e.id);
  for (auto& [key, list] : abund) {
    auto mapped = bbund.find({vmap.at(key.first), vmap.at(key.second)});
    if (mapped == bbund.end() || mapped->second.size() != list.size()) return std::nullopt;
    for (std::size_t i = 0; i < list.size(); ++i) iso.edge_map[list[i]] = mapped->second[i];
  }
  return iso;
}

}  // namespace textiles

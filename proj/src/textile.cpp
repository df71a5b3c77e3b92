#include "textiles/textile.hpp"

#include <algorithm>
#include <tuple>

namespace textiles {

const std::string& GraphHom::v(const std::string& vertex) const {
  auto it = vertex_map.find(vertex);
  if (it == vertex_map.end()) throw Error("homomorphism undefined on vertex '" + vertex + "'");
  return it->second;
}

const std::string& GraphHom::e(const std::string& edge) const {
  auto it = edge_map.find(edge);
  if (it == edge_map.end()) throw Error("homomorphism undefined on edge '" + edge + "'");
  return it->second;
}

GraphHom identity_hom(const DirectedGraph& g) {
  GraphHom h;
  for (const auto& v : g.vertices()) h.vertex_map[v] = v;
  for (const auto& e : g.edges()) h.edge_map[e.id] = e.id;
  return h;
}

bool validate_hom(const GraphHom& h, const DirectedGraph& dom, const DirectedGraph& cod,
                  std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const auto& v : dom.vertices()) {
    auto it = h.vertex_map.find(v);
    if (it == h.vertex_map.end()) return fail("map undefined on vertex '" + v + "'");
    if (!cod.has_vertex(it->second))
      return fail("vertex '" + v + "' maps to unknown vertex '" + it->second + "'");
  }
  for (const auto& [v, img] : h.vertex_map)
    if (!dom.has_vertex(v)) return fail("map defined on unknown vertex '" + v + "'");
  for (const auto& f : dom.edges()) {
    auto it = h.edge_map.find(f.id);
    if (it == h.edge_map.end()) return fail("map undefined on edge '" + f.id + "'");
    if (!cod.has_edge(it->second))
      return fail("edge '" + f.id + "' maps to unknown edge '" + it->second + "'");
    const Edge& img = cod.edge(it->second);
    if (h.v(f.range) != img.range)
      return fail("edge '" + f.id + "': map does not commute with r");
    if (h.v(f.source) != img.source)
      return fail("edge '" + f.id + "': map does not commute with s");
  }
  for (const auto& [e, img] : h.edge_map)
    if (!dom.has_edge(e)) return fail("map defined on unknown edge '" + e + "'");
  return true;
}

bool homs_equal(const GraphHom& a, const GraphHom& b) {
  return a.vertex_map == b.vertex_map && a.edge_map == b.edge_map;
}

TextileSystem build_textile(DirectedGraph F, DirectedGraph E, GraphHom p, GraphHom q) {
  std::string why;
  if (!validate_hom(p, F, E, &why)) throw Error("p is not a graph homomorphism: " + why);
  if (!validate_hom(q, F, E, &why)) throw Error("q is not a graph homomorphism: " + why);

  std::set<std::string> flabels = F.labels();
  for (const auto& l : E.labels())
    if (flabels.count(l))
      throw Error("label '" + l + "' is used by both F and E; the four label sets must be disjoint");

  std::map<std::tuple<std::string, std::string, std::string, std::string>, std::string> seen;
  for (const auto& f : F.edges()) {
    auto key = std::make_tuple(f.range, p.e(f.id), f.source, q.e(f.id));
    auto [it, fresh] = seen.emplace(key, f.id);
    if (!fresh)
      throw Error("not a textile system: edges '" + it->second + "' and '" + f.id +
                  "' have the same boundary (r, p, s, q)");
  }
  return {std::move(F), std::move(E), std::move(p), std::move(q)};
}

bool textile_struct_equal(const TextileSystem& a, const TextileSystem& b, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!graphs_equal(a.F, b.F)) return fail("top graphs F differ");
  if (!graphs_equal(a.E, b.E)) return fail("bottom graphs E differ");
  if (!homs_equal(a.p, b.p)) return fail("homomorphisms p differ");
  if (!homs_equal(a.q, b.q)) return fail("homomorphisms q differ");
  return true;
}

std::vector<SquareView> squares_of(const TextileSystem& t) {
  std::vector<SquareView> out;
  out.reserve(t.F.edges().size());
  for (const auto& f : t.F.edges())
    out.push_back({f.id, f.range, t.p.e(f.id), f.source, t.q.e(f.id)});
  return out;
}

namespace {

// One lifting check: for every (v in F^0, e in E^1) with h(v) = end(e),
// count edges f with h(f) = e and end(f) = v.
void lifting_direction(const TextileSystem& t, const GraphHom& h, bool use_range, bool& exists,
                       bool& unique, std::vector<LiftWitness>& anomalies) {
  exists = true;
  unique = true;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> lifts;
  for (const auto& f : t.F.edges()) {
    const std::string& end = use_range ? f.range : f.source;
    lifts[{h.e(f.id), end}].push_back(f.id);
  }
  for (const auto& v : t.F.vertices()) {
    for (const auto& e : t.E.edges()) {
      const std::string& eend = use_range ? e.range : e.source;
      if (h.v(v) != eend) continue;
      auto it = lifts.find({e.id, v});
      std::size_t n = it == lifts.end() ? 0 : it->second.size();
      if (n != 1)
        anomalies.push_back({v, e.id, n == 0 ? std::vector<std::string>{} : it->second});
      if (n == 0) exists = false;
      if (n != 1) unique = false;
    }
  }
}

}  // namespace

LiftingReport lifting_report(const TextileSystem& t) {
  LiftingReport r;
  lifting_direction(t, t.p, true, r.p_r_lift, r.p_unique_r, r.p_r_anomalies);
  lifting_direction(t, t.p, false, r.p_s_lift, r.p_unique_s, r.p_s_anomalies);
  lifting_direction(t, t.q, true, r.q_r_lift, r.q_unique_r, r.q_r_anomalies);
  lifting_direction(t, t.q, false, r.q_s_lift, r.q_unique_s, r.q_s_anomalies);
  r.is_LR = r.p_unique_r && r.q_unique_s;
  return r;
}

bool is_essential_textile(const TextileSystem& t) {
  if (!t.F.is_essential()) return false;
  std::set<std::string> vimg, eimg;
  for (const auto& [v, img] : t.p.vertex_map) vimg.insert(img);
  for (const auto& [e, img] : t.p.edge_map) eimg.insert(img);
  if (vimg.size() != t.E.vertices().size() || eimg.size() != t.E.edges().size()) return false;
  vimg.clear();
  eimg.clear();
  for (const auto& [v, img] : t.q.vertex_map) vimg.insert(img);
  for (const auto& [e, img] : t.q.edge_map) eimg.insert(img);
  return vimg.size() == t.E.vertices().size() && eimg.size() == t.E.edges().size();
}

TextileSystem invert_textile(const TextileSystem& t) {
  // F^ = (E^1, F^1, q, p), E^ = (E^0, F^0, q, p); p^ = (s_E, s_F), q^ = (r_E, r_F).
  std::vector<std::string> fhat_vertices;
  for (const auto& e : t.E.edges()) fhat_vertices.push_back(e.id);
  std::vector<Edge> fhat_edges;
  for (const auto& f : t.F.edges()) fhat_edges.push_back({f.id, t.p.e(f.id), t.q.e(f.id)});

  std::vector<Edge> ehat_edges;
  for (const auto& v : t.F.vertices()) ehat_edges.push_back({v, t.p.v(v), t.q.v(v)});

  GraphHom phat, qhat;
  for (const auto& e : t.E.edges()) {
    phat.vertex_map[e.id] = e.source;
    qhat.vertex_map[e.id] = e.range;
  }
  for (const auto& f : t.F.edges()) {
    phat.edge_map[f.id] = f.source;
    qhat.edge_map[f.id] = f.range;
  }
  return build_textile(DirectedGraph(std::move(fhat_vertices), std::move(fhat_edges)),
                       DirectedGraph(t.E.vertices(), std::move(ehat_edges)), std::move(phat),
                       std::move(qhat));
}

TextileInsplitResult insplit_textile(const TextileSystem& t, const GraphInsplitPartition& p,
                                        const std::string& separator) {
  InsplitGraphResult split = insplit_graph(t.F, p, t.E.labels(), separator);
  GraphHom pi, qi;
  for (const auto& [child, origin] : split.vertex_origin) {
    pi.vertex_map[child] = t.p.v(origin.first);
    qi.vertex_map[child] = t.q.v(origin.first);
  }
  for (const auto& [child, origin] : split.edge_origin) {
    pi.edge_map[child] = t.p.e(origin.first);
    qi.edge_map[child] = t.q.e(origin.first);
  }
  TextileSystem sys = build_textile(split.graph, t.E, std::move(pi), std::move(qi));
  return {std::move(sys), std::move(split)};
}

namespace {

std::string rename(const std::map<std::string, std::string>& m, const std::string& x) {
  auto it = m.find(x);
  return it == m.end() ? x : it->second;
}

DirectedGraph rename_graph(const DirectedGraph& g, const std::map<std::string, std::string>& m) {
  std::vector<std::string> vs;
  for (const auto& v : g.vertices()) vs.push_back(rename(m, v));
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back({rename(m, e.id), rename(m, e.source), rename(m, e.range)});
  return DirectedGraph(std::move(vs), std::move(es));
}

}  // namespace

TextileSystem rename_textile(const TextileSystem& t, const std::map<std::string, std::string>& m) {
  GraphHom p, q;
  for (const auto& [x, y] : t.p.vertex_map) p.vertex_map[rename(m, x)] = rename(m, y);
  for (const auto& [x, y] : t.p.edge_map) p.edge_map[rename(m, x)] = rename(m, y);
  for (const auto& [x, y] : t.q.vertex_map) q.vertex_map[rename(m, x)] = rename(m, y);
  for (const auto& [x, y] : t.q.edge_map) q.edge_map[rename(m, x)] = rename(m, y);
  return build_textile(rename_graph(t.F, m), rename_graph(t.E, m), std::move(p), std::move(q));
}

}  // namespace textiles

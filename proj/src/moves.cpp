#include "textiles/moves.hpp"

#include <algorithm>

namespace textiles {

namespace {

void require_lr(const TextileSystem& t) {
  LiftingReport r = lifting_report(t);
  if (r.is_LR) return;
  std::string msg = "textile system is not LR";
  const auto& list = !r.p_unique_r ? r.p_r_anomalies : r.q_s_anomalies;
  if (!list.empty()) {
    const LiftWitness& w = list.front();
    msg += " (at F-vertex '" + w.vertex + "' and E-edge '" + w.edge + "': ";
    msg += w.lifts.empty() ? "no lift)" : std::to_string(w.lifts.size()) + " lifts)";
  }
  throw Error(msg);
}

bool p_surjective(const TextileSystem& t, std::string* witness) {
  std::set<std::string> vimg, eimg;
  for (const auto& [x, y] : t.p.vertex_map) vimg.insert(y);
  for (const auto& [x, y] : t.p.edge_map) eimg.insert(y);
  for (const auto& z : t.E.vertices())
    if (!vimg.count(z)) {
      if (witness) *witness = "vertex '" + z + "' is not in the image of p";
      return false;
    }
  for (const auto& e : t.E.edges())
    if (!eimg.count(e.id)) {
      if (witness) *witness = "edge '" + e.id + "' is not in the image of p";
      return false;
    }
  return true;
}

void require_main_hypotheses(const TextileSystem& t, const char* where) {
  require_lr(t);
  std::string witness;
  if (!p_surjective(t, &witness))
    throw Error(std::string(where) + ": p must be surjective; " + witness);
  for (const auto& v : t.F.vertices())
    if (t.F.into(v).empty())
      throw Error(std::string(where) + ": F must be source-free; vertex '" + v +
                  "' has no incoming edge");
}

std::set<std::string> image_of(const GraphHom& h,
                               const std::set<std::string>& edges) {
  std::set<std::string> out;
  for (const auto& e : edges) out.insert(h.e(e));
  return out;
}

// F_v^i := vF^1 n p^-1(E^i at p(v)); nonempty by unique r-path lifting of p.
GraphInsplitPartition f_from_e(const TextileSystem& t, const GraphInsplitPartition& epart) {
  GraphInsplitPartition f;
  for (const auto& v : t.F.vertices()) {
    const std::string& z = t.p.v(v);
    auto it = epart.classes.find(z);
    if (it == epart.classes.end()) throw Error("no E-partition classes at vertex '" + z + "'");
    std::size_t m = it->second.size();
    std::vector<std::set<std::string>> cls(m);
    for (const auto& lam : t.F.into(v)) {
      int i = 0;
      for (std::size_t k = 0; k < m; ++k)
        if (it->second[k].count(t.p.e(lam))) i = static_cast<int>(k) + 1;
      if (i == 0)
        throw Error("edge '" + lam + "' has p-image outside the E-partition at '" + z + "'");
      cls[i - 1].insert(lam);
    }
    if (t.F.into(v).empty()) {
      if (m != 1)
        throw Error("vertex '" + v + "' of F has no incoming edges but m(" + z + ") = " +
                    std::to_string(m));
    } else {
      for (std::size_t k = 0; k < m; ++k)
        if (cls[k].empty())
          throw Error("derived F-class " + std::to_string(k + 1) + " at '" + v +
                      "' is empty; no incoming edge lifts class " + std::to_string(k + 1) +
                      " at '" + z + "'");
    }
    f.classes[v] = std::move(cls);
  }
  return f;
}

// G_z^i := E_z^i u r_F(q^-1(E_z^i)).
TwoGraphInsplitPartition g_from_e(const TextileSystem& t, const GraphInsplitPartition& epart) {
  TwoGraphInsplitPartition g;
  for (const auto& [z, ecls] : epart.classes) {
    std::vector<std::set<std::string>> cls(ecls.begin(), ecls.end());
    for (const auto& f : t.F.edges()) {
      const std::string& qe = t.q.e(f.id);
      for (std::size_t k = 0; k < ecls.size(); ++k)
        if (ecls[k].count(qe)) cls[k].insert(f.range);
    }
    g.classes[z] = std::move(cls);
  }
  return g;
}

void check_partitions_consistent(const DerivedPartitions& d, const TextileSystem& t) {
  // E_z^i = G_z^i n zE^1
  for (const auto& [z, ecls] : d.e.classes) {
    auto git = d.g.classes.find(z);
    if (git == d.g.classes.end() || git->second.size() != ecls.size())
      throw Error("internal: class counts at '" + z + "' disagree between G and E partitions");
    for (std::size_t i = 0; i < ecls.size(); ++i) {
      std::set<std::string> inter;
      for (const auto& x : git->second[i])
        if (t.E.has_edge(x)) inter.insert(x);
      if (inter != ecls[i])
        throw Error("internal: G and E partitions disagree at '" + z + "' class " +
                    std::to_string(i + 1));
    }
  }
}

std::string shared_separator(const TextileSystem& t, const DerivedPartitions& d) {
  std::set<std::string> reserved = t.F.labels();
  for (const auto& l : t.E.labels()) reserved.insert(l);
  std::map<std::string, std::size_t> copies;
  for (const auto& z : t.E.vertices()) copies[z] = d.e.classes.at(z).size();
  for (const auto& e : t.E.edges()) copies[e.id] = d.e.classes.at(e.source).size();
  for (const auto& v : t.F.vertices()) copies[v] = d.f.classes.at(v).size();
  for (const auto& f : t.F.edges()) copies[f.id] = d.f.classes.at(f.source).size();
  return choose_separator(reserved, copies);
}

// Common core of the three single-move theorems: insplit F and E by the
// derived partitions and induce p~, q~.
TextileSystem build_tilde(const TextileSystem& t, const DerivedPartitions& d,
                          const std::string& sep) {
  InsplitGraphResult fi = insplit_graph(t.F, d.f, {}, sep);
  InsplitGraphResult ei = insplit_graph(t.E, d.e, {}, sep);

  GraphHom pt, qt;
  for (const auto& [child, origin] : fi.vertex_origin) {
    const auto& [v, i] = origin;
    pt.vertex_map[child] = ei.vertex_child(t.p.v(v), i);
    int m = d.g.class_of(t.q.v(v), v);
    if (m == 0) throw Error("internal: F-vertex '" + v + "' missing from the G-partition");
    qt.vertex_map[child] = ei.vertex_child(t.q.v(v), m);
  }
  for (const auto& [child, origin] : fi.edge_origin) {
    const auto& [lam, i] = origin;
    pt.edge_map[child] = ei.edge_child(t.p.e(lam), i);
    const std::string& sv = t.F.source(lam);
    int m = d.g.class_of(t.q.v(sv), sv);
    if (m == 0) throw Error("internal: F-vertex '" + sv + "' missing from the G-partition");
    qt.edge_map[child] = ei.edge_child(t.q.e(lam), m);
  }
  TextileSystem tilde = build_textile(fi.graph, ei.graph, std::move(pt), std::move(qt));
  if (!lifting_report(tilde).is_LR)
    throw Error("internal: the induced textile system must be LR");
  return tilde;
}

bool partition_classes_equal(const PartitionClasses& a, const PartitionClasses& b,
                             std::string* why) {
  if (a == b) return true;
  if (why) {
    for (const auto& [v, cls] : a) {
      auto it = b.find(v);
      if (it == b.end()) {
        *why = "classes at '" + v + "' present on one side only";
        return false;
      }
      if (cls != it->second) {
        *why = "classes at '" + v + "' differ";
        return false;
      }
    }
    *why = "extra vertices on one side";
  }
  return false;
}

}  // namespace

DerivedPartitions derive_partitions(const TextileSystem& t, const TwoGraphInsplitPartition& g) {
  TwoGraph lambda = textile_to_twograph(t);
  PairingCheck pc = check_pairing(lambda, g);
  if (!pc.ok) {
    std::string msg = "G-partition fails its hypothesis:";
    for (const auto& e : pc.coverage_errors) msg += "\n  " + e;
    for (const auto& e : pc.pairing_violations) msg += "\n  " + e;
    throw Error(msg);
  }

  DerivedPartitions d;
  d.provenance = PartitionKind::TwoGraphG;
  d.g = g;
  for (const auto& z : t.E.vertices()) {
    const auto& gcls = g.classes.at(z);
    std::vector<std::set<std::string>> ecls(gcls.size());
    for (std::size_t i = 0; i < gcls.size(); ++i)
      for (const auto& x : gcls[i])
        if (t.E.has_edge(x)) ecls[i].insert(x);
    bool none = t.E.into(z).empty();
    for (std::size_t i = 0; i < ecls.size(); ++i)
      if (ecls[i].empty() && !(none && gcls.size() == 1))
        throw Error("class " + std::to_string(i + 1) + " of the G-partition at '" + z +
                    "' contains no horizontal edge");
    d.e.classes[z] = std::move(ecls);
  }
  d.f = f_from_e(t, d.e);
  check_partitions_consistent(d, t);
  return d;
}

DerivedPartitions derive_partitions_from_f(const TextileSystem& t,
                                           const GraphInsplitPartition& fpart) {
  require_main_hypotheses(t, "F-partition derivation");
  validate_graph_partition(fpart, t.F);

  // Hypothesis (1): p-images of classes are pairwise equal or disjoint.
  std::map<std::string, std::vector<std::pair<std::string, std::set<std::string>>>> images_at;
  for (const auto& [v, cls] : fpart.classes) {
    const std::string& z = t.p.v(v);
    for (const auto& c : cls)
      images_at[z].push_back({v, image_of(t.p, c)});
  }
  for (const auto& [z, images] : images_at) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        const auto& a = images[i].second;
        const auto& b = images[j].second;
        if (a == b) continue;
        std::vector<std::string> inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        if (!inter.empty())
          throw Error("hypothesis (1) fails: p-images of classes at '" + images[i].first +
                      "' and '" + images[j].first + "' overlap without being equal (edge '" +
                      inter[0] + "')");
      }
    }
  }

  // Hypothesis (2): each q(vF^1) is contained in some class image.
  for (const auto& v : t.F.vertices()) {
    std::set<std::string> qv;
    for (const auto& lam : t.F.into(v)) qv.insert(t.q.e(lam));
    const std::string& z = t.q.v(v);
    bool found = false;
    auto it = images_at.find(z);
    if (it != images_at.end())
      for (const auto& [w, img] : it->second)
        if (std::includes(img.begin(), img.end(), qv.begin(), qv.end())) found = true;
    if (!found)
      throw Error("hypothesis (2) fails at vertex '" + v +
                  "': q(vF^1) is not contained in any class image at '" + z + "'");
  }

  // Same class count across each fiber of p.
  std::map<std::string, std::size_t> mz;
  for (const auto& [v, cls] : fpart.classes) {
    const std::string& z = t.p.v(v);
    auto [it, fresh] = mz.emplace(z, cls.size());
    if (!fresh && it->second != cls.size())
      throw Error("internal: class counts differ across the p-fiber of '" + z + "'");
  }

  // Index normalization: at each z the least vertex of p^-1(z) anchors the
  // order; other fibers are permuted so equal p-images share an index.
  std::map<std::string, std::string> anchor;
  for (const auto& v : t.F.vertices()) {
    const std::string& z = t.p.v(v);
    if (!anchor.count(z)) anchor[z] = v;  // vertices() is sorted
  }
  GraphInsplitPartition norm;
  std::map<std::string, std::vector<std::set<std::string>>> anchor_images;
  for (const auto& [z, a] : anchor) {
    std::vector<std::set<std::string>> imgs;
    for (const auto& c : fpart.classes.at(a)) imgs.push_back(image_of(t.p, c));
    anchor_images[z] = std::move(imgs);
  }
  for (const auto& v : t.F.vertices()) {
    const std::string& z = t.p.v(v);
    const auto& cls = fpart.classes.at(v);
    const auto& target = anchor_images.at(z);
    std::vector<std::set<std::string>> reordered(cls.size());
    std::vector<bool> used(cls.size(), false);
    for (std::size_t i = 0; i < target.size(); ++i) {
      bool placed = false;
      for (std::size_t j = 0; j < cls.size(); ++j) {
        if (used[j]) continue;
        if (image_of(t.p, cls[j]) == target[i]) {
          reordered[i] = cls[j];
          used[j] = true;
          placed = true;
          break;
        }
      }
      if (!placed)
        throw Error("internal: index normalization impossible at vertex '" + v + "'");
    }
    norm.classes[v] = std::move(reordered);
  }

  DerivedPartitions d;
  d.provenance = PartitionKind::GraphF;
  d.f = std::move(norm);
  for (const auto& [z, imgs] : anchor_images) d.e.classes[z] = imgs;
  validate_graph_partition(d.e, t.E);
  d.g = g_from_e(t, d.e);
  PairingCheck pc = check_pairing(textile_to_twograph(t), d.g);
  if (!pc.ok) throw Error("internal: derived G-partition fails the pairing condition");
  check_partitions_consistent(d, t);
  return d;
}

DerivedPartitions derive_partitions_from_e(const TextileSystem& t,
                                           const GraphInsplitPartition& epart) {
  require_main_hypotheses(t, "E-partition derivation");
  validate_graph_partition(epart, t.E);

  // Hypothesis: q(uF^1) lies inside a single class at q(u), for every u.
  for (const auto& u : t.F.vertices()) {
    std::set<std::string> qu;
    for (const auto& lam : t.F.into(u)) qu.insert(t.q.e(lam));
    const std::string& z = t.q.v(u);
    bool found = false;
    for (const auto& c : epart.classes.at(z))
      if (std::includes(c.begin(), c.end(), qu.begin(), qu.end())) found = true;
    if (!found)
      throw Error("hypothesis fails at vertex '" + u +
                  "': q(uF^1) is not contained in a single class at '" + z + "'");
  }

  DerivedPartitions d;
  d.provenance = PartitionKind::GraphE;
  d.e = epart;
  d.f = f_from_e(t, epart);
  d.g = g_from_e(t, epart);
  PairingCheck pc = check_pairing(textile_to_twograph(t), d.g);
  if (!pc.ok) throw Error("internal: derived G-partition fails the pairing condition");
  check_partitions_consistent(d, t);
  return d;
}

PipelineResult four_move_pipeline(const TextileSystem& t, const TwoGraphInsplitPartition& g) {
  PipelineResult res;
  res.lambda = textile_to_twograph(t);
  res.parts = derive_partitions(t, g);
  std::string sep = shared_separator(t, res.parts);
  res.lambda_insplit = insplit_twograph(res.lambda, g, sep);

  // Step 1: insplit along the derived F-partition.
  TextileInsplitResult a = insplit_textile(t, res.parts.f, sep);
  res.a = a.system;

  // Step 2: invert.
  res.b = invert_textile(res.a);

  // Step 3: partition the edges of F_B at each vertex e in E^1 by the class
  // of the original source vertex inside the G-partition at s(e).
  GraphInsplitPartition hpart;
  for (const auto& e : res.b.F.vertices()) {
    std::size_t m = g.classes.at(t.E.source(e)).size();
    hpart.classes[e] = std::vector<std::set<std::string>>(m);
  }
  for (const auto& edge : res.b.F.edges()) {
    const auto& [lam, i] = a.split.edge_origin.at(edge.id);
    const std::string& e = t.q.e(lam);
    const std::string& sv = t.F.source(lam);
    int j = g.class_of(t.E.source(e), sv);
    if (j == 0)
      throw Error("internal: vertex '" + sv + "' missing from the G-partition at '" +
                  t.E.source(e) + "'");
    hpart.classes[e][j - 1].insert(edge.id);
  }
  for (auto& [e, cls] : hpart.classes) {
    if (res.b.F.into(e).empty()) {
      if (cls.size() == 1) continue;
      throw Error("four-move hypothesis fails: '" + e + "' has no incoming squares but " +
                  std::to_string(cls.size()) + " classes are required");
    }
    for (std::size_t jj = 0; jj < cls.size(); ++jj)
      if (cls[jj].empty())
        throw Error("four-move hypothesis fails: class " + std::to_string(jj + 1) + " at '" + e +
                    "' is empty (the G-class at '" + t.E.source(e) +
                    "' contains no vertical edge)");
  }
  res.parts.h = hpart;

  TextileInsplitResult c = insplit_textile(res.b, hpart);
  res.c = c.system;

  // Step 4: invert again.
  res.d = invert_textile(res.c);

  // Prune to the diagonal children and take back the step-1 names.
  for (const auto& edge : res.d.F.edges()) {
    const auto& [aname, j] = c.split.edge_origin.at(edge.id);
    const auto& [lam, i] = a.split.edge_origin.at(aname);
    if (i != j) continue;
    res.diagonal[edge.id] = aname;
    res.relabel[aname] = res.lambda_insplit.square_child(lam, i);
  }
  std::vector<Edge> pruned_edges;
  GraphHom pp, qp;
  pp.vertex_map = res.d.p.vertex_map;
  qp.vertex_map = res.d.q.vertex_map;
  for (const auto& edge : res.d.F.edges()) {
    auto it = res.diagonal.find(edge.id);
    if (it == res.diagonal.end()) continue;
    pruned_edges.push_back({it->second, edge.source, edge.range});
    pp.edge_map[it->second] = res.d.p.e(edge.id);
    qp.edge_map[it->second] = res.d.q.e(edge.id);
  }
  res.pruned = build_textile(DirectedGraph(res.d.F.vertices(), std::move(pruned_edges)), res.d.E,
                             std::move(pp), std::move(qp));
  return res;
}

TextileSystem reconstruct_from_pairing(const TextileSystem& t, const TwoGraphInsplitPartition& g,
                           std::vector<std::string>* warnings) {
  std::string witness;
  if (warnings && !p_surjective(t, &witness))
    warnings->push_back("p is not surjective (" + witness +
                        "); the construction proceeds but the standing results assume it");
  DerivedPartitions d = derive_partitions(t, g);
  std::string sep = shared_separator(t, d);
  TextileSystem tilde = build_tilde(t, d, sep);

  TwoGraph expect = insplit_twograph(textile_to_twograph(t), g, sep).graph;
  std::string why;
  if (!twograph_struct_equal(textile_to_twograph(tilde), expect, &why))
    throw Error("internal: the 2-graph of the induced system differs from the 2-graph insplit: " +
                why);
  return tilde;
}

TopReconstruction reconstruct_from_top_partition(const TextileSystem& t, const GraphInsplitPartition& fpart) {
  DerivedPartitions d = derive_partitions_from_f(t, fpart);
  std::string sep = shared_separator(t, d);
  TopReconstruction res{build_tilde(t, d, sep), d.g, d.f, d.e};

  TextileSystem expect =
      twograph_to_textile(insplit_twograph(textile_to_twograph(t), d.g, sep).graph);
  std::string why;
  if (!textile_struct_equal(res.system, expect, &why))
    throw Error("internal: the induced system differs from the textile system of the 2-graph "
                "insplit: " + why);
  return res;
}

BaseReconstruction reconstruct_from_base_partition(const TextileSystem& t, const GraphInsplitPartition& epart) {
  DerivedPartitions d = derive_partitions_from_e(t, epart);
  std::string sep = shared_separator(t, d);
  BaseReconstruction res{build_tilde(t, d, sep), d.f, d.g};

  TwoGraph expect = insplit_twograph(textile_to_twograph(t), d.g, sep).graph;
  std::string why;
  if (!twograph_struct_equal(textile_to_twograph(res.system), expect, &why))
    throw Error("internal: the 2-graph of the induced system differs from the 2-graph insplit: " +
                why);
  return res;
}

RoundtripReport roundtrip_equivalences(const TextileSystem& t, const AnyPartition& start) {
  RoundtripReport rep;
  DerivedPartitions d0;
  switch (start.kind) {
    case PartitionKind::TwoGraphG:
      d0 = derive_partitions(t, start.twograph);
      break;
    case PartitionKind::GraphF:
      d0 = derive_partitions_from_f(t, start.graph);
      break;
    case PartitionKind::GraphE:
      d0 = derive_partitions_from_e(t, start.graph);
      break;
  }

  auto compare = [&](const char* label, const PartitionClasses& got,
                     const PartitionClasses& want) {
    std::string why;
    if (!partition_classes_equal(got, want, &why))
      rep.mismatches.push_back(std::string(label) + ": " + why);
  };

  DerivedPartitions dg = derive_partitions(t, d0.g);
  compare("G -> F", dg.f.classes, d0.f.classes);
  compare("G -> E", dg.e.classes, d0.e.classes);
  DerivedPartitions df = derive_partitions_from_f(t, d0.f);
  compare("F -> G", df.g.classes, d0.g.classes);
  compare("F -> E", df.e.classes, d0.e.classes);
  DerivedPartitions de = derive_partitions_from_e(t, d0.e);
  compare("E -> G", de.g.classes, d0.g.classes);
  compare("E -> F", de.f.classes, d0.f.classes);

  TextileSystem t1 = reconstruct_from_pairing(t, d0.g);
  TextileSystem t2 = reconstruct_from_top_partition(t, d0.f).system;
  TextileSystem t3 = reconstruct_from_base_partition(t, d0.e).system;
  std::string why;
  if (!textile_struct_equal(t1, t2, &why))
    rep.mismatches.push_back("systems from the G- and F-partition differ: " + why);
  if (!textile_struct_equal(t1, t3, &why))
    rep.mismatches.push_back("systems from the G- and E-partition differ: " + why);

  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace textiles

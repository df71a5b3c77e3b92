#include "textiles/blocks.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>

namespace textiles {

SizeGuard size_guard_from_env() {
  SizeGuard g;
  if (const char* s = std::getenv("TEXTILES_MAX_CELLS")) g.max_cells = std::atol(s);
  if (const char* s = std::getenv("TEXTILES_MAX_FRONTIER")) g.max_frontier = std::atof(s);
  return g;
}

bool block_valid(const TextileSystem& t, const RectBlock& b, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (const auto& c : b.cells)
    if (!t.F.has_edge(c)) return fail("cell '" + c + "' is not an F-edge");
  for (int r = 0; r < b.height; ++r) {
    for (int c = 0; c < b.width; ++c) {
      if (c + 1 < b.width && t.F.source(b.at(c, r)) != t.F.range(b.at(c + 1, r)))
        return fail("cells (" + std::to_string(c) + "," + std::to_string(r) + ") and right neighbor violate s = r");
      if (r + 1 < b.height && t.p.e(b.at(c, r)) != t.q.e(b.at(c, r + 1)))
        return fail("cells (" + std::to_string(c) + "," + std::to_string(r) + ") and upper neighbor violate p = q");
    }
  }
  return true;
}

namespace {

// Interned view of F for enumeration: edge ids sorted, so integer order is
// label order.
struct Interned {
  std::vector<std::string> names;
  std::map<std::pair<int, int>, std::vector<int>> by_range_and_q;
  std::map<int, std::vector<int>> by_range, by_q;
  std::vector<int> all;
  std::vector<int> range_of, source_of, p_of, q_of;  // per edge; vertices/E-edges interned too

  explicit Interned(const TextileSystem& t) {
    std::map<std::string, int> vidx, eidx;
    for (const auto& v : t.F.vertices()) vidx.emplace(v, static_cast<int>(vidx.size()));
    for (const auto& e : t.E.edges()) eidx.emplace(e.id, static_cast<int>(eidx.size()));
    for (const auto& f : t.F.edges()) {
      int id = static_cast<int>(names.size());
      names.push_back(f.id);
      range_of.push_back(vidx.at(f.range));
      source_of.push_back(vidx.at(f.source));
      p_of.push_back(eidx.at(t.p.e(f.id)));
      q_of.push_back(eidx.at(t.q.e(f.id)));
      all.push_back(id);
    }
    for (int id = 0; id < static_cast<int>(names.size()); ++id) {
      by_range[range_of[id]].push_back(id);
      by_q[q_of[id]].push_back(id);
      by_range_and_q[{range_of[id], q_of[id]}].push_back(id);
    }
  }
};

}  // namespace

std::vector<RectBlock> enumerate_blocks(const TextileSystem& t, int w, int h,
                                        const SizeGuard& guard) {
  if (w < 1 || h < 1) throw Error("block dimensions must be positive");
  if (static_cast<long>(w) * h > guard.max_cells)
    throw Error("size guard: " + std::to_string(w) + "x" + std::to_string(h) + " exceeds " +
                std::to_string(guard.max_cells) + " cells");
  if (std::pow(static_cast<double>(t.F.edges().size()), w) > guard.max_frontier)
    throw Error("size guard: row frontier |F^1|^w exceeds the configured limit");

  Interned in(t);
  std::vector<RectBlock> out;
  int total = w * h;
  std::vector<int> cur(total, -1);

  // Cells are filled bottom row first, left to right; candidate lists are
  // sorted, so blocks come out in lexicographic order of the cell sequence.
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == total) {
      RectBlock b(w, h);
      for (int i = 0; i < total; ++i) b.cells[i] = in.names[cur[i]];
      out.push_back(std::move(b));
      return;
    }
    int c = pos % w, r = pos / w;
    const std::vector<int>* cands = &in.all;
    static const std::vector<int> kEmpty;
    if (c > 0 && r > 0) {
      auto it = in.by_range_and_q.find(
          {in.source_of[cur[pos - 1]], in.p_of[cur[pos - w]]});
      cands = it == in.by_range_and_q.end() ? &kEmpty : &it->second;
    } else if (c > 0) {
      auto it = in.by_range.find(in.source_of[cur[pos - 1]]);
      cands = it == in.by_range.end() ? &kEmpty : &it->second;
    } else if (r > 0) {
      auto it = in.by_q.find(in.p_of[cur[pos - w]]);
      cands = it == in.by_q.end() ? &kEmpty : &it->second;
    }
    for (int cand : *cands) {
      cur[pos] = cand;
      rec(pos + 1);
    }
    cur[pos] = -1;
  };
  rec(0);
  return out;
}

RectBlock transpose_block(const RectBlock& b) {
  RectBlock out(b.height, b.width);
  for (int r = 0; r < b.height; ++r)
    for (int c = 0; c < b.width; ++c) out.at(r, c) = b.at(c, r);
  return out;
}

std::vector<std::string> lift_row(const TextileSystem& t, const std::vector<std::string>& row) {
  LiftingReport lr = lifting_report(t);
  if (!lr.q_r_lift) {
    std::string msg = "q does not have r-path lifting";
    for (const auto& w : lr.q_r_anomalies) {
      if (!w.lifts.empty()) continue;
      msg += " (no lift of edge '" + w.edge + "' at vertex '" + w.vertex + "')";
      break;
    }
    throw Error(msg);
  }
  std::set<std::string> qimg;
  for (const auto& [v, img] : t.q.vertex_map) qimg.insert(img);
  if (qimg.size() != t.E.vertices().size())
    throw Error("q is not onto on vertices");
  if (row.empty()) return {};
  {
    RectBlock b(static_cast<int>(row.size()), 1);
    b.cells = row;
    std::string why;
    if (!block_valid(t, b, &why)) throw Error("input row is not admissible: " + why);
  }

  // w0: least F-vertex with q(w0) = r(p(row0)); then r-path lift q along the
  // images p(row_i), smallest edge label at each step.
  const std::string& u0 = t.E.range(t.p.e(row[0]));
  std::string w;
  for (const auto& v : t.F.vertices()) {
    if (t.q.v(v) == u0) {
      w = v;
      break;
    }
  }
  std::vector<std::string> lift;
  for (const auto& x : row) {
    const std::string& image = t.p.e(x);
    std::string pick;
    for (const auto& f : t.F.edges()) {
      if (f.range == w && t.q.e(f.id) == image) {
        pick = f.id;
        break;
      }
    }
    if (pick.empty())
      throw Error("internal: r-path lifting of q failed at vertex '" + w + "'");
    lift.push_back(pick);
    w = t.F.source(pick);
  }
  return lift;
}

RectBlock apply_block_map(const BlockMap& bm, const RectBlock& b) {
  int ow = b.width - bm.ell1;
  int oh = b.height - bm.ell2;
  if (ow < 1 || oh < 1)
    throw Error("block too small for the map window (" + std::to_string(bm.ell1) + "," +
                std::to_string(bm.ell2) + ")");
  RectBlock out(ow, oh);
  std::vector<std::string> key(static_cast<std::size_t>(bm.ell1 + 1) * (bm.ell2 + 1));
  for (int r = 0; r < oh; ++r) {
    for (int c = 0; c < ow; ++c) {
      std::size_t k = 0;
      for (int dr = 0; dr <= bm.ell2; ++dr)
        for (int dc = 0; dc <= bm.ell1; ++dc) key[k++] = b.at(c + dc, r + dr);
      auto it = bm.table.find(key);
      if (it == bm.table.end()) {
        std::string msg = "block map table miss on window";
        for (const auto& s : key) msg += " " + s;
        throw Error(msg);
      }
      out.at(c, r) = it->second;
    }
  }
  return out;
}

std::pair<BlockMap, BlockMap> insplit_conjugacy_block_maps(const TextileSystem& t,
                                                      const GraphInsplitPartition& p) {
  TextileInsplitResult ins = insplit_textile(t, p);

  BlockMap phi;  // T_I -> T, cellwise parent map
  phi.ell1 = 0;
  phi.ell2 = 0;
  for (const auto& [child, origin] : ins.split.edge_origin) phi.table[{child}] = origin.first;

  BlockMap psi;  // T -> T_I, horizontal domino (f, g) -> f^{class of g at s(f)}
  psi.ell1 = 1;
  psi.ell2 = 0;
  for (const auto& f : t.F.edges()) {
    for (const auto& g : t.F.into(f.source)) {
      int j = p.class_of(f.source, g);
      psi.table[{f.id, g}] = ins.split.edge_child(f.id, j);
    }
  }
  return {std::move(phi), std::move(psi)};
}

bool blockmap_consistent(const BlockMap& bm, const TextileSystem& src, const TextileSystem& dst,
                         std::string* why, const SizeGuard& guard) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const int w = bm.ell1 + 1, h = bm.ell2 + 1;
  for (const auto& b : enumerate_blocks(src, w + 1, h, guard)) {
    RectBlock img = apply_block_map(bm, b);
    std::string sub;
    if (!block_valid(dst, img, &sub)) return fail("horizontal neighbors map inconsistently: " + sub);
  }
  for (const auto& b : enumerate_blocks(src, w, h + 1, guard)) {
    RectBlock img = apply_block_map(bm, b);
    std::string sub;
    if (!block_valid(dst, img, &sub)) return fail("vertical neighbors map inconsistently: " + sub);
  }
  return true;
}

namespace {

RectBlock crop_lower_left(const RectBlock& b, int w, int h) {
  RectBlock out(w, h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) out.at(c, r) = b.at(c, r);
  return out;
}

std::string describe(const RectBlock& b) {
  std::string s = std::to_string(b.width) + "x" + std::to_string(b.height) + " [";
  for (std::size_t i = 0; i < b.cells.size(); ++i) s += (i ? " " : "") + b.cells[i];
  return s + "]";
}

}  // namespace

ConjugacyReport verify_conjugacy_on_blocks(const TextileSystem& x, const TextileSystem& y,
                                           const BlockMap& phi, const BlockMap& psi, int max_w,
                                           int max_h, const SizeGuard& guard) {
  ConjugacyReport rep;
  const int lw = phi.ell1 + psi.ell1;
  const int lh = phi.ell2 + psi.ell2;
  long checked = 0;
  try {
    for (int w = 1; w <= max_w; ++w) {
      for (int h = 1; h <= max_h; ++h) {
        std::vector<RectBlock> xb = enumerate_blocks(x, w, h, guard);
        std::vector<RectBlock> yb = enumerate_blocks(y, w, h, guard);
        for (const auto& b : xb) {
          ++checked;
          if (w > phi.ell1 && h > phi.ell2) {
            RectBlock img = apply_block_map(phi, b);
            std::string why;
            if (!block_valid(y, img, &why)) {
              rep.detail = "phi image of " + describe(b) + " is not admissible: " + why;
              return rep;
            }
            if (w > lw && h > lh) {
              RectBlock back = apply_block_map(psi, img);
              if (!(back == crop_lower_left(b, w - lw, h - lh))) {
                rep.detail = "psi(phi(.)) differs from the crop of " + describe(b);
                return rep;
              }
            }
          }
        }
        for (const auto& b : yb) {
          ++checked;
          if (w > psi.ell1 && h > psi.ell2) {
            RectBlock img = apply_block_map(psi, b);
            std::string why;
            if (!block_valid(x, img, &why)) {
              rep.detail = "psi image of " + describe(b) + " is not admissible: " + why;
              return rep;
            }
            if (w > lw && h > lh) {
              RectBlock back = apply_block_map(phi, img);
              if (!(back == crop_lower_left(b, w - lw, h - lh))) {
                rep.detail = "phi(psi(.)) differs from the crop of " + describe(b);
                return rep;
              }
            }
          }
        }
      }
    }
  } catch (const Error& e) {
    rep.detail = std::string("error during verification: ") + e.what();
    return rep;
  }
  rep.ok = true;
  rep.detail = "verified " + std::to_string(checked) + " blocks up to " + std::to_string(max_w) +
               "x" + std::to_string(max_h);
  return rep;
}

}  // namespace textiles

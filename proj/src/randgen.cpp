#include "textiles/randgen.hpp"

#include <algorithm>

namespace textiles {

namespace {

// std::mt19937_64 output is pinned by the standard; library distributions
// are not, so indices are drawn by modulo.
std::size_t draw(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

using Matrix = std::vector<std::vector<int>>;

Matrix random_cover_matrix(std::mt19937_64& rng, int n, int extra) {
  Matrix m(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r) m[r][draw(rng, n)] += 1;
  for (int c = 0; c < n; ++c) {
    bool hit = false;
    for (int r = 0; r < n; ++r) hit = hit || m[r][c] > 0;
    if (!hit) m[draw(rng, n)][c] += 1;
  }
  int add = static_cast<int>(draw(rng, extra + 1));
  for (int k = 0; k < add; ++k) m[draw(rng, n)][draw(rng, n)] += 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  Matrix out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Matrix identity(int n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool commute(const Matrix& a, const Matrix& b) { return multiply(a, b) == multiply(b, a); }

}  // namespace

TwoGraph random_twograph(std::uint64_t seed, const RandomTwoGraphOptions& opts) {
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(draw(rng, opts.max_vertices));

  // M[x][y] counts edges with range x and source y; the two color matrices
  // must commute for a complete square set to exist.
  Matrix m1 = random_cover_matrix(rng, n, opts.extra_edges);
  Matrix m2;
  switch (draw(rng, 4)) {
    case 0:
      m2 = identity(n);
      break;
    case 1:
      m2 = m1;
      break;
    case 2: {
      m2 = m1;
      for (int i = 0; i < n; ++i) m2[i][i] += 1;
      break;
    }
    default: {
      // random permutation, kept only when it commutes
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[draw(rng, i + 1)]);
      m2 = Matrix(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) m2[perm[i]][i] = 1;
      if (!commute(m1, m2)) m2 = identity(n);
      break;
    }
  }

  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("z" + std::to_string(i));

  TwoColoredGraph sk;
  std::vector<Edge> edges;
  int ae = 0, be = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int k = 0; k < m1[x][y]; ++k) {
        std::string id = "a" + std::to_string(ae++);
        edges.push_back({id, vertices[y], vertices[x]});
        sk.degree[id] = 1;
      }
      for (int k = 0; k < m2[x][y]; ++k) {
        std::string id = "b" + std::to_string(be++);
        edges.push_back({id, vertices[y], vertices[x]});
        sk.degree[id] = 2;
      }
    }
  }
  sk.graph = DirectedGraph(vertices, std::move(edges));

  // Corner-pair bijections: match left-top pairs to bottom-right pairs with
  // the same range and source corners.
  std::vector<CommutingSquare> squares;
  int sq = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::vector<std::pair<std::string, std::string>> lt, br;
      for (const auto& w : sk.edges_of_color(2)) {
        if (sk.graph.range(w) != vertices[x]) continue;
        for (const auto& e : sk.edges_of_color(1))
          if (sk.graph.source(w) == sk.graph.range(e) && sk.graph.source(e) == vertices[y])
            lt.push_back({w, e});
      }
      for (const auto& e : sk.edges_of_color(1)) {
        if (sk.graph.range(e) != vertices[x]) continue;
        for (const auto& w : sk.edges_of_color(2))
          if (sk.graph.source(e) == sk.graph.range(w) && sk.graph.source(w) == vertices[y])
            br.push_back({e, w});
      }
      if (lt.size() != br.size())
        throw Error("internal: corner pair counts differ; matrices do not commute");
      for (std::size_t i = br.size(); i > 1; --i) std::swap(br[i - 1], br[draw(rng, i)]);
      for (std::size_t i = 0; i < lt.size(); ++i)
        squares.push_back({"q" + std::to_string(sq++), lt[i].second, lt[i].first, br[i].first,
                           br[i].second});
    }
  }
  return validate_twograph(std::move(sk), std::move(squares));
}

TextileSystem random_lr_textile(std::uint64_t seed, const RandomTwoGraphOptions& opts) {
  return twograph_to_textile(random_twograph(seed, opts));
}

std::optional<GraphInsplitPartition> random_nontrivial_partition(const DirectedGraph& g,
                                                                 std::mt19937_64& rng) {
  std::vector<std::string> splittable;
  for (const auto& v : g.vertices())
    if (g.into(v).size() >= 2) splittable.push_back(v);
  if (splittable.empty()) return std::nullopt;

  GraphInsplitPartition p = trivial_partition(g);
  const std::string& v = splittable[draw(rng, splittable.size())];
  const auto& in = g.into(v);
  for (;;) {
    std::set<std::string> first, second;
    for (const auto& e : in) (draw(rng, 2) ? first : second).insert(e);
    if (!first.empty() && !second.empty()) {
      p.classes[v] = {std::move(first), std::move(second)};
      return p;
    }
  }
}

}  // namespace textiles

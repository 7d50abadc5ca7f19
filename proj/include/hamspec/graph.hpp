#ifndef HAMSPEC_GRAPH_HPP
#define HAMSPEC_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hamspec {

using Vertex = std::size_t;
using Row = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph stored as adjacency bitset rows.
///
/// Values are immutable once built; every constructor and transformation
/// below returns a fresh Graph.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : rows_(n, Row(n)) {}

  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v, true);
    return g;
  }

  std::size_t order() const noexcept { return rows_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  const Row& neighbors(Vertex v) const { return rows_[v]; }

  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (auto v = rows_[u].find_next(u); v != Row::npos; v = rows_[u].find_next(v))
        out.emplace_back(u, v);
    return out;
  }

  /// Copy with edge uv toggled to `present`.
  Graph with_edge(Vertex u, Vertex v, bool present = true) const {
    Graph g = *this;
    g.set_edge(u, v, present);
    return g;
  }

  Graph without_edge(Vertex u, Vertex v) const { return with_edge(u, v, false); }

  /// Neighborhood as a bit mask; only valid for order() <= 64.
  std::uint64_t mask(Vertex v) const {
    std::uint64_t m = 0;
    for (auto w = rows_[v].find_first(); w != Row::npos; w = rows_[v].find_next(w))
      m |= std::uint64_t{1} << w;
    return m;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

  // Mutation is private: graphs are assembled by the free constructors in
  // this header and in families.hpp, which are friends.
private:
  void set_edge(Vertex u, Vertex v, bool present) {
    if (u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_[u][v] = present;
    rows_[v][u] = present;
  }

  std::vector<Row> rows_;

  friend Graph make_complete(std::size_t);
  friend Graph join(const Graph&, const Graph&);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph kelmans(const Graph&, Vertex, Vertex);
  friend Graph induced(const Graph&, const std::vector<Vertex>&);
};

inline Graph make_complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (auto& r : g.rows_) r.set();
  for (Vertex v = 0; v < n; ++v) g.rows_[v].reset(v);
  return g;
}

/// n copies of K_1.
inline Graph make_empty(std::size_t n) { return Graph(n); }

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph make_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph make_star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

/// G1 + G2: vertices of g2 are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order(), n = n1 + g2.order();
  Graph g(n);
  for (Vertex u = 0; u < n1; ++u)
    for (auto v = g1.rows_[u].find_first(); v != Row::npos; v = g1.rows_[u].find_next(v))
      g.rows_[u].set(v);
  for (Vertex u = 0; u < g2.order(); ++u)
    for (auto v = g2.rows_[u].find_first(); v != Row::npos; v = g2.rows_[u].find_next(v))
      g.rows_[n1 + u].set(n1 + v);
  return g;
}

/// G1 v G2: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0) throw std::invalid_argument("join of an empty graph");
  Graph g = disjoint_union(g1, g2);
  const std::size_t n1 = g1.order();
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = n1; v < g.order(); ++v) {
      g.rows_[u].set(v);
      g.rows_[v].set(u);
    }
  return g;
}

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of the null graph");
  std::size_t d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// Kelmans operation: every neighbor x of v outside N(u) and distinct from u
/// is moved from v to u (edge vx removed, edge ux added).
inline Graph kelmans(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("kelmans needs distinct vertices");
  Graph out = g;
  Row moved = g.rows_[v] - g.rows_[u];
  moved.reset(u);
  for (auto x = moved.find_first(); x != Row::npos; x = moved.find_next(x)) {
    out.rows_[v].reset(x);
    out.rows_[x].reset(v);
    out.rows_[u].set(x);
    out.rows_[x].set(u);
  }
  return out;
}

/// Subgraph induced on `keep`, relabelled 0..keep.size()-1 in the given order.
inline Graph induced(const Graph& g, const std::vector<Vertex>& keep) {
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) {
        h.rows_[i].set(j);
        h.rows_[j].set(i);
      }
  return h;
}

/// Connected components of g restricted to the vertices in `alive`.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const Row& alive) {
  std::vector<std::vector<Vertex>> out;
  Row unseen = alive;
  while (unseen.any()) {
    const Vertex s = unseen.find_first();
    std::vector<Vertex> comp{s}, stack{s};
    unseen.reset(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      Row next = g.neighbors(v) & unseen;
      for (auto w = next.find_first(); w != Row::npos; w = next.find_next(w)) {
        unseen.reset(w);
        comp.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  Row all(g.order());
  all.set();
  return components(g, all);
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

/// Two-sided graph on 2n vertices with sides A = [0, n) and B = [n, 2n).
class BipartiteGraph {
public:
  enum class Side { A, B };

  BipartiteGraph() = default;

  /// Validates that every edge of `core` crosses between [0, half) and [half, 2*half).
  explicit BipartiteGraph(Graph core) : core_(std::move(core)) {
    if (core_.order() % 2 != 0) throw std::invalid_argument("balanced bipartite graph needs even order");
    const std::size_t h = half();
    for (Vertex u = 0; u < core_.order(); ++u)
      for (auto v = core_.neighbors(u).find_first(); v != Row::npos;
           v = core_.neighbors(u).find_next(v))
        if ((u < h) == (v < h)) throw std::invalid_argument("edge inside one side of a bipartite graph");
  }

  /// n, the size of each side.
  std::size_t half() const noexcept { return core_.order() / 2; }
  const Graph& core() const noexcept { return core_; }
  Side side(Vertex v) const { return v < half() ? Side::A : Side::B; }

  std::size_t edge_count() const { return core_.edge_count(); }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) { return a.core_ == b.core_; }

private:
  Graph core_;
};

inline BipartiteGraph make_complete_bipartite(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = n; b < 2 * n; ++b) e.emplace_back(a, b);
  return BipartiteGraph(Graph::from_edges(2 * n, e));
}

inline std::size_t min_degree(const BipartiteGraph& g) { return min_degree(g.core()); }

}  // namespace hamspec

#endif  // HAMSPEC_GRAPH_HPP

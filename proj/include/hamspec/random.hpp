#ifndef HAMSPEC_RANDOM_HPP
#define HAMSPEC_RANDOM_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"

namespace hamspec {

using Rng = std::mt19937_64;

namespace detail {

// Adds random edges at vertices of degree < k until the minimum degree is k.
// `allowed(u, v)` restricts which pairs may be joined.
template <typename Allowed>
Graph repair_min_degree(Graph g, std::size_t k, Rng& rng, Allowed&& allowed) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    while (g.degree(v) < k) {
      std::vector<Vertex> cand;
      for (Vertex w = 0; w < n; ++w)
        if (w != v && !g.adjacent(v, w) && allowed(v, w)) cand.push_back(w);
      if (cand.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      g = g.with_edge(v, cand[pick(rng)]);
    }
  }
  return g;
}

}  // namespace detail

/// G(n, p) followed by degree repair, so the result has minimum degree >= k
/// (for k <= n - 1).
inline Graph random_graph_min_degree(Rng& rng, std::size_t n, std::size_t k, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return detail::repair_min_degree(Graph::from_edges(n, e), k, rng, [](Vertex, Vertex) { return true; });
}

/// Balanced bipartite graph with sides [0,n) and [n,2n): k random perfect
/// matchings, Bernoulli(p) extra cross edges, then degree repair to >= k.
inline BipartiteGraph random_bipartite_min_degree(Rng& rng, std::size_t n, std::size_t k, double p) {
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<Vertex> perm(n);
  for (std::size_t r = 0; r < k; ++r) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex a = 0; a < n; ++a) e.emplace_back(a, n + perm[a]);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = n; b < 2 * n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  Graph g = detail::repair_min_degree(Graph::from_edges(2 * n, e), k, rng,
                                      [n](Vertex u, Vertex v) { return (u < n) != (v < n); });
  return BipartiteGraph(std::move(g));
}

/// Near-complete balanced bipartite graphs around the spectral threshold
/// sqrt(n(n-1)): either B(n,1) with a few cross edges toggled, or K_{n,n}
/// with up to n + 2 edges removed. Minimum degree is repaired to >= 1.
inline BipartiteGraph random_dense_bipartite(Rng& rng, std::size_t n) {
  std::bernoulli_distribution half(0.5);
  Graph g;
  if (half(rng) && n >= 3) {
    g = family_graph({Family::B, n, 1}).graph;
    std::uniform_int_distribution<std::size_t> toggles(0, 2), side(0, n - 1);
    const std::size_t t = toggles(rng);
    for (std::size_t i = 0; i < t; ++i) {
      const Vertex a = side(rng), b = n + side(rng);
      g = g.with_edge(a, b, !g.adjacent(a, b));
    }
  } else {
    g = make_complete_bipartite(n).core();
    std::uniform_int_distribution<std::size_t> removals(0, n + 2), side(0, n - 1);
    const std::size_t m = removals(rng);
    for (std::size_t i = 0; i < m; ++i) g = g.without_edge(side(rng), n + side(rng));
  }
  // Random relabelling within each side keeps the canonical layout from leaking into tests.
  std::vector<Vertex> pa(n), pb(n);
  std::iota(pa.begin(), pa.end(), Vertex{0});
  std::iota(pb.begin(), pb.end(), Vertex{0});
  std::shuffle(pa.begin(), pa.end(), rng);
  std::shuffle(pb.begin(), pb.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [u, v] : g.edges()) {
    const Vertex a = std::min(u, v), b = std::max(u, v);
    e.emplace_back(pa[a], n + pb[b - n]);
  }
  g = detail::repair_min_degree(Graph::from_edges(2 * n, e), 1, rng,
                                [n](Vertex u, Vertex v) { return (u < n) != (v < n); });
  return BipartiteGraph(std::move(g));
}

}  // namespace hamspec

#endif  // HAMSPEC_RANDOM_HPP

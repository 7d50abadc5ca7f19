// Reference implementations used only by the tests. None of them call into
// the library beyond Graph construction and adjacency queries.
#ifndef HAMSPEC_TESTS_ORACLES_HPP
#define HAMSPEC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hamspec/graph.hpp"

namespace oracle {

using Edge = std::pair<std::size_t, std::size_t>;
using EdgeSet = std::set<Edge>;

inline void add(EdgeSet& e, std::size_t a, std::size_t b) {
  if (a != b) e.insert(std::minmax(a, b));
}

// Families straight from their join/union definitions, laid out independently
// of the library builders.

// K_k join (K_{n-2k} + k K_1): clique part first, then the k universal
// vertices, then the k pendant-like vertices.
inline EdgeSet N(std::size_t n, std::size_t k) {
  EdgeSet e;
  const std::size_t c = n - 2 * k;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b) add(e, a, b);
  for (std::size_t y = c; y < c + k; ++y)
    for (std::size_t v = 0; v < n; ++v) add(e, y, v);
  return e;
}

// K_1 join (K_k + K_{n-k-1}): hub is the last vertex.
inline EdgeSet L(std::size_t n, std::size_t k) {
  EdgeSet e;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) add(e, a, b);
  for (std::size_t a = k; a < n - 1; ++a)
    for (std::size_t b = a + 1; b < n - 1; ++b) add(e, a, b);
  for (std::size_t v = 0; v + 1 < n; ++v) add(e, v, n - 1);
  return e;
}

// K_{n,n} minus K_{k,n-k}; sides [0,n) and [n,2n). The last k vertices of
// side A miss the first n-k vertices of side B.
inline EdgeSet B(std::size_t n, std::size_t k) {
  EdgeSet e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(a >= n - k && b < n - k)) add(e, a, n + b);
  return e;
}

inline hamspec::Graph to_graph(std::size_t n, const EdgeSet& e) {
  return hamspec::Graph::from_edges(n, std::vector<Edge>(e.begin(), e.end()));
}

inline EdgeSet edge_set(const hamspec::Graph& g) {
  EdgeSet e;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) e.insert({u, v});
  return e;
}

inline std::size_t count_edges(const hamspec::Graph& g) { return edge_set(g).size(); }

// Union-find component count of G - removed.
inline std::size_t components(const hamspec::Graph& g, const std::vector<std::size_t>& removed = {}) {
  const std::size_t n = g.order();
  std::vector<bool> gone(n, false);
  for (auto v : removed) gone[v] = true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!gone[u] && !gone[v] && g.adjacent(u, v)) parent[find(u)] = find(v);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v)
    if (!gone[v]) roots.insert(find(v));
  return roots.size();
}

// Hamiltonicity by trying every cyclic order with vertex 0 fixed. n <= 11.
inline bool hamiltonian(const hamspec::Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<std::size_t> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  do {
    if (p.front() > p.back()) continue;  // each cycle once per direction
    bool ok = g.adjacent(0, p.front()) && g.adjacent(p.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < p.size(); ++i) ok = g.adjacent(p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Cyclic Jacobi rotations on the adjacency matrix; eigenvalues descending.
inline std::vector<double> eigenvalues(const hamspec::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a[r][p], arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a[p][r], aqr = a[q][r];
          a[p][r] = c * apr - s * aqr;
          a[q][r] = s * apr + c * aqr;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

inline double lambda1(const hamspec::Graph& g) { return eigenvalues(g).front(); }

// Closed forms written out term by term.
inline std::int64_t f_at(std::int64_t n, std::int64_t k, std::int64_t x) {
  const std::int64_t a = n - 2 * k - 1;
  return ((x - a) * (x + 2) + 2) * (x * x + x - k * k) - k * x * (x + 1) * (x + 2);
}

inline std::int64_t g_at(std::int64_t k, std::int64_t n) {
  return 2 * n * n - (k * k * k + 4 * k + 2) * n + k * k * k * k - k * k * k + 2 * k;
}

}  // namespace oracle

#endif  // HAMSPEC_TESTS_ORACLES_HPP

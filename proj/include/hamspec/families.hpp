#ifndef HAMSPEC_FAMILIES_HPP
#define HAMSPEC_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

/// The three extremal non-Hamiltonian families.
///
///   L(n,k) = K_1 v (K_k + K_{n-k-1})        1 <= k <= (n-1)/2
///   N(n,k) = K_k v (K_{n-2k} + k K_1)       1 <= k <= (n-1)/2
///   B(n,k) = K_{n,n} minus a K_{k,n-k}      n >= 2k+1, order 2n
enum class Family { L, N, B };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::N: return "N";
    case Family::B: return "B";
  }
  return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
  if (s == "L") return Family::L;
  if (s == "N") return Family::N;
  if (s == "B") return Family::B;
  return std::nullopt;
}

struct FamilyParams {
  Family family;
  std::size_t n;
  std::size_t k;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline bool is_valid(const FamilyParams& p) {
  if (p.k < 1) return false;
  return p.n >= 2 * p.k + 1;
}

inline void require_valid(const FamilyParams& p) {
  if (!is_valid(p))
    throw std::invalid_argument(std::string("invalid parameters for family ") + to_string(p.family) +
                                ": n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                                " (need k >= 1 and n >= 2k+1)");
}

inline std::size_t choose2(std::size_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; }

/// Closed-form edge counts.
inline std::size_t family_edge_count(const FamilyParams& p) {
  const std::size_t n = p.n, k = p.k;
  switch (p.family) {
    case Family::L: return choose2(k) + choose2(n - k - 1) + (n - 1);
    case Family::N: return choose2(k) + choose2(n - 2 * k) + k * (n - k);
    case Family::B: return n * n - k * (n - k);
  }
  return 0;
}

/// Vertex partition with named classes. class_of[v] indexes into labels.
struct Partition {
  std::vector<std::string> labels;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return labels.size(); }

  std::vector<Vertex> members(std::size_t c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < class_of.size(); ++v)
      if (class_of[v] == c) out.push_back(v);
    return out;
  }

  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> s(labels.size(), 0);
    for (auto c : class_of) ++s[c];
    return s;
  }

  /// Drops classes with no members and renumbers the rest in order.
  Partition compacted() const {
    const auto sizes = class_sizes();
    std::vector<std::size_t> remap(labels.size());
    Partition out;
    for (std::size_t c = 0; c < labels.size(); ++c)
      if (sizes[c] > 0) {
        remap[c] = out.labels.size();
        out.labels.push_back(labels[c]);
      }
    out.class_of.reserve(class_of.size());
    for (auto c : class_of) out.class_of.push_back(remap[c]);
    return out;
  }
};

/// Which single edge (by class pair) is removed from a family graph.
///
/// For L and N only a Z-Z edge keeps the minimum degree at k. For B the
/// classes follow W = degree-k vertices of side A, X = N(W),
/// Y = N(X) - W (rest of side A) and Z = N(Y) - X (rest of side B); the
/// missing K_{k,n-k} is W x Z.
enum class DeletedEdge { none, ZZ, XY, YZ };

inline const char* to_string(DeletedEdge d) {
  switch (d) {
    case DeletedEdge::none: return "none";
    case DeletedEdge::ZZ: return "Z-Z";
    case DeletedEdge::XY: return "X-Y";
    case DeletedEdge::YZ: return "Y-Z";
  }
  return "?";
}

inline bool allowed(Family f, DeletedEdge d) {
  if (d == DeletedEdge::none) return true;
  if (f == Family::B) return d == DeletedEdge::XY || d == DeletedEdge::YZ;
  return d == DeletedEdge::ZZ;
}

/// A family member with its canonical class layout.
///
/// L: X = [0,k), w = k, Z = [k+1,n).
/// N: X = [0,k) (degree k), Y = [k,2k) (universal), Z = [2k,n).
/// B: W = [0,k), Y = [k,n) on side A; X = [n,n+k), Z = [n+k,2n) on side B.
///
/// Perturbed members split the endpoint classes: u and v become singleton
/// (or, for N and L, a shared two-vertex) classes appended as described in
/// family_graph().
struct FamilyGraph {
  FamilyParams params;
  DeletedEdge deleted = DeletedEdge::none;
  Graph graph;
  Partition classes;
  Vertex u = 0, v = 0;  // endpoints of the deleted edge, if any

  BipartiteGraph bipartite() const {
    if (params.family != Family::B) throw std::logic_error("only B family graphs are bipartite");
    return BipartiteGraph(graph);
  }
};

namespace detail {

inline void connect_all(std::vector<std::pair<Vertex, Vertex>>& e, Vertex a0, Vertex a1,
                        Vertex b0, Vertex b1) {
  for (Vertex a = a0; a < a1; ++a)
    for (Vertex b = b0; b < b1; ++b)
      if (a != b && !(b0 == a0 && b < a)) e.emplace_back(a, b);
}

inline void clique(std::vector<std::pair<Vertex, Vertex>>& e, Vertex a0, Vertex a1) {
  connect_all(e, a0, a1, a0, a1);
}

}  // namespace detail

/// Unperturbed or single-edge-deleted family member with its quotient classes.
///
/// Class orders (these match quotient_of_family row orders):
///   N none: X, Y, Z        N Z-Z: X, Y, Z', T   (T = {u, v})
///   L none: X, w, Z        L Z-Z: X, w, Z', T
///   B none: W, X, Y, Z     B Y-Z: W, X, Y', Z', s, t   (s = {u in Y}, t = {v in Z})
///                          B X-Y: W, X', u, Y', v, Z   (u in X, v in Y)
/// Empty classes (e.g. Z' when |Z| = 2) are dropped.
inline FamilyGraph family_graph(const FamilyParams& p, DeletedEdge del = DeletedEdge::none) {
  require_valid(p);
  if (!allowed(p.family, del))
    throw std::invalid_argument(std::string("edge class ") + to_string(del) + " not allowed for family " +
                                to_string(p.family));
  const std::size_t n = p.n, k = p.k;
  FamilyGraph fg;
  fg.params = p;
  fg.deleted = del;
  std::vector<std::pair<Vertex, Vertex>> e;
  Partition& cls = fg.classes;

  switch (p.family) {
    case Family::N: {
      detail::connect_all(e, 0, k, k, 2 * k);  // X-Y
      detail::clique(e, k, 2 * k);             // Y
      detail::connect_all(e, k, 2 * k, 2 * k, n);  // Y-Z
      detail::clique(e, 2 * k, n);                 // Z
      fg.graph = Graph::from_edges(n, e);
      cls.labels = {"X", "Y", "Z"};
      cls.class_of.resize(n);
      for (Vertex v = 0; v < n; ++v) cls.class_of[v] = v < k ? 0 : v < 2 * k ? 1 : 2;
      if (del == DeletedEdge::ZZ) {
        if (n - 2 * k < 2) throw std::invalid_argument("Z has fewer than two vertices");
        fg.u = 2 * k;
        fg.v = 2 * k + 1;
      }
      break;
    }
    case Family::L: {
      detail::clique(e, 0, k + 1);  // X + w
      detail::clique(e, k, n);      // w + Z
      fg.graph = Graph::from_edges(n, e);
      cls.labels = {"X", "w", "Z"};
      cls.class_of.resize(n);
      for (Vertex v = 0; v < n; ++v) cls.class_of[v] = v < k ? 0 : v == k ? 1 : 2;
      if (del == DeletedEdge::ZZ) {
        if (n - k - 1 < 2) throw std::invalid_argument("Z has fewer than two vertices");
        fg.u = k + 1;
        fg.v = k + 2;
      }
      break;
    }
    case Family::B: {
      detail::connect_all(e, 0, k, n, n + k);      // W-X
      detail::connect_all(e, k, n, n, 2 * n);      // Y-(X u Z)
      fg.graph = Graph::from_edges(2 * n, e);
      cls.labels = {"W", "X", "Y", "Z"};
      cls.class_of.resize(2 * n);
      for (Vertex v = 0; v < 2 * n; ++v)
        cls.class_of[v] = v < k ? 0 : v < n ? 2 : v < n + k ? 1 : 3;
      if (del == DeletedEdge::YZ) {
        fg.u = k;      // first Y
        fg.v = n + k;  // first Z
      } else if (del == DeletedEdge::XY) {
        fg.u = n;  // first X
        fg.v = k;  // first Y
      }
      break;
    }
  }

  if (del == DeletedEdge::none) return fg;

  fg.graph = fg.graph.without_edge(fg.u, fg.v);
  Partition refined;
  if (p.family == Family::B && del == DeletedEdge::YZ) {
    refined.labels = {"W", "X", "Y'", "Z'", "s", "t"};
    refined.class_of = cls.class_of;  // W=0, X=1, Y=2, Z=3 carry over
    refined.class_of[fg.u] = 4;
    refined.class_of[fg.v] = 5;
  } else if (p.family == Family::B) {
    refined.labels = {"W", "X'", "u", "Y'", "v", "Z"};
    refined.class_of.resize(2 * n);
    for (Vertex x = 0; x < 2 * n; ++x) {
      static constexpr std::size_t map[] = {0, 1, 3, 5};
      refined.class_of[x] = map[cls.class_of[x]];
    }
    refined.class_of[fg.u] = 2;
    refined.class_of[fg.v] = 4;
  } else {
    refined.labels = cls.labels;
    refined.labels[2] = "Z'";
    refined.labels.push_back("T");
    refined.class_of = cls.class_of;
    refined.class_of[fg.u] = 3;
    refined.class_of[fg.v] = 3;
  }
  fg.classes = refined.compacted();
  return fg;
}

inline Graph make_L(std::size_t n, std::size_t k) { return family_graph({Family::L, n, k}).graph; }
inline Graph make_N(std::size_t n, std::size_t k) { return family_graph({Family::N, n, k}).graph; }
inline BipartiteGraph make_B(std::size_t n, std::size_t k) {
  return family_graph({Family::B, n, k}).bipartite();
}

/// The B classes W, X, Y, Z of the canonical construction as vertex lists.
struct BClasses {
  std::vector<Vertex> W, X, Y, Z;
};

inline BClasses b_classes(std::size_t n, std::size_t k) {
  require_valid({Family::B, n, k});
  BClasses c;
  for (Vertex v = 0; v < k; ++v) c.W.push_back(v);
  for (Vertex v = k; v < n; ++v) c.Y.push_back(v);
  for (Vertex v = n; v < n + k; ++v) c.X.push_back(v);
  for (Vertex v = n + k; v < 2 * n; ++v) c.Z.push_back(v);
  return c;
}

}  // namespace hamspec

#endif  // HAMSPEC_FAMILIES_HPP

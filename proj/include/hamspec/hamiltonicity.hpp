#ifndef HAMSPEC_HAMILTONICITY_HPP
#define HAMSPEC_HAMILTONICITY_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

enum class HamOutcome { hamiltonian, non_hamiltonian, unknown };

inline const char* to_string(HamOutcome o) {
  switch (o) {
    case HamOutcome::hamiltonian: return "hamiltonian";
    case HamOutcome::non_hamiltonian: return "non-hamiltonian";
    case HamOutcome::unknown: return "unknown";
  }
  return "?";
}

struct HamWitness {
  enum class Kind { none, cycle, cut, exhausted };
  Kind kind = Kind::none;
  std::vector<Vertex> cycle;  // kind == cycle: every vertex once, closing edge implied
  std::vector<Vertex> cut;    // kind == cut: removing these leaves `components` > |cut| pieces
  std::size_t components = 0;
};

inline const char* to_string(HamWitness::Kind k) {
  switch (k) {
    case HamWitness::Kind::none: return "none";
    case HamWitness::Kind::cycle: return "cycle";
    case HamWitness::Kind::cut: return "cut";
    case HamWitness::Kind::exhausted: return "exhausted";
  }
  return "?";
}

struct HamResult {
  HamOutcome outcome = HamOutcome::unknown;
  HamWitness witness;
  std::uint64_t work = 0;

  bool hamiltonian() const { return outcome == HamOutcome::hamiltonian; }
};

enum class HamMethod { automatic, dp, backtrack };

inline constexpr std::uint64_t default_ham_budget = 2'000'000'000ull;
inline constexpr std::size_t dp_limit = 22;
inline constexpr std::size_t bipartite_dp_limit = 24;
inline constexpr std::size_t backtrack_limit = 64;

inline bool verify_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t n = g.order();
  if (cycle.size() != n || n < 3) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

inline std::size_t components_without(const Graph& g, const std::vector<Vertex>& removed) {
  Row alive(g.order());
  alive.set();
  for (Vertex v : removed) alive.reset(v);
  return components(g, alive).size();
}

struct CutWitness {
  std::vector<Vertex> set;
  std::size_t components;
};

namespace detail {

inline std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace detail

/// Looks for S with c(G - S) > |S| (S empty: G disconnected), which rules
/// out a Hamiltonian cycle.
///
/// All sets of size <= max_size are tried smallest first, in lexicographic
/// order, while the total stays within `subset_cap`; then every open
/// neighborhood N(v) is tried (this catches the extremal families, whose
/// low-degree vertices are cut off by their neighborhood).
inline std::optional<CutWitness> find_cut_witness(const Graph& g, std::size_t max_size,
                                                  std::uint64_t subset_cap = 200'000) {
  const std::size_t n = g.order();
  auto test = [&](const std::vector<Vertex>& s) -> std::optional<CutWitness> {
    const std::size_t c = components_without(g, s);
    if (c > std::max<std::size_t>(s.size(), 1)) return CutWitness{s, c};
    return std::nullopt;
  };
  if (auto w = test({})) return w;

  std::uint64_t spent = 0;
  for (std::size_t size = 1; size <= std::min(max_size, n > 0 ? n - 1 : 0); ++size) {
    const auto count = detail::binomial_capped(n, size, subset_cap);
    if (spent + count > subset_cap) break;
    spent += count;
    std::vector<Vertex> s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = i;
    while (true) {
      if (auto w = test(s)) return w;
      std::size_t i = size;
      while (i > 0 && s[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::size_t j = i; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }

  std::optional<CutWitness> best;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> s;
    const Row& r = g.neighbors(v);
    for (auto w = r.find_first(); w != Row::npos; w = r.find_next(w)) s.push_back(w);
    if (s.size() + 1 >= n) continue;
    if (best && s.size() >= best->set.size()) continue;
    if (auto w = test(s)) best = w;
  }
  return best;
}

namespace detail {

// Held-Karp style reachability: ends[mask] holds the vertices at which a path
// from vertex 0 covering exactly `mask` (over vertices 1..n-1) can stop.
inline HamResult ham_dp(const Graph& g, std::uint64_t budget) {
  const std::size_t n = g.order();
  if (n > 25) throw std::invalid_argument("bitmask DP is limited to 25 vertices");
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.mask(v));
  // Bit i of a mask stands for vertex i + 1.
  const std::size_t m = n - 1;
  const std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1u);
  std::vector<std::uint32_t> ends(std::size_t{1} << m, 0);
  auto shifted = [&](Vertex v) { return adj[v] >> 1; };
  for (std::size_t i = 0; i < m; ++i)
    if (adj[0] & (1u << (i + 1))) ends[std::size_t{1} << i] |= 1u << i;

  HamResult res;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      const int i = std::countr_zero(e);
      e &= e - 1;
      if (++res.work > budget) {
        res.outcome = HamOutcome::unknown;
        return res;
      }
      std::uint32_t ext = shifted(static_cast<Vertex>(i + 1)) & ~mask & full;
      while (ext) {
        const int j = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << j)] |= 1u << j;
      }
    }
    if (mask == full) break;
  }

  const std::uint32_t closing = ends[full] & shifted(0);
  if (!closing) {
    res.outcome = HamOutcome::non_hamiltonian;
    res.witness.kind = HamWitness::Kind::exhausted;
    return res;
  }
  // Walk back choosing the lowest-index vertex at every step.
  std::vector<Vertex> rev;
  std::uint32_t mask = full;
  int cur = std::countr_zero(closing);
  while (true) {
    rev.push_back(static_cast<Vertex>(cur + 1));
    const std::uint32_t prev_mask = mask & ~(1u << cur);
    if (!prev_mask) break;
    const std::uint32_t cand = ends[prev_mask] & shifted(static_cast<Vertex>(cur + 1));
    cur = std::countr_zero(cand);
    mask = prev_mask;
  }
  res.outcome = HamOutcome::hamiltonian;
  res.witness.kind = HamWitness::Kind::cycle;
  res.witness.cycle.push_back(0);
  res.witness.cycle.insert(res.witness.cycle.end(), rev.rbegin(), rev.rend());
  return res;
}

class Backtracker {
public:
  Backtracker(const Graph& g, std::uint64_t budget) : n_(g.order()), budget_(budget), adj_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.mask(v);
    all_ = n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  }

  HamResult run() {
    path_.assign(1, 0);
    HamResult res;
    const int found = extend(0, all_ & ~std::uint64_t{1});
    res.work = work_;
    if (found > 0) {
      res.outcome = HamOutcome::hamiltonian;
      res.witness.kind = HamWitness::Kind::cycle;
      res.witness.cycle = path_;
    } else if (found == 0) {
      res.outcome = HamOutcome::non_hamiltonian;
      res.witness.kind = HamWitness::Kind::exhausted;
    }
    return res;
  }

private:
  // 1 found, 0 exhausted, -1 out of budget.
  int extend(Vertex end, std::uint64_t unvisited) {
    if (++work_ > budget_) return -1;
    if (!unvisited) return (adj_[end] & 1u) ? 1 : 0;
    if (!feasible(end, unvisited)) return 0;
    std::uint64_t next = adj_[end] & unvisited;
    while (next) {
      const auto w = static_cast<Vertex>(std::countr_zero(next));
      next &= next - 1;
      path_.push_back(w);
      const int r = extend(w, unvisited & ~(std::uint64_t{1} << w));
      if (r != 0) return r;
      path_.pop_back();
    }
    return 0;
  }

  bool feasible(Vertex end, std::uint64_t unvisited) const {
    // Every unvisited vertex keeps two usable neighbors, counting the two
    // path endpoints (the current end and vertex 0).
    const std::uint64_t usable = unvisited | (std::uint64_t{1} << end) | 1u;
    for (std::uint64_t r = unvisited; r;) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      if (std::popcount(adj_[static_cast<std::size_t>(v)] & usable) < 2) return false;
    }
    // The unvisited vertices hang together off the current end and touch vertex 0.
    std::uint64_t reached = 0, frontier = adj_[end] & unvisited;
    while (frontier) {
      reached |= frontier;
      std::uint64_t nxt = 0;
      for (std::uint64_t f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        nxt |= adj_[static_cast<std::size_t>(v)];
      }
      frontier = nxt & unvisited & ~reached;
    }
    if (reached != unvisited) return false;
    return (adj_[0] & unvisited) != 0;
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::uint64_t all_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Vertex> path_;
};

inline HamResult ham_backtrack(const Graph& g, std::uint64_t budget) {
  if (g.order() > backtrack_limit) throw std::invalid_argument("backtracking is limited to 64 vertices");
  return Backtracker(g, budget).run();
}

inline HamResult finish(const Graph& g, HamResult r) {
  if (r.outcome == HamOutcome::hamiltonian && !verify_cycle(g, r.witness.cycle))
    throw std::logic_error("internal error: Hamiltonian cycle witness failed verification");
  if (r.witness.kind == HamWitness::Kind::cut &&
      components_without(g, r.witness.cut) != r.witness.components)
    throw std::logic_error("internal error: cut witness failed verification");
  return r;
}

inline std::optional<HamResult> quick_negative(const Graph& g, std::size_t cut_size) {
  // Vertices of degree < 2 give an immediate cut: N(v) separates v.
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) {
      std::vector<Vertex> s;
      const Row& r = g.neighbors(v);
      for (auto w = r.find_first(); w != Row::npos; w = r.find_next(w)) s.push_back(w);
      HamResult res;
      res.outcome = HamOutcome::non_hamiltonian;
      res.witness.kind = HamWitness::Kind::cut;
      res.witness.components = components_without(g, s);
      res.witness.cut = std::move(s);
      return res;
    }
  if (auto w = find_cut_witness(g, cut_size)) {
    HamResult res;
    res.outcome = HamOutcome::non_hamiltonian;
    res.witness.kind = HamWitness::Kind::cut;
    res.witness.cut = std::move(w->set);
    res.witness.components = w->components;
    return res;
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact Hamiltonian-cycle decision.
///
/// A small cut witness is looked for first (sets of size up to
/// max(3, min degree + 1)); then bitmask DP for n <= 22 or pruned
/// backtracking up to 64 vertices (larger graphs give unknown unless a
/// method is forced, which throws). `budget` bounds the exact search; running
/// out yields HamOutcome::unknown rather than a guess.
inline HamResult is_hamiltonian(const Graph& g, std::uint64_t budget = default_ham_budget,
                                HamMethod method = HamMethod::automatic, bool cut_first = true) {
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("Hamiltonicity needs n >= 3");
  if (cut_first)
    if (auto r = detail::quick_negative(g, std::max<std::size_t>(3, min_degree(g) + 1)))
      return detail::finish(g, *r);
  if (method == HamMethod::dp || (method == HamMethod::automatic && n <= dp_limit))
    return detail::finish(g, detail::ham_dp(g, budget));
  if (method == HamMethod::automatic && n > backtrack_limit) return HamResult{};
  return detail::finish(g, detail::ham_backtrack(g, budget));
}

/// Exact decision for balanced bipartite graphs. A Hamiltonian cycle
/// alternates sides, so the DP only ever populates masks whose side counts
/// differ by at most one; this keeps 2n <= 24 tractable.
inline HamResult is_hamiltonian_bipartite(const BipartiteGraph& g, std::uint64_t budget = default_ham_budget,
                                          HamMethod method = HamMethod::automatic, bool cut_first = true) {
  const Graph& c = g.core();
  if (g.half() < 2) throw std::invalid_argument("bipartite Hamiltonicity needs n >= 2 per side");
  if (cut_first)
    if (auto r = detail::quick_negative(c, std::max<std::size_t>(3, min_degree(c) + 1)))
      return detail::finish(c, *r);
  if (method == HamMethod::dp || (method == HamMethod::automatic && c.order() <= bipartite_dp_limit))
    return detail::finish(c, detail::ham_dp(c, budget));
  if (method == HamMethod::automatic && c.order() > backtrack_limit) return HamResult{};
  return detail::finish(c, detail::ham_backtrack(c, budget));
}

}  // namespace hamspec

#endif  // HAMSPEC_HAMILTONICITY_HPP

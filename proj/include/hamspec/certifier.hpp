#ifndef HAMSPEC_CERTIFIER_HPP
#define HAMSPEC_CERTIFIER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/hamiltonicity.hpp"
#include "hamspec/quotient.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec {

// ---------------------------------------------------------------------------
// Family recognition

namespace detail {

inline bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace detail

/// Structural recognition of L(n,k) and N(n,k). L(n,1) and N(n,1) coincide,
/// in which case both are returned.
///
/// N(n,k): exactly k universal vertices Y; G - Y is k isolated vertices plus
/// a clique on n - 2k vertices.
/// L(n,k): exactly one universal vertex w; G - w is two disjoint cliques of
/// sizes k <= n - k - 1.
inline std::vector<FamilyParams> recognize_family(const Graph& g) {
  std::vector<FamilyParams> out;
  const std::size_t n = g.order();
  if (n < 3) return out;
  std::vector<Vertex> universal, rest;
  for (Vertex v = 0; v < n; ++v) (g.degree(v) == n - 1 ? universal : rest).push_back(v);
  const std::size_t k = universal.size();
  if (k == 0 || 2 * k + 1 > n) return out;

  Row alive(n);
  for (Vertex v : rest) alive.set(v);
  const auto comps = components(g, alive);
  for (const auto& c : comps)
    if (!detail::is_clique(g, c)) return out;

  if (k == 1 && comps.size() == 2) {
    const std::size_t a = std::min(comps[0].size(), comps[1].size());
    const std::size_t b = std::max(comps[0].size(), comps[1].size());
    if (a + b == n - 1) out.push_back({Family::L, n, a});
  }
  // k singletons plus one clique of size n - 2k (which is itself a singleton
  // when n = 2k + 1).
  if (comps.size() == k + 1) {
    std::size_t singles = 0, big = 0;
    for (const auto& c : comps) (c.size() == 1 ? singles : big) += 1;
    const bool ok = (n - 2 * k == 1) ? singles == k + 1
                                     : (singles == k && big == 1 &&
                                        std::any_of(comps.begin(), comps.end(),
                                                    [&](const auto& c) { return c.size() == n - 2 * k; }));
    if (ok) out.push_back({Family::N, n, k});
  }
  std::sort(out.begin(), out.end(),
            [](const FamilyParams& a, const FamilyParams& b) { return a.family < b.family; });
  return out;
}

/// Recognizes B(n,k): the missing cross edges form exactly one complete
/// bipartite K_{k, n-k} with n >= 2k + 1.
inline std::vector<FamilyParams> recognize_family(const BipartiteGraph& bg) {
  std::vector<FamilyParams> out;
  const Graph& g = bg.core();
  const std::size_t n = bg.half();
  if (n < 3) return out;
  std::vector<Vertex> deficient_a, deficient_b;
  for (Vertex v = 0; v < 2 * n; ++v)
    if (g.degree(v) < n) (v < n ? deficient_a : deficient_b).push_back(v);
  const std::size_t a = deficient_a.size(), b = deficient_b.size();
  if (a == 0 || b == 0) return out;
  // Every deficient A vertex misses every deficient B vertex and nothing else.
  for (Vertex u : deficient_a) {
    if (g.degree(u) != n - b) return out;
    for (Vertex v : deficient_b)
      if (g.adjacent(u, v)) return out;
  }
  for (Vertex v : deficient_b)
    if (g.degree(v) != n - a) return out;
  const std::size_t k = std::min(a, b);
  if (a + b != n || 2 * k + 1 > n) return out;
  out.push_back({Family::B, n, k});
  return out;
}

inline bool is_family(const Graph& g, Family f, std::size_t k) {
  for (const auto& p : recognize_family(g))
    if (p.family == f && p.k == k) return true;
  return false;
}

inline bool is_family(const BipartiteGraph& g, std::size_t k) {
  for (const auto& p : recognize_family(g))
    if (p.k == k) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Spanning-subgraph containment

namespace detail {

inline void require_min_degree(const Graph& g, std::size_t k) {
  if (min_degree(g) < k)
    throw std::invalid_argument("containment test needs minimum degree >= k (have " +
                                std::to_string(min_degree(g)) + ", k=" + std::to_string(k) + ")");
}

}  // namespace detail

/// Whether g (with minimum degree >= k) is a spanning subgraph of L(n,k) or N(n,k).
///
/// N: some k pairwise non-adjacent vertices share one neighborhood of size k
///    (then each has degree exactly k and |N(S)| <= k).
/// L: some vertex set S of size k and w outside S with N(S) inside S + {w};
///    minimum degree k forces S + {w} to be a clique with S of degree k.
inline bool is_spanning_subgraph_of_family(const Graph& g, Family f, std::size_t k) {
  if (f == Family::B) throw std::invalid_argument("use the BipartiteGraph overload for family B");
  detail::require_min_degree(g, k);
  const std::size_t n = g.order();
  if (k < 1 || n < 2 * k + 1) return false;

  std::vector<Vertex> low;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == k) low.push_back(v);
  if (low.size() < k) return false;

  if (f == Family::N) {
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
    for (Vertex v : low) {
      std::vector<Vertex> nb;
      for (auto w = g.neighbors(v).find_first(); w != Row::npos; w = g.neighbors(v).find_next(w)) nb.push_back(w);
      by_nbhd[nb].push_back(v);
    }
    for (const auto& [nb, group] : by_nbhd) {
      // Vertices sharing a neighborhood are never adjacent to each other
      // (that would put one inside the other's neighborhood).
      if (group.size() >= k) return true;
    }
    return false;
  }

  // L: for each degree-k vertex s the closed neighborhood C = N[s] has k + 1
  // vertices; pick w in C so that the other k all have closed neighborhood C.
  for (Vertex s : low) {
    Row closed = g.neighbors(s);
    closed.set(s);
    std::size_t same = 0;
    std::vector<Vertex> members;
    for (auto v = closed.find_first(); v != Row::npos; v = closed.find_next(v)) members.push_back(v);
    for (Vertex v : members) {
      Row cv = g.neighbors(v);
      cv.set(v);
      if (g.degree(v) == k && cv == closed) ++same;
    }
    // w may be any member; the remaining k must all be "same".
    if (same >= k) return true;
  }
  return false;
}

/// Whether a balanced bipartite g with minimum degree >= k is a spanning
/// subgraph of B(n,k): some k vertices on one side have at most k neighbors
/// between them.
inline bool is_spanning_subgraph_of_family(const BipartiteGraph& bg, std::size_t k) {
  const Graph& g = bg.core();
  detail::require_min_degree(g, k);
  const std::size_t n = bg.half();
  if (k < 1 || n < 2 * k + 1) return false;
  std::map<std::pair<bool, std::vector<Vertex>>, std::size_t> by_nbhd;
  for (Vertex v = 0; v < 2 * n; ++v) {
    if (g.degree(v) != k) continue;
    std::vector<Vertex> nb;
    for (auto w = g.neighbors(v).find_first(); w != Row::npos; w = g.neighbors(v).find_next(w)) nb.push_back(w);
    if (++by_nbhd[{v < n, nb}] >= k) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Certificates

enum class Verdict {
  HamiltonianByTheorem,
  HamiltonianWithCycle,
  ExceptionalExtremal,
  NonHamiltonianWitness,
  Inconclusive
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::HamiltonianByTheorem: return "HamiltonianByTheorem";
    case Verdict::HamiltonianWithCycle: return "HamiltonianWithCycle";
    case Verdict::ExceptionalExtremal: return "ExceptionalExtremal";
    case Verdict::NonHamiltonianWitness: return "NonHamiltonianWitness";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Rule identifiers, strongest first.
namespace rules {
inline constexpr const char* above_n_minus_2 = "spectral-above-n-2";          // lambda > n-2
inline constexpr const char* min_degree_spectral = "spectral-min-degree";     // lambda >= n-k-1
inline constexpr const char* above_N = "spectral-above-N";                    // lambda >= lambda(N(n,k))
inline constexpr const char* edge_count = "edge-count";                       // e > C(n-k-1,2)+(k+1)^2
inline constexpr const char* bip_min_degree = "bipartite-spectral-min-degree";  // lambda >= sqrt(n(n-k))
inline constexpr const char* bip_above_B = "bipartite-spectral-above-B";        // lambda >= lambda(B(n,k))
inline constexpr const char* bip_edge_count = "bipartite-edge-count";           // e > n(n-k-1)+(k+1)^2
inline constexpr const char* exact = "exact-search";
}  // namespace rules

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string rule;
  std::size_t n = 0;  // order for general graphs, side size for bipartite ones
  std::optional<std::size_t> k;
  double lambda = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::optional<double> threshold;
  std::optional<FamilyParams> family;
  HamWitness witness;
  /// Other rules whose hypotheses also held.
  std::vector<std::string> also;
  /// Exact oracle agreement for theorem verdicts: "yes", "skipped" or "".
  std::string validated;

  bool resolved() const { return verdict != Verdict::Inconclusive; }
  bool hamiltonian() const {
    return verdict == Verdict::HamiltonianByTheorem || verdict == Verdict::HamiltonianWithCycle;
  }
};

/// One-line key=value record.
inline std::string to_record(const Certificate& c) {
  std::ostringstream os;
  os.precision(12);
  os << "verdict=" << to_string(c.verdict) << " rule=" << c.rule << " n=" << c.n;
  if (c.k) os << " k=" << *c.k;
  os << " lambda=" << c.lambda << " e=" << c.edges << " delta=" << c.min_degree;
  if (c.threshold) os << " threshold=" << *c.threshold;
  if (c.family) os << " family=" << to_string(c.family->family) << "(" << c.family->n << "," << c.family->k << ")";
  if (c.witness.kind == HamWitness::Kind::cycle) {
    os << " cycle=";
    for (std::size_t i = 0; i < c.witness.cycle.size(); ++i) os << (i ? "-" : "") << c.witness.cycle[i];
  } else if (c.witness.kind == HamWitness::Kind::cut) {
    os << " cut={";
    for (std::size_t i = 0; i < c.witness.cut.size(); ++i) os << (i ? "," : "") << c.witness.cut[i];
    os << "} components=" << c.witness.components;
  } else if (c.witness.kind == HamWitness::Kind::exhausted) {
    os << " witness=exhausted";
  }
  if (!c.also.empty()) {
    os << " also=";
    for (std::size_t i = 0; i < c.also.size(); ++i) os << (i ? "," : "") << c.also[i];
  }
  if (!c.validated.empty()) os << " validated=" << c.validated;
  return os.str();
}

/// A theorem verdict that the exact oracle contradicts, or a proof-internal
/// consistency check that failed. Either means a bug.
class soundness_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct CertifyOptions {
  std::uint64_t budget = default_ham_budget;
  /// Cross-check every theorem verdict against the exact oracle up to this order.
  bool validate = true;
  std::size_t desk_limit = dp_limit;
  std::size_t bipartite_desk_limit = bipartite_dp_limit;
  /// lambda this close to a threshold never certifies Hamiltonicity.
  double guard = 1e-9;
};

namespace detail {

struct RuleHit {
  const char* rule;
  std::size_t k;
  double threshold;
  std::optional<FamilyParams> family;  // set when the graph is the exception
};

inline Certificate from_search(Certificate c, const HamResult& r) {
  c.rule = rules::exact;
  c.witness = r.witness;
  switch (r.outcome) {
    case HamOutcome::hamiltonian: c.verdict = Verdict::HamiltonianWithCycle; break;
    case HamOutcome::non_hamiltonian: c.verdict = Verdict::NonHamiltonianWitness; break;
    case HamOutcome::unknown: c.verdict = Verdict::Inconclusive; break;
  }
  return c;
}

template <typename Search>
Certificate conclude(Certificate c, const std::vector<RuleHit>& hits, const CertifyOptions& opt,
                     std::size_t order, std::size_t desk_limit, Search&& search) {
  if (hits.empty()) return from_search(std::move(c), search());
  const RuleHit& h = hits.front();
  c.rule = h.rule;
  c.k = h.k;
  c.threshold = h.threshold;
  for (std::size_t i = 1; i < hits.size(); ++i) c.also.emplace_back(hits[i].rule);
  if (h.family) {
    c.verdict = Verdict::ExceptionalExtremal;
    c.family = h.family;
    return c;
  }
  c.verdict = Verdict::HamiltonianByTheorem;
  if (opt.validate && order <= desk_limit) {
    const HamResult r = search();
    if (r.outcome == HamOutcome::non_hamiltonian)
      throw soundness_error(std::string("rule ") + h.rule + " certified a non-Hamiltonian graph");
    c.validated = r.outcome == HamOutcome::hamiltonian ? "yes" : "skipped";
  } else {
    c.validated = "skipped";
  }
  return c;
}

// Threshold test with a guard band. Returns: 0 not applicable, 1 at threshold
// (only the exception branch may be taken), 2 clearly above.
inline int compare(double lambda, double thr, double guard, bool strict) {
  if (lambda > thr + guard) return 2;
  if (lambda >= thr - guard) return strict ? 0 : 1;
  return 0;
}

}  // namespace detail

/// Applies the spectral and edge-count Hamiltonicity rules in order of
/// strength, scanning k from the minimum degree down to 1, and falls back to
/// exact search.
inline Certificate certify(const Graph& g, const CertifyOptions& opt = {}) {
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("certify needs n >= 3");
  Certificate c;
  c.n = n;
  c.edges = g.edge_count();
  c.min_degree = min_degree(g);
  c.lambda = spectral(g).lambda1;
  const double lambda = c.lambda, nd = static_cast<double>(n);
  const auto families = recognize_family(g);
  auto exception = [&](Family f, std::size_t k) -> std::optional<FamilyParams> {
    for (const auto& p : families)
      if (p.family == f && p.k == k) return p;
    return std::nullopt;
  };

  std::vector<detail::RuleHit> hits;
  // lambda > n - 2; sole exception N(n,1).
  if (auto s = detail::compare(lambda, nd - 2, opt.guard, false); s > 0) {
    auto ex = exception(Family::N, 1);
    if (ex || s == 2) hits.push_back({rules::above_n_minus_2, 1, nd - 2, ex});
  }
  const std::size_t delta = c.min_degree;
  // lambda >= n - k - 1 with n >= max(k^3/2 + k + 5/2, 6k + 5); exceptions L(n,k), N(n,k).
  for (std::size_t k = delta; k >= 1; --k) {
    const auto kk = static_cast<std::int64_t>(k);
    if (2 * static_cast<std::int64_t>(n) < kk * kk * kk + 2 * kk + 5 || n < 6 * k + 5) continue;
    const double thr = nd - static_cast<double>(k) - 1;
    const int s = detail::compare(lambda, thr, opt.guard, false);
    if (s == 0) continue;
    auto ex = exception(Family::L, k);
    if (!ex) ex = exception(Family::N, k);
    if (ex || s == 2) {
      hits.push_back({rules::min_degree_spectral, k, thr, ex});
      break;
    }
  }
  // lambda >= lambda(N(n,k)) with n >= max(6k + 5, (k^2 + 6k + 4)/2); exception N(n,k).
  for (std::size_t k = delta; k >= 1; --k) {
    if (n < 6 * k + 5 || 2 * n < k * k + 6 * k + 4) continue;
    const double thr = family_lambda({Family::N, n, k});
    const int s = detail::compare(lambda, thr, opt.guard, false);
    if (s == 0) continue;
    auto ex = exception(Family::N, k);
    if (ex || s == 2) {
      hits.push_back({rules::above_N, k, thr, ex});
      break;
    }
  }
  // e > C(n-k-1, 2) + (k+1)^2 with n >= 6k + 5; exceptions are subgraphs of L(n,k) or N(n,k).
  for (std::size_t k = delta; k >= 1; --k) {
    if (n < 6 * k + 5) continue;
    const std::size_t bound = choose2(n - k - 1) + (k + 1) * (k + 1);
    if (c.edges <= bound) continue;
    auto ex = exception(Family::L, k);
    if (!ex) ex = exception(Family::N, k);
    if (ex) {
      hits.push_back({rules::edge_count, k, static_cast<double>(bound), ex});
      break;
    }
    if (!is_spanning_subgraph_of_family(g, Family::L, k) && !is_spanning_subgraph_of_family(g, Family::N, k)) {
      hits.push_back({rules::edge_count, k, static_cast<double>(bound), std::nullopt});
      break;
    }
  }
  return detail::conclude(std::move(c), hits, opt, n, opt.desk_limit,
                          [&] { return is_hamiltonian(g, opt.budget); });
}

/// Balanced-bipartite counterpart of certify(); c.n is the side size.
inline Certificate certify_bipartite(const BipartiteGraph& bg, const CertifyOptions& opt = {}) {
  const std::size_t n = bg.half();
  if (n < 2) throw std::invalid_argument("certify_bipartite needs n >= 2 per side");
  const Graph& g = bg.core();
  Certificate c;
  c.n = n;
  c.edges = g.edge_count();
  c.min_degree = min_degree(g);
  c.lambda = spectral(g).lambda1;
  const double lambda = c.lambda, nd = static_cast<double>(n);
  const auto families = recognize_family(bg);
  auto exception = [&](std::size_t k) -> std::optional<FamilyParams> {
    for (const auto& p : families)
      if (p.k == k) return p;
    return std::nullopt;
  };
  const std::size_t delta = c.min_degree;
  std::vector<detail::RuleHit> hits;

  // lambda >= sqrt(n(n-k)) with n >= k^3 + 2k + 4; exception B(n,k).
  for (std::size_t k = delta; k >= 1; --k) {
    if (n < k * k * k + 2 * k + 4) continue;
    const double thr = std::sqrt(nd * (nd - static_cast<double>(k)));
    const int s = detail::compare(lambda, thr, opt.guard, false);
    if (s == 0) continue;
    auto ex = exception(k);
    if (!ex && s == 2) {
      // The edge bound the spectral condition forces must hold.
      if (c.edges < n * (n - k))
        throw soundness_error("spectral condition holds but e < n(n-k)");
      if (n >= (k + 1) * (k + 1) + 1 && !(n * (n - k) > n * (n - k - 1) + (k + 1) * (k + 1)))
        throw soundness_error("n(n-k) > n(n-k-1) + (k+1)^2 failed");
    }
    if (ex || s == 2) {
      hits.push_back({rules::bip_min_degree, k, thr, ex});
      break;
    }
  }
  // lambda >= lambda(B(n,k)) with n >= (k+1)^2; exception B(n,k).
  for (std::size_t k = delta; k >= 1; --k) {
    if (n < (k + 1) * (k + 1) || n < 2 * k + 1) continue;
    const double thr = family_lambda({Family::B, n, k});
    const int s = detail::compare(lambda, thr, opt.guard, false);
    if (s == 0) continue;
    auto ex = exception(k);
    if (ex || s == 2) {
      hits.push_back({rules::bip_above_B, k, thr, ex});
      break;
    }
  }
  // e > n(n-k-1) + (k+1)^2 with n >= 2k + 1; exceptions are subgraphs of B(n,k).
  for (std::size_t k = delta; k >= 1; --k) {
    if (n < 2 * k + 1) continue;
    const std::size_t bound = n * (n - k - 1) + (k + 1) * (k + 1);
    if (c.edges <= bound) continue;
    if (auto ex = exception(k)) {
      hits.push_back({rules::bip_edge_count, k, static_cast<double>(bound), ex});
      break;
    }
    if (!is_spanning_subgraph_of_family(bg, k)) {
      hits.push_back({rules::bip_edge_count, k, static_cast<double>(bound), std::nullopt});
      break;
    }
  }
  return detail::conclude(std::move(c), hits, opt, 2 * n, opt.bipartite_desk_limit,
                          [&] { return is_hamiltonian_bipartite(bg, opt.budget); });
}

}  // namespace hamspec

#endif  // HAMSPEC_CERTIFIER_HPP

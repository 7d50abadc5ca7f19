#ifndef HAMSPEC_HARNESS_HPP
#define HAMSPEC_HARNESS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspec/certifier.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/hamiltonicity.hpp"
#include "hamspec/polynomial.hpp"
#include "hamspec/quotient.hpp"
#include "hamspec/random.hpp"
#include "hamspec/spectral.hpp"

namespace hamspec::harness {

inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Report rows

enum class Status { pass, fail, excluded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::excluded: return "regime-excluded";
  }
  return "?";
}

/// One checked quantity. `status` is a pure function of value, relation,
/// bound and tol (see holds()), except for regime-excluded rows.
struct ReportRow {
  std::string experiment;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string quantity;
  double value = 0;
  std::string relation;  // one of < <= > >= ==
  double bound = 0;
  double tol = 0;
  Status status = Status::pass;
  std::string note;
};

/// value `relation` bound, with tol applied against the claim:
/// "<" means value < bound - tol, "<=" means value <= bound + tol, "==" means |value - bound| <= tol.
inline bool holds(double value, const std::string& relation, double bound, double tol) {
  if (std::isnan(value) || std::isnan(bound)) return false;
  if (relation == "<") return value < bound - tol;
  if (relation == "<=") return value <= bound + tol;
  if (relation == ">") return value > bound + tol;
  if (relation == ">=") return value >= bound - tol;
  if (relation == "==") return std::abs(value - bound) <= tol;
  throw std::invalid_argument("unknown relation " + relation);
}

struct Report {
  std::vector<ReportRow> rows;

  void check(std::string experiment, std::size_t n, std::size_t k, std::string quantity, double value,
             std::string relation, double bound, double tol = 0.0, std::string note = {}) {
    ReportRow r{std::move(experiment), n, k, std::move(quantity), value, std::move(relation), bound, tol,
                Status::pass, std::move(note)};
    r.status = holds(r.value, r.relation, r.bound, r.tol) ? Status::pass : Status::fail;
    rows.push_back(std::move(r));
  }

  void exclude(std::string experiment, std::size_t n, std::size_t k, std::string quantity, std::string note) {
    ReportRow r{std::move(experiment), n, k, std::move(quantity), std::nan(""), "", std::nan(""), 0,
                Status::excluded, std::move(note)};
    rows.push_back(std::move(r));
  }

  void fail(std::string experiment, std::size_t n, std::size_t k, std::string quantity, std::string note) {
    ReportRow r{std::move(experiment), n, k, std::move(quantity), std::nan(""), "", std::nan(""), 0,
                Status::fail, std::move(note)};
    rows.push_back(std::move(r));
  }

  void append(const Report& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [s](const ReportRow& r) { return r.status == s; }));
  }
  std::size_t failures() const { return count(Status::fail); }
  bool ok() const { return failures() == 0; }
};

inline std::string csv_header() { return "experiment,n,k,quantity,value,relation,bound,tol,status,note"; }

inline std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const auto& row : r.rows)
    os << row.experiment << "," << row.n << "," << row.k << "," << row.quantity << ","
       << (std::isnan(row.value) ? "" : fmt12(row.value)) << "," << row.relation << ","
       << (std::isnan(row.bound) ? "" : fmt12(row.bound)) << "," << fmt12(row.tol) << ","
       << to_string(row.status) << "," << row.note << "\n";
  return os.str();
}

/// Aligned text; with `only_failures` the passing rows are summarized per experiment.
inline std::string to_text(const Report& r, bool only_failures = false) {
  std::ostringstream os;
  std::map<std::string, std::array<std::size_t, 3>> tally;
  for (const auto& row : r.rows) ++tally[row.experiment][static_cast<std::size_t>(row.status)];
  for (const auto& row : r.rows) {
    if (only_failures && row.status != Status::fail) continue;
    os << std::left << std::setw(16) << row.experiment << " n=" << std::setw(4) << row.n << " k=" << std::setw(2)
       << row.k << " " << std::setw(30) << row.quantity << " " << std::right << std::setw(20)
       << (std::isnan(row.value) ? std::string("-") : fmt12(row.value)) << " " << std::setw(2) << row.relation
       << " " << std::left << std::setw(20) << (std::isnan(row.bound) ? std::string("-") : fmt12(row.bound))
       << " " << to_string(row.status);
    if (!row.note.empty()) os << "  " << row.note;
    os << "\n";
  }
  for (const auto& [exp, t] : tally)
    os << "summary " << exp << ": " << t[0] << " pass, " << t[1] << " fail, " << t[2] << " regime-excluded\n";
  return os.str();
}

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool empty() const { return hi < lo; }
};

// ---------------------------------------------------------------------------
// Subgraphs of N(n,k) and L(n,k) with one edge removed

inline std::string edge_class_name(const Partition& p, Vertex u, Vertex v) {
  auto a = p.labels[p.class_of[u]], b = p.labels[p.class_of[v]];
  if (b < a) std::swap(a, b);
  return a + "-" + b;
}

/// Single-edge deletions keeping minimum degree >= k: one per class pair, or
/// every edge with `all`.
inline std::vector<std::pair<Vertex, Vertex>> deletions(const FamilyGraph& fg, bool all) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (auto [u, v] : fg.graph.edges()) {
    auto key = std::minmax(fg.classes.class_of[u], fg.classes.class_of[v]);
    if (!all && seen[key]) continue;
    const Graph h = fg.graph.without_edge(u, v);
    if (min_degree(h) < fg.params.k) continue;
    seen[key] = true;
    out.emplace_back(u, v);
  }
  return out;
}

/// Every single-edge-deleted subgraph of N(n,k) and L(n,k) with minimum
/// degree >= k has spectral radius below n-k-1, and f changes sign on
/// (n-k-2, n-k-1). Without `force`, n starts at the order threshold.
inline Report verify_deletions(Range ks, Range ns, bool all = false, bool force = false, double tol = 1e-9) {
  Report rep;
  const std::string exp = "deletions";
  for (std::size_t k = std::max<std::size_t>(ks.lo, 1); k <= ks.hi; ++k) {
    const auto thr = static_cast<std::size_t>(prop_threshold_n(static_cast<std::int64_t>(k)));
    const std::size_t n0 = std::max({ns.lo, force ? 2 * k + 2 : thr, 2 * k + 2});
    for (std::size_t n = n0; n <= ns.hi; ++n) {
      const double bound = static_cast<double>(n - k - 1);
      const std::string regime = n < thr ? "below order threshold" : "";
      for (Family f : {Family::N, Family::L}) {
        const FamilyGraph fg = family_graph({f, n, k});
        const auto dels = deletions(fg, all);
        std::optional<std::pair<Graph, double>> sample;
        for (auto [u, v] : dels) {
          const Graph h = fg.graph.without_edge(u, v);
          const double lam = spectral_dense(h).lambda1;
          rep.check(exp, n, k, std::string("lambda(") + to_string(f) + "-" + edge_class_name(fg.classes, u, v) + ")",
                    lam, "<", bound, tol, regime);
          if (!sample) sample.emplace(h, lam);
        }
        // Removing more edges only lowers lambda, which is what lets the check
        // stop at single deletions; confirm it on the first deleted graph.
        if (sample) {
          const Graph& h = sample->first;
          for (auto [u, v] : h.edges()) {
            rep.check(exp, n, k, std::string("monotone(") + to_string(f) + ")",
                      spectral_dense(h.without_edge(u, v)).lambda1, "<=", sample->second, 1e-12);
            break;
          }
        }
      }
      const auto nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
      rep.check(exp, n, k, "f(n-k-2)", static_cast<double>(eval_f(nn, kk, nn - kk - 2)), "<", 0.0, 0.0, regime);
      rep.check(exp, n, k, "f(n-k-1)", static_cast<double>(eval_f(nn, kk, nn - kk - 1)), ">", 0.0, 0.0, regime);
      try {
        const Interval iv = isolate_f_root(nn, kk);
        rep.check(exp, n, k, "f-root-interval-width", static_cast<double>(iv.width()), "<=", 1e-10, 0.0, regime);
        double dist = std::numeric_limits<double>::infinity();
        for (auto ev : quotient_eigenvalues(quotient_of_family({Family::N, n, k}, DeletedEdge::ZZ)))
          dist = std::min(dist, std::abs(ev - std::complex<double>(static_cast<double>(iv.mid()), 0.0)));
        rep.check(exp, n, k, "f-root-vs-quotient-eigenvalue", dist, "<=", 1e-8, 0.0, regime);
      } catch (const regime_error& e) {
        rep.fail(exp, n, k, "f-sign-change", e.what());
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

/// The order threshold cannot be lowered: at n = k^3/2 + k + 2 (k even) the
/// quadratic g(n) = 4 - 2k^2 < 0, so N(n,k) minus a Z-Z edge already has
/// spectral radius above n-k-1.
inline Report verify_sharpness(std::size_t k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("sharpness needs an even k >= 2 so that n = k^3/2 + k + 2 is an integer (k=" +
                                std::to_string(k) + ")");
  Report rep;
  const std::string exp = "sharpness";
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t n = kk * kk * kk / 2 + kk + 2;
  const auto nu = static_cast<std::size_t>(n);
  rep.check(exp, nu, k, "g(n)", static_cast<double>(eval_g(kk, n)), "==", static_cast<double>(4 - 2 * kk * kk));
  rep.check(exp, nu, k, "f(n-k-1)-g(n)", static_cast<double>(eval_f(n, kk, n - kk - 1) - eval_g(kk, n)), "==", 0.0);
  const double lam = family_lambda({Family::N, nu, k}, DeletedEdge::ZZ);
  rep.check(exp, nu, k, "lambda(N-Z-Z)", lam, ">", static_cast<double>(n - kk - 1), 1e-6);
  return rep;
}

// ---------------------------------------------------------------------------
// Numerical replication of the proof-internal quantities

/// phi / y^2 in terms of lambda alone, from the solved forms for L(n,k) - uv.
inline double phi_over_y2(double lambda, double k) {
  const double a = lambda - k + 1;
  const double r = (lambda + 1) / (lambda + 2);
  const double z = 1 - k / (a * (lambda + 1));
  return 2 * r * r * z * z - 2 * k / a - (k * k - k) / (a * a);
}

inline std::size_t l_regime(std::size_t k) {
  // k = 1, n = 4 is the claw, disposed of separately (its lambda is below 2).
  const auto thr = static_cast<std::size_t>(prop_threshold_n(static_cast<std::int64_t>(k)));
  return std::max(thr, k == 1 ? std::size_t{5} : std::size_t{0});
}

inline Report verify_proofs(Range ks, Range ns) {
  Report rep;
  for (std::size_t k = std::max<std::size_t>(ks.lo, 1); k <= ks.hi; ++k) {
    const double kd = static_cast<double>(k);
    for (std::size_t n = std::max(ns.lo, 2 * k + 1); n <= ns.hi; ++n) {
      const double nd = static_cast<double>(n);

      // N(n,k) - uv, u, v in Z
      {
        const std::string exp = "proofs-N";
        const auto thr = static_cast<std::size_t>(prop_threshold_n(static_cast<std::int64_t>(k)));
        if (n < thr) {
          rep.exclude(exp, n, k, "solved-forms", "n below k^3/2+k+5/2");
        } else {
          const auto q = quotient_of_family({Family::N, n, k}, DeletedEdge::ZZ);
          const double lam = quotient_lambda(q);
          const auto v = perron_class_values(q);  // X, Y, [Z'], T
          const double y = v[1];
          const double x = v[0] / y, t = v.back() / y;
          const double zf = 1 - kd * kd / (lam * (lam + 1));
          rep.check(exp, n, k, "x-(k/lambda)y", x - kd / lam, "==", 0.0, 1e-8);
          if (v.size() == 4) rep.check(exp, n, k, "z-form", v[2] / y - zf, "==", 0.0, 1e-8);
          rep.check(exp, n, k, "t-form", t - (lam + 1) / (lam + 2) * zf, "==", 0.0, 1e-8);
          rep.check(exp, n, k, "lambda(N-uv)", lam, "<", nd - kd - 1, 1e-9);
          const long double fl = quartic_f(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))(
              static_cast<long double>(lam));
          rep.check(exp, n, k, "f(lambda)/lambda^4", static_cast<double>(fl / std::pow(static_cast<long double>(lam), 4)),
                    "==", 0.0, 1e-12);
        }
      }

      // L(n,k) - uv, u, v in Z
      {
        const std::string exp = "proofs-L";
        if (n < l_regime(k)) {
          rep.exclude(exp, n, k, "phi", "n below order threshold");
        } else {
          const auto q = quotient_of_family({Family::L, n, k}, DeletedEdge::ZZ);
          const double lam = quotient_lambda(q);
          auto v = perron_class_values(q);  // X, w, [Z'], T
          const double y = v[1];
          const double x = v[0] / y, t = v.back() / y;
          const double a = lam - kd + 1;
          const double zf = 1 - kd / (a * (lam + 1));
          rep.check(exp, n, k, "x-y/(lambda-k+1)", x - 1 / a, "==", 0.0, 1e-8);
          rep.check(exp, n, k, "t-form", t - (lam + 1) / (lam + 2) * zf, "==", 0.0, 1e-8);
          if (v.size() == 4) rep.check(exp, n, k, "z-form", v[2] / y - zf, "==", 0.0, 1e-8);
          const double phi = 2 * t * t - 2 * kd * x - kd * (kd - 1) * x * x;
          rep.check(exp, n, k, "phi/y^2", phi, ">", 0.0);
          rep.check(exp, n, k, "phi/y^2-closed-form", phi - phi_over_y2(lam, kd), "==", 0.0, 1e-8);
          rep.check(exp, n, k, "phi/y^2@lambda=n-k-1", phi_over_y2(nd - kd - 1, kd), ">", 0.0);
          rep.check(exp, n, k, "lambda(L-uv)", lam, "<", nd - kd - 1, 1e-9);
        }
      }

      // B(n,k) - uv, u in Y, v in Z
      {
        const std::string exp = "proofs-B";
        if (n < k * k * k + 2 * k + 4) {
          rep.exclude(exp, n, k, "lambda*s*t-k^3x^2", "n below k^3+2k+4");
          continue;
        }
        const double root = std::sqrt(nd * (nd - kd));
        const auto q = quotient_of_family({Family::B, n, k}, DeletedEdge::YZ);
        const double lam = quotient_lambda(q);
        auto v = perron_class_values(q);  // W, X, Y', Z', s, t
        const double y = v[2];
        const double w = v[0] / y, x = v[1] / y, z = v[3] / y, s = v[4] / y, t = v[5] / y;
        const double l2 = lam * lam;
        rep.check(exp, n, k, "w-(k/lambda)x", w - kd * x / lam, "==", 0.0, 1e-8);
        rep.check(exp, n, k, "s-form", s - (l2 - lam * z) / (l2 - 1), "==", 0.0, 1e-8);
        rep.check(exp, n, k, "t-form", t - (l2 * z - lam) / (l2 - 1), "==", 0.0, 1e-8);
        rep.check(exp, n, k, "z-form", z - (l2 - 1) / (l2 * lam) * (nd - kd + 1 / (l2 - 1)), "==", 0.0, 1e-8);
        rep.check(exp, n, k, "z/y-lower", z, ">", 1 - kd / nd - 1 / (nd * nd));
        rep.check(exp, n, k, "z/y-upper", z, "<", 1.0);
        rep.check(exp, n, k, "lambda*s*t-k^3x^2", lam * s * t - kd * kd * kd * x * x, ">", 0.0);
        rep.check(exp, n, k, "x/y", x, "<", 1.0);
        rep.check(exp, n, k, "lambda(B-uv)", lam, "<", root, 1e-9);
        rep.check(exp, n, k, "lambda(B-uv)>n-k", lam, ">", nd - kd);
        rep.check(exp, n, k, "lambda(B-uv)<n", lam, "<", nd);
        rep.check(exp, n, k, "lambda(B)", family_lambda({Family::B, n, k}), ">", root, 1e-9);
        rep.check(exp, n, k, "lambda(B-xy)<=lambda(B-yz)", family_lambda({Family::B, n, k}, DeletedEdge::XY), "<=",
                  lam, 1e-9);
        rep.check(exp, n, k, "n-k/2-1/12", nd - kd / 2 - 1.0 / 12, ">", nd - kd);
        rep.check(exp, n, k, "sqrt(n(n-k))", root, ">", nd - kd / 2 - 1.0 / 12);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Threshold sweep

inline std::string sweep_header() {
  return "n,k,lambda_N,lambda_L,lambda_B,n_minus_k_minus_1,sqrt_n_n_minus_k,edge_threshold_general,"
         "edge_threshold_bipartite";
}

/// One CSV row per valid (n, k) with n >= 2k + 1, spectral radii from quotients.
inline std::string sweep(Range ks, Range ns) {
  std::ostringstream os;
  os << sweep_header() << "\n";
  if (ks.empty() || ns.empty()) return os.str();
  for (std::size_t n = ns.lo; n <= ns.hi; ++n)
    for (std::size_t k = std::max<std::size_t>(ks.lo, 1); k <= ks.hi; ++k) {
      if (n < 2 * k + 1) continue;
      const double nd = static_cast<double>(n), kd = static_cast<double>(k);
      os << n << "," << k << "," << fmt12(family_lambda({Family::N, n, k})) << ","
         << fmt12(family_lambda({Family::L, n, k})) << "," << fmt12(family_lambda({Family::B, n, k})) << ","
         << fmt12(nd - kd - 1) << "," << fmt12(std::sqrt(nd * (nd - kd))) << ","
         << choose2(n - k - 1) + (k + 1) * (k + 1) << "," << n * (n - k - 1) + (k + 1) * (k + 1) << "\n";
    }
  return os.str();
}

// ---------------------------------------------------------------------------
// Random falsification suite

struct ExperimentConfig {
  std::string name = "random-suite";
  Range ks{1, 2};
  Range ns{4, 12};
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::size_t bipartite_samples = 500;
  Range bipartite_ns{3, 10};
  double tol = 1e-9;
  std::uint64_t budget = default_ham_budget;
};

namespace detail {

inline std::string describe(const Graph& g) { return "g6=" + encode_graph6(g); }

inline void check_certificate(Report& rep, const std::string& exp, std::size_t n, std::size_t k,
                              const std::string& g6, const std::function<Certificate()>& run) {
  try {
    const Certificate c = run();
    rep.check(exp, n, k, "certificate-resolved", c.resolved() ? 1.0 : 0.0, "==", 1.0, 0.0, g6);
  } catch (const soundness_error& e) {
    rep.fail(exp, n, k, "certificate-sound", std::string(e.what()) + " " + g6);
  }
}

}  // namespace detail

/// Seeded random graphs with minimum degree >= k and balanced bipartite
/// graphs: spectral bounds, Kelmans monotonicity, and every theorem-based
/// certificate checked against the exact oracle.
inline Report random_suite(const ExperimentConfig& cfg) {
  Report rep;
  Rng rng(cfg.seed);
  const std::string exp = "random";
  const std::string bexp = "random-bip";
  if (!cfg.ks.empty() && !cfg.ns.empty())
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const std::size_t k = cfg.ks.lo + i % (cfg.ks.hi - cfg.ks.lo + 1);
      std::uniform_int_distribution<std::size_t> pick_n(std::max(cfg.ns.lo, std::max<std::size_t>(3, k + 2)),
                                                        std::max(cfg.ns.hi, k + 2));
      std::uniform_real_distribution<double> pick_p(0.15, 1.0);
      const std::size_t n = pick_n(rng);
      const Graph g = random_graph_min_degree(rng, n, k, pick_p(rng));
      const std::string g6 = detail::describe(g);
      const auto sr = spectral_dense(g);
      const double nd = static_cast<double>(n);
      rep.check(exp, n, k, "lambda2-hong", sr.lambda2, "<=", (nd - 2) / 2, cfg.tol, g6);
      rep.check(exp, n, k, "lambda-degree-bound", sr.lambda1, "<=", nikiforov_bound(n, g.edge_count(), k), cfg.tol,
                g6);
      std::uniform_int_distribution<Vertex> pick_v(0, n - 1);
      Vertex u = pick_v(rng), v = pick_v(rng);
      if (u == v) v = (u + 1) % n;
      rep.check(exp, n, k, "kelmans-monotone", spectral_dense(kelmans(g, u, v)).lambda1, ">=", sr.lambda1, cfg.tol, g6);
      CertifyOptions opt;
      opt.budget = cfg.budget;
      detail::check_certificate(rep, exp, n, k, g6, [&] { return certify(g, opt); });
      // Edge-count regime: Hamiltonian or inside L(n,k) / N(n,k).
      if (n >= 6 * k + 5 && g.edge_count() > choose2(n - k - 1) + (k + 1) * (k + 1)) {
        const bool ham = is_hamiltonian(g, cfg.budget).hamiltonian();
        const bool inside =
            is_spanning_subgraph_of_family(g, Family::L, k) || is_spanning_subgraph_of_family(g, Family::N, k);
        rep.check(exp, n, k, "edge-regime-ham-or-contained", (ham || inside) ? 1.0 : 0.0, "==", 1.0, 0.0, g6);
      }
    }

  if (!cfg.bipartite_ns.empty())
    for (std::size_t i = 0; i < cfg.bipartite_samples; ++i) {
      const std::size_t k = 1;
      std::uniform_int_distribution<std::size_t> pick_n(std::max<std::size_t>(cfg.bipartite_ns.lo, 2),
                                                        std::max<std::size_t>(cfg.bipartite_ns.hi, 2));
      std::uniform_real_distribution<double> pick_p(0.2, 1.0);
      const std::size_t n = pick_n(rng);
      const BipartiteGraph bg = (i % 4 == 3) ? random_dense_bipartite(rng, n)
                                             : random_bipartite_min_degree(rng, n, k, pick_p(rng));
      const Graph& g = bg.core();
      const std::string g6 = detail::describe(g);
      const auto sr = spectral_dense(g);
      const double nd = static_cast<double>(2 * n);
      rep.check(bexp, n, k, "lambda-bipartite-bound", sr.lambda1, "<=", std::sqrt(static_cast<double>(g.edge_count())),
                cfg.tol, g6);
      rep.check(bexp, n, k, "lambda2-hong", sr.lambda2, "<=", (nd - 2) / 2, cfg.tol, g6);
      rep.check(bexp, n, k, "lambda-degree-bound", sr.lambda1, "<=", nikiforov_bound(2 * n, g.edge_count(), k),
                cfg.tol, g6);
      std::uniform_int_distribution<Vertex> pick_v(0, 2 * n - 1);
      Vertex u = pick_v(rng), v = pick_v(rng);
      if (u == v) v = (u + 1) % (2 * n);
      rep.check(bexp, n, k, "kelmans-monotone", spectral_dense(kelmans(g, u, v)).lambda1, ">=", sr.lambda1, cfg.tol,
                g6);
      if (n >= 2) {
        CertifyOptions opt;
        opt.budget = cfg.budget;
        detail::check_certificate(rep, bexp, n, k, g6, [&] { return certify_bipartite(bg, opt); });
      }
      if (n >= k * k * k + 2 * k + 4 && sr.lambda1 >= std::sqrt(static_cast<double>(n * (n - k)))) {
        const bool ok = is_hamiltonian_bipartite(bg, cfg.budget).hamiltonian() || is_family(bg, k);
        rep.check(bexp, n, k, "spectral-regime-ham-or-B", ok ? 1.0 : 0.0, "==", 1.0, 0.0, g6);
      }
    }
  return rep;
}

/// Dense balanced bipartite samples at the spectral threshold for k = 1:
/// `samples` graphs per n with lambda >= sqrt(n(n-1)), each of which must be
/// Hamiltonian or equal to B(n,1). Returns the report and the number of
/// qualifying samples found per n.
inline Report bipartite_backbone(Range ns, std::size_t samples, std::uint64_t seed,
                                 std::uint64_t budget = default_ham_budget) {
  Report rep;
  Rng rng(seed);
  const std::string exp = "bip-backbone";
  for (std::size_t n = std::max<std::size_t>(ns.lo, 3); n <= ns.hi; ++n) {
    const double thr = std::sqrt(static_cast<double>(n * (n - 1)));
    std::size_t found = 0, tries = 0;
    while (found < samples && tries < 200 * samples) {
      ++tries;
      const BipartiteGraph bg = random_dense_bipartite(rng, n);
      if (min_degree(bg) < 1 || spectral_dense(bg.core()).lambda1 < thr) continue;
      ++found;
      const bool family = is_family(bg, 1);
      const bool ham = is_hamiltonian_bipartite(bg, budget).hamiltonian();
      rep.check(exp, n, 1, "ham-or-B", (ham || family) ? 1.0 : 0.0, "==", 1.0, 0.0,
                detail::describe(bg.core()));
    }
    rep.check(exp, n, 1, "qualifying-samples", static_cast<double>(found), ">=", static_cast<double>(samples));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// certify over a graph6 stream

struct CertifyRun {
  std::vector<std::string> lines;  // one per input record or error
  std::size_t parse_errors = 0;
  std::size_t inconclusive = 0;
  std::size_t certified = 0;

  /// 0 all resolved, 1 some Inconclusive, 2 parse or usage error.
  int exit_code() const { return parse_errors ? 2 : inconclusive ? 1 : 0; }
};

inline CertifyRun certify_stream(std::istream& in, bool bipartite, const CertifyOptions& opt = {}) {
  CertifyRun run;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = decode_graph6(line);
      const Certificate c = bipartite ? certify_bipartite(BipartiteGraph(g), opt) : certify(g, opt);
      if (!c.resolved()) ++run.inconclusive;
      ++run.certified;
      run.lines.push_back(to_record(c));
    } catch (const graph6_error& e) {
      ++run.parse_errors;
      run.lines.push_back("error line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      ++run.parse_errors;
      run.lines.push_back("error line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return run;
}

}  // namespace hamspec::harness

#endif  // HAMSPEC_HARNESS_HPP

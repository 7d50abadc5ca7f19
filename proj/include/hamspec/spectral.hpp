#ifndef HAMSPEC_SPECTRAL_HPP
#define HAMSPEC_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hamspec/graph.hpp"

namespace hamspec {

enum class SpectralMethod { dense, power, quotient };

inline const char* to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::dense: return "dense";
    case SpectralMethod::power: return "power";
    case SpectralMethod::quotient: return "quotient";
  }
  return "?";
}

struct SpectralResult {
  double lambda1 = 0;
  /// -infinity for the single-vertex graph, which has no second eigenvalue.
  double lambda2 = -std::numeric_limits<double>::infinity();
  std::vector<double> perron;
  /// max_i |(A p)_i - lambda1 p_i|
  double residual = 0;
  SpectralMethod method = SpectralMethod::dense;
};

class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

inline std::vector<double> multiply(const Graph& g, std::span<const double> x) {
  std::vector<double> y(g.order(), 0.0);
  for (Vertex u = 0; u < g.order(); ++u) {
    double s = 0;
    const Row& r = g.neighbors(u);
    for (auto v = r.find_first(); v != Row::npos; v = r.find_next(v)) s += x[v];
    y[u] = s;
  }
  return y;
}

inline double eigen_residual(const Graph& g, std::span<const double> x, double lambda) {
  const auto ax = multiply(g, x);
  double r = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - lambda * x[i]));
  return r;
}

/// <Av, v> / <v, v>.
inline double rayleigh(const Graph& g, std::span<const double> v) {
  if (v.size() != g.order()) throw std::invalid_argument("vector length does not match graph order");
  double vv = 0;
  for (double x : v) vv += x * x;
  if (vv == 0) throw std::invalid_argument("rayleigh quotient of the zero vector");
  const auto av = multiply(g, v);
  double vav = 0;
  for (std::size_t i = 0; i < v.size(); ++i) vav += av[i] * v[i];
  return vav / vv;
}

/// Full symmetric eigendecomposition (Householder tridiagonalization followed
/// by implicit symmetric QR). This is the reference answer for every other
/// route in the library.
inline SpectralResult spectral_dense(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("spectrum of the null graph");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g));
  const auto& ev = es.eigenvalues();  // ascending
  const auto n = ev.size();
  SpectralResult r;
  r.method = SpectralMethod::dense;
  r.lambda1 = ev(n - 1);
  if (n > 1) r.lambda2 = ev(n - 2);
  r.perron.resize(static_cast<std::size_t>(n));
  // A nonnegative eigenvector exists for lambda1; |v| recovers it from a
  // sign-mixed basis vector when lambda1 is simple or split across components.
  double norm = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    r.perron[static_cast<std::size_t>(i)] = std::abs(es.eigenvectors()(i, n - 1));
    norm += r.perron[static_cast<std::size_t>(i)] * r.perron[static_cast<std::size_t>(i)];
  }
  norm = std::sqrt(norm);
  for (double& x : r.perron) x /= norm;
  r.residual = eigen_residual(g, r.perron, r.lambda1);
  return r;
}

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void normalize(std::vector<double>& x) {
  const double n = std::sqrt(dot(x, x));
  for (double& v : x) v /= n;
}

struct PowerOutcome {
  double lambda;
  std::vector<double> vec;
};

// Power iteration on (A + shift I), optionally keeping x orthogonal to `deflate`.
// Stops once ||A x - rho x||_inf <= tol with rho the Rayleigh quotient.
inline PowerOutcome power_on_component(const Graph& g, double shift, double tol, std::size_t max_iter,
                                       const std::vector<double>* deflate, std::vector<double> x) {
  auto project = [&](std::vector<double>& v) {
    if (!deflate) return;
    const double c = dot(v, *deflate);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * (*deflate)[i];
  };
  project(x);
  normalize(x);
  for (std::size_t it = 0; it < max_iter; ++it) {
    auto ax = multiply(g, x);
    project(ax);
    const double rho = dot(ax, x);
    double res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) res = std::max(res, std::abs(ax[i] - rho * x[i]));
    if (res <= tol) return {rho, x};
    for (std::size_t i = 0; i < x.size(); ++i) ax[i] += shift * x[i];
    project(ax);
    const double nrm = std::sqrt(dot(ax, ax));
    if (nrm == 0) return {rho, x};
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ax[i] / nrm;
  }
  throw convergence_error("power iteration did not reach residual " + std::to_string(tol) + " in " +
                          std::to_string(max_iter) + " iterations");
}

}  // namespace detail

/// Power iteration per connected component, with the second eigenvalue from
/// deflation against the component's Perron vector.
///
/// The shift A + I makes the iteration converge on bipartite components; the
/// deflated run uses A + lambda1 I so every remaining eigenvalue is mapped to
/// a nonnegative value and the largest one is lambda2 + lambda1.
inline SpectralResult spectral_power(const Graph& g, double tol = 1e-10, std::size_t max_iter = 200000) {
  if (g.order() == 0) throw std::invalid_argument("spectrum of the null graph");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  SpectralResult out;
  out.method = SpectralMethod::power;
  out.perron.assign(g.order(), 0.0);
  out.lambda1 = -std::numeric_limits<double>::infinity();
  std::vector<double> tops;  // lambda1 of each component
  double second = -std::numeric_limits<double>::infinity();

  for (const auto& comp : components(g)) {
    if (comp.size() == 1) {
      tops.push_back(0.0);
      if (out.lambda1 < 0.0) {
        out.lambda1 = 0.0;
        std::fill(out.perron.begin(), out.perron.end(), 0.0);
        out.perron[comp[0]] = 1.0;
      }
      continue;
    }
    const Graph h = induced(g, comp);
    // The Perron vector has to be tighter than tol or deflation leaks it back in.
    std::vector<double> start(comp.size());
    for (std::size_t i = 0; i < start.size(); ++i) start[i] = 1.0 + 1e-3 * static_cast<double>(h.degree(i));
    auto top = detail::power_on_component(h, 1.0, tol * 1e-2, max_iter, nullptr, start);
    for (double& v : top.vec) v = std::abs(v);
    detail::normalize(top.vec);
    tops.push_back(top.lambda);

    // Deterministic start vector with no special structure.
    std::vector<double> s2(comp.size());
    for (std::size_t i = 0; i < s2.size(); ++i) s2[i] = std::sin(1.0 + 0.7 * static_cast<double>(i));
    auto sub = detail::power_on_component(h, top.lambda, tol, max_iter, &top.vec, s2);
    second = std::max(second, sub.lambda);

    if (top.lambda > out.lambda1) {
      out.lambda1 = top.lambda;
      std::fill(out.perron.begin(), out.perron.end(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) out.perron[comp[i]] = top.vec[i];
    }
  }
  std::sort(tops.rbegin(), tops.rend());
  if (tops.size() > 1) second = std::max(second, tops[1]);
  out.lambda2 = second;
  out.residual = eigen_residual(g, out.perron, out.lambda1);
  return out;
}

/// Dense up to `dense_limit` vertices, power iteration above.
inline SpectralResult spectral(const Graph& g, std::size_t dense_limit = 512) {
  return g.order() <= dense_limit ? spectral_dense(g) : spectral_power(g);
}

inline double spectral_radius(const Graph& g) { return spectral(g).lambda1; }

/// lambda2(G) <= (n - 2) / 2 (Hong).
inline bool check_hong(const Graph& g, double tol = 1e-9) {
  if (g.order() < 2) throw std::invalid_argument("Hong's bound needs n >= 2");
  const auto r = spectral(g);
  return r.lambda2 <= (static_cast<double>(g.order()) - 2.0) / 2.0 + tol;
}

/// Right-hand side of lambda <= (k-1)/2 + sqrt(2e - nk + (k+1)^2/4).
inline double nikiforov_bound(std::size_t n, std::size_t e, std::size_t k) {
  const double kk = static_cast<double>(k);
  const double inside = 2.0 * static_cast<double>(e) - static_cast<double>(n) * kk + (kk + 1) * (kk + 1) / 4.0;
  return (kk - 1) / 2.0 + std::sqrt(std::max(0.0, inside));
}

/// Degree-eigenvalue bound for graphs with minimum degree >= k.
inline bool check_bound_nikiforov(const Graph& g, std::size_t k, double tol = 1e-9) {
  if (min_degree(g) < k)
    throw std::invalid_argument("degree-eigenvalue bound needs minimum degree >= k (have " +
                                std::to_string(min_degree(g)) + ", k=" + std::to_string(k) + ")");
  return spectral(g).lambda1 <= nikiforov_bound(g.order(), g.edge_count(), k) + tol;
}

/// lambda <= sqrt(e) for bipartite graphs.
inline bool check_bound_bfp(const BipartiteGraph& g, double tol = 1e-9) {
  return spectral(g.core()).lambda1 <= std::sqrt(static_cast<double>(g.edge_count())) + tol;
}

}  // namespace hamspec

#endif  // HAMSPEC_SPECTRAL_HPP

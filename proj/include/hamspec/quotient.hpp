#ifndef HAMSPEC_QUOTIENT_HPP
#define HAMSPEC_QUOTIENT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/polynomial.hpp"

namespace hamspec {

/// Quotient of an equitable partition: m(i, j) is the number of neighbors in
/// class j of any vertex of class i. The Perron root of m is the spectral
/// radius of the source graph whenever that graph is connected.
struct QuotientMatrix {
  Eigen::MatrixXd m;
  std::vector<std::size_t> class_sizes;
  std::vector<std::string> labels;

  std::size_t dim() const { return class_sizes.size(); }
  std::size_t order() const {
    std::size_t s = 0;
    for (auto c : class_sizes) s += c;
    return s;
  }
};

class partition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the quotient of `g` over `p`, checking the partition is equitable.
inline QuotientMatrix quotient_from_partition(const Graph& g, const Partition& p) {
  if (p.class_of.size() != g.order()) throw partition_error("partition does not cover the graph");
  const std::size_t d = p.size();
  QuotientMatrix q;
  q.labels = p.labels;
  q.class_sizes = p.class_sizes();
  q.m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<bool> seen(d, false);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t ci = p.class_of[v];
    std::vector<double> counts(d, 0.0);
    const Row& r = g.neighbors(v);
    for (auto w = r.find_first(); w != Row::npos; w = r.find_next(w)) counts[p.class_of[w]] += 1.0;
    for (std::size_t cj = 0; cj < d; ++cj) {
      const auto i = static_cast<Eigen::Index>(ci), j = static_cast<Eigen::Index>(cj);
      if (!seen[ci])
        q.m(i, j) = counts[cj];
      else if (q.m(i, j) != counts[cj])
        throw partition_error("partition is not equitable: class " + p.labels[ci] + " vertex " +
                              std::to_string(v) + " has " + std::to_string(counts[cj]) + " neighbors in " +
                              p.labels[cj] + ", expected " + std::to_string(q.m(i, j)));
    }
    seen[ci] = true;
  }
  return q;
}

namespace detail {

inline QuotientMatrix make_quotient(std::vector<std::vector<double>> rows, std::vector<std::size_t> sizes,
                                    std::vector<std::string> labels) {
  // Drop empty classes together with their rows and columns.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] > 0) keep.push_back(i);
  QuotientMatrix q;
  const auto d = static_cast<Eigen::Index>(keep.size());
  q.m = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) q.m(i, j) = rows[keep[static_cast<std::size_t>(i)]][keep[static_cast<std::size_t>(j)]];
    q.class_sizes.push_back(sizes[keep[static_cast<std::size_t>(i)]]);
    q.labels.push_back(labels[keep[static_cast<std::size_t>(i)]]);
  }
  return q;
}

}  // namespace detail

/// Closed-form quotient of a family member, written directly from the class
/// adjacencies (independently of family_graph()). Row and class order match
/// the partition produced by family_graph() for the same arguments.
inline QuotientMatrix quotient_of_family(const FamilyParams& p, DeletedEdge del = DeletedEdge::none) {
  require_valid(p);
  if (!allowed(p.family, del))
    throw std::invalid_argument(std::string("edge class ") + to_string(del) + " not allowed for family " +
                                to_string(p.family));
  const double n = static_cast<double>(p.n), k = static_cast<double>(p.k);
  const std::size_t nu = p.n, ku = p.k;

  switch (p.family) {
    case Family::N:
      if (del == DeletedEdge::none)
        return detail::make_quotient({{0, k, 0}, {k, k - 1, n - 2 * k}, {0, k, n - 2 * k - 1}},
                                     {ku, ku, nu - 2 * ku}, {"X", "Y", "Z"});
      if (nu - 2 * ku < 2) throw std::invalid_argument("Z has fewer than two vertices");
      // lambda x = k y
      // lambda y = k x + (k-1) y + (n-2k-2) z + 2 t
      // lambda z = k y + (n-2k-3) z + 2 t
      // lambda t = k y + (n-2k-2) z
      return detail::make_quotient({{0, k, 0, 0},
                                    {k, k - 1, n - 2 * k - 2, 2},
                                    {0, k, n - 2 * k - 3, 2},
                                    {0, k, n - 2 * k - 2, 0}},
                                   {ku, ku, nu - 2 * ku - 2, 2}, {"X", "Y", "Z'", "T"});
    case Family::L:
      if (del == DeletedEdge::none)
        return detail::make_quotient({{k - 1, 1, 0}, {k, 0, n - k - 1}, {0, 1, n - k - 2}}, {ku, 1, nu - ku - 1},
                                     {"X", "w", "Z"});
      if (nu - ku - 1 < 2) throw std::invalid_argument("Z has fewer than two vertices");
      return detail::make_quotient({{k - 1, 1, 0, 0},
                                    {k, 0, n - k - 3, 2},
                                    {0, 1, n - k - 4, 2},
                                    {0, 1, n - k - 3, 0}},
                                   {ku, 1, nu - ku - 3, 2}, {"X", "w", "Z'", "T"});
    case Family::B:
      if (del == DeletedEdge::none)
        return detail::make_quotient({{0, k, 0, 0}, {k, 0, n - k, 0}, {0, k, 0, n - k}, {0, 0, n - k, 0}},
                                     {ku, ku, nu - ku, nu - ku}, {"W", "X", "Y", "Z"});
      if (del == DeletedEdge::YZ)
        // lambda w = k x
        // lambda x = k w + (n-k-1) y + s
        // lambda y = k x + t + (n-k-1) z
        // lambda z = (n-k-1) y + s
        // lambda s = k x + (n-k-1) z
        // lambda t = (n-k-1) y
        return detail::make_quotient({{0, k, 0, 0, 0, 0},
                                      {k, 0, n - k - 1, 0, 1, 0},
                                      {0, k, 0, n - k - 1, 0, 1},
                                      {0, 0, n - k - 1, 0, 1, 0},
                                      {0, k, 0, n - k - 1, 0, 0},
                                      {0, 0, n - k - 1, 0, 0, 0}},
                                     {ku, ku, nu - ku - 1, nu - ku - 1, 1, 1}, {"W", "X", "Y'", "Z'", "s", "t"});
      // u in X, v in Y
      return detail::make_quotient({{0, k - 1, 1, 0, 0, 0},
                                    {k, 0, 0, n - k - 1, 1, 0},
                                    {k, 0, 0, n - k - 1, 0, 0},
                                    {0, k - 1, 1, 0, 0, n - k},
                                    {0, k - 1, 0, 0, 0, n - k},
                                    {0, 0, 0, n - k - 1, 1, 0}},
                                   {ku, ku - 1, 1, nu - ku - 1, 1, nu - ku}, {"W", "X'", "u", "Y'", "v", "Z"});
  }
  throw std::logic_error("unknown family");
}

/// det(x I - m) with integer coefficients (Faddeev-LeVerrier; every division is exact).
inline IntPoly characteristic_polynomial(const QuotientMatrix& q) {
  const auto d = q.m.rows();
  using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  IMat a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const double v = q.m(i, j);
      if (v != std::round(v)) throw std::invalid_argument("quotient entries must be integers");
      a(i, j) = static_cast<std::int64_t>(std::llround(v));
    }
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[static_cast<std::size_t>(d)] = 1;
  IMat mk = IMat::Zero(d, d);
  for (Eigen::Index k = 1; k <= d; ++k) {
    mk = a * mk;
    mk.diagonal().array() += c[static_cast<std::size_t>(d - k + 1)];
    const IMat am = a * mk;
    c[static_cast<std::size_t>(d - k)] = -am.trace() / k;
  }
  return IntPoly(std::move(c));
}

namespace detail {

// x > rho(m) for nonnegative m iff x I - m is a nonsingular M-matrix, i.e. all
// pivots of Gaussian elimination without pivoting are positive.
inline bool above_perron_root(const Eigen::MatrixXd& m, double x) {
  Eigen::MatrixXd a = -m;
  a.diagonal().array() += x;
  const auto d = a.rows();
  for (Eigen::Index p = 0; p < d; ++p) {
    if (!(a(p, p) > 0)) return false;
    for (Eigen::Index i = p + 1; i < d; ++i) {
      const double f = a(i, p) / a(p, p);
      a.row(i).tail(d - p) -= f * a.row(p).tail(d - p);
    }
  }
  return true;
}

// sign of det(x I - m) from an LU factorization with partial pivoting.
inline int char_poly_sign(const Eigen::MatrixXd& m, double x) {
  Eigen::MatrixXd a = -m;
  a.diagonal().array() += x;
  const double det = a.partialPivLu().determinant();
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

}  // namespace detail

class bracket_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest real eigenvalue of the quotient, by bisection to width `width`.
///
/// The bisection predicate is positivity of the leading principal minors of
/// x I - m; the final bracket is checked for a sign change of the
/// characteristic polynomial det(x I - m). A missing sign change means m is
/// not the quotient of a connected graph (Perron root not simple).
inline double quotient_lambda(const QuotientMatrix& q, double width = 1e-12) {
  const auto d = q.m.rows();
  if (d == 0) throw std::invalid_argument("empty quotient");
  double hi = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j)
      if (q.m(i, j) < 0) throw std::invalid_argument("quotient has a negative entry");
    hi = std::max(hi, q.m.row(i).sum());
  }
  hi += 1.0;
  double lo = 0.0;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (detail::above_perron_root(q.m, mid) ? hi : lo) = mid;
  }
  if (d == 1) return 0.5 * (lo + hi);
  const double pad = std::max(width, 1e-9 * hi);
  if (detail::char_poly_sign(q.m, hi + pad) <= 0 || detail::char_poly_sign(q.m, lo - pad) >= 0)
    throw bracket_error("characteristic polynomial has no sign change at the Perron root; "
                        "quotient is malformed");
  return 0.5 * (lo + hi);
}

/// Right Perron vector of the quotient (the class values of the Perron vector
/// of the source graph), scaled so its largest entry is 1.
inline std::vector<double> perron_class_values(const QuotientMatrix& q) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(q.m);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i).real() > es.eigenvalues()(best).real()) best = i;
  std::vector<double> v(static_cast<std::size_t>(q.m.rows()));
  double mx = 0;
  for (Eigen::Index i = 0; i < q.m.rows(); ++i) {
    v[static_cast<std::size_t>(i)] = std::abs(es.eigenvectors()(i, best).real());
    mx = std::max(mx, v[static_cast<std::size_t>(i)]);
  }
  for (double& x : v) x /= mx;
  return v;
}

/// All eigenvalues of the quotient (complex in general; m is not symmetric).
inline std::vector<std::complex<double>> quotient_eigenvalues(const QuotientMatrix& q) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(q.m, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

/// Spectral radius of a family member (optionally minus one edge) from its quotient.
inline double family_lambda(const FamilyParams& p, DeletedEdge del = DeletedEdge::none) {
  return quotient_lambda(quotient_of_family(p, del));
}

}  // namespace hamspec

#endif  // HAMSPEC_QUOTIENT_HPP

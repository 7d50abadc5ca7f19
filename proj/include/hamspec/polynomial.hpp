#ifndef HAMSPEC_POLYNOMIAL_HPP
#define HAMSPEC_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamspec {

/// Dense univariate polynomial, coefficients stored lowest degree first.
template <typename T>
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(T coeff, std::size_t power) {
    std::vector<T> c(power + 1, T{0});
    c[power] = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T{0}; }
  T leading() const { return c_.empty() ? T{0} : c_.back(); }

  template <typename U>
  U operator()(U x) const {
    U acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<U>(*it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{0});
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{0});
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T{0});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == T{0}) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<std::int64_t>;

/// The quartic whose largest root is the spectral radius of N(n,k) minus a
/// Z-Z edge, in expanded monic form:
///   f(x) = ((x - n + 2k + 1)(x + 2) + 2)(x^2 + x - k^2) - k x (x + 1)(x + 2).
/// Multiplying the reduced eigenequation by x(x+1)(x+2) clears its
/// denominators, so the coefficients are integers in n and k.
inline IntPoly quartic_f(std::int64_t n, std::int64_t k) {
  const std::int64_t a = n - 2 * k - 1;
  const IntPoly lin_a{-a, 1}, x_plus_2{2, 1}, x_plus_1{1, 1}, x{0, 1};
  const IntPoly first = lin_a * x_plus_2 + IntPoly{2};
  const IntPoly second{-k * k, 1, 1};
  return first * second - IntPoly{k} * x * x_plus_1 * x_plus_2;
}

/// g(x) = 2x^2 - (k^3 + 4k + 2)x + k^4 - k^3 + 2k; equals f(n-k-1) at x = n.
inline IntPoly quadratic_g(std::int64_t k) {
  return IntPoly{k * k * k * k - k * k * k + 2 * k, -(k * k * k + 4 * k + 2), 2};
}

/// Exact evaluation at integer points.
inline std::int64_t eval_f(std::int64_t n, std::int64_t k, std::int64_t x) { return quartic_f(n, k)(x); }
inline std::int64_t eval_g(std::int64_t k, std::int64_t x) { return quadratic_g(k)(x); }

inline long double eval_f(std::int64_t n, std::int64_t k, long double x) { return quartic_f(n, k)(x); }
inline long double eval_g(std::int64_t k, long double x) { return quadratic_g(k)(x); }

struct Interval {
  long double lo;
  long double hi;
  long double width() const { return hi - lo; }
  long double mid() const { return (lo + hi) / 2; }
};

class regime_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Smallest integer n with 2n >= k^3 + 2k + 5, i.e. n >= k^3/2 + k + 5/2.
inline std::int64_t prop_threshold_n(std::int64_t k) { return (k * k * k + 2 * k + 5 + 1) / 2; }

/// Brackets a root of f inside (n-k-2, n-k-1) by bisection on the exact sign
/// change f(n-k-2) < 0 < f(n-k-1), narrowed to width <= `width`.
///
/// Throws regime_error when the endpoint signs do not straddle zero, which is
/// what happens below the order threshold.
inline Interval isolate_f_root(std::int64_t n, std::int64_t k, long double width = 1e-10L) {
  const IntPoly f = quartic_f(n, k);
  const std::int64_t a = n - k - 2, b = n - k - 1;
  const std::int64_t fa = f(a), fb = f(b);
  if (!(fa < 0 && fb > 0))
    throw regime_error("f has no certified sign change on (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") for n=" + std::to_string(n) + " k=" + std::to_string(k) + ": f(n-k-2)=" +
                       std::to_string(fa) + ", f(n-k-1)=" + std::to_string(fb));
  Interval iv{static_cast<long double>(a), static_cast<long double>(b)};
  while (iv.width() > width) {
    const long double m = iv.mid();
    if (m <= iv.lo || m >= iv.hi) break;
    if (f(m) < 0)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return iv;
}

}  // namespace hamspec

#endif  // HAMSPEC_POLYNOMIAL_HPP

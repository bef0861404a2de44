#pragma once

// Orthonormal shifted Legendre polynomials on [0,1] and Gauss-Legendre
// quadrature mapped to [0,1].

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seminormal {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in (0,1)
  std::vector<double> weights;  // sum to 1
};

namespace detail {

// P_n(t) and P_n'(t) for the standard Legendre polynomial on [-1,1].
inline std::pair<double, double> legendre_with_derivative(int n, double t) {
  double p0 = 1.0, p1 = t;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (t * p1 - p0) / (t * t - 1.0)};
}

}  // namespace detail

/// N-point Gauss-Legendre rule on [0,1]; exact for polynomials of degree <= 2N-1.
inline QuadratureRule gauss_legendre(int points) {
  if (points < 1) throw std::domain_error("gauss_legendre: need at least one node");
  const auto n = static_cast<std::size_t>(points);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (points + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = detail::legendre_with_derivative(points, t);
      const double step = p / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double dp = detail::legendre_with_derivative(points, t).second;
    const double w = 1.0 / ((1.0 - t * t) * dp * dp);  // half the [-1,1] weight
    rule.nodes[i] = 0.5 * (1.0 - t);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + t);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace detail {

inline void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("shifted Legendre: x = " + std::to_string(x) + " outside [0,1]");
  }
}

}  // namespace detail

/// Values of the orthonormal shifted Legendre polynomials P~_0..P~_{count-1} at x,
/// P~_k(x) = sqrt(2k+1) P_k(2x - 1).
inline std::vector<double> shifted_legendre_values(int count, double x) {
  detail::require_unit_interval(x);
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return out;
  const double t = 2.0 * x - 1.0;
  double p0 = 1.0, p1 = t;
  out[0] = 1.0;
  for (int k = 1; k < count; ++k) {
    if (k > 1) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    out[static_cast<std::size_t>(k)] = std::sqrt(2.0 * k + 1.0) * p1;
  }
  return out;
}

inline double shifted_legendre_eval(int degree, double x) {
  if (degree < 0) throw std::domain_error("shifted_legendre_eval: negative degree");
  return shifted_legendre_values(degree + 1, x).back();
}

/// The first n orthonormal shifted Legendre polynomials. P~_1(x) = sqrt(3)(2x-1),
/// which is the negative of the e_2 = sqrt(3)(1-2x) used in the Volterra example.
class LegendreBasis {
 public:
  explicit LegendreBasis(int n) : n_(n) {
    if (n < 1) throw std::domain_error("LegendreBasis: need n >= 1");
  }

  int size() const { return n_; }
  double eval(int k, double x) const { return shifted_legendre_eval(k, x); }
  std::vector<double> values(double x) const { return shifted_legendre_values(n_, x); }

  /// Evaluates sum_k coeffs[k] P~_k(x) for real coefficients.
  template <typename Coeffs>
  double expand(const Coeffs& coeffs, double x) const {
    const auto v = values(x);
    double s = 0.0;
    for (int k = 0; k < n_; ++k) s += coeffs[k] * v[static_cast<std::size_t>(k)];
    return s;
  }

 private:
  int n_;
};

}  // namespace seminormal

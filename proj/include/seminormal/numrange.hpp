#pragma once

// Numerical range W(A) = {<Ax,x> : ||x|| = 1} via the support function: for
// each direction theta the top eigenpair of Re(e^{i theta} A) gives the
// supporting line and a boundary point attaining it.

#include "seminormal/convex_hull.hpp"
#include "seminormal/operator_core.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seminormal {

struct BoundaryPoint {
  double theta = 0.0;    // radians, in [0, 2pi)
  double support = 0.0;  // max eigenvalue of the rotated Hermitian part
  Complex point;         // <A x, x> for the maximizing unit vector
};

struct NumericalRangeBoundary {
  Eigen::Index operator_dim = 0;
  std::vector<BoundaryPoint> samples;  // ordered by theta
  std::vector<Complex> hull;           // counterclockwise extreme points

  std::vector<Complex> points() const {
    std::vector<Complex> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.point);
    return out;
  }

  double distance_to(Complex z) const { return hull_distance(z, hull); }
};

struct RealInterval {
  double a = 0.0;
  double b = 0.0;

  RealInterval() = default;
  RealInterval(double lo, double hi) : a(lo), b(hi) {
    if (!(lo <= hi)) throw std::domain_error("RealInterval: lower endpoint exceeds upper");
  }
  double length() const { return b - a; }
  bool contains(double x) const { return a <= x && x <= b; }
};

inline constexpr int kDefaultAngles = 256;

/// (e^{i theta} A + e^{-i theta} A*) / 2.
inline HermitianOperator hermitian_part_rotated(const Operator& a, double theta) {
  const Complex rot = std::polar(1.0, theta);
  return HermitianOperator(Matrix((rot * a.matrix() + std::conj(rot) * a.matrix().adjoint()) / 2.0));
}

namespace detail {

// Top eigenpair; when the top eigenvalue is repeated the lowest-indexed
// eigenvector of the top cluster is used.
inline std::pair<double, Vector> top_eigenpair(const HermitianOperator& h) {
  const auto eig = hermitian_eigendecomposition(h);
  const double top = eig.max();
  const double scale = std::max(1.0, std::max(std::abs(eig.min()), std::abs(top)));
  std::size_t k = eig.eigenvalues.size() - 1;
  while (k > 0 && top - eig.eigenvalues[k - 1] <= 1e-12 * scale) --k;
  return {top, eig.vector(k)};
}

}  // namespace detail

/// Samples the boundary of W(A) at theta_k = 2 pi k / m, k = 0..m-1.
inline NumericalRangeBoundary numerical_range_boundary(const Operator& a, int m = kDefaultAngles) {
  if (m < 3) throw std::domain_error("numerical_range_boundary: need at least 3 angles");
  NumericalRangeBoundary out;
  out.operator_dim = a.dim();
  out.samples.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / m;
    auto [support, x] = detail::top_eigenpair(hermitian_part_rotated(a, theta));
    out.samples.push_back({theta, support, quadratic_form(a, x)});
  }
  out.hull = convex_hull(out.points());
  return out;
}

/// [lambda_min, lambda_max]; the numerical range of a self-adjoint operator.
inline RealInterval numerical_range_interval(const HermitianOperator& h) {
  const auto eig = hermitian_eigendecomposition(h);
  return {eig.min(), eig.max()};
}

/// Endpoint test against an interval with an explicit tolerance scale.
inline bool is_extreme_point(const RealInterval& range, double lambda, double tol, double scale) {
  detail::require_positive_tol(tol, "is_extreme_point");
  return std::abs(lambda - range.a) <= tol * scale || std::abs(lambda - range.b) <= tol * scale;
}

/// Extreme points of W(H) = [lambda_min, lambda_max] are its endpoints. The
/// comparison is made at scale max(1, ||H||).
inline bool is_extreme_point(const HermitianOperator& h, double lambda, double tol) {
  const auto range = numerical_range_interval(h);
  const double scale = std::max({1.0, std::abs(range.a), std::abs(range.b)});
  return is_extreme_point(range, lambda, tol, scale);
}

/// x in M_lambda(A) = {x : <Ax,x> = lambda ||x||^2}. The zero vector always is.
inline bool m_lambda_membership(const Operator& a, Complex lambda, const Vector& x, double tol) {
  detail::require_positive_tol(tol, "m_lambda_membership");
  detail::require_dims(a.dim(), x.size(), "m_lambda_membership");
  const double nx2 = x.squaredNorm();
  return std::abs(quadratic_form(a, x) - lambda * nx2) <= tol * (1.0 + operator_norm(a)) * nx2;
}

inline bool m_lambda_membership(const HermitianOperator& h, Complex lambda, const Vector& x,
                                double tol) {
  return m_lambda_membership(h.base(), lambda, x, tol);
}

/// When lambda is an endpoint of W(H), M_lambda(H) is the eigenspace at that
/// endpoint. Interior lambda is rejected: M_lambda is not linear there.
inline SubspaceBasis m_lambda_subspace(const HermitianOperator& h, double lambda, double tol) {
  detail::require_positive_tol(tol, "m_lambda_subspace");
  const auto eig = hermitian_eigendecomposition(h);
  const RealInterval range{eig.min(), eig.max()};
  const double scale = std::max({1.0, std::abs(range.a), std::abs(range.b)});
  if (!is_extreme_point(range, lambda, tol, scale)) {
    throw std::domain_error("m_lambda_subspace: lambda is not an endpoint of W(H)");
  }
  const double endpoint =
      std::abs(lambda - range.a) <= std::abs(lambda - range.b) ? range.a : range.b;

  std::vector<Eigen::Index> picked;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    if (std::abs(eig.eigenvalues[k] - endpoint) <= tol * scale) {
      picked.push_back(static_cast<Eigen::Index>(k));
    }
  }
  Matrix cols(h.dim(), static_cast<Eigen::Index>(picked.size()));
  for (std::size_t c = 0; c < picked.size(); ++c) {
    cols.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors.col(picked[c]);
  }
  return SubspaceBasis(h.dim(), std::move(cols));
}

struct LinearityWitness {
  Vector x;
  Vector y;
};

/// For lambda strictly inside W(H) returns x, y in M_lambda(H) whose sum is
/// not in M_lambda(H). Built from the extreme eigenvectors v_min, v_max as
/// x = a v_min + b v_max, y = a v_min - b v_max with
/// a^2 (lambda_min - lambda) + b^2 (lambda_max - lambda) = 0, a^2 + b^2 = 1.
/// Returns nullopt at (or outside) the endpoints, where M_lambda is a subspace.
inline std::optional<LinearityWitness> linearity_witness(const HermitianOperator& h, double lambda,
                                                         double tol = 1e-9) {
  const auto eig = hermitian_eigendecomposition(h);
  const double lo = eig.min();
  const double hi = eig.max();
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  if (!(lambda - lo > tol * scale && hi - lambda > tol * scale)) return std::nullopt;

  const double alpha = std::sqrt((hi - lambda) / (hi - lo));
  const double beta = std::sqrt((lambda - lo) / (hi - lo));
  const Vector v_min = eig.vector(0);
  const Vector v_max = eig.vector(eig.eigenvalues.size() - 1);
  return LinearityWitness{alpha * v_min + beta * v_max, alpha * v_min - beta * v_max};
}

}  // namespace seminormal

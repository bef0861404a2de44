#pragma once

// The Volterra integration operator (Vf)(x) = int_0^x f(t) dt on L^2(0,1),
// discretized in the orthonormal shifted Legendre basis.
//
// Coordinates are taken in the basis P~_0, P~_1, ... . The functions
//   e1 = 1                 -> ( 1,  0, 0, ...)
//   e2 = sqrt(3)(1 - 2x)   -> ( 0, -1, 0, ...)   (e2 = -P~_1)
// and the canonical pair u1 = (e1 + e2)/sqrt2, u2 = (e1 - e2)/sqrt2
// diagonalize the self-commutator:
//   C(V) f = gamma (<f,u1> u1 - <f,u2> u2),   gamma = 1/(2 sqrt3).

#include "seminormal/legendre.hpp"
#include "seminormal/operator_core.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace seminormal::volterra {

/// 1/(2 sqrt 3): the nonzero eigenvalue magnitude of C(V).
inline const double kGamma = 1.0 / (2.0 * std::sqrt(3.0));
/// Spectrum magnitude as printed in the original example, kept for reporting only.
inline const double kStatedSpectrum = std::sqrt(6.0) / 2.0;

enum class GalerkinTarget { Volterra, CommutatorKernel, Midpoint };

struct GalerkinMatrix {
  Operator op;
  LegendreBasis basis;
  GalerkinTarget target;
};

namespace detail {

inline void require_dim(int n, int min, const char* what) {
  if (n < min) {
    throw std::domain_error(std::string(what) + ": dimension must be at least " + std::to_string(min));
  }
}

// Gauss nodes sufficient for the products of two degree < n polynomials and
// one extra degree from integration.
inline QuadratureRule galerkin_rule(int n) { return gauss_legendre((2 * n + 2 + 1) / 2 + 2); }

}  // namespace detail

/// M(i,j) = <V P~_j, P~_i> = int_0^1 P~_i(x) int_0^x P~_j(t) dt dx.
inline GalerkinMatrix volterra_galerkin(int n) {
  detail::require_dim(n, 2, "volterra_galerkin");
  const LegendreBasis basis(n);
  const QuadratureRule rule = detail::galerkin_rule(n);
  const std::size_t q = rule.nodes.size();

  Matrix m = Matrix::Zero(n, n);
  for (std::size_t a = 0; a < q; ++a) {
    const double x = rule.nodes[a];
    // (V P~_j)(x) by the same rule mapped onto [0, x].
    std::vector<double> primitive(static_cast<std::size_t>(n), 0.0);
    for (std::size_t b = 0; b < q; ++b) {
      const auto vals = basis.values(x * rule.nodes[b]);
      for (int j = 0; j < n; ++j) primitive[static_cast<std::size_t>(j)] += x * rule.weights[b] * vals[static_cast<std::size_t>(j)];
    }
    const auto outer = basis.values(x);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) += rule.weights[a] * outer[static_cast<std::size_t>(i)] * primitive[static_cast<std::size_t>(j)];
      }
    }
  }
  return {Operator(std::move(m)), basis, GalerkinTarget::Volterra};
}

/// Galerkin matrix of the integral operator with kernel k(x,s) = 1 - x - s,
/// which is V*V - VV* on L^2(0,1).
inline HermitianOperator commutator_kernel_galerkin(int n) {
  detail::require_dim(n, 2, "commutator_kernel_galerkin");
  const LegendreBasis basis(n);
  const QuadratureRule rule = detail::galerkin_rule(n);
  const std::size_t q = rule.nodes.size();

  std::vector<std::vector<double>> vals(q);
  for (std::size_t a = 0; a < q; ++a) vals[a] = basis.values(rule.nodes[a]);

  Matrix m = Matrix::Zero(n, n);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const double k = rule.weights[a] * rule.weights[b] * (1.0 - rule.nodes[a] - rule.nodes[b]);
      for (int i = 0; i < n; ++i) {
        const double ki = k * vals[a][static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) m(i, j) += ki * vals[b][static_cast<std::size_t>(j)];
      }
    }
  }
  return HermitianOperator(m);
}

struct CanonicalPair {
  Vector e1;
  Vector e2;
  Vector u1;
  Vector u2;
  double gamma = kGamma;

  Eigen::Index dim() const { return u1.size(); }
};

/// Residual ||C - gamma (u1 u1* - u2 u2*)||_F.
inline double canonical_residual(const HermitianOperator& c, const CanonicalPair& p) {
  const Matrix model = p.gamma * (p.u1 * p.u1.adjoint() - p.u2 * p.u2.adjoint());
  return (c.matrix() - model).norm();
}

inline CanonicalPair canonical_pair(int n) {
  detail::require_dim(n, 2, "canonical_pair");
  CanonicalPair p;
  p.e1 = Vector::Zero(n);
  p.e2 = Vector::Zero(n);
  p.e1(0) = 1.0;
  p.e2(1) = -1.0;
  p.u1 = (p.e1 + p.e2) / std::sqrt(2.0);
  p.u2 = (p.e1 - p.e2) / std::sqrt(2.0);

  const double residual = canonical_residual(commutator_kernel_galerkin(n), p);
  if (!(residual <= 1e-12)) {
    throw std::logic_error("canonical_pair: reconstruction residual " + std::to_string(residual));
  }
  return p;
}

/// Value at x of the function with real Legendre coordinates `coords`.
inline double evaluate(const Vector& coords, double x) {
  const auto vals = shifted_legendre_values(static_cast<int>(coords.size()), x);
  double s = 0.0;
  for (Eigen::Index k = 0; k < coords.size(); ++k) s += coords(k).real() * vals[static_cast<std::size_t>(k)];
  return s;
}

/// f in E(V) iff |<f,u1>| = |<f,u2>|.
inline bool e_v_membership(const Vector& f, const CanonicalPair& p, double tol) {
  seminormal::detail::require_positive_tol(tol, "e_v_membership");
  seminormal::detail::require_dims(p.dim(), f.size(), "e_v_membership");
  const double d = std::norm(inner(f, p.u1)) - std::norm(inner(f, p.u2));
  return std::abs(d) <= tol * f.squaredNorm();
}

/// Orthonormal basis of L_phi, the orthocomplement of u1 - e^{i phi} u2.
inline SubspaceBasis l_phi_basis(double phi, int n) {
  detail::require_dim(n, 2, "l_phi_basis");
  const CanonicalPair p = canonical_pair(n);
  Vector w = p.u1 - std::polar(1.0, phi) * p.u2;
  w.normalize();
  return orthogonal_complement(SubspaceBasis(n, Matrix(w)));
}

/// The phi in [0, 2pi) with f in L_phi, i.e. <f,u1> = e^{-i phi} <f,u2>.
/// nullopt when both coefficients vanish, since f then lies in every L_phi.
inline std::optional<double> phi_from_vector(const Vector& f, const CanonicalPair& p, double tol) {
  if (!e_v_membership(f, p, tol)) {
    throw std::domain_error("phi_from_vector: vector is not in E(V)");
  }
  const Complex c1 = inner(f, p.u1);
  const Complex c2 = inner(f, p.u2);
  const double fn = f.norm();
  if (std::abs(c1) <= tol * fn && std::abs(c2) <= tol * fn) return std::nullopt;

  constexpr double two_pi = 2.0 * std::numbers::pi;
  double phi = std::fmod(std::arg(c2) - std::arg(c1), two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  return phi;
}

/// h (L + I/2) with h = 1/m and L strictly lower triangular ones: the composite
/// midpoint rule for V at x_i = (i - 1/2) h.
inline Operator midpoint_discretization(int m) {
  detail::require_dim(m, 2, "midpoint_discretization");
  const double h = 1.0 / m;
  Matrix k = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) k(i, j) = h;
    k(i, i) = h / 2.0;
  }
  return Operator(std::move(k));
}

struct CommutatorSpectrumReport {
  int n = 0;
  int midpoint_grid = 0;
  std::vector<double> kernel_spectrum;     // exact Galerkin of C(V)
  std::vector<double> truncated_spectrum;  // C(V_n) for the truncated V_n
  std::vector<double> midpoint_spectrum;   // C of the midpoint discretization
  double analytic_extreme = kGamma;
  double stated_extreme = kStatedSpectrum;

  bool stated_value_mismatch() const { return std::abs(analytic_extreme - stated_extreme) > 1e-6; }
};

inline CommutatorSpectrumReport commutator_spectrum_report(int n, int midpoint_grid = 256) {
  detail::require_dim(n, 4, "commutator_spectrum_report");
  CommutatorSpectrumReport r;
  r.n = n;
  r.midpoint_grid = midpoint_grid;
  r.kernel_spectrum = hermitian_eigendecomposition(commutator_kernel_galerkin(n)).eigenvalues;
  r.truncated_spectrum =
      hermitian_eigendecomposition(self_commutator(volterra_galerkin(n).op)).eigenvalues;
  r.midpoint_spectrum =
      hermitian_eigendecomposition(self_commutator(midpoint_discretization(midpoint_grid))).eigenvalues;
  return r;
}

}  // namespace seminormal::volterra

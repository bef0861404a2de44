#pragma once

// Dense complex operators on C^n: adjoint, self-commutator, quadratic forms,
// Hermitian eigendecomposition and SVD null spaces.
//
// Inner product convention used throughout the library:
//
//     <x, y> = sum_i x_i * conj(y_i)
//
// i.e. linear in the first argument and conjugate-linear in the second.
// Eigen's a.dot(b) is conjugate-linear in its FIRST argument, so
// <x, y> == y.dot(x).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seminormal {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Raised whenever operand dimensions disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_dims(Eigen::Index expected, Eigen::Index got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

inline void require_positive_tol(double tol, const char* what) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::domain_error(std::string(what) + ": tolerance must be positive and finite");
  }
}

// Rotate v so that its first component of modulus > 1e-8 is real positive.
inline void fix_phase(Eigen::Ref<Vector> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mod = std::abs(v(i));
    if (mod > 1e-8) {
      v *= std::conj(v(i)) / mod;
      v(i) = Complex(mod, 0.0);
      return;
    }
  }
}

}  // namespace detail

/// <x, y>, linear in x.
inline Complex inner(const Vector& x, const Vector& y) {
  detail::require_dims(x.size(), y.size(), "inner");
  return y.dot(x);
}

/// A bounded operator on C^n stored as a dense square matrix.
class Operator {
 public:
  Operator() = default;

  explicit Operator(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
      throw DimensionError("Operator: matrix is " + std::to_string(m_.rows()) + "x" +
                           std::to_string(m_.cols()) + ", expected square");
    }
    if (!m_.allFinite()) {
      throw std::domain_error("Operator: entries must be finite");
    }
  }

  static Operator zero(Eigen::Index n) { return Operator(Matrix::Zero(n, n)); }
  static Operator identity(Eigen::Index n) { return Operator(Matrix::Identity(n, n)); }

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  Vector apply(const Vector& x) const {
    detail::require_dims(dim(), x.size(), "Operator::apply");
    return m_ * x;
  }

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.dim() == b.dim() && a.m_ == b.m_;
  }

 private:
  Matrix m_;
};

/// Self-adjoint operator. The constructor symmetrizes its input, H <- (H + H*)/2.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  explicit HermitianOperator(const Operator& op)
      : base_(Matrix((op.matrix() + op.matrix().adjoint()) / 2.0)) {}

  explicit HermitianOperator(const Matrix& m) : HermitianOperator(Operator(m)) {}

  Eigen::Index dim() const { return base_.dim(); }
  const Operator& base() const { return base_; }
  const Matrix& matrix() const { return base_.matrix(); }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return base_(i, j); }

 private:
  Operator base_;
};

/// Orthonormal frame of k vectors in C^n, stored as the columns of an n x k matrix.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(Eigen::Index ambient_dim, Matrix columns)
      : ambient_(ambient_dim), cols_(std::move(columns)) {
    if (cols_.cols() > 0) {
      detail::require_dims(ambient_, cols_.rows(), "SubspaceBasis");
    } else {
      cols_.resize(ambient_, 0);
    }
  }

  static SubspaceBasis empty(Eigen::Index ambient_dim) {
    return SubspaceBasis(ambient_dim, Matrix(ambient_dim, 0));
  }

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index size() const { return cols_.cols(); }
  bool is_empty() const { return cols_.cols() == 0; }
  const Matrix& columns() const { return cols_; }
  Vector vector(Eigen::Index k) const { return cols_.col(k); }

  /// Orthogonal projector onto the span.
  Matrix projector() const { return cols_ * cols_.adjoint(); }

  /// Largest deviation of the Gram matrix from the identity.
  double orthonormality_defect() const {
    if (is_empty()) return 0.0;
    const Matrix gram = cols_.adjoint() * cols_;
    return (gram - Matrix::Identity(size(), size())).cwiseAbs().maxCoeff();
  }

 private:
  Eigen::Index ambient_ = 0;
  Matrix cols_;
};

inline double norm_squared(const Vector& x) { return x.squaredNorm(); }

/// Spectral norm (largest singular value).
inline double operator_norm(const Operator& a) {
  if (a.dim() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a.matrix());
  return svd.singularValues()(0);
}

inline double frobenius_norm(const Operator& a) { return a.matrix().norm(); }

inline Operator adjoint(const Operator& a) { return Operator(a.matrix().adjoint()); }

/// C(A) = A*A - AA*.
inline HermitianOperator self_commutator(const Operator& a) {
  const Matrix& m = a.matrix();
  const Matrix ad = m.adjoint();
  return HermitianOperator(Matrix(ad * m - m * ad));
}

/// <Ax, x>.
inline Complex quadratic_form(const Operator& a, const Vector& x) {
  detail::require_dims(a.dim(), x.size(), "quadratic_form");
  return x.dot(a.matrix() * x);
}

inline Complex quadratic_form(const HermitianOperator& h, const Vector& x) {
  return quadratic_form(h.base(), x);
}

/// ||Ax||^2 - ||A*x||^2, which equals <C(A)x, x>.
inline double norm_defect(const Operator& a, const Vector& x) {
  detail::require_dims(a.dim(), x.size(), "norm_defect");
  return (a.matrix() * x).squaredNorm() - (a.matrix().adjoint() * x).squaredNorm();
}

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column k belongs to eigenvalues[k]

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  Vector vector(std::size_t k) const { return eigenvectors.col(static_cast<Eigen::Index>(k)); }
};

/// Eigenvalues come back ascending; each eigenvector has its first component of
/// modulus above 1e-8 rotated to the positive real axis.
inline EigenDecomposition hermitian_eigendecomposition(const HermitianOperator& h) {
  EigenDecomposition out;
  if (h.dim() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigendecomposition: eigensolver did not converge");
  }
  const auto& vals = solver.eigenvalues();
  out.eigenvalues.assign(vals.data(), vals.data() + vals.size());
  out.eigenvectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < out.eigenvectors.cols(); ++k) {
    detail::fix_phase(out.eigenvectors.col(k));
  }
  return out;
}

/// Orthonormal basis of {x : ||Ax|| <= tol * ||A|| * ||x||}. Rank is decided by
/// thresholding singular values at tol * sigma_max; the zero operator has
/// the whole space as its null space.
inline SubspaceBasis null_space(const Operator& a, double tol = 1e-9) {
  detail::require_positive_tol(tol, "null_space");
  const Eigen::Index n = a.dim();
  if (n == 0) return SubspaceBasis::empty(0);

  Eigen::JacobiSVD<Matrix> svd(a.matrix(), Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma(0);
  if (sigma_max == 0.0) {
    return SubspaceBasis(n, Matrix::Identity(n, n));
  }

  Eigen::Index rank = 0;
  while (rank < n && sigma(rank) > tol * sigma_max) ++rank;

  Matrix basis = svd.matrixV().rightCols(n - rank);
  for (Eigen::Index k = 0; k < basis.cols(); ++k) detail::fix_phase(basis.col(k));
  return SubspaceBasis(n, std::move(basis));
}

/// Orthonormal basis of the orthogonal complement of span(basis) in C^n.
inline SubspaceBasis orthogonal_complement(const SubspaceBasis& basis) {
  const Eigen::Index n = basis.ambient_dim();
  const Eigen::Index k = basis.size();
  if (k == 0) return SubspaceBasis(n, Matrix::Identity(n, n));
  if (k == n) return SubspaceBasis::empty(n);

  Eigen::HouseholderQR<Matrix> qr(basis.columns());
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix rest = q.rightCols(n - k);
  for (Eigen::Index c = 0; c < rest.cols(); ++c) detail::fix_phase(rest.col(c));
  return SubspaceBasis(n, std::move(rest));
}

}  // namespace seminormal

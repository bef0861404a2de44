#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include "seminormal/operator_core.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace seminormal::testkit {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

inline Vector random_vector(Eigen::Index n, Rng& rng) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = gaussian_complex(rng);
  return v;
}

inline Vector random_unit_vector(Eigen::Index n, Rng& rng) { return random_vector(n, rng).normalized(); }

inline Matrix random_matrix(Eigen::Index n, Rng& rng) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gaussian_complex(rng);
  return m;
}

inline Matrix random_unitary(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, rng));
  return qr.householderQ() * Matrix::Identity(n, n);
}

/// U diag(d) U* with random complex eigenvalues d.
inline Matrix random_normal(Eigen::Index n, Rng& rng) {
  const Matrix u = random_unitary(n, rng);
  const Vector d = random_vector(n, rng);
  return u * d.asDiagonal() * u.adjoint();
}

inline Matrix random_hermitian(Eigen::Index n, Rng& rng) {
  const Matrix m = random_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

enum class SampleKind { General, Normal, Hermitian, ScaledGeneral };

struct Sample {
  SampleKind kind;
  Operator a;
  Vector x;
};

/// The seeded (A, x) suite: n in {2..16}, cycling general, normal, Hermitian
/// and widely scaled general matrices.
inline std::vector<Sample> random_suite(std::size_t count = 500, std::uint64_t seed = 20240601) {
  Rng rng(seed);
  std::uniform_int_distribution<int> dim(2, 16);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const int n = dim(rng);
    Sample s{static_cast<SampleKind>(k % 4), Operator(), Vector()};
    switch (s.kind) {
      case SampleKind::General: s.a = Operator(random_matrix(n, rng)); break;
      case SampleKind::Normal: s.a = Operator(random_normal(n, rng)); break;
      case SampleKind::Hermitian: s.a = Operator(random_hermitian(n, rng)); break;
      case SampleKind::ScaledGeneral:
        s.a = Operator(Matrix(std::pow(10.0, log_scale(rng)) * random_matrix(n, rng)));
        break;
    }
    s.x = random_vector(n, rng);
    out.push_back(std::move(s));
  }
  return out;
}

inline Operator jordan2() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return Operator(m);
}

inline Operator diag(std::initializer_list<Complex> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (auto z : d) v(i++) = z;
  return Operator(Matrix(v.asDiagonal()));
}

inline Vector vec(std::initializer_list<Complex> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (auto z : d) v(i++) = z;
  return v;
}

}  // namespace seminormal::testkit

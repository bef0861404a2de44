#include "seminormal/operator_core.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace seminormal;
using seminormal::testkit::diag;
using seminormal::testkit::jordan2;
using seminormal::testkit::vec;

namespace {

const Complex I{0.0, 1.0};

TEST(Adjoint, TransposesRealMatrix) {
  const Operator a = adjoint(jordan2());
  EXPECT_EQ(a(1, 0), Complex(1.0));
  EXPECT_EQ(a(0, 1), Complex(0.0));
}

TEST(Adjoint, ConjugatesDiagonal) {
  EXPECT_EQ(adjoint(diag({I, 2.0})), diag({-I, 2.0}));
}

TEST(Adjoint, HermitianIsFixedAndInvolutionIsExact) {
  testkit::Rng rng(7);
  const Operator h(testkit::random_hermitian(5, rng));
  EXPECT_EQ(adjoint(h), h);
  const Operator a(testkit::random_matrix(6, rng));
  EXPECT_EQ(adjoint(adjoint(a)), a);
}

TEST(Operator, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(Operator(Matrix::Zero(2, 3)), DimensionError);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::nan("");
  EXPECT_THROW(Operator{m}, std::domain_error);
}

TEST(HermitianOperator, SymmetrizesInput) {
  Matrix m(2, 2);
  m << 1.0, Complex(2.0, 1.0), Complex(2.0, -1.0 + 1e-14), 3.0;
  const HermitianOperator h(m);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
}

TEST(SelfCommutator, JordanBlock) {
  const auto c = self_commutator(jordan2());
  EXPECT_TRUE(c.matrix().isApprox(diag({-1.0, 1.0}).matrix()));
}

TEST(SelfCommutator, NormalAndHermitianGiveZero) {
  EXPECT_EQ(self_commutator(diag({1.0, I})).matrix().cwiseAbs().maxCoeff(), 0.0);
  testkit::Rng rng(3);
  const Operator h(testkit::random_hermitian(4, rng));
  EXPECT_LE(self_commutator(h).matrix().cwiseAbs().maxCoeff(), 1e-13);
}

TEST(SelfCommutator, TraceZeroAndAntisymmetricUnderAdjoint) {
  testkit::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Operator a(testkit::random_matrix(2 + trial % 15, rng));
    const double f2 = frobenius_norm(a) * frobenius_norm(a);
    const auto c = self_commutator(a);
    EXPECT_LE(std::abs(c.matrix().trace()), 1e-12 * f2);
    const auto c_adj = self_commutator(adjoint(a));
    EXPECT_LE((c_adj.matrix() + c.matrix()).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, f2));
  }
}

TEST(QuadraticForm, Examples) {
  const Vector x = vec({1.0, 1.0}) / std::sqrt(2.0);
  testkit::Rng rng(5);
  const Vector y = testkit::random_vector(3, rng);
  EXPECT_NEAR(std::abs(quadratic_form(Operator::identity(3), y) - y.squaredNorm()), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(quadratic_form(diag({-1.0, 1.0}), x)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(quadratic_form(jordan2(), x) - 0.5), 0.0, 1e-15);
}

TEST(QuadraticForm, LinearInFirstArgument) {
  // <A(cx), cx> = |c|^2 <Ax,x>, and <x, y> is linear in x.
  testkit::Rng rng(9);
  const Vector x = testkit::random_vector(4, rng);
  const Vector y = testkit::random_vector(4, rng);
  const Complex c(0.3, -1.7);
  EXPECT_LE(std::abs(inner(c * x, y) - c * inner(x, y)), 1e-13);
  EXPECT_LE(std::abs(inner(x, c * y) - std::conj(c) * inner(x, y)), 1e-13);
}

TEST(QuadraticForm, DimensionMismatch) {
  EXPECT_THROW(quadratic_form(jordan2(), Vector::Ones(3)), DimensionError);
  EXPECT_THROW(norm_defect(jordan2(), Vector::Ones(3)), DimensionError);
}

TEST(QuadraticForm, RealOnHermitian) {
  testkit::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianOperator h(testkit::random_matrix(2 + trial % 10, rng));
    const Vector x = testkit::random_vector(h.dim(), rng);
    const double hn = h.matrix().norm();
    EXPECT_LE(std::abs(quadratic_form(h, x).imag()), 1e-12 * hn * x.squaredNorm());
  }
}

TEST(NormDefect, Examples) {
  EXPECT_DOUBLE_EQ(norm_defect(jordan2(), vec({1.0, 0.0})), -1.0);
  EXPECT_NEAR(norm_defect(jordan2(), vec({1.0, 1.0}) / std::sqrt(2.0)), 0.0, 1e-15);
  testkit::Rng rng(17);
  const Operator normal(testkit::random_normal(5, rng));
  const Vector x = testkit::random_vector(5, rng);
  EXPECT_NEAR(norm_defect(normal, x), 0.0, 1e-12 * x.squaredNorm() * frobenius_norm(normal));
}

TEST(HermitianEigen, Examples) {
  const auto d = hermitian_eigendecomposition(HermitianOperator(diag({-1.0, 1.0})));
  EXPECT_DOUBLE_EQ(d.eigenvalues[0], -1.0);
  EXPECT_DOUBLE_EQ(d.eigenvalues[1], 1.0);
  EXPECT_TRUE(d.eigenvectors.isApprox(Matrix::Identity(2, 2)));

  const double g = 1.0 / (2.0 * std::sqrt(3.0));
  Matrix m(2, 2);
  m << 0.0, g, g, 0.0;
  const auto e = hermitian_eigendecomposition(HermitianOperator(m));
  EXPECT_NEAR(e.eigenvalues[0], -0.288675134594812882, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 0.288675134594812882, 1e-15);

  const auto z = hermitian_eigendecomposition(HermitianOperator(Matrix::Zero(3, 3)));
  for (double v : z.eigenvalues) EXPECT_EQ(v, 0.0);
}

TEST(HermitianEigen, ResidualOrderingAndPhase) {
  testkit::Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator h(testkit::random_matrix(2 + trial % 12, rng));
    const auto d = hermitian_eigendecomposition(h);
    const double hn = h.matrix().norm();
    for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
      if (k) {
        EXPECT_LE(d.eigenvalues[k - 1], d.eigenvalues[k]);
      }
      const Vector v = d.vector(k);
      EXPECT_LE((h.matrix() * v - d.eigenvalues[k] * v).norm(), 1e-10 * hn);
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-8) {
          EXPECT_EQ(v(i).imag(), 0.0);
          EXPECT_GT(v(i).real(), 0.0);
          break;
        }
      }
    }
  }
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(null_space(Operator::zero(3)).size(), 3);
  EXPECT_TRUE(null_space(Operator::identity(4)).is_empty());
  const auto k = null_space(diag({0.0, 1.0, 2.0}));
  ASSERT_EQ(k.size(), 1);
  EXPECT_NEAR(std::abs(k.vector(0)(0)), 1.0, 1e-15);
  EXPECT_THROW(null_space(Operator::zero(2), 0.0), std::domain_error);
}

TEST(NullSpace, RankDeficientRandom) {
  testkit::Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 8;
    const int r = 1 + trial % (n - 1);
    const Matrix a = testkit::random_matrix(n, rng).leftCols(r) * testkit::random_matrix(n, rng).topRows(r);
    const Operator op(a);
    const auto k = null_space(op, 1e-9);
    EXPECT_EQ(k.size(), n - r);
    EXPECT_LE(k.orthonormality_defect(), 1e-10);
    for (Eigen::Index c = 0; c < k.size(); ++c) {
      EXPECT_LE((a * k.vector(c)).norm(), 1e-9 * operator_norm(op));
    }
  }
}

TEST(OrthogonalComplement, CompletesBasis) {
  testkit::Rng rng(29);
  const Vector w = testkit::random_unit_vector(5, rng);
  const auto rest = orthogonal_complement(SubspaceBasis(5, Matrix(w)));
  EXPECT_EQ(rest.size(), 4);
  EXPECT_LE(rest.orthonormality_defect(), 1e-12);
  EXPECT_LE((rest.columns().adjoint() * w).norm(), 1e-12);
}

}  // namespace

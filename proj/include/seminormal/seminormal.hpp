#pragma once

// Semi-normality of finite matrices through the self-commutator
// C(A) = A*A - AA*: classification by the position of 0 in W(C(A)),
// E(A) membership, the Stampfli equivalence and its counterexamples, and the
// kernel / M_0 block test.
//
// Every C-related tolerance is measured at scale max(1, ||A||^2).

#include "seminormal/numrange.hpp"
#include "seminormal/operator_core.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace seminormal {

inline constexpr double kDefaultTol = 1e-9;

enum class SeminormalClass { Normal, HyponormalWithinTol, CohyponormalWithinTol, NonSeminormal };

inline std::string_view to_string(SeminormalClass c) {
  switch (c) {
    case SeminormalClass::Normal: return "Normal";
    case SeminormalClass::HyponormalWithinTol: return "HyponormalWithinTol";
    case SeminormalClass::CohyponormalWithinTol: return "CohyponormalWithinTol";
    case SeminormalClass::NonSeminormal: return "NonSeminormal";
  }
  return "?";
}

struct ClassificationReport {
  SeminormalClass cls = SeminormalClass::Normal;
  RealInterval c_interval;  // W(C(A)) = [a, b]
  bool zero_is_extreme = true;
  double product_ab = 0.0;
  double tol_used = kDefaultTol;
  double scale = 1.0;  // max(1, ||A||^2)

  bool is_seminormal() const { return cls != SeminormalClass::NonSeminormal; }
};

inline double commutator_scale(const Operator& a) {
  const double n = operator_norm(a);
  return std::max(1.0, n * n);
}

/// Semi-normal iff 0 is an extreme point of W(C(A)) = [a, b]. With
/// band = tol * max(1, ||A||^2): Normal when both endpoints are inside the
/// band, Hypo/Cohyponormal when only one side of the spectrum leaves it.
inline ClassificationReport classify(const Operator& a, double tol = kDefaultTol) {
  detail::require_positive_tol(tol, "classify");
  const HermitianOperator c = self_commutator(a);
  const RealInterval range = numerical_range_interval(c);

  ClassificationReport r;
  r.c_interval = range;
  r.tol_used = tol;
  r.scale = commutator_scale(a);
  r.product_ab = range.a * range.b;

  const double band = tol * r.scale;
  const bool neg = range.a < -band;
  const bool pos = range.b > band;
  if (neg && pos) {
    r.cls = SeminormalClass::NonSeminormal;
  } else if (pos) {
    r.cls = SeminormalClass::HyponormalWithinTol;
  } else if (neg) {
    r.cls = SeminormalClass::CohyponormalWithinTol;
  } else {
    r.cls = SeminormalClass::Normal;
  }
  r.zero_is_extreme = is_extreme_point(range, 0.0, tol, r.scale);
  return r;
}

/// x in E(A), tested on the squared defect |(||Ax||^2 - ||A*x||^2)| <= tol ||A||^2 ||x||^2.
inline bool e_set_membership(const Operator& a, const Vector& x, double tol) {
  detail::require_positive_tol(tol, "e_set_membership");
  const double norm_a = operator_norm(a);
  return std::abs(norm_defect(a, x)) <= tol * norm_a * norm_a * x.squaredNorm();
}

struct StampfliRecord {
  Vector x;
  bool in_e = false;  // ||Ax|| = ||A*x||
  bool in_n = false;  // C(A)x = 0
  bool consistent = false;  // in_e implies in_n
};

inline StampfliRecord stampfli_check(const Operator& a, const Vector& x, double tol) {
  detail::require_positive_tol(tol, "stampfli_check");
  detail::require_dims(a.dim(), x.size(), "stampfli_check");
  const double norm_a = operator_norm(a);
  const HermitianOperator c = self_commutator(a);

  StampfliRecord rec;
  rec.x = x;
  rec.in_e = e_set_membership(a, x, tol);
  rec.in_n = (c.matrix() * x).norm() <= tol * norm_a * norm_a * x.norm();
  rec.consistent = !rec.in_e || rec.in_n;
  return rec;
}

struct StampfliVerdict {
  bool equivalence_holds = true;
  std::optional<Vector> witness;  // x in E(A) \ N(C(A)), unnormalized
  double form_value = 0.0;        // <C x, x>
  double commutator_image_norm = 0.0;  // ||C x||
  double lambda_pos = 0.0;
  double lambda_neg = 0.0;
};

/// The conditions ||Ax|| = ||A*x|| and A*Ax = AA*x are equivalent for all x
/// exactly when A is semi-normal. Otherwise a witness x = v+ + t v- is
/// returned, where v+/v- are eigenvectors of C(A) for its largest positive and
/// most negative eigenvalues and t = sqrt(lambda+ / -lambda-), so <Cx,x> = 0
/// while ||Cx||^2 = lambda+ (lambda+ - lambda-).
inline StampfliVerdict stampfli_equivalence_scan(const Operator& a, double tol = kDefaultTol) {
  const auto report = classify(a, tol);
  StampfliVerdict v;
  if (report.is_seminormal()) return v;

  const HermitianOperator c = self_commutator(a);
  const auto eig = hermitian_eigendecomposition(c);
  const double lp = eig.max();
  const double ln = eig.min();
  const double t = std::sqrt(lp / -ln);
  Vector x = eig.vector(eig.eigenvalues.size() - 1) + t * eig.vector(0);

  const Vector cx = c.matrix() * x;
  v.equivalence_holds = false;
  v.form_value = quadratic_form(c, x).real();
  v.commutator_image_norm = cx.norm();
  v.lambda_pos = lp;
  v.lambda_neg = ln;

  const double nx2 = x.squaredNorm();
  if (!(std::abs(v.form_value) <= tol * report.scale * nx2) ||
      !(v.commutator_image_norm > tol * report.scale * std::sqrt(nx2))) {
    throw std::logic_error("stampfli_equivalence_scan: witness construction failed");
  }
  v.witness = std::move(x);
  return v;
}

struct KernelM0Report {
  bool equal = false;
  bool reducing = false;
  // Distance from 0 to the sampled W(B), B the compression of A to N(A)^perp.
  // Infinite when N(A)^perp is trivial.
  double b_range_distance = std::numeric_limits<double>::infinity();
  Eigen::Index kernel_dim = 0;
};

/// N(A) = M_0(A) holds iff A = B (+) 0 with 0 outside W(B), either summand
/// possibly absent.
inline KernelM0Report kernel_equals_m0_check(const Operator& a, double tol = kDefaultTol,
                                             int angles = kDefaultAngles) {
  detail::require_positive_tol(tol, "kernel_equals_m0_check");
  const SubspaceBasis kernel = null_space(a, tol);
  const SubspaceBasis rest = orthogonal_complement(kernel);
  const double scale = std::max(1.0, operator_norm(a));

  KernelM0Report r;
  r.kernel_dim = kernel.size();
  if (kernel.is_empty() || rest.is_empty()) {
    r.reducing = true;
  } else {
    const Matrix& q_k = kernel.columns();
    const Matrix& q_r = rest.columns();
    const double leak = (q_k.adjoint() * a.matrix() * q_r).norm();
    const double leak_adj = (q_k.adjoint() * a.matrix().adjoint() * q_r).norm();
    r.reducing = leak <= tol * scale && leak_adj <= tol * scale;
  }

  if (rest.is_empty()) {
    r.equal = r.reducing;
    return r;
  }
  const Operator b(Matrix(rest.columns().adjoint() * a.matrix() * rest.columns()));
  r.b_range_distance = numerical_range_boundary(b, angles).distance_to(Complex(0.0, 0.0));
  r.equal = r.reducing && r.b_range_distance > tol;
  return r;
}

/// lambda is a reducing eigenvalue: its eigenspace is nontrivial and A* acts on
/// it as conj(lambda).
inline bool reducing_eigenvalue_check(const Operator& a, Complex lambda, double tol = kDefaultTol) {
  detail::require_positive_tol(tol, "reducing_eigenvalue_check");
  const Eigen::Index n = a.dim();
  const Operator shifted(Matrix(a.matrix() - lambda * Matrix::Identity(n, n)));
  const SubspaceBasis eigenspace = null_space(shifted, tol);
  if (eigenspace.is_empty()) return false;
  const Matrix residual = shifted.matrix().adjoint() * eigenspace.columns();
  return residual.norm() <= tol * std::max(1.0, operator_norm(a));
}

}  // namespace seminormal

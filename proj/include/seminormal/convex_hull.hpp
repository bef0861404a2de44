#pragma once

// Planar convex hulls of complex points (Andrew's monotone chain) that
// tolerate degenerate input: a single point or a collinear cloud comes back
// as one vertex or as the two endpoints of a segment.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace seminormal {

namespace detail {

inline double cross(std::complex<double> o, std::complex<double> a, std::complex<double> b) {
  const auto u = a - o;
  const auto v = b - o;
  return u.real() * v.imag() - u.imag() * v.real();
}

inline double segment_distance(std::complex<double> p, std::complex<double> a,
                               std::complex<double> b) {
  const auto ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const auto ap = p - a;
  double t = (ap.real() * ab.real() + ap.imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace detail

/// Extreme points in counterclockwise order starting from the lowest-leftmost
/// one. `rel_tol` controls both duplicate merging (relative to the bounding box
/// extent) and the collinearity test (relative sine of the turning angle).
inline std::vector<std::complex<double>> convex_hull(std::vector<std::complex<double>> pts,
                                                     double rel_tol = 1e-10) {
  using Pt = std::complex<double>;
  if (pts.empty()) return {};

  std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });

  double lo_re = pts.front().real(), hi_re = pts.back().real();
  double lo_im = std::numeric_limits<double>::infinity(), hi_im = -lo_im;
  for (const auto& p : pts) {
    lo_im = std::min(lo_im, p.imag());
    hi_im = std::max(hi_im, p.imag());
  }
  const double extent = std::hypot(hi_re - lo_re, hi_im - lo_im);
  if (extent == 0.0) return {pts.front()};
  const double merge = rel_tol * extent;

  std::vector<Pt> uniq;
  uniq.reserve(pts.size());
  for (const auto& p : pts) {
    bool dup = false;
    // Sorted by real part, so only a short tail can be within `merge`.
    for (auto it = uniq.rbegin(); it != uniq.rend() && p.real() - it->real() <= merge; ++it) {
      if (std::abs(p - *it) <= merge) {
        dup = true;
        break;
      }
    }
    if (!dup) uniq.push_back(p);
  }
  if (uniq.size() == 1) return uniq;

  auto turns_left = [&](Pt o, Pt a, Pt b) {
    return detail::cross(o, a, b) > rel_tol * std::abs(a - o) * std::abs(b - o);
  };

  std::vector<Pt> hull(2 * uniq.size());
  std::size_t k = 0;
  for (const auto& p : uniq) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = uniq.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !turns_left(hull[k - 2], hull[k - 1], uniq[i])) --k;
    hull[k++] = uniq[i];
  }
  hull.resize(k - 1);

  // A collinear cloud collapses to its two endpoints.
  if (hull.size() <= 2) {
    return {uniq.front(), uniq.back()};
  }
  return hull;
}

/// Euclidean distance from p to the convex polygon `hull` (0 inside).
inline double hull_distance(std::complex<double> p, const std::vector<std::complex<double>>& hull) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(p - hull.front());
  if (hull.size() == 2) return detail::segment_distance(p, hull[0], hull[1]);

  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto a = hull[i];
    const auto b = hull[(i + 1) % hull.size()];
    if (detail::cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, detail::segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

}  // namespace seminormal

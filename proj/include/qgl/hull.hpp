// Copyright 2026 The qgl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file hull.hpp
 * @brief Convex hull membership in H = R^4 with explicit certificates.
 *
 * Two independent routes:
 *  - hull_membership_slice: for sets made of real points and whole spheres
 *    (invariant under rotations fixing the real axis), membership of q is
 *    decided in the single plane C(I_q), where each sphere (x, y) meets the
 *    plane in x +- I y. A planar polygon test with fan triangulation
 *    produces at most three support points.
 *  - hull_membership_4d: Wolfe's minimum-norm-point active set method on a
 *    finite point list in R^4 (spheres sampled by the caller).
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qgl/errors.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/tolerances.hpp"
#include "qgl/zero_set.hpp"

namespace qgl {

/// q ~ sum weights[i] * points[i] with |combination - q| <= slack.
struct HullCertificate {
  std::vector<Quat> points;
  std::vector<double> weights;
  double slack = 0.0;
};

struct Outside {
  double distance = 0.0;
  Quat nearest;
};

using HullMembership = std::variant<HullCertificate, Outside>;

inline bool is_inside(const HullMembership& m) { return std::holds_alternative<HullCertificate>(m); }

inline Quat certificate_combination(const HullCertificate& c) {
  Quat sum{};
  for (std::size_t n = 0; n < c.points.size(); ++n) sum += c.points[n] * c.weights[n];
  return sum;
}

/// Accepting slack for a query: tau_hull (1 + |q|).
inline double hull_threshold(const Quat& q, double tau_hull = kDefaultTolerances.hull) {
  return tau_hull * (1.0 + qnorm(q));
}

namespace detail {

struct Point2 {
  double u = 0.0;
  double v = 0.0;
  std::size_t source = 0;
};

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
inline std::vector<Point2> convex_hull_2d(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) { return a.u == b.u && a.v == b.v; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i > 0; --i) {
    const Point2& p = pts[i - 1];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

struct PlanarWeights {
  std::vector<std::size_t> sources;
  std::vector<double> weights;
  double distance = 0.0;
  double nu = 0.0, nv = 0.0;  // nearest point
};

inline PlanarWeights nearest_on_segment(const Point2& a, const Point2& b, double u, double v) {
  const double du = b.u - a.u;
  const double dv = b.v - a.v;
  const double len2 = du * du + dv * dv;
  double t = len2 > 0.0 ? ((u - a.u) * du + (v - a.v) * dv) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  PlanarWeights w;
  w.nu = a.u + t * du;
  w.nv = a.v + t * dv;
  w.distance = std::hypot(u - w.nu, v - w.nv);
  w.sources = {a.source, b.source};
  w.weights = {1.0 - t, t};
  return w;
}

inline PlanarWeights planar_hull_weights(const std::vector<Point2>& hull, double u, double v) {
  if (hull.size() == 1) {
    PlanarWeights w;
    w.sources = {hull[0].source};
    w.weights = {1.0};
    w.nu = hull[0].u;
    w.nv = hull[0].v;
    w.distance = std::hypot(u - w.nu, v - w.nv);
    return w;
  }
  if (hull.size() == 2) return nearest_on_segment(hull[0], hull[1], u, v);

  const Point2 query{u, v, 0};
  bool inside = true;
  for (std::size_t k = 0; k < hull.size() && inside; ++k) {
    inside = cross(hull[k], hull[(k + 1) % hull.size()], query) >= 0.0;
  }
  if (inside) {
    // Fan from hull[0]; take the triangle whose smallest barycentric
    // coordinate is largest.
    PlanarWeights best;
    double best_min = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k + 1 < hull.size(); ++k) {
      const Point2& a = hull[0];
      const Point2& b = hull[k];
      const Point2& c = hull[k + 1];
      const double area = cross(a, b, c);
      if (area <= 0.0) continue;
      const double wa = cross(query, b, c) / area;
      const double wb = cross(a, query, c) / area;
      const double wc = 1.0 - wa - wb;
      const double lo = std::min({wa, wb, wc});
      if (lo > best_min) {
        best_min = lo;
        best.sources = {a.source, b.source, c.source};
        best.weights = {wa, wb, wc};
      }
    }
    if (!best.weights.empty()) {
      double total = 0.0;
      for (double& w : best.weights) total += (w = std::max(w, 0.0));
      for (double& w : best.weights) w /= total;
      best.nu = u;
      best.nv = v;
      best.distance = 0.0;
      return best;
    }
  }
  PlanarWeights best;
  best.distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < hull.size(); ++k) {
    PlanarWeights w = nearest_on_segment(hull[k], hull[(k + 1) % hull.size()], u, v);
    if (w.distance < best.distance) best = std::move(w);
  }
  return best;
}

inline HullCertificate make_certificate(const std::vector<Quat>& points, const std::vector<double>& weights,
                                        const Quat& q) {
  HullCertificate cert;
  for (std::size_t n = 0; n < points.size(); ++n) {
    if (weights[n] <= 0.0) continue;
    cert.points.push_back(points[n]);
    cert.weights.push_back(weights[n]);
  }
  double total = 0.0;
  for (double w : cert.weights) total += w;
  for (double& w : cert.weights) w /= total;
  cert.slack = qnorm(certificate_combination(cert) - q);
  return cert;
}

}  // namespace detail

/// Result of Wolfe's method: the point of conv(points) closest to the origin.
template <std::size_t D>
struct MinNormPoint {
  std::vector<double> weights;  // one per input point, at most D + 1 nonzero
  std::array<double, D> point{};
  double norm = 0.0;
  int iterations = 0;
};

/// Wolfe's minimum-norm-point algorithm for the convex hull of a finite set.
template <std::size_t D>
MinNormPoint<D> min_norm_point(std::span<const std::array<double, D>> pts, int max_iterations = 10000) {
  if (pts.empty()) throw InvalidArgument("min_norm_point: empty point set");
  auto dotp = [](const std::array<double, D>& a, const std::array<double, D>& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < D; ++d) s += a[d] * b[d];
    return s;
  };
  const std::size_t n = pts.size();
  double scale2 = 0.0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double nk = dotp(pts[k], pts[k]);
    scale2 = std::max(scale2, nk);
    if (nk < dotp(pts[start], pts[start])) start = k;
  }
  const double tol = 1e-14 * std::max(scale2, std::numeric_limits<double>::min());
  constexpr double kWeightFloor = 1e-14;

  std::vector<std::size_t> active{start};
  std::vector<double> lambda{1.0};
  auto combine = [&](const std::vector<double>& w) {
    std::array<double, D> x{};
    for (std::size_t a = 0; a < active.size(); ++a) {
      for (std::size_t d = 0; d < D; ++d) x[d] += w[a] * pts[active[a]][d];
    }
    return x;
  };
  // Affine minimizer over the active set: x = p0 + sum t_k (p_k - p0).
  auto affine_minimizer = [&]() {
    const std::size_t m = active.size();
    std::vector<double> mu(m, 0.0);
    if (m == 1) {
      mu[0] = 1.0;
      return mu;
    }
    Eigen::MatrixXd a(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(m - 1));
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(D));
    for (std::size_t d = 0; d < D; ++d) {
      rhs(static_cast<Eigen::Index>(d)) = -pts[active[0]][d];
      for (std::size_t k = 1; k < m; ++k) {
        a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k - 1)) =
            pts[active[k]][d] - pts[active[0]][d];
      }
    }
    const Eigen::VectorXd t = a.completeOrthogonalDecomposition().solve(rhs);
    double rest = 1.0;
    for (std::size_t k = 1; k < m; ++k) {
      mu[k] = t(static_cast<Eigen::Index>(k - 1));
      rest -= mu[k];
    }
    mu[0] = rest;
    return mu;
  };

  MinNormPoint<D> out;
  std::array<double, D> x = pts[start];
  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    std::size_t best = 0;
    double best_dot = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const double dk = dotp(x, pts[k]);
      if (dk < best_dot) {
        best_dot = dk;
        best = k;
      }
    }
    if (dotp(x, x) - best_dot <= tol) break;
    if (std::find(active.begin(), active.end(), best) != active.end()) break;
    if (active.size() == D + 1) break;  // affinely spanning; x is already optimal up to rounding
    active.push_back(best);
    lambda.push_back(0.0);
    for (int minor = 0; minor <= static_cast<int>(D) + 1; ++minor) {
      const std::vector<double> mu = affine_minimizer();
      if (std::all_of(mu.begin(), mu.end(), [](double v) { return v > kWeightFloor; })) {
        lambda = mu;
        break;
      }
      double theta = 1.0;
      for (std::size_t a = 0; a < mu.size(); ++a) {
        if (mu[a] <= kWeightFloor && lambda[a] - mu[a] > 0.0) {
          theta = std::min(theta, lambda[a] / (lambda[a] - mu[a]));
        }
      }
      for (std::size_t a = 0; a < mu.size(); ++a) lambda[a] = (1.0 - theta) * lambda[a] + theta * mu[a];
      std::vector<std::size_t> keep_idx;
      std::vector<double> keep_w;
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (lambda[a] > kWeightFloor) {
          keep_idx.push_back(active[a]);
          keep_w.push_back(lambda[a]);
        }
      }
      if (keep_idx.empty()) {  // cannot happen in exact arithmetic
        keep_idx.push_back(best);
        keep_w.push_back(1.0);
      }
      active = std::move(keep_idx);
      lambda = std::move(keep_w);
    }
    double total = 0.0;
    for (double w : lambda) total += w;
    for (double& w : lambda) w /= total;
    x = combine(lambda);
  }
  out.iterations = iter;
  out.weights.assign(n, 0.0);
  for (std::size_t a = 0; a < active.size(); ++a) out.weights[active[a]] = lambda[a];
  out.point = x;
  out.norm = std::sqrt(dotp(x, x));
  return out;
}

/// Membership of q in the hull of a finite point list.
inline HullMembership hull_membership_4d(const Quat& q, std::span<const Quat> points,
                                         double tau_hull = kDefaultTolerances.hull) {
  if (points.empty()) throw InvalidArgument("hull_membership_4d: empty point set");
  std::vector<std::array<double, 4>> shifted;
  shifted.reserve(points.size());
  for (const Quat& p : points) shifted.push_back((p - q).components());
  const MinNormPoint<4> mnp = min_norm_point<4>(shifted);
  const Quat nearest = q + Quat{mnp.point[0], mnp.point[1], mnp.point[2], mnp.point[3]};
  if (mnp.norm > hull_threshold(q, tau_hull)) return Outside{mnp.norm, nearest};
  std::vector<Quat> pts(points.begin(), points.end());
  return detail::make_certificate(pts, mnp.weights, q);
}

/// n quasi-uniform directions on S^2 (Fibonacci lattice), as unit imaginaries.
inline std::vector<UnitImaginary> fibonacci_units(std::size_t n) {
  std::vector<UnitImaginary> out;
  out.reserve(n);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(k);
    out.push_back(UnitImaginary::normalized(Quat{0.0, r * std::cos(phi), r * std::sin(phi), z}));
  }
  return out;
}

/// Finite stand-in for a zero set: isolated points as-is, every sphere
/// sampled at `per_sphere` Fibonacci directions.
inline std::vector<Quat> sample_zero_set(const ZeroSet& zs, std::size_t per_sphere = 64) {
  std::vector<Quat> pts;
  for (const auto& z : zs.isolated) pts.push_back(z.q);
  const auto units = fibonacci_units(per_sphere);
  for (const auto& s : zs.spheres) {
    for (const UnitImaginary& u : units) pts.push_back(s.sphere.point(u));
  }
  return pts;
}

/// Worst-case sampling gap for the spheres of zs: 2 pi y / sqrt(#samples).
inline double sampling_error(const ZeroSet& zs, std::size_t per_sphere) {
  double y = 0.0;
  for (const auto& s : zs.spheres) y = std::max(y, s.sphere.y);
  return 2.0 * std::numbers::pi * y / std::sqrt(static_cast<double>(per_sphere));
}

/// Membership of q in Kull(zs) decided inside the slice through q.
///
/// zs must be rotation invariant (real points and spheres only). A set of
/// isolated points without spheres is finite and is decided by the 4-D
/// route instead. `fallback` is the slice used when q is real.
inline HullMembership hull_membership_slice(const Quat& q, const ZeroSet& zs,
                                            const Tolerances& tol = kDefaultTolerances,
                                            const UnitImaginary& fallback = UnitImaginary::i()) {
  if (zs.empty()) throw InvalidArgument("hull_membership_slice: empty zero set");
  if (!zs.is_rotation_invariant(tol.unit)) {
    if (!zs.spheres.empty()) {
      throw InvalidArgument(
          "hull_membership_slice: zero set mixes spheres with non-real isolated points");
    }
    std::vector<Quat> pts;
    for (const auto& z : zs.isolated) pts.push_back(z.q);
    return hull_membership_4d(q, pts, tol.hull);
  }

  const double lift = imag_norm(q);
  const UnitImaginary unit = lift > tol.unit ? imag_unit(q, tol.unit) : fallback;
  std::vector<Quat> points;
  std::vector<detail::Point2> plane;
  for (const auto& z : zs.isolated) {
    plane.push_back({z.q.w, 0.0, points.size()});
    points.push_back(Quat{z.q.w});
  }
  for (const auto& s : zs.spheres) {
    plane.push_back({s.sphere.x, s.sphere.y, points.size()});
    points.push_back(s.sphere.point(unit));
    plane.push_back({s.sphere.x, -s.sphere.y, points.size()});
    points.push_back(Quat{s.sphere.x} - unit.value() * s.sphere.y);
  }
  const auto hull = detail::convex_hull_2d(plane);
  const detail::PlanarWeights pw = detail::planar_hull_weights(hull, q.w, lift);
  const Quat nearest = Quat{pw.nu} + unit.value() * pw.nv;
  // The planar distance misses whatever part of q lies off C(I); measure in R^4.
  const double distance = qnorm(nearest - q);
  if (distance > hull_threshold(q, tol.hull)) return Outside{distance, nearest};
  std::vector<double> weights(points.size(), 0.0);
  for (std::size_t n = 0; n < pw.sources.size(); ++n) weights[pw.sources[n]] += pw.weights[n];
  return detail::make_certificate(points, weights, q);
}

struct CertificateCheck {
  bool ok = true;
  std::string reason;
};

/// Independent re-verification: weights in [0, 1] summing to 1, the
/// combination within the stated slack of q, the slack acceptable, and
/// every support point a zero of `target`.
inline CertificateCheck verify_certificate(const HullCertificate& cert, const Quat& q, const QPoly& target,
                                           const Tolerances& tol = kDefaultTolerances) {
  if (cert.points.empty() || cert.points.size() != cert.weights.size()) {
    return {false, "malformed certificate"};
  }
  double total = 0.0;
  for (double w : cert.weights) {
    if (!(w >= 0.0 && w <= 1.0)) return {false, "weight outside [0, 1]"};
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) return {false, "weights do not sum to 1"};
  const double error = qnorm(certificate_combination(cert) - q);
  if (error > cert.slack * (1.0 + 1e-9) + 1e-300) return {false, "combination misses the stated slack"};
  if (cert.slack > hull_threshold(q, tol.hull)) return {false, "slack above threshold"};
  for (const Quat& p : cert.points) {
    if (zero_residual(target, p) > tol.zero) return {false, "support point is not a zero"};
  }
  return {};
}

}  // namespace qgl

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
 * @file complex_roots.hpp
 * @brief All roots of a complex polynomial, with multiplicities.
 *
 * Eigenvalues of the balanced companion matrix give the raw roots. A
 * mu-fold root shows up as mu eigenvalues spread over roughly
 * eps^(1/mu), so roots are grouped with a radius that grows with the
 * group size, and each group center is then polished by Newton's method
 * on p^(mu-1), where the root is simple. For real input the result is
 * closed under conjugation: self-conjugate groups are snapped to the real
 * axis and the remaining groups are paired.
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/tolerances.hpp"

namespace qgl {

struct RootCluster {
  Complex center;
  int multiplicity = 1;
  /// |p(center)| / sum |p_n| |center|^n
  double residual = 0.0;
};

namespace detail {

// Parlett-Reinsch style balancing with power-of-two scalings.
inline void balance_companion(Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == i) continue;
        row += std::abs(m(i, k));
        col += std::abs(m(k, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < 0.95 * (col + row)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

inline std::vector<Complex> companion_eigenvalues(const CPoly& p) {
  const int degree = cpoly_degree(p);
  const Complex lead = p[static_cast<std::size_t>(degree)];
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int r = 1; r < degree; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < degree; ++r) companion(r, degree - 1) = -p[static_cast<std::size_t>(r)] / lead;
  balance_companion(companion);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("complex_roots: companion eigenvalue iteration did not converge");
  }
  const Eigen::VectorXcd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline double relative_residual(const CPoly& p, Complex z) {
  const double denom = cpoly_abs_eval(p, std::abs(z));
  if (denom == 0.0) return 0.0;
  return std::abs(cpoly_eval(p, z)) / denom;
}

/// Newton on f from z0; keeps the iterate with the smallest residual and
/// never moves further than `max_move` from z0.
inline Complex newton_polish(const CPoly& f, Complex z0, double max_move) {
  const CPoly df = cpoly_derivative(f);
  Complex best = z0;
  double best_res = relative_residual(f, z0);
  Complex z = z0;
  for (int it = 0; it < 60 && best_res > 0.0; ++it) {
    const Complex d = cpoly_eval(df, z);
    if (d == Complex{}) break;
    const Complex step = cpoly_eval(f, z) / d;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z - z0) > max_move) break;
    const double res = relative_residual(f, z);
    if (res < best_res) {
      best_res = res;
      best = z;
    } else if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(z))) {
      break;
    }
  }
  return best;
}

/// Radius within which mu raw eigenvalues are taken to be one mu-fold root.
inline double cluster_radius(int mu, Complex center, double tau_cluster) {
  const double spread = mu <= 1 ? 0.0 : 8.0 * std::pow(1e-15, 1.0 / mu);
  return std::max(tau_cluster, spread) * (1.0 + std::abs(center));
}

// A wide group is one root only if p vanishes at its center to this
// relative accuracy.
inline constexpr double kMultipleRootResidual = 1e-11;

inline bool is_real_input(const CPoly& p) {
  return std::all_of(p.begin(), p.end(), [](Complex c) { return c.imag() == 0.0; });
}

}  // namespace detail

/// Roots of p with multiplicities; sum of multiplicities = degree.
/// Throws InvalidArgument for constant or zero input.
inline std::vector<RootCluster> complex_roots(CPoly p,
                                              double tau_cluster = kDefaultTolerances.cluster) {
  p = cpoly_trim(std::move(p));
  const int degree = cpoly_degree(p);
  if (degree < 1) {
    throw InvalidArgument("complex_roots: polynomial must have degree >= 1");
  }
  for (const Complex& c : p) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("complex_roots: non-finite coefficient");
    }
  }
  const bool real_input = detail::is_real_input(p);

  // Exact zero roots are split off before the eigenvalue problem.
  std::size_t zeros = 0;
  while (p[zeros] == Complex{}) ++zeros;
  std::vector<Complex> raw(zeros, Complex{});
  const CPoly reduced(p.begin() + static_cast<std::ptrdiff_t>(zeros), p.end());
  if (cpoly_degree(reduced) == 1) {
    raw.push_back(-reduced[0] / reduced[1]);
  } else if (cpoly_degree(reduced) > 1) {
    const auto ev = detail::companion_eigenvalues(reduced);
    raw.insert(raw.end(), ev.begin(), ev.end());
  }
  if (real_input) {
    for (Complex& r : raw) {
      if (r.imag() == 0.0) r = {r.real(), 0.0};
    }
  }

  // Greedy grouping: for each seed take the largest set of nearest
  // unassigned roots that forms one multiple root. Groups inside
  // tau_cluster merge outright; wider groups must also leave a polished
  // center at which p itself is negligible.
  const std::size_t n = raw.size();
  std::vector<bool> used(n, false);
  std::vector<RootCluster> clusters;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (used[seed]) continue;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n; ++k) {
      if (!used[k]) order.push_back(k);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(raw[a] - raw[seed]) < std::abs(raw[b] - raw[seed]);
    });
    std::size_t take = 1;
    Complex center = detail::newton_polish(p, raw[seed], detail::cluster_radius(2, raw[seed], tau_cluster));
    for (std::size_t mu = order.size(); mu >= 2; --mu) {
      Complex c{};
      for (std::size_t t = 0; t < mu; ++t) c += raw[order[t]];
      c /= static_cast<double>(mu);
      double spread = 0.0;
      for (std::size_t t = 0; t < mu; ++t) spread = std::max(spread, std::abs(raw[order[t]] - c));
      const double radius = detail::cluster_radius(static_cast<int>(mu), c, tau_cluster);
      if (spread > radius) continue;
      CPoly f = p;
      for (std::size_t d = 1; d < mu; ++d) f = cpoly_derivative(f);
      const Complex polished = detail::newton_polish(f, c, radius);
      const bool tight = spread <= tau_cluster * (1.0 + std::abs(c));
      if (tight || detail::relative_residual(p, polished) <= detail::kMultipleRootResidual) {
        take = mu;
        center = polished;
        break;
      }
    }
    for (std::size_t t = 0; t < take; ++t) used[order[t]] = true;
    clusters.push_back({center, static_cast<int>(take), 0.0});
  }

  if (real_input) {
    std::vector<RootCluster> paired;
    std::vector<bool> done(clusters.size(), false);
    for (std::size_t a = 0; a < clusters.size(); ++a) {
      if (done[a]) continue;
      const RootCluster& ca = clusters[a];
      const double radius = detail::cluster_radius(std::max(ca.multiplicity, 2), ca.center, tau_cluster);
      // Conjugate partner: nearest other cluster to conj(center).
      std::size_t partner = clusters.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < clusters.size(); ++b) {
        if (b == a || done[b]) continue;
        const double dist = std::abs(clusters[b].center - std::conj(ca.center));
        if (dist < best) {
          best = dist;
          partner = b;
        }
      }
      const bool self_conjugate = std::abs(ca.center.imag()) <= radius;
      if (self_conjugate && (partner == clusters.size() || best > std::abs(ca.center.imag()))) {
        done[a] = true;
        RootCluster r = ca;
        r.center = {ca.center.real(), 0.0};
        paired.push_back(r);
        continue;
      }
      if (partner == clusters.size() || best > radius ||
          clusters[partner].multiplicity != ca.multiplicity) {
        std::ostringstream msg;
        msg << "complex_roots: real-coefficient input produced an unpaired root " << ca.center
            << " (multiplicity " << ca.multiplicity << ")";
        throw NumericalBreakdown(msg.str());
      }
      done[a] = done[partner] = true;
      Complex upper = 0.5 * (ca.center + std::conj(clusters[partner].center));
      if (upper.imag() < 0.0) upper = std::conj(upper);
      paired.push_back({upper, ca.multiplicity, 0.0});
      paired.push_back({std::conj(upper), ca.multiplicity, 0.0});
    }
    clusters = std::move(paired);
  }

  for (RootCluster& c : clusters) c.residual = detail::relative_residual(p, c.center);
  std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return clusters;
}

}  // namespace qgl

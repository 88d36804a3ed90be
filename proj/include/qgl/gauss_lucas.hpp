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
 * @file gauss_lucas.hpp
 * @brief Certified checks that the critical points of P lie in Kull(Z_{P^s}).
 *
 * For real coefficients the classical statement Z_{P'} in Kull(Z_P) holds
 * as well; for general quaternionic coefficients it can fail and only the
 * symmetrized zero set is guaranteed to contain the critical points.
 * Every accepted critical point carries a HullCertificate that is
 * re-verified independently of the routine that produced it.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgl/complex_roots.hpp"
#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/hull.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/random.hpp"
#include "qgl/tolerances.hpp"
#include "qgl/zero_set.hpp"

namespace qgl {

struct CriticalPointCheck {
  Quat query;
  /// "isolated" or "sphere" (a representative of a spherical critical point)
  std::string origin;
  HullMembership membership;
  CertificateCheck recheck;

  bool accepted() const { return is_inside(membership) && recheck.ok; }
};

struct GLReport {
  std::string id;
  /// "P^s" for the quaternionic statement, "P" for the real-coefficient one.
  std::string target;
  ZeroSet critical;
  ZeroSet hull_set;
  std::vector<CriticalPointCheck> checks;
  bool verified = false;
  Tolerances tolerances;
  std::uint64_t seed = 0;

  /// Largest slack / (1 + |q|) over accepted certificates.
  double max_relative_slack() const {
    double m = 0.0;
    for (const auto& c : checks) {
      if (const auto* cert = std::get_if<HullCertificate>(&c.membership)) {
        m = std::max(m, cert->slack / (1.0 + qnorm(c.query)));
      }
    }
    return m;
  }
};

struct GLOptions {
  Tolerances tolerances = kDefaultTolerances;
  std::uint64_t seed = 0;
  std::string id;
};

namespace detail {

/// Isolated critical points as-is; a spherical one at x +- I y for I = i
/// and for one seeded random I.
inline std::vector<std::pair<Quat, std::string>> critical_queries(const ZeroSet& crit, std::uint64_t seed) {
  std::vector<std::pair<Quat, std::string>> out;
  for (const auto& z : crit.isolated) out.emplace_back(z.q, "isolated");
  Rng rng(seed);
  for (const auto& s : crit.spheres) {
    const UnitImaginary random_unit = rng.unit_imaginary();
    for (const UnitImaginary& unit : {UnitImaginary::i(), random_unit}) {
      out.emplace_back(s.sphere.point(unit), "sphere");
      out.emplace_back(Quat{s.sphere.x} - unit.value() * s.sphere.y, "sphere");
    }
  }
  return out;
}

inline GLReport run_hull_checks(GLReport report, const QPoly& target) {
  report.verified = true;
  for (auto& [q, origin] : critical_queries(report.critical, report.seed)) {
    CriticalPointCheck check{q, origin, hull_membership_slice(q, report.hull_set, report.tolerances), {}};
    if (const auto* cert = std::get_if<HullCertificate>(&check.membership)) {
      check.recheck = verify_certificate(*cert, q, target, report.tolerances);
    } else {
      check.recheck = {false, "outside the hull"};
    }
    report.verified = report.verified && check.accepted();
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace detail

/// Z_{P'} in Kull(Z_{P^s}), with a certificate per critical point.
inline GLReport verify_gauss_lucas(const QPoly& p, const GLOptions& opts = {}) {
  if (p.degree() < 2) throw InvalidArgument("verify_gauss_lucas: degree must be >= 2");
  GLReport report;
  report.id = opts.id;
  report.target = "P^s";
  report.tolerances = opts.tolerances;
  report.seed = opts.seed;
  report.critical = critical_points(p, opts.tolerances);
  const QPoly ps = QPoly::from_real(real_parts(symmetrize(p)));
  report.hull_set = real_poly_zero_set(ps, opts.tolerances);
  return detail::run_hull_checks(std::move(report), ps);
}

/// Classical statement for real coefficients: Z_{P'} in Kull(Z_P).
inline GLReport verify_real_case(const QPoly& p, const GLOptions& opts = {}) {
  if (p.degree() < 2) throw InvalidArgument("verify_real_case: degree must be >= 2");
  if (!has_real_coefficients(p, opts.tolerances.real)) {
    throw InvalidArgument("verify_real_case: coefficients are not real");
  }
  const QPoly real_p = QPoly::from_real(real_parts(p));
  GLReport report;
  report.id = opts.id;
  report.target = "P";
  report.tolerances = opts.tolerances;
  report.seed = opts.seed;
  report.critical = critical_points(real_p, opts.tolerances);
  report.hull_set = real_poly_zero_set(real_p, opts.tolerances);
  return detail::run_hull_checks(std::move(report), real_p);
}

// Relative size of P2' at a root of P1' below which the root is common.
inline constexpr double kCommonRootTolerance = 1e-8;

/// Z_{P'} in C(I): the common roots of P1' and P2', where P = P1 + P2 J on C(I).
/// Roots are returned in the basis {1, I}.
inline std::vector<Complex> slice_critical_points(const QPoly& p, const UnitImaginary& unit,
                                                  const Tolerances& tol = kDefaultTolerances) {
  const ComplexSlicePoly slice = restrict_to_slice(p, unit);
  CPoly d1 = cpoly_derivative(slice.p1);
  CPoly d2 = cpoly_derivative(slice.p2);
  // Projection rounding leaves ~eps-sized coefficients where exact zeros belong.
  const double floor = 1e-14 * std::max({cpoly_max_abs(d1), cpoly_max_abs(d2), 1e-300});
  for (CPoly* d : {&d1, &d2}) {
    for (Complex& c : *d) {
      if (std::abs(c) <= floor) c = {};
    }
    *d = cpoly_trim(std::move(*d));
  }
  const bool use_first = cpoly_degree(d1) >= 1;
  const CPoly& primary = use_first ? d1 : d2;
  const CPoly& other = use_first ? d2 : d1;
  if (cpoly_degree(primary) < 1) return {};
  if (!use_first && cpoly_degree(d1) == 0) return {};  // P1' is a nonzero constant

  std::vector<Complex> common;
  for (const RootCluster& c : complex_roots(primary, tol.cluster)) {
    const double r = std::abs(c.center);
    const double scale = cpoly_abs_eval(d1, r) + cpoly_abs_eval(d2, r);
    if (std::abs(cpoly_eval(other, c.center)) <= kCommonRootTolerance * scale) common.push_back(c.center);
  }
  return common;
}

/// Checks, for every sampled slice C(I), that Z_{P'} in C(I) lies in the
/// planar hull of Z_{P^s} in C(I).
inline bool slice_equivalence_check(const QPoly& p, std::span<const UnitImaginary> units,
                                    const Tolerances& tol = kDefaultTolerances) {
  if (p.degree() < 2) throw InvalidArgument("slice_equivalence_check: degree must be >= 2");
  const QPoly ps = QPoly::from_real(real_parts(symmetrize(p)));
  const ZeroSet hull_set = real_poly_zero_set(ps, tol);
  for (const UnitImaginary& unit : units) {
    for (const Complex& z : slice_critical_points(p, unit, tol)) {
      if (!is_inside(hull_membership_slice(embed(z, unit), hull_set, tol, unit))) return false;
    }
  }
  return true;
}

}  // namespace qgl

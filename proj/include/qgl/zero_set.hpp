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
 * @file zero_set.hpp
 * @brief Full zero set of a quaternionic polynomial.
 *
 * The roots of the real polynomial P^s on C(i) name the candidate spheres.
 * On a sphere [x + I y] every slice evaluation has the form
 * P(x + K y) = a + K b with a, b independent of K in S^2, so two
 * evaluations decide the sphere: a = b = 0 means the whole sphere is a
 * zero, otherwise the only candidate is K = -a b^{-1}.
 *
 * Multiplicities are counted so that
 *   sum(isolated) + 2 sum(spherical) = degree of the polynomial.
 */

#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <variant>
#include <vector>

#include "qgl/complex_roots.hpp"
#include "qgl/errors.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/tolerances.hpp"

namespace qgl {

struct IsolatedZero {
  Quat q;
  int multiplicity = 1;
  /// |P(q)| / scale(P, q)
  double residual = 0.0;
};

struct SphericalZero {
  TwoSphere sphere;
  int multiplicity = 1;
  /// max over sampled I of |P(x + I y)| / scale(P, x + I y)
  double residual = 0.0;
};

/// Real zeros live in `isolated` with zero vector part.
struct ZeroSet {
  std::vector<IsolatedZero> isolated;
  std::vector<SphericalZero> spheres;

  bool empty() const { return isolated.empty() && spheres.empty(); }
  int counted_degree() const {
    int n = 0;
    for (const auto& z : isolated) n += z.multiplicity;
    for (const auto& s : spheres) n += 2 * s.multiplicity;
    return n;
  }
  /// True when every isolated zero is real.
  bool is_rotation_invariant(double tau_unit = kDefaultTolerances.unit) const {
    for (const auto& z : isolated) {
      if (imag_norm(z.q) > tau_unit * (1.0 + std::abs(z.q.w))) return false;
    }
    return true;
  }
  double max_modulus() const {
    double m = 0.0;
    for (const auto& z : isolated) m = std::max(m, qnorm(z.q));
    for (const auto& s : spheres) m = std::max(m, s.sphere.modulus());
    return m;
  }
};

/// Fixed unit imaginaries used to sample a sphere when checking residuals.
inline std::array<UnitImaginary, 5> residual_sample_units() {
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  return {UnitImaginary::i(), UnitImaginary::j(), UnitImaginary::k(),
          UnitImaginary::normalized(Quat{0.0, r3, r3, r3}),
          UnitImaginary::normalized(Quat{0.0, r2, -r2, 0.0})};
}

inline double zero_residual(const QPoly& p, const Quat& q) {
  const double s = residual_scale(p, q);
  return s == 0.0 ? 0.0 : qnorm(evaluate(p, q)) / s;
}

inline double sphere_residual(const QPoly& p, const TwoSphere& s) {
  double r = 0.0;
  for (const UnitImaginary& unit : residual_sample_units()) {
    r = std::max(r, zero_residual(p, s.point(unit)));
  }
  return r;
}

struct Spherical {};
struct Isolated {
  Quat q;
};
struct NotAZero {};
using SphereClass = std::variant<Spherical, Isolated, NotAZero>;

/// Decides how P vanishes on the sphere s (typically a root of P^s).
inline SphereClass classify_sphere(const QPoly& p, const TwoSphere& s,
                                   const Tolerances& tol = kDefaultTolerances) {
  if (s.y <= 0.0) {
    const Quat x{s.x};
    if (zero_residual(p, x) <= tol.zero) return Isolated{x};
    return NotAZero{};
  }
  const UnitImaginary unit = UnitImaginary::i();
  const Quat plus = evaluate(p, s.point(unit));
  const Quat minus = evaluate(p, Quat{s.x} - unit.value() * s.y);
  const Quat a = (plus + minus) * 0.5;
  const Quat b = unit.value() * (minus - plus) * 0.5;
  const double scale = residual_scale(p, Quat{s.x} + unit.value() * s.y);
  const double limit = tol.zero * scale;
  if (qnorm(a) <= limit && qnorm(b) <= limit) return Spherical{};
  if (qnorm(b) <= limit) return NotAZero{};
  const Quat k = -(a * qinv(b));
  if (std::abs(k.w) <= tol.unit && std::abs(qnorm(k) - 1.0) <= tol.unit) {
    return Isolated{Quat{s.x} + k * s.y};
  }
  // K is only known to the accuracy of the sphere itself; accept its
  // projection onto S^2 when P really vanishes there.
  if (imag_norm(k) > 0.0) {
    const Quat candidate = s.point(UnitImaginary::normalized(k));
    if (zero_residual(p, candidate) <= tol.zero) return Isolated{candidate};
  }
  return NotAZero{};
}

/// Real points and spheres named by the roots of a real-coefficient polynomial,
/// with root multiplicities (the rotation-invariant zero set of P^s, say).
inline ZeroSet real_poly_zero_set(const QPoly& p, const Tolerances& tol = kDefaultTolerances) {
  if (p.degree() < 1) throw InvalidArgument("real_poly_zero_set: degree must be >= 1");
  if (!has_real_coefficients(p, tol.real)) {
    throw InvalidArgument("real_poly_zero_set: coefficients are not real");
  }
  const QPoly real_p = QPoly::from_real(real_parts(p));
  ZeroSet zs;
  for (const RootCluster& c : complex_roots(real_parts_complex(real_p), tol.cluster)) {
    if (c.center.imag() < 0.0) continue;
    if (c.center.imag() == 0.0) {
      const Quat x{c.center.real()};
      zs.isolated.push_back({x, c.multiplicity, zero_residual(real_p, x)});
    } else {
      const TwoSphere s{c.center.real(), c.center.imag()};
      zs.spheres.push_back({s, c.multiplicity, sphere_residual(real_p, s)});
    }
  }
  return zs;
}

/// Z_P, classified into isolated points and spheres.
inline ZeroSet zero_set(const QPoly& p, const Tolerances& tol = kDefaultTolerances) {
  if (p.is_zero()) throw InvalidArgument("zero_set: zero polynomial");
  if (p.degree() < 1) throw InvalidArgument("zero_set: constant polynomial");
  const QPoly ps = QPoly::from_real(real_parts(symmetrize(p)));
  const auto clusters = complex_roots(real_parts_complex(ps), tol.cluster);

  ZeroSet zs;
  auto breakdown = [&](const std::string& what, const Complex& root, int mu) {
    std::ostringstream msg;
    msg << "zero_set: " << what << " at root " << root << " of P^s (multiplicity " << mu
        << ", root residual " << detail::relative_residual(real_parts_complex(ps), root) << ")";
    throw NumericalBreakdown(msg.str());
  };

  for (const RootCluster& c : clusters) {
    if (c.center.imag() < 0.0) continue;
    if (c.center.imag() == 0.0) {
      // Real roots of P^s are exactly the real zeros of P, each doubled.
      if (c.multiplicity % 2 != 0) breakdown("odd multiplicity of a real root", c.center, c.multiplicity);
      const SphereClass cls = classify_sphere(p, TwoSphere{c.center.real(), 0.0}, tol);
      if (!std::holds_alternative<Isolated>(cls)) breakdown("real root is not a zero of P", c.center, c.multiplicity);
      const Quat x{c.center.real()};
      zs.isolated.push_back({x, c.multiplicity / 2, zero_residual(p, x)});
      continue;
    }
    const TwoSphere s{c.center.real(), c.center.imag()};
    const auto characteristic = real_parts(characteristic_poly(s));
    // Peel off whole-sphere factors; what is left carries at most one
    // isolated zero on this sphere.
    QPoly rest = p;
    int spherical = 0;
    int remaining = c.multiplicity;
    while (remaining > 0) {
      const SphereClass cls = classify_sphere(rest, s, tol);
      if (std::holds_alternative<Spherical>(cls)) {
        if (remaining < 2) breakdown("odd multiplicity on a spherical zero", c.center, c.multiplicity);
        rest = divide_by_real(rest, characteristic);
        ++spherical;
        remaining -= 2;
      } else if (const auto* iso = std::get_if<Isolated>(&cls)) {
        zs.isolated.push_back({iso->q, remaining, zero_residual(p, iso->q)});
        remaining = 0;
      } else {
        breakdown("sphere carries no zero of P", c.center, c.multiplicity);
      }
    }
    if (spherical > 0) zs.spheres.push_back({s, spherical, sphere_residual(p, s)});
  }

  if (zs.counted_degree() != p.degree()) {
    std::ostringstream msg;
    msg << "zero_set: counted " << zs.counted_degree() << " zeros for degree " << p.degree();
    throw NumericalBreakdown(msg.str());
  }
  return zs;
}

/// Zeros of P'. Linear polynomials have none.
inline ZeroSet critical_points(const QPoly& p, const Tolerances& tol = kDefaultTolerances) {
  if (p.degree() < 1) throw InvalidArgument("critical_points: degree must be >= 1");
  if (p.degree() == 1) return {};
  return zero_set(derivative(p), tol);
}

}  // namespace qgl

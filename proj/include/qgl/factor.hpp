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
 * @file factor.hpp
 * @brief Q(z) = M(z) conj(M(conj z)) for real Q that is nonnegative on R.
 *
 * Roots of such a Q come in conjugate pairs and its real roots have even
 * multiplicity. M keeps the upper half-plane member of every pair, half of
 * every real root, and sqrt(lead Q) as leading coefficient.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <vector>

#include "qgl/complex_roots.hpp"
#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/tolerances.hpp"

namespace qgl {

struct MFactor {
  CPoly m;
  /// max_n |Q_n - (M M*)_n|
  double residual = 0.0;
};

/// Q = P1 conj(P1(conj z)) + P2 conj(P2(conj z)) for a slice restriction,
/// i.e. P^s on C(I). Imaginary rounding is dropped.
inline std::vector<double> slice_symmetrization(const ComplexSlicePoly& slice) {
  const CPoly q = hermitian_square_sum(slice.p1, slice.p2);
  std::vector<double> out;
  for (const Complex& c : q) out.push_back(c.real());
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

inline double factor_residual(std::span<const double> q, const CPoly& m) {
  const CPoly product = cpoly_mul(m, cpoly_reflect(m));
  double r = 0.0;
  for (std::size_t n = 0; n < std::max(q.size(), product.size()); ++n) {
    const Complex qn = n < q.size() ? Complex{q[n], 0.0} : Complex{};
    const Complex pn = n < product.size() ? product[n] : Complex{};
    r = std::max(r, std::abs(qn - pn));
  }
  return r;
}

/// Throws InvalidArgument for odd degree or negative leading coefficient,
/// NumericalBreakdown when Q is not (numerically) nonnegative on R.
inline MFactor fejer_riesz_factor(std::span<const double> q_in, const Tolerances& tol = kDefaultTolerances) {
  std::vector<double> q(q_in.begin(), q_in.end());
  while (!q.empty() && q.back() == 0.0) q.pop_back();
  if (q.empty()) throw InvalidArgument("fejer_riesz_factor: zero polynomial");
  const int degree = static_cast<int>(q.size()) - 1;
  if (degree % 2 != 0) throw InvalidArgument("fejer_riesz_factor: degree must be even");
  if (q.back() < 0.0) throw InvalidArgument("fejer_riesz_factor: negative leading coefficient");
  double qmax = 0.0;
  for (double c : q) qmax = std::max(qmax, std::abs(c));

  // Sampled nonnegativity on a window containing every real root.
  double bound = 0.0;
  for (double c : q) bound = std::max(bound, std::abs(c / q.back()));
  bound += 1.0;
  const QPoly as_quat = QPoly::from_real(q);
  for (int s = 0; s <= 400; ++s) {
    const double x = -bound + 2.0 * bound * s / 400.0;
    const double value = evaluate(as_quat, Quat{x}).w;
    if (value < -tol.factor * residual_scale(as_quat, Quat{x})) {
      std::ostringstream msg;
      msg << "fejer_riesz_factor: Q(" << x << ") = " << value << " < 0";
      throw NumericalBreakdown(msg.str());
    }
  }

  const Complex lead{std::sqrt(q.back()), 0.0};
  if (degree == 0) return {CPoly{lead}, factor_residual(q, CPoly{lead})};

  CPoly qc;
  for (double c : q) qc.emplace_back(c, 0.0);
  std::vector<Complex> roots;
  for (const RootCluster& c : complex_roots(qc, tol.cluster)) {
    if (c.center.imag() > 0.0) {
      roots.insert(roots.end(), static_cast<std::size_t>(c.multiplicity), c.center);
    } else if (c.center.imag() == 0.0) {
      if (c.multiplicity % 2 != 0) {
        std::ostringstream msg;
        msg << "fejer_riesz_factor: real root " << c.center.real() << " has odd multiplicity "
            << c.multiplicity << "; Q changes sign";
        throw NumericalBreakdown(msg.str());
      }
      roots.insert(roots.end(), static_cast<std::size_t>(c.multiplicity / 2), c.center);
    }
  }
  MFactor out{cpoly_from_roots(roots, lead), 0.0};
  out.residual = factor_residual(q, out.m);
  if (out.residual > tol.factor * (1.0 + qmax)) {
    std::ostringstream msg;
    msg << "fejer_riesz_factor: residual " << out.residual << " above tolerance";
    throw NumericalBreakdown(msg.str());
  }
  return out;
}

/// L(z) = P1'(z) conj(P1(conj z)) + P2'(z) conj(P2(conj z)).
inline CPoly l_polynomial(const CPoly& p1, const CPoly& p2) {
  return cpoly_add(cpoly_mul(cpoly_derivative(p1), cpoly_reflect(p1)),
                   cpoly_mul(cpoly_derivative(p2), cpoly_reflect(p2)));
}

/// Largest |z L(z) - z M'(z) conj(M(conj z))| / (|lhs| + |rhs|) over the samples.
inline double l_identity_residual(const CPoly& p1, const CPoly& p2, const MFactor& m,
                                  std::span<const Complex> samples) {
  const CPoly l = l_polynomial(p1, p2);
  const CPoly rhs_poly = cpoly_mul(cpoly_derivative(m.m), cpoly_reflect(m.m));
  double worst = 0.0;
  for (const Complex& z : samples) {
    const Complex lhs = z * cpoly_eval(l, z);
    const Complex rhs = z * cpoly_eval(rhs_poly, z);
    const double denom = std::abs(lhs) + std::abs(rhs);
    if (denom == 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / denom);
  }
  return worst;
}

/// z L(z) = z M'(z) conj(M(conj z)) at every sample, to `rel_tol`.
inline bool check_L_identity(const CPoly& p1, const CPoly& p2, const MFactor& m,
                             std::span<const Complex> samples, double rel_tol = 1e-8) {
  return l_identity_residual(p1, p2, m, samples) <= rel_tol;
}

}  // namespace qgl

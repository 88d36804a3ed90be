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
 * @file qpoly.hpp
 * @brief Quaternionic polynomials with right coefficients.
 *
 * P(q) = sum_n q^n a_n. The ring product is the star product (coefficient
 * convolution), which agrees with pointwise multiplication only for real
 * coefficients. P^c conjugates every coefficient and P^s = P * P^c has real
 * coefficients; its zeros are the spheres carrying the zeros of P.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/tolerances.hpp"

namespace qgl {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Quat> coeffs, double tau_trim = kDefaultTolerances.trim)
      : coeffs_(std::move(coeffs)) {
    trim(tau_trim);
  }
  QPoly(std::initializer_list<Quat> coeffs) : QPoly(std::vector<Quat>(coeffs)) {}

  /// Real-coefficient polynomial from ascending coefficients.
  static QPoly from_real(std::span<const double> coeffs) {
    std::vector<Quat> q(coeffs.begin(), coeffs.end());
    return QPoly(std::move(q));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Quat>& coeffs() const { return coeffs_; }
  /// a_n, zero past the degree.
  Quat coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quat{}; }
  const Quat& leading() const { return coeffs_.back(); }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const Quat& a : coeffs_) m = std::max(m, qnorm(a));
    return m;
  }

  QPoly operator+(const QPoly& o) const {
    std::vector<Quat> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = coeff(n) + o.coeff(n);
    return QPoly(std::move(c));
  }
  QPoly operator-(const QPoly& o) const {
    std::vector<Quat> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = coeff(n) - o.coeff(n);
    return QPoly(std::move(c));
  }
  /// Real scalar multiple.
  QPoly operator*(double s) const {
    std::vector<Quat> c(coeffs_);
    for (Quat& a : c) a *= s;
    return QPoly(std::move(c));
  }

  bool operator==(const QPoly&) const = default;

 private:
  void trim(double tau_trim) {
    const double limit = tau_trim * max_abs_coeff();
    while (!coeffs_.empty() && qnorm(coeffs_.back()) <= limit) coeffs_.pop_back();
  }

  std::vector<Quat> coeffs_;
};

/// The monomial q - alpha.
inline QPoly linear_factor(const Quat& alpha) { return QPoly({-alpha, Quat{1.0}}); }

/// (P * Q)_n = sum_{s+k=n} a_s b_k.
inline QPoly star_mul(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Quat> c(a.size() + b.size() - 1);
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t k = 0; k < b.size(); ++k) c[s + k] += a[s] * b[k];
  }
  return QPoly(std::move(c));
}

/// P^c: coefficientwise quaternion conjugation.
inline QPoly conjugate_poly(const QPoly& p) {
  std::vector<Quat> c(p.coeffs());
  for (Quat& a : c) a = qconj(a);
  return QPoly(std::move(c));
}

/// P^s = P * P^c. Imaginary parts are left as computed so callers can check them.
inline QPoly symmetrize(const QPoly& p) { return star_mul(p, conjugate_poly(p)); }

inline QPoly derivative(const QPoly& p) {
  if (p.degree() < 1) return {};
  const auto& a = p.coeffs();
  std::vector<Quat> d(a.size() - 1);
  for (std::size_t n = 1; n < a.size(); ++n) d[n - 1] = a[n] * static_cast<double>(n);
  return QPoly(std::move(d));
}

/// sum q^n a_n with iterated powers; coefficients multiply on the right.
inline Quat evaluate(const QPoly& p, const Quat& q) {
  Quat acc{};
  Quat power{1.0};
  for (const Quat& a : p.coeffs()) {
    acc += power * a;
    power = power * q;
  }
  return acc;
}

/// sum |a_n| (1 + |q|)^n, the residual scale used by every zero test.
inline double residual_scale(const QPoly& p, const Quat& q) {
  const double r = 1.0 + qnorm(q);
  double acc = 0.0;
  for (std::size_t n = p.coeffs().size(); n > 0; --n) acc = acc * r + qnorm(p.coeffs()[n - 1]);
  return acc;
}

/// tau_eval * (1 + sum |a_n| |q|^n).
inline double eval_threshold(const QPoly& p, const Quat& q,
                             double tau_eval = kDefaultTolerances.eval) {
  const double r = qnorm(q);
  double acc = 0.0;
  for (std::size_t n = p.coeffs().size(); n > 0; --n) acc = acc * r + qnorm(p.coeffs()[n - 1]);
  return tau_eval * (1.0 + acc);
}

/// (P * Q)(q) without forming the product: 0 where P(q) = 0, otherwise
/// P(q) Q(P(q)^{-1} q P(q)).
inline Quat pointwise_star_eval(const QPoly& p, const QPoly& q, const Quat& at,
                                double tau_eval = kDefaultTolerances.eval) {
  const Quat pv = evaluate(p, at);
  if (qnorm(pv) <= eval_threshold(p, at, tau_eval)) return {};
  return pv * evaluate(q, qinv(pv) * at * pv);
}

/// True when every coefficient has imaginary norm <= tau_real (1 + max|a_n|^2).
inline bool has_real_coefficients(const QPoly& p, double tau_real = kDefaultTolerances.real) {
  const double m = p.max_abs_coeff();
  const double limit = tau_real * (1.0 + m * m);
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [&](const Quat& a) { return imag_norm(a) <= limit; });
}

inline std::vector<double> real_parts(const QPoly& p) {
  std::vector<double> r;
  r.reserve(p.coeffs().size());
  for (const Quat& a : p.coeffs()) r.push_back(a.w);
  return r;
}

/// Real-part coefficients as a complex polynomial (the restriction of a
/// real-coefficient polynomial to any slice).
inline CPoly real_parts_complex(const QPoly& p) {
  CPoly r;
  r.reserve(p.coeffs().size());
  for (const Quat& a : p.coeffs()) r.emplace_back(a.w, 0.0);
  return r;
}

struct LinearDivision {
  QPoly quotient;
  Quat remainder;
};

/// P = (q - alpha) * Q + r with constant r. The remainder equals P(alpha).
inline LinearDivision left_divide_linear(const QPoly& p, const Quat& alpha) {
  if (p.is_zero()) throw InvalidArgument("left_divide_linear: zero polynomial");
  const auto& a = p.coeffs();
  const std::size_t m = a.size() - 1;
  if (m == 0) return {QPoly{}, a[0]};
  // P_n = b_{n-1} - alpha b_n, solved from the top.
  std::vector<Quat> b(m);
  b[m - 1] = a[m];
  for (std::size_t n = m - 1; n >= 1; --n) b[n - 1] = a[n] + alpha * b[n];
  const Quat r = a[0] + alpha * b[0];
  return {QPoly(std::move(b)), r};
}

/// q^2 - 2x q + (x^2 + y^2), vanishing exactly on the sphere [x + I y].
inline QPoly characteristic_poly(const TwoSphere& s) {
  return QPoly({Quat{s.x * s.x + s.y * s.y}, Quat{-2.0 * s.x}, Quat{1.0}});
}

/// Divides by a real-coefficient polynomial (central, so left and right
/// division agree). Returns quotient; the remainder is reported through
/// `remainder_norm` as the largest discarded coefficient.
inline QPoly divide_by_real(const QPoly& p, std::span<const double> divisor,
                            double* remainder_norm = nullptr) {
  const int dp = p.degree();
  const int dd = static_cast<int>(divisor.size()) - 1;
  if (dd < 0 || divisor.back() == 0.0) throw InvalidArgument("divide_by_real: bad divisor");
  if (dp < dd) {
    if (remainder_norm) *remainder_norm = p.max_abs_coeff();
    return {};
  }
  std::vector<Quat> rem(p.coeffs());
  std::vector<Quat> quot(static_cast<std::size_t>(dp - dd + 1));
  for (int n = dp - dd; n >= 0; --n) {
    const Quat c = rem[static_cast<std::size_t>(n + dd)] / divisor.back();
    quot[static_cast<std::size_t>(n)] = c;
    for (int k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(n + k)] -= c * divisor[static_cast<std::size_t>(k)];
  }
  if (remainder_norm) {
    double r = 0.0;
    for (int n = 0; n < dd; ++n) r = std::max(r, qnorm(rem[static_cast<std::size_t>(n)]));
    *remainder_norm = r;
  }
  return QPoly(std::move(quot), 0.0);
}

/// P restricted to C(I): P(z) = P1(z) + P2(z) J for z in C(I), J = orthogonal_unit(I).
struct ComplexSlicePoly {
  UnitImaginary unit;
  UnitImaginary ortho;
  CPoly p1;
  CPoly p2;

  /// P1(z) + P2(z) J, z given in the basis {1, I}.
  Quat evaluate(Complex z) const {
    return embed(cpoly_eval(p1, z), unit) + embed(cpoly_eval(p2, z), unit) * ortho.value();
  }
};

/// Projects every coefficient onto the orthonormal basis {1, I, J, IJ}:
/// a = (c0 + c1 I) + (c2 + c3 I) J.
inline ComplexSlicePoly restrict_to_slice(const QPoly& p, const UnitImaginary& unit) {
  const UnitImaginary ortho = orthogonal_unit(unit);
  const Quat& u = unit.value();
  const Quat& v = ortho.value();
  const Quat uv = u * v;
  ComplexSlicePoly out{unit, ortho, {}, {}};
  out.p1.reserve(p.coeffs().size());
  out.p2.reserve(p.coeffs().size());
  for (const Quat& a : p.coeffs()) {
    out.p1.emplace_back(a.w, dot(a, u));
    out.p2.emplace_back(dot(a, v), dot(a, uv));
  }
  return out;
}

}  // namespace qgl

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
 * @file quaternion.hpp
 * @brief Real quaternions q = w + x i + y j + z k, slices and 2-spheres.
 *
 * Multiplication is the Hamilton product (ij = k, jk = i, ki = j,
 * i^2 = j^2 = k^2 = -1) and does not commute. Every non-real q lies on
 * exactly one complex plane C(I) = {a + I b} where I = Im(q)/|Im(q)|, and
 * the conjugation orbit of q is the 2-sphere of all quaternions sharing
 * Re(q) and |Im(q)|.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "qgl/errors.hpp"
#include "qgl/tolerances.hpp"

namespace qgl {

template <typename T>
struct Quaternion {
  T w{}, x{}, y{}, z{};

  constexpr Quaternion() = default;
  constexpr Quaternion(T w_, T x_, T y_, T z_) : w{w_}, x{x_}, y{y_}, z{z_} {}
  // Implicit embedding of the reals.
  constexpr Quaternion(T real) : w{real} {}  // NOLINT(google-explicit-constructor)

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr T real() const { return w; }
  constexpr Quaternion imag() const { return {0, x, y, z}; }
  constexpr std::array<T, 4> components() const { return {w, x, y, z}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  // Hamilton product
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  constexpr Quaternion operator*(T s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quaternion operator/(T s) const { return {w / s, x / s, y / s, z / s}; }

  constexpr Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  constexpr Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  constexpr Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
  constexpr Quaternion& operator*=(T s) { return *this = *this * s; }
};

template <typename T>
constexpr Quaternion<T> operator*(T s, const Quaternion<T>& q) {
  return q * s;
}

using Quat = Quaternion<double>;

template <typename T>
constexpr Quaternion<T> qmul(const Quaternion<T>& p, const Quaternion<T>& q) {
  return p * q;
}

template <typename T>
constexpr Quaternion<T> qconj(const Quaternion<T>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename T>
constexpr T qnorm2(const Quaternion<T>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <typename T>
T qnorm(const Quaternion<T>& q) {
  return std::sqrt(qnorm2(q));
}

/// Norm of the vector part.
template <typename T>
T imag_norm(const Quaternion<T>& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// Euclidean inner product on R^4.
template <typename T>
constexpr T dot(const Quaternion<T>& p, const Quaternion<T>& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

/// Throws DomainError for q == 0.
template <typename T>
Quaternion<T> qinv(const Quaternion<T>& q) {
  const T n2 = qnorm2(q);
  if (n2 == T{0}) {
    throw DomainError("qinv: zero quaternion has no inverse");
  }
  return qconj(q) / n2;
}

template <typename T>
bool is_finite(const Quaternion<T>& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) &&
         std::isfinite(q.z);
}

/// An element of S^2: zero scalar part, unit norm.
class UnitImaginary {
 public:
  /// Validates against tau_unit; throws InvalidArgument otherwise.
  static UnitImaginary from(const Quat& q, double tau_unit = kDefaultTolerances.unit) {
    if (std::abs(q.w) > tau_unit || std::abs(qnorm(q) - 1.0) > tau_unit) {
      throw InvalidArgument("UnitImaginary: not a unit imaginary quaternion");
    }
    return UnitImaginary(q);
  }
  /// Normalizes the vector part of q; throws InvalidArgument when it vanishes.
  static UnitImaginary normalized(const Quat& q) {
    const double n = imag_norm(q);
    if (n == 0.0) {
      throw InvalidArgument("UnitImaginary: vector part is zero");
    }
    return UnitImaginary(Quat{0.0, q.x / n, q.y / n, q.z / n});
  }

  static UnitImaginary i() { return UnitImaginary(Quat::i()); }
  static UnitImaginary j() { return UnitImaginary(Quat::j()); }
  static UnitImaginary k() { return UnitImaginary(Quat::k()); }

  const Quat& value() const { return value_; }
  operator const Quat&() const { return value_; }  // NOLINT(google-explicit-constructor)

  bool operator==(const UnitImaginary&) const = default;

 private:
  explicit UnitImaginary(const Quat& q) : value_(q) {}
  Quat value_;
};

/// The sphere [x + I y] = { x + K y : K in S^2 }, y >= 0.
struct TwoSphere {
  double x = 0.0;
  double y = 0.0;

  bool is_real_point() const { return y == 0.0; }
  bool contains(const Quat& q, double tau_sphere = kDefaultTolerances.sphere) const {
    return std::abs(q.w - x) <= tau_sphere && std::abs(imag_norm(q) - y) <= tau_sphere;
  }
  /// x + I y.
  Quat point(const UnitImaginary& unit) const { return Quat{x} + unit.value() * y; }
  double modulus() const { return std::hypot(x, y); }
};

/// Im(q)/|Im(q)|. Throws AmbiguousSlice for (numerically) real q.
inline UnitImaginary imag_unit(const Quat& q, double tau_unit = kDefaultTolerances.unit) {
  if (imag_norm(q) <= tau_unit) {
    throw AmbiguousSlice("imag_unit: real quaternion lies on every slice");
  }
  return UnitImaginary::normalized(q);
}

inline TwoSphere sphere_of(const Quat& q) { return {q.w, imag_norm(q)}; }

inline bool same_sphere(const Quat& p, const Quat& q,
                        double tau_sphere = kDefaultTolerances.sphere) {
  return std::abs(p.w - q.w) <= tau_sphere &&
         std::abs(imag_norm(p) - imag_norm(q)) <= tau_sphere;
}

/// Deterministic J orthogonal to I: Gram-Schmidt of the first of (i, j, k)
/// that is not nearly parallel to I.
inline UnitImaginary orthogonal_unit(const UnitImaginary& unit) {
  constexpr double kParallel = 1.0 - 1e-6;
  const Quat& u = unit.value();
  for (const Quat& e : {Quat::i(), Quat::j(), Quat::k()}) {
    const double c = dot(e, u);
    if (std::abs(c) > kParallel) continue;
    return UnitImaginary::normalized(e - u * c);
  }
  // Unreachable for a unit vector: it cannot be parallel to all three axes.
  throw DomainError("orthogonal_unit: no admissible basis vector");
}

/// Complex numbers of a slice C(I) are stored as std::complex in the basis {1, I}.
inline Quat embed(std::complex<double> z, const UnitImaginary& unit) {
  return Quat{z.real()} + unit.value() * z.imag();
}

}  // namespace qgl

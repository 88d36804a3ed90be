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


// Shared test helpers. The oracles here do not call into the library's
// arithmetic: quaternions are modelled as 2x2 complex matrices.

#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <vector>

#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/random.hpp"

namespace qgl {

inline void PrintTo(const Quat& q, std::ostream* os) {
  *os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace qgl

namespace qgl::testing {

using Mat2 = std::array<std::complex<double>, 4>;  // row-major

// w + x i + y j + z k  ->  [[w + x i, y + z i], [-y + z i, w - x i]]
inline Mat2 to_matrix(const Quat& q) {
  return {std::complex<double>{q.w, q.x}, {q.y, q.z}, {-q.y, q.z}, {q.w, -q.x}};
}

inline Quat from_matrix(const Mat2& m) { return {m[0].real(), m[0].imag(), m[1].real(), m[1].imag()}; }

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

inline Quat oracle_mul(const Quat& a, const Quat& b) { return from_matrix(matmul(to_matrix(a), to_matrix(b))); }

inline double oracle_norm(const Quat& q) {
  // |q|^2 is the determinant of the matrix model.
  const Mat2 m = to_matrix(q);
  return std::sqrt((m[0] * m[3] - m[1] * m[2]).real());
}

// sum_n q^n a_n with powers built by repeated oracle multiplication.
inline Quat oracle_eval(const std::vector<Quat>& a, const Quat& q) {
  Quat acc{}, power{1.0};
  for (const Quat& c : a) {
    acc = acc + oracle_mul(power, c);
    power = oracle_mul(power, q);
  }
  return acc;
}

inline double dist(const Quat& a, const Quat& b) { return oracle_norm(a - b); }

inline double scale(const QPoly& p, const Quat& q) {
  double acc = 0.0, r = 1.0;
  for (const Quat& a : p.coeffs()) {
    acc += oracle_norm(a) * r;
    r *= 1.0 + oracle_norm(q);
  }
  return acc;
}

inline Quat random_pure(Rng& rng, double radius) {
  Quat q = rng.quaternion_in_ball(radius);
  q.w = 0.0;
  return q;
}

}  // namespace qgl::testing

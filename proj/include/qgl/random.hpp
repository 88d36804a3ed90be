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

// Seeded generators for the randomized campaigns. Uniform doubles are built
// from raw mt19937_64 bits so that a seed means the same stream on every
// standard library.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qgl/cpoly.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"

namespace qgl {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  /// Independent stream for trial `index` of a campaign seeded with `seed`.
  static Rng for_instance(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Quat quaternion_in_ball(double radius) {
    for (;;) {
      const Quat q{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (qnorm2(q) <= 1.0) return q * radius;
    }
  }
  UnitImaginary unit_imaginary() {
    for (;;) {
      const Quat q{0.0, uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const double n2 = qnorm2(q);
      if (n2 <= 1.0 && n2 > 1e-4) return UnitImaginary::normalized(q);
    }
  }
  Complex complex_in_box(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

 private:
  std::mt19937_64 engine_;
};

/// (q - roots[0]) * (q - roots[1]) * ... * (q - roots[n-1]).
inline QPoly factored_poly(const std::vector<Quat>& roots) {
  QPoly p{Quat{1.0}};
  for (const Quat& a : roots) p = star_mul(p, linear_factor(a));
  return p;
}

struct FactoredInstance {
  std::vector<Quat> roots;
  QPoly poly;
};

inline FactoredInstance random_factored_poly(Rng& rng, int min_degree, int max_degree, double radius) {
  FactoredInstance inst;
  const int n = rng.uniform_int(min_degree, max_degree);
  for (int k = 0; k < n; ++k) inst.roots.push_back(rng.quaternion_in_ball(radius));
  inst.poly = factored_poly(inst.roots);
  return inst;
}

/// Dense quaternionic coefficients in [-1, 1]^4, leading coefficient of norm >= 1/2.
inline QPoly random_dense_poly(Rng& rng, int degree) {
  std::vector<Quat> c;
  for (int n = 0; n <= degree; ++n) c.push_back(rng.quaternion_in_ball(1.0));
  while (qnorm(c.back()) < 0.5) c.back() = rng.quaternion_in_ball(1.0);
  return QPoly(std::move(c));
}

/// Real coefficients in [-1, 1], leading coefficient of modulus >= 1/2.
inline QPoly random_real_poly(Rng& rng, int degree) {
  std::vector<double> c;
  for (int n = 0; n <= degree; ++n) c.push_back(rng.uniform(-1.0, 1.0));
  while (std::abs(c.back()) < 0.5) c.back() = rng.uniform(-1.0, 1.0);
  return QPoly::from_real(c);
}

inline CPoly random_cpoly(Rng& rng, int degree) {
  CPoly p;
  for (int n = 0; n <= degree; ++n) p.push_back(rng.complex_in_box(1.0));
  while (std::abs(p.back()) < 0.5) p.back() = rng.complex_in_box(1.0);
  return p;
}

}  // namespace qgl

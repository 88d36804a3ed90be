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

#pragma once

#include <cmath>
#include <vector>

#include "qgl/errors.hpp"
#include "qgl/qpoly.hpp"

namespace qgl {

struct ModulusBound {
  double bound = 0.0;
  /// n attaining the maximum (first one on ties)
  int maximizing_n = 0;
  /// leading coefficient of P^s, |a_m|^2
  double leading = 0.0;
  /// coefficients b_0..b_{2m} of P^s
  std::vector<double> b;
};

/// C(n, k) as a double.
inline double binomial(int n, int k) {
  double r = 1.0;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

/// Lower bound on the largest zero modulus over Z_P and Z_{P^c}:
///   max_{0 < n < 2m} ( |b_{2m-n}| / (C(2m, n) |b_{2m}|) )^(1/n)
/// with b the coefficients of P^s.
inline ModulusBound modulus_lower_bound(const QPoly& p) {
  if (p.degree() < 1) throw InvalidArgument("modulus_lower_bound: degree must be >= 1");
  ModulusBound out;
  out.b = real_parts(symmetrize(p));
  const int top = 2 * p.degree();
  out.b.resize(static_cast<std::size_t>(top) + 1, 0.0);
  out.leading = out.b[static_cast<std::size_t>(top)];
  if (out.leading == 0.0) {
    throw InvalidArgument("modulus_lower_bound: leading coefficient of P^s vanishes");
  }
  out.maximizing_n = 1;
  for (int n = 1; n < top; ++n) {
    const double ratio = std::abs(out.b[static_cast<std::size_t>(top - n)]) /
                         (binomial(top, n) * std::abs(out.leading));
    const double value = std::pow(ratio, 1.0 / n);
    if (value > out.bound) {
      out.bound = value;
      out.maximizing_n = n;
    }
  }
  return out;
}

}  // namespace qgl

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

// Dense complex polynomials, ascending degree. Small free functions only;
// these are the slice-level objects P1, P2, Q, M.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace qgl {

using Complex = std::complex<double>;
using CPoly = std::vector<Complex>;

/// Drops exactly-zero leading coefficients.
inline CPoly cpoly_trim(CPoly p) {
  while (!p.empty() && p.back() == Complex{}) p.pop_back();
  return p;
}

/// Degree of the trimmed polynomial; -1 for the zero polynomial.
inline int cpoly_degree(const CPoly& p) {
  for (std::size_t n = p.size(); n > 0; --n) {
    if (p[n - 1] != Complex{}) return static_cast<int>(n) - 1;
  }
  return -1;
}

inline Complex cpoly_eval(const CPoly& p, Complex z) {
  Complex acc{};
  for (std::size_t n = p.size(); n > 0; --n) acc = acc * z + p[n - 1];
  return acc;
}

/// sum |p_n| |z|^n, the natural magnitude for evaluation error at z.
inline double cpoly_abs_eval(const CPoly& p, double r) {
  double acc = 0.0;
  for (std::size_t n = p.size(); n > 0; --n) acc = acc * r + std::abs(p[n - 1]);
  return acc;
}

inline CPoly cpoly_derivative(const CPoly& p) {
  if (p.size() <= 1) return {};
  CPoly d(p.size() - 1);
  for (std::size_t n = 1; n < p.size(); ++n) d[n - 1] = p[n] * static_cast<double>(n);
  return d;
}

inline CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly c(a.size() + b.size() - 1);
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (std::size_t k = 0; k < b.size(); ++k) c[s + k] += a[s] * b[k];
  }
  return c;
}

inline CPoly cpoly_add(const CPoly& a, const CPoly& b) {
  CPoly c(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < a.size(); ++n) c[n] += a[n];
  for (std::size_t n = 0; n < b.size(); ++n) c[n] += b[n];
  return c;
}

inline CPoly cpoly_sub(const CPoly& a, const CPoly& b) {
  CPoly c(std::max(a.size(), b.size()));
  for (std::size_t n = 0; n < a.size(); ++n) c[n] += a[n];
  for (std::size_t n = 0; n < b.size(); ++n) c[n] -= b[n];
  return c;
}

/// The polynomial z -> conj(p(conj z)), i.e. conjugated coefficients.
inline CPoly cpoly_reflect(const CPoly& p) {
  CPoly r(p.size());
  std::transform(p.begin(), p.end(), r.begin(), [](Complex c) { return std::conj(c); });
  return r;
}

/// p(z) conj(p(conj z)) + q(z) conj(q(conj z)); real coefficients in exact arithmetic.
inline CPoly hermitian_square_sum(const CPoly& p, const CPoly& q) {
  return cpoly_add(cpoly_mul(p, cpoly_reflect(p)), cpoly_mul(q, cpoly_reflect(q)));
}

inline double cpoly_max_abs(const CPoly& p) {
  double m = 0.0;
  for (const Complex& c : p) m = std::max(m, std::abs(c));
  return m;
}

/// Product of (z - r) over the given roots, times `lead`.
inline CPoly cpoly_from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
  CPoly p{lead};
  for (const Complex& r : roots) p = cpoly_mul(p, CPoly{-r, 1.0});
  return p;
}

}  // namespace qgl

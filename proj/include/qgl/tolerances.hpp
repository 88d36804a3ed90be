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

namespace qgl {

/// Every numeric threshold used by the library. Relative thresholds are
/// multiplied by the scale documented next to them at the point of use.
struct Tolerances {
  double unit = 1e-10;     // |Re I|, ||I|-1| for unit imaginaries
  double sphere = 1e-8;    // sphere membership, absolute
  double trim = 1e-12;     // leading coefficient trim, x max|a_n|
  double eval = 1e-10;     // star-evaluation zero test, x (1 + sum |a_n||q|^n)
  double real = 1e-12;     // imaginary part of "real" coefficients, x (1 + max|a_n|^2)
  double zero = 1e-9;      // zero residual, x scale(P, q)
  double cluster = 1e-6;   // root cluster radius, x (1 + |root|)
  double hull = 1e-8;      // hull slack, x (1 + |query|)
  double factor = 1e-8;    // Q - M M* coefficient residual, x (1 + max|Q_n|)
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qgl

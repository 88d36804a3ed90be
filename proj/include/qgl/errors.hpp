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

#include <stdexcept>
#include <string>

namespace qgl {

/// Mathematically undefined request, e.g. inverting the zero quaternion.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real quaternion lies on every slice; there is no canonical imaginary unit.
class AmbiguousSlice : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Caller violated a precondition (degree too small, zero polynomial, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floating point could not resolve a structure that exists in exact
/// arithmetic. The message carries the diagnostics.
class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgl

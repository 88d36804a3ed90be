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

// Umbrella header.

#pragma once

#include "qgl/bound.hpp"
#include "qgl/campaign.hpp"
#include "qgl/complex_roots.hpp"
#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/factor.hpp"
#include "qgl/gauss_lucas.hpp"
#include "qgl/hull.hpp"
#include "qgl/json_io.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/random.hpp"
#include "qgl/tolerances.hpp"
#include "qgl/zero_set.hpp"

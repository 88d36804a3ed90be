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

// JSON interchange:
//   Quaternion   [w, x, y, z]
//   QPoly        {"coeffs": [[w,x,y,z], ...]}  (ascending degree)
//   ZeroSet      {"isolated": [{"q", "mult", "residual"}], "spheres": [{"x", "y", "mult", "residual"}]}
//   GLReport     {"verdict", "tolerances", "seed", "critical_points": [{"q", "certificate"|"violation"}]}

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgl/bound.hpp"
#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/factor.hpp"
#include "qgl/gauss_lucas.hpp"
#include "qgl/hull.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/tolerances.hpp"
#include "qgl/zero_set.hpp"

namespace qgl {

using Json = nlohmann::json;

inline Json to_json(const Quat& q) { return Json::array({q.w, q.x, q.y, q.z}); }

/// Throws InvalidArgument unless j is an array of four finite numbers.
inline Quat quat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw InvalidArgument("quaternion must be a JSON array [w, x, y, z]");
  }
  double c[4];
  for (std::size_t n = 0; n < 4; ++n) {
    if (!j[n].is_number()) throw InvalidArgument("quaternion components must be numbers");
    c[n] = j[n].get<double>();
    if (!std::isfinite(c[n])) throw InvalidArgument("quaternion components must be finite");
  }
  return {c[0], c[1], c[2], c[3]};
}

inline Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const Quat& a : p.coeffs()) coeffs.push_back(to_json(a));
  return Json{{"coeffs", coeffs}};
}

/// Accepts {"coeffs": [...]} or the bare coefficient array.
inline QPoly qpoly_from_json(const Json& j) {
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw InvalidArgument("polynomial object needs a \"coeffs\" field");
    coeffs = &j.at("coeffs");
  }
  if (!coeffs->is_array()) throw InvalidArgument("\"coeffs\" must be an array of quaternions");
  std::vector<Quat> c;
  for (const Json& q : *coeffs) c.push_back(quat_from_json(q));
  return QPoly(std::move(c));
}

inline QPoly qpoly_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return qpoly_from_json(j);
}

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const CPoly& p) {
  Json out = Json::array();
  for (const Complex& c : p) out.push_back(to_json(c));
  return out;
}

inline Json to_json(const ZeroSet& zs) {
  Json iso = Json::array();
  for (const auto& z : zs.isolated) {
    iso.push_back({{"q", to_json(z.q)}, {"mult", z.multiplicity}, {"residual", z.residual}});
  }
  Json sph = Json::array();
  for (const auto& s : zs.spheres) {
    sph.push_back({{"x", s.sphere.x}, {"y", s.sphere.y}, {"mult", s.multiplicity}, {"residual", s.residual}});
  }
  return Json{{"isolated", iso}, {"spheres", sph}};
}

inline Json to_json(const Tolerances& t) {
  return Json{{"unit", t.unit},   {"sphere", t.sphere}, {"trim", t.trim},
              {"eval", t.eval},   {"real", t.real},     {"zero", t.zero},
              {"cluster", t.cluster}, {"hull", t.hull}, {"factor", t.factor}};
}

inline Json to_json(const HullCertificate& c) {
  Json pts = Json::array();
  for (const Quat& p : c.points) pts.push_back(to_json(p));
  return Json{{"points", pts}, {"weights", c.weights}, {"slack", c.slack}};
}

inline Json to_json(const Outside& o) {
  return Json{{"distance", o.distance}, {"nearest", to_json(o.nearest)}};
}

inline Json to_json(const HullMembership& m) {
  return std::visit([](const auto& v) { return to_json(v); }, m);
}

inline Json to_json(const GLReport& r) {
  Json crit = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"q", to_json(c.query)}, {"origin", c.origin}};
    if (const auto* cert = std::get_if<HullCertificate>(&c.membership)) {
      entry["certificate"] = to_json(*cert);
      entry["recheck"] = c.recheck.ok ? "ok" : c.recheck.reason;
    } else {
      entry["violation"] = to_json(std::get<Outside>(c.membership));
    }
    crit.push_back(entry);
  }
  return Json{{"id", r.id},
              {"target", r.target},
              {"verdict", r.verified ? "verified" : "violated"},
              {"tolerances", to_json(r.tolerances)},
              {"seed", r.seed},
              {"critical_set", to_json(r.critical)},
              {"hull_set", to_json(r.hull_set)},
              {"critical_points", crit}};
}

inline Json to_json(const MFactor& m) { return Json{{"m", to_json(m.m)}, {"residual", m.residual}}; }

inline Json to_json(const ModulusBound& b) {
  return Json{{"bound", b.bound}, {"maximizing_n", b.maximizing_n}, {"leading", b.leading}, {"b", b.b}};
}

}  // namespace qgl

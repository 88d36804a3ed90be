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
 * @file commands.hpp
 * @brief The analyze / verify / factor / bound commands behind the CLI.
 *
 * Each command maps a RunConfig to an exit code and the report text, so the
 * command logic is testable without spawning a process.
 *
 * Exit codes: 0 success or verified, 1 a certificate genuinely failed,
 * 2 usage or input error, 3 numerical breakdown.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgl/bound.hpp"
#include "qgl/campaign.hpp"
#include "qgl/errors.hpp"
#include "qgl/factor.hpp"
#include "qgl/gauss_lucas.hpp"
#include "qgl/hull.hpp"
#include "qgl/json_io.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/tolerances.hpp"
#include "qgl/zero_set.hpp"

namespace qgl {

enum ExitCode : int { kExitOk = 0, kExitViolated = 1, kExitUsage = 2, kExitBreakdown = 3 };

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> coeffs;
  /// Slice unit for `factor`, as a JSON quaternion; i when absent.
  std::optional<std::string> slice;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  Tolerances tolerances = kDefaultTolerances;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> output_path;
  unsigned threads = 0;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // report, written to stdout or --out
  std::string error;   // diagnostics for stderr
};

/// `w + x i + y j + z k` with 6 significant digits. Components below
/// 1e-15 (1 + |q|) print as 0.
inline std::string format_quat(const Quat& q) {
  const double floor = 1e-15 * (1.0 + qnorm(q));
  auto clean = [floor](double v) { return std::abs(v) <= floor ? 0.0 : v; };
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.6g + %.6g i + %.6g j + %.6g k", clean(q.w), clean(q.x), clean(q.y),
                clean(q.z));
  return buf;
}

inline std::string format_complex(const Complex& z) {
  const double floor = 1e-15 * (1.0 + std::abs(z));
  auto clean = [floor](double v) { return std::abs(v) <= floor ? 0.0 : v; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gI", clean(z.real()), clean(z.imag()));
  return buf;
}

inline std::string format_zero_set(const ZeroSet& zs, const std::string& indent = "  ") {
  std::ostringstream os;
  if (zs.empty()) os << indent << "(none)\n";
  for (const auto& z : zs.isolated) {
    os << indent << "point  " << format_quat(z.q) << "  mult " << z.multiplicity << "  residual " << z.residual
       << "\n";
  }
  for (const auto& s : zs.spheres) {
    os << indent << "sphere x=" << (std::abs(s.sphere.x) <= 1e-15 * (1.0 + s.sphere.y) ? 0.0 : s.sphere.x) << " y=" << s.sphere.y << "  mult " << s.multiplicity
       << "  residual " << s.residual << "\n";
  }
  return os.str();
}

/// Reads the polynomial from --input or --coeffs. Throws InvalidArgument.
inline QPoly load_polynomial(const RunConfig& cfg) {
  if (cfg.input_path && cfg.coeffs) throw InvalidArgument("give either --input or --coeffs, not both");
  if (cfg.coeffs) return qpoly_from_json_text(*cfg.coeffs);
  if (cfg.input_path) {
    std::ifstream in(*cfg.input_path);
    if (!in) throw InvalidArgument("cannot open input file " + *cfg.input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return qpoly_from_json_text(buf.str());
  }
  throw InvalidArgument("a polynomial is required (--input FILE or --coeffs JSON)");
}

namespace detail {

template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    return {kExitUsage, "", e.what()};
  } catch (const NumericalBreakdown& e) {
    return {kExitBreakdown, "", std::string("numerical breakdown: ") + e.what()};
  } catch (const DomainError& e) {
    return {kExitBreakdown, "", std::string("numerical breakdown: ") + e.what()};
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// Zero set, critical points, hull verdicts against Z_{P^s} (and against
/// Z_P for comparison) and the zero-modulus bound.
inline CommandResult cmd_analyze(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    const QPoly p = load_polynomial(cfg);
    if (p.degree() < 1) throw InvalidArgument("analyze: polynomial must have degree >= 1");
    const ZeroSet zp = zero_set(p, cfg.tolerances);
    const ZeroSet crit = critical_points(p, cfg.tolerances);
    const ModulusBound bound = modulus_lower_bound(p);
    const QPoly ps = symmetrize(p);

    std::optional<GLReport> report;
    if (p.degree() >= 2) {
      GLOptions opts;
      opts.tolerances = cfg.tolerances;
      opts.seed = cfg.seed;
      opts.id = "analyze";
      report = verify_gauss_lucas(p, opts);
    }
    // The classical statement against Z_P itself, where decidable.
    std::vector<std::pair<Quat, std::optional<HullMembership>>> vs_zp;
    if (report) {
      for (const auto& c : report->checks) {
        std::optional<HullMembership> m;
        try {
          m = hull_membership_slice(c.query, zp, cfg.tolerances);
        } catch (const InvalidArgument&) {
        }
        vs_zp.emplace_back(c.query, m);
      }
    }
    const int code = (report && !report->verified) ? kExitViolated : kExitOk;

    if (cfg.format == OutputFormat::kJson) {
      Json vs = Json::array();
      for (const auto& [q, m] : vs_zp) {
        Json e{{"q", to_json(q)}};
        if (!m) {
          e["membership"] = "undecided";
        } else if (is_inside(*m)) {
          e["membership"] = "inside";
          e["certificate"] = to_json(std::get<HullCertificate>(*m));
        } else {
          e["membership"] = "outside";
          e["violation"] = to_json(std::get<Outside>(*m));
        }
        vs.push_back(e);
      }
      Json out{{"command", "analyze"},
               {"polynomial", to_json(p)},
               {"degree", p.degree()},
               {"symmetrization", to_json(ps)},
               {"zero_set", to_json(zp)},
               {"critical_points", to_json(crit)},
               {"gauss_lucas", report ? to_json(*report) : Json(nullptr)},
               {"versus_zero_set", vs},
               {"modulus_bound", to_json(bound)},
               {"max_zero_modulus", zp.max_modulus()}};
      return {code, detail::dump(out), ""};
    }

    std::ostringstream os;
    os << "polynomial of degree " << p.degree() << "\n";
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
      os << "  a_" << n << " = " << format_quat(p.coeffs()[n]) << "\n";
    }
    os << "symmetrization P^s coefficients:";
    for (const Quat& b : ps.coeffs()) os << " " << b.w;
    os << "\nzeros of P:\n" << format_zero_set(zp);
    os << "critical points (zeros of P'):\n" << format_zero_set(crit);
    if (report) {
      os << "zeros of P^s:\n" << format_zero_set(report->hull_set);
      os << "critical points versus Hull(Z_{P^s}):\n";
      for (const auto& c : report->checks) {
        os << "  " << format_quat(c.query) << "  ";
        if (const auto* cert = std::get_if<HullCertificate>(&c.membership)) {
          os << "inside, slack " << cert->slack << ", " << cert->points.size() << " support points"
             << (c.recheck.ok ? "" : " [recheck failed: " + c.recheck.reason + "]") << "\n";
        } else {
          os << "OUTSIDE, distance " << std::get<Outside>(c.membership).distance << "\n";
        }
      }
      os << "critical points versus Hull(Z_P):\n";
      for (const auto& [q, m] : vs_zp) {
        os << "  " << format_quat(q) << "  ";
        if (!m) {
          os << "undecided (Z_P mixes spheres and non-real points)\n";
        } else if (is_inside(*m)) {
          os << "inside\n";
        } else {
          os << "outside, distance " << std::get<Outside>(*m).distance << "\n";
        }
      }
      os << "verdict: " << (report->verified ? "verified" : "VIOLATED") << "\n";
    }
    os << "zero modulus lower bound: " << bound.bound << " (n = " << bound.maximizing_n
       << "), largest zero modulus: " << zp.max_modulus() << "\n";
    return {code, os.str(), ""};
  });
}

/// Randomized campaign over `trials` factored polynomials.
inline CommandResult cmd_verify(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    if (cfg.trials < 1) throw InvalidArgument("verify: --trials must be >= 1");
    CampaignConfig cc;
    cc.seed = cfg.seed;
    cc.trials = cfg.trials;
    cc.tolerances = cfg.tolerances;
    cc.threads = cfg.threads;
    const CampaignReport report = run_campaign(cc);
    const std::size_t violations = report.count(InstanceStatus::kViolated);
    const std::size_t breakdowns = report.count(InstanceStatus::kBreakdown);
    int code = kExitOk;
    if (violations > 0) {
      code = kExitViolated;
    } else if (breakdowns * 100 > cfg.trials) {
      code = kExitBreakdown;
    }
    if (cfg.format == OutputFormat::kJson) return {code, detail::dump(to_json(report)), ""};
    std::ostringstream os;
    os << "seed " << cfg.seed << ", " << cfg.trials << " trials\n"
       << "  verified   " << report.count(InstanceStatus::kVerified) << "\n"
       << "  violations " << violations << "\n"
       << "  breakdowns " << breakdowns << "\n"
       << "  max slack / (1 + |q|) " << report.max_relative_slack() << "\n"
       << "  max violation distance / (1 + |q|) " << report.max_relative_violation() << "\n";
    for (const auto& r : report.results) {
      if (r.status == InstanceStatus::kVerified) continue;
      os << "  trial " << r.index << " " << to_string(r.status) << ": " << r.message << "\n"
         << "    --coeffs '" << to_json(r.poly).at("coeffs").dump() << "'\n";
    }
    return {code, os.str(), ""};
  });
}

/// P^s restricted to C(I), factored as M(z) conj(M(conj z)).
inline CommandResult cmd_factor(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    const QPoly p = load_polynomial(cfg);
    if (p.is_zero()) throw InvalidArgument("factor: zero polynomial");
    UnitImaginary unit = UnitImaginary::i();
    if (cfg.slice) {
      Json j;
      try {
        j = Json::parse(*cfg.slice);
      } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed --slice: ") + e.what());
      }
      const Quat u = quat_from_json(j);
      if (imag_norm(u) == 0.0) throw InvalidArgument("--slice must have a nonzero vector part");
      unit = UnitImaginary::normalized(u);
    }
    const ComplexSlicePoly slice = restrict_to_slice(p, unit);
    const std::vector<double> q = slice_symmetrization(slice);
    const MFactor m = fejer_riesz_factor(q, cfg.tolerances);
    if (cfg.format == OutputFormat::kJson) {
      Json out{{"command", "factor"}, {"slice", to_json(unit.value())}, {"q", q}, {"factor", to_json(m)}};
      return {kExitOk, detail::dump(out), ""};
    }
    std::ostringstream os;
    os << "slice I = " << format_quat(unit.value()) << "\nQ coefficients:";
    for (double c : q) os << " " << c;
    os << "\nM coefficients (basis 1, I):";
    for (const Complex& c : m.m) os << " " << format_complex(c);
    os << "\nresidual " << m.residual << "\n";
    return {kExitOk, os.str(), ""};
  });
}

/// The zero-modulus lower bound next to the observed largest zero modulus.
inline CommandResult cmd_bound(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    const QPoly p = load_polynomial(cfg);
    if (p.is_zero()) throw InvalidArgument("bound: zero polynomial");
    if (p.degree() < 1) throw InvalidArgument("bound: polynomial must have degree >= 1");
    ModulusBound b;
    try {
      b = modulus_lower_bound(p);
    } catch (const InvalidArgument& e) {
      std::ostringstream msg;
      msg << e.what() << " (b_2m = " << real_parts(symmetrize(p)).back() << ")";
      return {kExitBreakdown, "", msg.str()};
    }
    const double observed =
        std::max(zero_set(p, cfg.tolerances).max_modulus(), zero_set(conjugate_poly(p), cfg.tolerances).max_modulus());
    if (cfg.format == OutputFormat::kJson) {
      Json out{{"command", "bound"}, {"bound", to_json(b)}, {"max_zero_modulus", observed}};
      return {kExitOk, detail::dump(out), ""};
    }
    std::ostringstream os;
    os << "lower bound " << b.bound << " (n = " << b.maximizing_n << ")\n"
       << "largest zero modulus over Z_P and Z_{P^c}: " << observed << "\n";
    return {kExitOk, os.str(), ""};
  });
}

inline CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "analyze") return cmd_analyze(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "factor") return cmd_factor(cfg);
  if (cfg.command == "bound") return cmd_bound(cfg);
  return {kExitUsage, "", "unknown command '" + cfg.command + "'"};
}

}  // namespace qgl

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
 * @file campaign.hpp
 * @brief Seeded randomized verification over many polynomials.
 *
 * Trial k draws from Rng::for_instance(seed, k) only, so results do not
 * depend on the thread count or on completion order; they are stored by
 * index.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qgl/errors.hpp"
#include "qgl/gauss_lucas.hpp"
#include "qgl/json_io.hpp"
#include "qgl/random.hpp"
#include "qgl/tolerances.hpp"

namespace qgl {

enum class InstanceStatus { kVerified, kViolated, kBreakdown };

inline const char* to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::kVerified: return "verified";
    case InstanceStatus::kViolated: return "violated";
    case InstanceStatus::kBreakdown: return "breakdown";
  }
  return "unknown";
}

struct InstanceResult {
  std::size_t index = 0;
  InstanceStatus status = InstanceStatus::kBreakdown;
  std::vector<Quat> roots;
  QPoly poly;
  std::size_t checks = 0;
  double max_relative_slack = 0.0;
  /// Largest distance / (1 + |q|) over critical points outside the hull.
  double max_relative_violation = 0.0;
  std::string message;
};

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  int min_degree = 2;
  int max_degree = 6;
  double radius = 5.0;
  Tolerances tolerances = kDefaultTolerances;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<InstanceResult> results;

  std::size_t count(InstanceStatus s) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                  [s](const InstanceResult& r) { return r.status == s; }));
  }
  double max_relative_slack() const {
    double m = 0.0;
    for (const auto& r : results) m = std::max(m, r.max_relative_slack);
    return m;
  }
  double max_relative_violation() const {
    double m = 0.0;
    for (const auto& r : results) m = std::max(m, r.max_relative_violation);
    return m;
  }
};

/// Runs fn(0..trials-1) on a small thread pool; output is indexed by trial.
template <typename Result>
std::vector<Result> parallel_trials(std::size_t trials, unsigned threads,
                                    const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < trials; k = next++) out[k] = fn(k);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

/// One trial: a random factored polynomial checked against Kull(Z_{P^s}).
inline InstanceResult run_instance(const CampaignConfig& config, std::size_t index) {
  Rng rng = Rng::for_instance(config.seed, index);
  FactoredInstance inst = random_factored_poly(rng, config.min_degree, config.max_degree, config.radius);
  InstanceResult r;
  r.index = index;
  r.roots = inst.roots;
  r.poly = inst.poly;
  try {
    GLOptions opts;
    opts.tolerances = config.tolerances;
    opts.seed = splitmix64(config.seed ^ index);
    const GLReport report = verify_gauss_lucas(inst.poly, opts);
    r.checks = report.checks.size();
    r.max_relative_slack = report.max_relative_slack();
    r.status = report.verified ? InstanceStatus::kVerified : InstanceStatus::kViolated;
    for (const auto& c : report.checks) {
      if (c.accepted()) continue;
      if (r.message.empty()) r.message = c.recheck.reason;
      if (const auto* out = std::get_if<Outside>(&c.membership)) {
        r.max_relative_violation = std::max(r.max_relative_violation, out->distance / (1.0 + qnorm(c.query)));
      }
    }
  } catch (const NumericalBreakdown& e) {
    r.status = InstanceStatus::kBreakdown;
    r.message = e.what();
  } catch (const DomainError& e) {
    r.status = InstanceStatus::kBreakdown;
    r.message = e.what();
  }
  return r;
}

inline CampaignReport run_campaign(const CampaignConfig& config) {
  CampaignReport report;
  report.config = config;
  report.results = parallel_trials<InstanceResult>(
      config.trials, config.threads, [&](std::size_t k) { return run_instance(config, k); });
  return report;
}

/// Deterministic JSON: totals plus full reproduction data for every failure.
inline Json to_json(const CampaignReport& report) {
  Json failures = Json::array();
  for (const auto& r : report.results) {
    if (r.status == InstanceStatus::kVerified) continue;
    Json roots = Json::array();
    for (const Quat& a : r.roots) roots.push_back(to_json(a));
    failures.push_back({{"index", r.index},
                        {"seed", report.config.seed},
                        {"status", to_string(r.status)},
                        {"roots", roots},
                        {"coeffs", to_json(r.poly).at("coeffs")},
                        {"message", r.message},
                        {"max_relative_violation", r.max_relative_violation}});
  }
  std::size_t checks = 0;
  for (const auto& r : report.results) checks += r.checks;
  const auto verified = report.count(InstanceStatus::kVerified);
  return Json{{"command", "verify"},
              {"seed", report.config.seed},
              {"trials", report.config.trials},
              {"degree_range", {report.config.min_degree, report.config.max_degree}},
              {"root_radius", report.config.radius},
              {"tolerances", to_json(report.config.tolerances)},
              {"verified", verified},
              {"violations", report.count(InstanceStatus::kViolated)},
              {"breakdowns", report.count(InstanceStatus::kBreakdown)},
              {"critical_point_checks", checks},
              {"max_relative_slack", report.max_relative_slack()},
              {"max_relative_violation", report.max_relative_violation()},
              {"verdict", verified == report.results.size() ? "verified" : "not verified"},
              {"failures", failures}};
}

}  // namespace qgl

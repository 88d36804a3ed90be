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

// qgl: zero sets, critical points and hull certificates for quaternionic
// polynomials.
//
//   qgl analyze --coeffs '[[0,0,1,0],[0,1,0,0],[0.5,0,0,0]]'
//   qgl verify --seed 42 --trials 1000 --format json
//   qgl factor --input p.json --slice '[0,0,1,0]'
//   qgl bound --input p.json

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qgl/commands.hpp"

namespace {

void add_common(CLI::App& sub, qgl::RunConfig& cfg, std::string& format, bool needs_poly) {
  if (needs_poly) {
    auto* input = sub.add_option("--input", cfg.input_path, "JSON file {\"coeffs\": [[w,x,y,z], ...]}");
    auto* coeffs = sub.add_option("--coeffs", cfg.coeffs, "inline coefficient array, ascending degree");
    input->excludes(coeffs);
  }
  sub.add_option("--seed", cfg.seed, "seed for randomized steps")->envname("QL_SEED");
  sub.add_option("--eps-hull", cfg.tolerances.hull, "hull slack tolerance, relative to 1 + |q|");
  sub.add_option("--tol-zero", cfg.tolerances.zero, "zero residual tolerance, relative to scale(P)");
  sub.add_option("--tol-factor", cfg.tolerances.factor, "factorization residual tolerance");
  sub.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub.add_option("--out", cfg.output_path, "write the report to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic polynomial zeros, critical points and Gauss-Lucas hull certificates"};
  app.require_subcommand(1);

  qgl::RunConfig cfg;
  std::string format = "text";
  long long trials = 1000;

  auto* analyze = app.add_subcommand("analyze", "zero set, critical points, hull verdicts, modulus bound");
  add_common(*analyze, cfg, format, true);

  auto* verify = app.add_subcommand("verify", "randomized campaign over factored polynomials");
  add_common(*verify, cfg, format, false);
  verify->add_option("--trials", trials, "number of random polynomials");
  verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");

  auto* factor = app.add_subcommand("factor", "factor P^s on a slice as M(z) conj(M(conj z))");
  add_common(*factor, cfg, format, true);
  factor->add_option("--slice", cfg.slice, "slice unit as [0,x,y,z] (default i)");

  auto* bound = app.add_subcommand("bound", "lower bound on the largest zero modulus");
  add_common(*bound, cfg, format, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qgl::kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (trials < 1) {
    std::cerr << "error: --trials must be >= 1\n";
    return qgl::kExitUsage;
  }
  cfg.trials = static_cast<std::size_t>(trials);
  cfg.format = format == "json" ? qgl::OutputFormat::kJson : qgl::OutputFormat::kText;

  const qgl::CommandResult result = qgl::run_command(cfg);
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (cfg.output_path) {
    std::ofstream out(*cfg.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *cfg.output_path << "\n";
      return qgl::kExitUsage;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}

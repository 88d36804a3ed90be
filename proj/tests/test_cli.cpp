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


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qgl/commands.hpp"
#include "qgl/json_io.hpp"

namespace qgl {
namespace {

constexpr const char* kCounterexample = "[[0,0,1,0],[0,1,0,0],[0.5,0,0,0]]";
constexpr const char* kThreeOnOneSphere = "[[2,0,0,2],[4,0,2,2],[3,0,1,0],[1,0,0,0]]";

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(QGL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

RunConfig config(const std::string& command, const std::string& coeffs) {
  RunConfig cfg;
  cfg.command = command;
  cfg.coeffs = coeffs;
  cfg.format = OutputFormat::kJson;
  return cfg;
}

TEST(Json, PolynomialRoundTrip) {
  const QPoly p({Quat{1, 2, 3, 4}, Quat{0.5, -1, 0, 0}});
  EXPECT_EQ(qpoly_from_json(to_json(p)), p);
  EXPECT_EQ(qpoly_from_json_text("[[1,2,3,4],[0.5,-1,0,0]]"), p);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(qpoly_from_json_text("[[1,2,3]]"), InvalidArgument);
  EXPECT_THROW(qpoly_from_json_text("[[1,2,3,\"x\"]]"), InvalidArgument);
  EXPECT_THROW(qpoly_from_json_text("{\"c\": []}"), InvalidArgument);
  EXPECT_THROW(qpoly_from_json_text("{\"coeffs\": 3}"), InvalidArgument);
  EXPECT_THROW(qpoly_from_json_text("[[1,2"), InvalidArgument);
  EXPECT_THROW(qpoly_from_json_text("[[1e400,0,0,0]]"), InvalidArgument);
}

TEST(Json, ZeroSetLayout) {
  const Json j = to_json(zero_set(QPoly({Quat{1.0}, Quat{}, Quat{1.0}})));
  ASSERT_EQ(j["spheres"].size(), 1u);
  EXPECT_TRUE(j["isolated"].empty());
  EXPECT_NEAR(j["spheres"][0]["y"].get<double>(), 1.0, 1e-12);
}

TEST(Commands, AnalyzeCounterexample) {
  const CommandResult r = run_command(config("analyze", kCounterexample));
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const Json j = Json::parse(r.output);
  EXPECT_EQ(j["gauss_lucas"]["verdict"], "verified");
  EXPECT_EQ(j["versus_zero_set"][0]["membership"], "outside");
  EXPECT_NEAR(j["versus_zero_set"][0]["violation"]["distance"].get<double>(), 1.0, 1e-9);
}

TEST(Commands, AnalyzeReportsViolation) {
  const CommandResult r = run_command(config("analyze", kThreeOnOneSphere));
  EXPECT_EQ(r.exit_code, kExitViolated);
  EXPECT_EQ(Json::parse(r.output)["gauss_lucas"]["verdict"], "violated");
}

TEST(Commands, AnalyzeLinearHasNoCriticalPoints) {
  const CommandResult r = run_command(config("analyze", "[[1,1,0,0],[1,0,0,0]]"));
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  EXPECT_TRUE(Json::parse(r.output)["gauss_lucas"].is_null());
}

TEST(Commands, UsageErrors) {
  EXPECT_EQ(run_command(config("analyze", "[[1,0,0,0]]")).exit_code, kExitUsage);
  EXPECT_EQ(run_command(config("analyze", "not json")).exit_code, kExitUsage);
  EXPECT_EQ(run_command(config("frobnicate", kCounterexample)).exit_code, kExitUsage);
  RunConfig none;
  none.command = "bound";
  EXPECT_EQ(run_command(none).exit_code, kExitUsage);
  RunConfig missing = none;
  missing.input_path = "/nonexistent/p.json";
  EXPECT_EQ(run_command(missing).exit_code, kExitUsage);
  RunConfig zero_trials;
  zero_trials.command = "verify";
  zero_trials.trials = 0;
  EXPECT_EQ(run_command(zero_trials).exit_code, kExitUsage);
  RunConfig bad_slice = config("factor", kCounterexample);
  bad_slice.slice = "[1,0,0,0]";
  EXPECT_EQ(run_command(bad_slice).exit_code, kExitUsage);
}

TEST(Commands, FactorAndBound) {
  RunConfig f = config("factor", kCounterexample);
  f.slice = "[0,0,0,2]";
  const CommandResult fr = run_command(f);
  ASSERT_EQ(fr.exit_code, kExitOk) << fr.error;
  const Json fj = Json::parse(fr.output);
  EXPECT_EQ(fj["slice"], (Json{0.0, 0.0, 0.0, 1.0}));
  EXPECT_LE(fj["factor"]["residual"].get<double>(), 1e-8);

  const CommandResult br = run_command(config("bound", kCounterexample));
  ASSERT_EQ(br.exit_code, kExitOk) << br.error;
  const Json bj = Json::parse(br.output);
  EXPECT_NEAR(bj["bound"]["bound"].get<double>(), std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(bj["max_zero_modulus"].get<double>(), std::sqrt(2.0), 1e-9);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze --coeffs " + quoted(kCounterexample)).code, 0);
  EXPECT_EQ(run_cli("analyze --coeffs " + quoted(kThreeOnOneSphere)).code, 1);
  EXPECT_EQ(run_cli("analyze --coeffs '[[1,2'").code, 2);
  EXPECT_EQ(run_cli("analyze").code, 2);
  EXPECT_EQ(run_cli("verify --trials 0").code, 2);
  EXPECT_EQ(run_cli("verify --trials abc").code, 2);
  EXPECT_EQ(run_cli("verify --format xml").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("--help").code, 0);
  EXPECT_EQ(run_cli("analyze --coeffs '[[1,0,0,0],[1,0,0,0]]' --input x.json").code, 2);
}

TEST(Cli, TextReport) {
  const CliRun r = run_cli("analyze --coeffs " + quoted(kCounterexample));
  EXPECT_NE(r.out.find("verdict: verified"), std::string::npos);
  EXPECT_NE(r.out.find("sphere x=0 y=1.41421"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run_cli("verify --seed 42 --trials 100 --format json");
  const CliRun b = run_cli("verify --seed 42 --trials 100 --format json --threads 1");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(Json::parse(a.out)["seed"], 42);
}

TEST(Cli, SeedFromEnvironment) {
  const CliRun r = run_cli("verify --trials 5 --format json");
  const CliRun env = run_cli("verify --trials 5 --format json --seed 9");
  setenv("QL_SEED", "9", 1);
  const CliRun from_env = run_cli("verify --trials 5 --format json");
  unsetenv("QL_SEED");
  EXPECT_EQ(Json::parse(r.out)["seed"], 0);
  EXPECT_EQ(from_env.out, env.out);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "qgl_cli_out_test.json";
  std::filesystem::remove(path);
  const CliRun r = run_cli("bound --format json --coeffs " + quoted(kCounterexample) + " --out " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(Json::parse(buf.str())["command"], "bound");
  std::filesystem::remove(path);
}

TEST(Cli, ReadsInputFile) {
  const auto path = std::filesystem::temp_directory_path() / "qgl_cli_in_test.json";
  {
    std::ofstream out(path);
    out << "{\"coeffs\": " << kCounterexample << "}";
  }
  const CliRun r = run_cli("factor --format json --input " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["q"], (Json{1.0, 0.0, 1.0, 0.0, 0.25}));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace qgl

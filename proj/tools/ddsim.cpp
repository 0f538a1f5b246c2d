// Copyright 2026 The ddsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ddsim: experiment runner.
//
//   ddsim run <config> [--set section.key=value]... [--jobs J] [--out DIR]
//   ddsim validate <config> [--set section.key=value]...
//   ddsim list-experiments
//
// Exit codes: 0 success, 1 guard or tolerance failure (or validation
// violations), 2 configuration error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "ddsim/cli/config.hpp"
#include "ddsim/cli/experiments.hpp"
#include "ddsim/cli/worker_pool.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;

std::filesystem::path output_dir(const std::string& flag, const ddsim::cli::ExperimentConfig& config) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("DDSIM_OUT"); env && *env) return env;
  return config.output;
}

int run(const std::string& path, const std::vector<std::string>& overrides, unsigned jobs, const std::string& out) {
  using namespace ddsim::cli;
  ExperimentConfig config;
  try {
    config = parse_config(load_settings(path, overrides));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  const auto violations = validate(config);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "config error: " << v << '\n';
    return kConfigError;
  }

  RunResult result;
  try {
    result = run_experiment(config, jobs);
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << '\n';
    return kFailure;
  }
  const auto file = output_dir(out, config) / (config.name + ".csv");
  write_csv(file, result.table);
  std::cout << fmt::format("wrote {} ({} rows)\n", file.string(), result.table.rows.size());
  for (const auto& n : result.notes) std::cout << "note: " << n << '\n';
  for (const auto& f : result.failures) std::cerr << "FAIL: " << f << '\n';
  return result.failures.empty() ? kOk : kFailure;
}

int validate_only(const std::string& path, const std::vector<std::string>& overrides) {
  using namespace ddsim::cli;
  try {
    const auto config = parse_config(load_settings(path, overrides));
    const auto violations = validate(config);
    for (const auto& v : violations) std::cout << "violation: " << v << '\n';
    if (violations.empty()) std::cout << "ok: " << config.name << '\n';
    return violations.empty() ? kOk : kFailure;
  } catch (const ConfigError& e) {
    std::cout << "violation: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical decoupling simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  unsigned jobs = ddsim::cli::default_jobs();
  std::string out;

  auto* run_cmd = app.add_subcommand("run", "run an experiment and write its CSV");
  run_cmd->add_option("config", config_path, "INI configuration file")->required();
  run_cmd->add_option("--set", overrides, "override section.key=value")->expected(1)->take_all();
  run_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out,-o", out, "output directory (overrides DDSIM_OUT and experiment.output)");

  auto* validate_cmd = app.add_subcommand("validate", "check a configuration without running it");
  validate_cmd->add_option("config", config_path, "INI configuration file")->required();
  validate_cmd->add_option("--set", overrides, "override section.key=value")->expected(1)->take_all();

  auto* list_cmd = app.add_subcommand("list-experiments", "list experiment names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  if (*list_cmd) {
    for (const auto& e : ddsim::cli::experiments()) std::cout << fmt::format("{:<24}{}\n", e.name, e.summary);
    return kOk;
  }
  if (*validate_cmd) return validate_only(config_path, overrides);
  return run(config_path, overrides, jobs, out);
}

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

#pragma once

#include <string>
#include <vector>

#include "ddsim/cli/config.hpp"
#include "ddsim/cli/table.hpp"

namespace ddsim::cli {

/// Norm drift allowed for any simulated state before a run is failed.
inline constexpr double kNormGuard = 1e-6;
/// Population allowed in the two highest Fock levels.
inline constexpr double kFockGuard = 1e-8;

struct RunResult {
  Table table;
  /// Guard trips and tolerance violations; a non-empty list fails the run.
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Runs a validated configuration with `jobs` worker threads. Rows come out
/// in configuration order whatever the thread count.
RunResult run_experiment(const ExperimentConfig& config, unsigned jobs);

}  // namespace ddsim::cli

// Copyright 2026 The Dubins Escape Authors
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

#ifndef DUBINS_ESCAPE_BATCH_H_
#define DUBINS_ESCAPE_BATCH_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dubins_escape/feedback.h"
#include "dubins_escape/oracle.h"
#include "dubins_escape/planner.h"
#include "dubins_escape/scenario.h"
#include "dubins_escape/trajectory.h"

namespace dubins_escape {

enum class OracleMode { kNone, kSweep, kRandom, kAll };

// Throws std::invalid_argument on an unknown name.
OracleMode ParseOracleMode(std::string_view name);

struct RunOptions {
  // Empty: write nothing to disk.
  std::filesystem::path out_dir;
  bool write_csv = true;
  bool write_svg = true;
  OracleMode oracle = OracleMode::kNone;
  std::uint64_t seed = 1;
  // Planner/simulator agreement and Hamiltonian residual tolerance.
  double tolerance = 1e-6;
  std::size_t sweep_grid = 10000;
  std::size_t random_samples = 10000;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct DominanceSummary {
  double margin = 0.0;
  std::size_t n_candidates = 0;
  std::size_t n_violations = 0;
};

struct RunReport {
  std::string name;
  double plan_time = 0.0;
  double sim_time = 0.0;
  double delta = 0.0;
  PathClass classification = PathClass::kLine;
  PathClass simulated_classification = PathClass::kLine;
  bool shorter_arc = true;
  PmpReport pmp;
  std::optional<DominanceSummary> dominance;
  // Human-readable reasons this run failed verification; empty on success.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct ScenarioRun {
  RunReport report;
  Trajectory trajectory;
  CostateProfile costate;
  EscapePath path;
};

// Plans, simulates and verifies one scenario. Never throws for a valid
// scenario; internal errors are recorded as failures.
ScenarioRun RunScenario(const Scenario& scenario, const RunOptions& options);

// Class of a simulated trajectory by its switch event and initial control.
PathClass ClassifyTrajectory(const Trajectory& trajectory);

struct BatchResult {
  // Sorted by scenario name.
  std::vector<RunReport> reports;
  bool all_ok() const;
  // 0 when every run verified, 2 otherwise.
  int exit_code() const;
};

// Runs every scenario (concurrently when options.threads allows) and, if
// options.out_dir is set, writes <name>.csv per run, <group>.svg per
// scenario group and report.txt.
BatchResult RunBatch(const std::vector<Scenario>& scenarios,
                     const RunOptions& options);

std::string FormatReportHeader();
std::string FormatReportLine(const RunReport& report);
std::string FormatReport(const std::vector<RunReport>& reports);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_BATCH_H_

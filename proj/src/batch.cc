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

#include "dubins_escape/batch.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "dubins_escape/output.h"
#include "dubins_escape/simulator.h"

namespace dubins_escape {
namespace {

constexpr double kMinSignMatch = 0.999;
constexpr double kExitRadialTolerance = 1e-9;

std::string Sci(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", value);
  return buffer;
}

std::string Fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9f", value);
  return buffer;
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw std::runtime_error("failed to write " + path.string());
}

void Verify(RunReport& report, double tolerance) {
  auto fail = [&](std::string reason) { report.failures.push_back(std::move(reason)); };
  if (!(report.delta <= tolerance)) {
    fail("planner/simulator disagree by " + Sci(report.delta) + " s");
  }
  if (!(report.pmp.max_abs_hamiltonian <= tolerance)) {
    fail("max |H| = " + Sci(report.pmp.max_abs_hamiltonian));
  }
  if (!(report.pmp.beta < 0.0)) fail("beta = " + Sci(report.pmp.beta) + " is not negative");
  if (report.pmp.terminal_lambda_theta != 0.0) fail("lambda_theta(T) != 0");
  if (report.pmp.sign_match_fraction < kMinSignMatch) {
    fail("sign(lambda_theta) matches u on only " +
         Fixed(report.pmp.sign_match_fraction) + " of samples");
  }
  if (report.pmp.terminal_radial_rate < -kExitRadialTolerance) {
    fail("exit radial rate " + Sci(report.pmp.terminal_radial_rate) + " < 0");
  }
  if (!report.shorter_arc) fail("exit point not on the shorter arc");
  if (report.classification != report.simulated_classification) {
    fail(std::string("planner path is ") + std::string(ToString(report.classification)) +
         " but simulation is " + std::string(ToString(report.simulated_classification)));
  }
  if (report.dominance && report.dominance->n_violations > 0) {
    fail(std::to_string(report.dominance->n_violations) +
         " candidate controls beat the feedback law");
  }
}

void Accumulate(std::optional<DominanceSummary>& summary,
                const DominanceReport& report) {
  if (!summary) {
    summary = DominanceSummary{report.margin, 0, 0};
  }
  summary->margin = std::min(summary->margin, report.margin);
  summary->n_candidates += report.n_candidates;
  summary->n_violations += report.n_violations;
}

}  // namespace

OracleMode ParseOracleMode(std::string_view name) {
  if (name == "none") return OracleMode::kNone;
  if (name == "sweep") return OracleMode::kSweep;
  if (name == "random") return OracleMode::kRandom;
  if (name == "all") return OracleMode::kAll;
  throw std::invalid_argument("unknown oracle mode '" + std::string(name) + "'");
}

PathClass ClassifyTrajectory(const Trajectory& trajectory) {
  if (trajectory.samples.empty() || trajectory.samples.front().control == 0.0) {
    return PathClass::kLine;
  }
  return trajectory.has_switch() ? PathClass::kArcLine : PathClass::kArc;
}

ScenarioRun RunScenario(const Scenario& scenario, const RunOptions& options) {
  ScenarioRun run;
  RunReport& report = run.report;
  report.name = scenario.name;
  try {
    const RobotParams params = scenario.params();
    const EscapeRegion region = scenario.region();
    const Pose start = scenario.start();

    run.path = PlanEscape(start, params, region);
    run.trajectory = Simulate(start, params, region);
    run.costate = ReconstructCostate(run.trajectory, params, region);
    report.pmp = CheckPmp(run.trajectory, run.costate, params);
    report.plan_time = run.path.total_time;
    report.sim_time = run.trajectory.exit_time;
    report.delta = std::abs(report.plan_time - report.sim_time);
    report.classification = run.path.classification();
    report.simulated_classification = ClassifyTrajectory(run.trajectory);
    report.shorter_arc =
        VerifyShorterArc(run.path, MakeChordPartition(start, region));

    if (options.oracle == OracleMode::kSweep || options.oracle == OracleMode::kAll) {
      Accumulate(report.dominance,
                 BangSwitchSweep(start, params, region, options.sweep_grid));
    }
    if (options.oracle == OracleMode::kRandom || options.oracle == OracleMode::kAll) {
      Accumulate(report.dominance,
                 RandomControlDominance(start, params, region,
                                        options.random_samples, options.seed));
    }
    Verify(report, options.tolerance);
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("error: ") + e.what());
  }
  return run;
}

bool BatchResult::all_ok() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const RunReport& r) { return r.ok(); });
}

int BatchResult::exit_code() const { return all_ok() ? 0 : 2; }

BatchResult RunBatch(const std::vector<Scenario>& scenarios,
                     const RunOptions& options) {
  const bool write = !options.out_dir.empty();
  if (write) std::filesystem::create_directories(options.out_dir);

  struct Slot {
    RunReport report;
    SvgTrace trace;
    double region_radius = 1.0;
  };
  std::vector<Slot> slots(scenarios.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      const Scenario& scenario = scenarios[i];
      ScenarioRun run = RunScenario(scenario, options);
      Slot& slot = slots[i];
      slot.region_radius = scenario.rho;
      if (!run.trajectory.samples.empty()) {
        slot.trace = MakeSvgTrace(scenario.name, run.trajectory);
        if (write && options.write_csv) {
          try {
            std::ofstream csv(options.out_dir / (scenario.name + ".csv"),
                              std::ios::binary);
            WriteTrajectoryCsv(csv, run.trajectory, run.costate, scenario.params());
            if (!csv) throw std::runtime_error("failed to write CSV");
          } catch (const std::exception& e) {
            run.report.failures.push_back(std::string("error: ") + e.what());
          }
        }
      }
      slot.report = std::move(run.report);
    }
  };

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, scenarios.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<std::size_t> order(scenarios.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scenarios[a].name < scenarios[b].name;
  });

  BatchResult result;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (const std::size_t i : order) {
    result.reports.push_back(slots[i].report);
    groups[scenarios[i].group()].push_back(i);
  }
  if (write) {
    if (options.write_svg) {
      for (const auto& [group, members] : groups) {
        std::vector<SvgTrace> traces;
        double radius = 0.0;
        for (const std::size_t i : members) {
          radius = std::max(radius, slots[i].region_radius);
          if (!slots[i].trace.points.empty()) traces.push_back(slots[i].trace);
        }
        WriteFile(options.out_dir / (group + ".svg"), RenderSvg(group, radius, traces));
      }
    }
    WriteFile(options.out_dir / "report.txt", FormatReport(result.reports));
  }
  return result;
}

std::string FormatReportHeader() {
  return "# name T_plan T_sim |dT| max|H| class margin status";
}

std::string FormatReportLine(const RunReport& report) {
  std::string line = report.name + ' ' + Fixed(report.plan_time) + ' ' +
                     Fixed(report.sim_time) + ' ' + Sci(report.delta) + ' ' +
                     Sci(report.pmp.max_abs_hamiltonian) + ' ' +
                     std::string(ToString(report.classification)) + ' ' +
                     (report.dominance ? Sci(report.dominance->margin) : "-") + ' ' +
                     (report.ok() ? "ok" : "FAIL");
  for (const std::string& failure : report.failures) line += " [" + failure + "]";
  return line;
}

std::string FormatReport(const std::vector<RunReport>& reports) {
  std::string out = FormatReportHeader() + '\n';
  for (const RunReport& report : reports) out += FormatReportLine(report) + '\n';
  return out;
}

}  // namespace dubins_escape

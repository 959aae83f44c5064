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

// Command-line front end: plan, simulate and verify escape scenarios.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "dubins_escape/batch.h"
#include "dubins_escape/output.h"
#include "dubins_escape/planner.h"
#include "dubins_escape/scenario.h"
#include "dubins_escape/simulator.h"

namespace {

namespace de = dubins_escape;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct CommonFlags {
  std::vector<std::string> inputs;
  std::string out_dir;
  bool csv = false;
  bool svg = false;
  std::string oracle = "none";
  std::uint64_t seed = 1;
  double tol = 1e-6;
  unsigned threads = 0;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<de::Scenario> LoadScenarios(const std::vector<std::string>& inputs) {
  std::vector<de::Scenario> all;
  for (const std::string& path : inputs) {
    try {
      auto parsed = de::ParseScenarioText(ReadInput(path));
      all.insert(all.end(), parsed.begin(), parsed.end());
    } catch (const de::ParseError& e) {
      throw InputError(path + ": " + e.what());
    } catch (const de::ValidationError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].name == all[j].name) {
        throw InputError("duplicate scenario name '" + all[i].name + "' across inputs");
      }
    }
  }
  return all;
}

fs::path OutDir(const CommonFlags& flags) {
  if (!flags.out_dir.empty()) return flags.out_dir;
  if (const char* env = std::getenv("DUBINS_ESCAPE_OUT"); env != nullptr && *env != '\0') {
    return env;
  }
  return {};
}

de::RunOptions MakeRunOptions(const CommonFlags& flags) {
  de::RunOptions options;
  options.out_dir = OutDir(flags);
  // Without --csv or --svg both kinds are written.
  options.write_csv = flags.csv || !flags.svg;
  options.write_svg = flags.svg || !flags.csv;
  options.oracle = de::ParseOracleMode(flags.oracle);
  options.seed = flags.seed;
  options.tolerance = flags.tol;
  options.threads = flags.threads;
  return options;
}

void DescribeSegment(std::ostream& out, const de::PathSegment& segment) {
  if (const auto* arc = std::get_if<de::ArcSegment>(&segment)) {
    out << "  arc center=(" << de::FormatDecimal(arc->center.x) << ", "
        << de::FormatDecimal(arc->center.y) << ") radius=" << de::FormatDecimal(arc->radius)
        << " sweep=" << de::FormatDecimal(arc->sweep) << '\n';
  } else {
    const auto& line = std::get<de::LineSegment>(segment);
    out << "  line from=(" << de::FormatDecimal(line.start.x) << ", "
        << de::FormatDecimal(line.start.y) << ") to=(" << de::FormatDecimal(line.end.x) << ", "
        << de::FormatDecimal(line.end.y) << ")\n";
  }
}

int RunPlan(const CommonFlags& flags) {
  for (const de::Scenario& s : LoadScenarios(flags.inputs)) {
    const de::EscapePath path = de::PlanEscape(s.start(), s.params(), s.region());
    std::cout << s.name << ' ' << de::ToString(path.classification())
              << " T=" << de::FormatDecimal(path.total_time)
              << " L=" << de::FormatDecimal(path.total_length) << '\n';
    for (const auto& segment : path.segments) DescribeSegment(std::cout, segment);
  }
  return kExitOk;
}

int RunSimulate(const CommonFlags& flags) {
  const fs::path out_dir = OutDir(flags);
  const auto scenarios = LoadScenarios(flags.inputs);
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (const de::Scenario& s : scenarios) {
    const de::Trajectory traj = de::Simulate(s.start(), s.params(), s.region());
    const de::CostateProfile costate = de::ReconstructCostate(traj, s.params(), s.region());
    std::cout << s.name << ' ' << de::ToString(de::ClassifyTrajectory(traj))
              << " T=" << de::FormatDecimal(traj.exit_time);
    if (traj.has_switch()) {
      std::cout << " switch=" << de::FormatDecimal(traj.events.front().time);
    }
    std::cout << " samples=" << traj.samples.size() << '\n';
    if (out_dir.empty()) continue;
    if (flags.csv || !flags.svg) {
      std::ofstream csv(out_dir / (s.name + ".csv"), std::ios::binary);
      de::WriteTrajectoryCsv(csv, traj, costate, s.params());
    }
    if (flags.svg || !flags.csv) {
      std::ofstream svg(out_dir / (s.name + ".svg"), std::ios::binary);
      svg << de::RenderSvg(s.name, s.rho, {de::MakeSvgTrace(s.name, traj)});
    }
  }
  return kExitOk;
}

int RunVerify(const CommonFlags& flags) {
  de::RunOptions options = MakeRunOptions(flags);
  options.out_dir.clear();
  std::vector<de::RunReport> reports;
  for (const de::Scenario& s : LoadScenarios(flags.inputs)) {
    reports.push_back(de::RunScenario(s, options).report);
  }
  std::cout << de::FormatReport(reports);
  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& failure : r.failures) std::cerr << r.name << ": " << failure << '\n';
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitVerification;
}

int RunBatchCommand(const CommonFlags& flags) {
  const de::RunOptions options = MakeRunOptions(flags);
  const de::BatchResult result = de::RunBatch(LoadScenarios(flags.inputs), options);
  std::cout << de::FormatReport(result.reports);
  for (const auto& r : result.reports) {
    for (const auto& failure : r.failures) std::cerr << r.name << ": " << failure << '\n';
  }
  return result.exit_code();
}

void AddCommonFlags(CLI::App& cmd, CommonFlags& flags, bool outputs, bool verification) {
  cmd.add_option("inputs", flags.inputs, "Scenario files ('-' reads stdin)")->required();
  if (outputs) {
    cmd.add_option("--out-dir", flags.out_dir,
                   "Output directory (default: $DUBINS_ESCAPE_OUT, else nothing is written)");
    cmd.add_flag("--csv", flags.csv, "Write trajectory CSV files");
    cmd.add_flag("--svg", flags.svg, "Write SVG path plots");
  }
  if (verification) {
    cmd.add_option("--oracle", flags.oracle, "Brute-force dominance check")
        ->check(CLI::IsMember({"none", "sweep", "random", "all"}));
    cmd.add_option("--seed", flags.seed, "Seed for random candidate controls");
    cmd.add_option("--tol", flags.tol, "Planner/simulator and Hamiltonian tolerance")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--threads", flags.threads, "Worker threads (0: hardware concurrency)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-optimal exit of a Dubins car from a disc"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto* plan = app.add_subcommand("plan", "Print the geometric escape path");
  AddCommonFlags(*plan, flags, false, false);
  auto* simulate = app.add_subcommand("simulate", "Simulate the closed-loop feedback law");
  AddCommonFlags(*simulate, flags, true, false);
  auto* verify = app.add_subcommand("verify", "Check planner, simulator and optimality conditions");
  AddCommonFlags(*verify, flags, false, true);
  auto* batch = app.add_subcommand("batch", "Verify every scenario and write CSV, SVG and report");
  AddCommonFlags(*batch, flags, true, true);
  std::string corpus_out;
  auto* corpus = app.add_subcommand("corpus", "Print the bundled scenario corpus");
  corpus->add_option("-o,--output", corpus_out, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*corpus) {
      const std::string text = de::FormatScenarios(de::BundledCorpus());
      if (corpus_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(corpus_out, std::ios::binary);
        if (!(out << text)) throw InputError("cannot write '" + corpus_out + "'");
      }
      return kExitOk;
    }
    if (*plan) return RunPlan(flags);
    if (*simulate) return RunSimulate(flags);
    if (*verify) return RunVerify(flags);
    return RunBatchCommand(flags);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}

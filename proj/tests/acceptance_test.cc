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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dubins_escape/batch.h"
#include "dubins_escape/feedback.h"
#include "dubins_escape/oracle.h"
#include "dubins_escape/planner.h"
#include "dubins_escape/scenario.h"
#include "dubins_escape/simulator.h"

namespace {

namespace de = dubins_escape;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void Require(bool condition, const std::string& problem) {
    if (!condition && problems.size() < 10) problems.push_back(problem);
    pass = pass && condition;
  }
};

int Report(int id, const char* title, const Outcome& outcome) {
  std::printf("[%s] criterion %d: %s -- %s\n", outcome.pass ? "PASS" : "FAIL", id, title,
              outcome.detail.c_str());
  for (const auto& p : outcome.problems) std::printf("         %s\n", p.c_str());
  std::fflush(stdout);
  return outcome.pass ? 0 : 1;
}

std::string Format(const char* fmt, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), fmt, args...);
  return buffer;
}

// Uniform interior start, uniform heading, log-uniform turn rate in
// [1e-2, 1e3]; v = 1, rho = 1.
de::Scenario RandomScenario(std::mt19937_64& rng, int index) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double omega = std::pow(10.0, -2.0 + 5.0 * unit(rng));
  double r = std::sqrt(unit(rng));
  if (r >= 1.0) r = std::nextafter(1.0, 0.0);
  const double phi = de::kTwoPi * unit(rng) - de::kPi;
  const double theta = de::kTwoPi * unit(rng) - de::kPi;
  return {"random." + std::to_string(index), 1.0, omega, 1.0, r * std::cos(phi),
          r * std::sin(phi), theta};
}

std::vector<de::Scenario> RandomScenarios(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<de::Scenario> out;
  for (int i = 0; i < n; ++i) out.push_back(RandomScenario(rng, i));
  return out;
}

// Exit times from an independent fine-step RK4 integration of the feedback
// law (tolerance ~1e-5 s).
const std::map<std::string, double>& CorpusReference() {
  static const std::map<std::string, double> kReference = {
      {"diag.omega_pi_over_100", 1.2122837633872376},
      {"diag.omega_pi_over_6", 1.1326036823418646},
      {"diag.omega_pi", 0.927503873791108},
      {"diag.omega_100pi", 0.6516543256076563},
      {"x_axis.omega_pi_over_100", 1.24998971954645},
      {"x_axis.omega_pi_over_6", 1.2471732169554515},
      {"x_axis.omega_pi", 1.1738447331793642},
      {"x_axis.omega_100pi", 0.7599189473536617},
      {"y_axis_near.omega_pi_over_100", 0.9645026930314975},
      {"y_axis_near.omega_pi_over_6", 0.9193368551823404},
      {"y_axis_near.omega_pi", 0.8399605810365673},
      {"y_axis_near.omega_100pi", 0.7517968913400532},
      {"y_axis_far.omega_pi_over_100", 0.8593288479890439},
      {"y_axis_far.omega_pi_over_6", 0.776299509456322},
      {"y_axis_far.omega_pi", 0.6189626447646664},
      {"y_axis_far.omega_100pi", 0.5018068331423106},
  };
  return kReference;
}

Outcome CorpusReproduction() {
  Outcome out;
  const auto start = Clock::now();
  de::RunOptions options;
  options.threads = 1;
  const de::BatchResult batch = de::RunBatch(de::BundledCorpus(), options);
  out.Require(batch.reports.size() == 16, "expected 16 corpus runs");
  std::map<std::string, const de::RunReport*> by_name;
  for (const auto& r : batch.reports) {
    by_name[r.name] = &r;
    out.Require(r.ok(), r.name + " failed verification");
    out.Require(r.classification == r.simulated_classification,
                r.name + ": planner/simulator classes differ");
    const auto ref = CorpusReference().find(r.name);
    out.Require(ref != CorpusReference().end() && std::abs(r.sim_time - ref->second) <= 2e-5,
                Format("%s: T_sim %.10f vs reference", r.name.c_str(), r.sim_time));
  }
  const double elapsed = Seconds(start);

  // Radial-line limit: 1 - sqrt(0.125).
  const double radial = 1.0 - std::sqrt(0.125);
  const double fast = by_name.count("diag.omega_100pi") ? by_name["diag.omega_100pi"]->plan_time
                                                        : NAN;
  const double fast_err = std::abs(fast - radial) / radial;
  out.Require(fast_err <= 0.02, Format("omega=100pi: T=%.6f vs radial %.6f", fast, radial));

  // Chord limit: straight run along the initial heading from (0.25, 0.25).
  const double chord = 0.25 + std::sqrt(1.0 - 0.25 * 0.25);
  const double slow = by_name.count("diag.omega_pi_over_100")
                          ? by_name["diag.omega_pi_over_100"]->plan_time
                          : NAN;
  const double slow_err = std::abs(slow - chord) / chord;
  out.Require(slow_err <= 0.01, Format("omega=pi/100: T=%.6f vs chord %.6f", slow, chord));
  out.Require(elapsed < 5.0, Format("runtime %.2f s exceeds 5 s", elapsed));

  out.detail = Format("16 runs classified; radial-limit error %.2f%% (<=2%%), chord-limit error "
                      "%.2f%% (<=1%%); %.2f s",
                      100 * fast_err, 100 * slow_err, elapsed);
  return out;
}

struct AgreementData {
  std::vector<de::Scenario> scenarios;
  std::vector<de::EscapePath> paths;
  std::vector<de::Trajectory> trajectories;
};

Outcome PlannerSimulatorAgreement(AgreementData& data) {
  Outcome out;
  const auto start = Clock::now();
  data.scenarios = RandomScenarios(20261016, 1000);
  double worst = 0.0;
  for (const auto& s : data.scenarios) {
    data.paths.push_back(de::PlanEscape(s.start(), s.params(), s.region()));
    data.trajectories.push_back(de::Simulate(s.start(), s.params(), s.region()));
    const double delta = std::abs(data.paths.back().total_time - data.trajectories.back().exit_time);
    worst = std::max(worst, delta);
    out.Require(delta <= 1e-6, Format("%s: |dT| = %.3e", s.name.c_str(), delta));
  }
  const double elapsed = Seconds(start);
  out.Require(elapsed < 30.0, Format("runtime %.2f s exceeds 30 s", elapsed));
  out.detail = Format("1000 scenarios, max |T_plan - T_sim| = %.3e s (<=1e-6); %.2f s", worst,
                      elapsed);
  return out;
}

Outcome PmpSuite(const AgreementData& data) {
  Outcome out;
  double worst_h = 0.0, worst_beta = -INFINITY, worst_terminal = 0.0;
  double worst_match = 1.0;
  std::size_t checked = 0, matched = 0;
  for (std::size_t i = 0; i < data.trajectories.size(); ++i) {
    const auto& s = data.scenarios[i];
    const de::PmpReport pmp = de::CheckPmp(data.trajectories[i], s.params(), s.region());
    worst_h = std::max(worst_h, pmp.max_abs_hamiltonian);
    worst_beta = std::max(worst_beta, pmp.beta);
    worst_terminal = std::max(worst_terminal, std::abs(pmp.terminal_lambda_theta));
    worst_match = std::min(worst_match, pmp.sign_match_fraction);
    checked += pmp.sign_checked_samples;
    matched += static_cast<std::size_t>(
        std::llround(pmp.sign_match_fraction * static_cast<double>(pmp.sign_checked_samples)));
    out.Require(pmp.max_abs_hamiltonian <= 1e-6,
                Format("%s: max|H| = %.3e", s.name.c_str(), pmp.max_abs_hamiltonian));
    out.Require(pmp.beta < 0.0, Format("%s: beta = %.6f", s.name.c_str(), pmp.beta));
    out.Require(pmp.terminal_lambda_theta == 0.0, s.name + ": lambda_theta(T) != 0");
    out.Require(pmp.sign_match_fraction >= 0.999,
                Format("%s: sign match %.5f", s.name.c_str(), pmp.sign_match_fraction));
  }
  out.detail = Format("max|H| = %.3e (<=1e-6), max beta = %.4f (<0), max|lambda_theta(T)| = %g, "
                      "sign match worst %.5f, overall %zu/%zu (>=0.999)",
                      worst_h, worst_beta, worst_terminal, worst_match, matched, checked);
  return out;
}

Outcome OptimalityDominance() {
  Outcome out;
  const auto start = Clock::now();
  std::vector<de::Scenario> scenarios = RandomScenarios(4242, 50);
  for (const auto& s : de::BundledCorpus()) scenarios.push_back(s);
  std::size_t sweep_violations = 0, random_violations = 0, candidates = 0;
  double sweep_margin = INFINITY, random_margin = INFINITY;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const auto& s = scenarios[i];
    const auto sweep = de::BangSwitchSweep(s.start(), s.params(), s.region(), 10000,
                                           de::kSweepTolerance);
    const auto random = de::RandomControlDominance(s.start(), s.params(), s.region(), 100000,
                                                   1000 + i, de::kRandomTolerance);
    sweep_violations += sweep.n_violations;
    random_violations += random.n_violations;
    candidates += sweep.n_candidates + random.n_candidates;
    sweep_margin = std::min(sweep_margin, sweep.margin);
    random_margin = std::min(random_margin, random.margin);
    out.Require(sweep.n_violations == 0,
                Format("%s: sweep %s beats optimum by %.3e s", s.name.c_str(),
                       sweep.best_candidate_tag.c_str(), -sweep.margin));
    out.Require(random.n_violations == 0,
                Format("%s: random %s beats optimum by %.3e s", s.name.c_str(),
                       random.best_candidate_tag.c_str(), -random.margin));
  }
  const double elapsed = Seconds(start);
  out.Require(elapsed < 300.0, Format("runtime %.1f s exceeds 300 s", elapsed));
  out.detail = Format("%zu scenarios, %zu candidates; violations sweep %zu, random %zu (tol 1e-4 "
                      "s); min margins %.3e / %.3e s; %.1f s",
                      scenarios.size(), candidates, sweep_violations, random_violations,
                      sweep_margin, random_margin, elapsed);
  return out;
}

Outcome WorkedExamples() {
  Outcome out;
  struct Example {
    de::Pose start;
    double omega;
    double expected;
  };
  // Reference times from an independent geometric construction.
  const Example examples[] = {{{0.5, 0.0, 0.0}, 1.0, 0.5},
                              {{0.5, 0.0, de::kPi / 2}, 1.0, 0.722734247813},
                              {{0.25, 0.0, de::kPi / 2}, de::kPi, 0.839960581042}};
  double worst = 0.0;
  for (const auto& e : examples) {
    const de::RobotParams params(1.0, e.omega);
    const de::EscapeRegion region(1.0);
    const double plan = de::PlanEscape(e.start, params, region).total_time;
    const double sim = de::Simulate(e.start, params, region).exit_time;
    worst = std::max({worst, std::abs(plan - e.expected), std::abs(sim - e.expected)});
    out.Require(std::abs(plan - e.expected) <= 1e-4,
                Format("plan %.8f vs %.8f", plan, e.expected));
    out.Require(std::abs(sim - e.expected) <= 1e-4, Format("sim %.8f vs %.8f", sim, e.expected));
  }
  out.detail = Format("T = 0.5, 0.722734, 0.839961 s reproduced; max error %.3e s (<=1e-4)", worst);
  return out;
}

Outcome InvarianceSuite(const AgreementData& data) {
  Outcome out;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Rotating the whole configuration leaves the control unchanged.
  std::size_t rotation_cases = 0;
  for (int i = 0; i < 100000; ++i) {
    const double r = std::sqrt(unit(rng));
    const double phi = de::kTwoPi * unit(rng);
    const double theta = de::kTwoPi * unit(rng);
    const double alpha = de::kTwoPi * unit(rng);
    const double mismatch = std::abs(de::WrapAngle(theta - phi));
    if (mismatch < 1e-6 || mismatch > de::kPi - 1e-6) continue;
    const de::Pose a = de::Pose::Make(r * std::cos(phi), r * std::sin(phi), theta);
    const de::Pose b =
        de::Pose::Make(r * std::cos(phi + alpha), r * std::sin(phi + alpha), theta + alpha);
    ++rotation_cases;
    out.Require(de::OptimalControl(a).value() == de::OptimalControl(b).value(),
                Format("rotation by %.6f changes the control", alpha));
  }

  double worst_scaling = 0.0;
  std::size_t shorter = 0;
  double worst_exclusion = INFINITY;
  for (std::size_t i = 0; i < data.scenarios.size(); ++i) {
    const auto& s = data.scenarios[i];
    const de::EscapePath& path = data.paths[i];

    const double k = std::exp(std::log(1e-3) + std::log(1e6) * unit(rng));
    const de::EscapePath scaled = de::PlanEscape(
        de::Pose::Make(k * s.x0, k * s.y0, s.theta0), de::RobotParams(s.v, s.omega / k),
        de::EscapeRegion(k * s.rho));
    const double rel = std::abs(scaled.total_time / (k * path.total_time) - 1.0);
    worst_scaling = std::max(worst_scaling, rel);
    out.Require(rel <= 1e-9, Format("%s: scaling error %.3e at k=%g", s.name.c_str(), rel, k));

    const de::Pose start = s.start();
    const double u = de::OptimalControl(start).value();
    const de::TurningCircle circle = de::MakeTurningCircle(
        start, u < 0.0 ? de::TurnDirection::kCounterClockwise : de::TurnDirection::kClockwise,
        s.params());
    const double r2 = s.x0 * s.x0 + s.y0 * s.y0;
    const double varrho2 = circle.radius * circle.radius;
    const double slack = de::SquaredNorm(circle.center) - (r2 + varrho2);
    worst_exclusion = std::min(worst_exclusion, slack / (1.0 + varrho2));
    out.Require(slack >= -1e-12 * (1.0 + varrho2),
                Format("%s: engaged circle contains the origin (%.3e)", s.name.c_str(), slack));

    const bool on_shorter =
        de::VerifyShorterArc(path, de::MakeChordPartition(start, s.region()));
    shorter += on_shorter ? 1 : 0;
    out.Require(on_shorter, s.name + ": exit not on the shorter arc");
  }
  out.detail = Format("rotation %zu poses; scaling max rel error %.2e (<=1e-9); circle exclusion "
                      "min slack %.2e; shorter arc %zu/%zu",
                      rotation_cases, worst_scaling, worst_exclusion, shorter,
                      data.scenarios.size());
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  failures += Report(1, "corpus reproduction", CorpusReproduction());
  AgreementData data;
  failures += Report(2, "planner-simulator agreement", PlannerSimulatorAgreement(data));
  failures += Report(3, "minimum-principle suite", PmpSuite(data));
  failures += Report(4, "optimality dominance", OptimalityDominance());
  failures += Report(5, "worked examples", WorkedExamples());
  failures += Report(6, "invariance suite", InvarianceSuite(data));
  std::printf("%d of 6 criteria passed\n", 6 - failures);
  return failures == 0 ? 0 : 1;
}

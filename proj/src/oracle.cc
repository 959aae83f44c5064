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

#include "dubins_escape/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dubins_escape/planner.h"
#include "dubins_escape/simulator.h"

namespace dubins_escape {
namespace {

constexpr std::size_t kMaxRandomSegments = 8;

// First time in [0, duration] at which a constant-control segment starting
// at `pose` (inside the region) reaches the boundary.
//
// With curvature k = omega |u| / v and n the unit normal towards the turn
// center, the position after arc length s is
//   p + sin(a)/k h + (1 - cos(a))/k n,  a = k s.
// Substituting tau = 2 tan(a/2) / k turns |p(s)|^2 = rho^2 into
//   (1 + k p.n - k^2 q/4) tau^2 + 2 (p.h) tau - q = 0,  q = rho^2 - |p|^2,
// which stays well conditioned as k -> 0 (straight line: tau = s).
std::optional<double> SegmentExit(const Pose& pose, double u, double duration,
                                  const RobotParams& params,
                                  const EscapeRegion& region) {
  const double v = params.speed();
  const double rho = region.radius();
  const Vec2 p = pose.position();
  const Vec2 h = pose.direction();
  const Vec2 n = u > 0.0 ? PerpCw(h) : PerpCcw(h);
  const double k = params.max_turn_rate() * std::abs(u) / v;
  const double q = rho * rho - SquaredNorm(p);

  const double qa = 1.0 + k * Dot(p, n) - 0.25 * k * k * q;
  const double qb = 2.0 * Dot(p, h);
  const double qc = -q;
  std::array<double, 2> roots{};
  std::size_t n_roots = 0;
  if (qa == 0.0) {
    if (qb != 0.0) roots[n_roots++] = -qc / qb;
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return std::nullopt;
    const double m = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    if (m != 0.0) {
      roots[n_roots++] = m / qa;
      roots[n_roots++] = qc / m;
    } else {
      roots[n_roots++] = 0.0;
    }
  }

  // Arc length of each root; negative tau maps to a in (pi, 2 pi).
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_roots; ++i) {
    const double tau = roots[i];
    double s = 0.0;
    if (k == 0.0) {
      if (tau < 0.0) continue;
      s = tau;
    } else {
      double a = 2.0 * std::atan(0.5 * k * tau);
      if (a < 0.0) a += kTwoPi;
      s = a / k;
    }
    best = std::min(best, s);
  }
  // A vanishing leading coefficient puts one root at tau = infinity (a = pi).
  if (k > 0.0 && qa == 0.0) best = std::min(best, kPi / k);
  if (!std::isfinite(best)) return std::nullopt;
  const double exit = std::max(0.0, best) / v;
  if (exit > duration) return std::nullopt;
  return exit;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double CoastDuration(const RobotParams& params, const EscapeRegion& region) {
  // Any straight line leaves the disc within one diameter.
  return 2.0 * region.radius() / params.speed() + 1.0;
}

class ReportBuilder {
 public:
  ReportBuilder(double optimal_time, double tolerance) {
    report_.optimal_time = optimal_time;
    report_.tolerance = tolerance;
    report_.best_candidate_time = std::numeric_limits<double>::infinity();
  }

  void Add(const CandidateControl& candidate, std::optional<double> time,
           double switch_time = 0.0) {
    ++report_.n_candidates;
    if (!time) return;
    ++report_.n_escaped;
    if (*time < report_.best_candidate_time) {
      report_.best_candidate_time = *time;
      report_.best_candidate_tag = candidate.tag;
      report_.best_switch_time = switch_time;
    }
    if (*time < report_.optimal_time - report_.tolerance) {
      ++report_.n_violations;
      if (report_.violations.size() < DominanceReport::kMaxRecordedViolations) {
        report_.violations.push_back({candidate, *time});
      }
    }
  }

  DominanceReport Finish() {
    report_.margin = report_.best_candidate_time - report_.optimal_time;
    return std::move(report_);
  }

 private:
  DominanceReport report_;
};

void RequireInside(const Pose& start, const EscapeRegion& region) {
  if (!(Norm(start.position()) < region.radius())) {
    throw std::invalid_argument("start pose must lie strictly inside the region");
  }
}

}  // namespace

void CandidateControl::Validate() const {
  for (const ScheduleSegment& segment : schedule) {
    if (!(segment.duration > 0.0) || !std::isfinite(segment.duration)) {
      throw std::invalid_argument("schedule durations must be positive");
    }
    if (!std::isfinite(segment.u) || std::abs(segment.u) > 1.0) {
      throw std::invalid_argument("schedule controls must lie in [-1, 1]");
    }
  }
}

std::optional<double> SimulateOpenLoop(const Pose& start,
                                       const CandidateControl& control,
                                       const RobotParams& params,
                                       const EscapeRegion& region) {
  control.Validate();
  RequireInside(start, region);
  Pose pose = start;
  double t = 0.0;
  for (const ScheduleSegment& segment : control.schedule) {
    if (const auto exit =
            SegmentExit(pose, segment.u, segment.duration, params, region)) {
      return t + *exit;
    }
    pose = StepExact(pose, Control(segment.u), segment.duration, params);
    t += segment.duration;
  }
  return std::nullopt;
}

DominanceReport BangSwitchSweep(const Pose& start, const RobotParams& params,
                                const EscapeRegion& region, std::size_t grid_n,
                                double tolerance) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be at least 2");
  RequireInside(start, region);
  const double t_max = EscapeTimeBound(params, region);
  const double coast = CoastDuration(params, region);
  ReportBuilder builder(PlanEscape(start, params, region).total_time, tolerance);

  const auto run = [&](CandidateControl candidate, double switch_time) {
    const auto time = SimulateOpenLoop(start, candidate, params, region);
    builder.Add(candidate, time, switch_time);
  };

  run({{{coast, 0.0}}, "straight"}, 0.0);
  for (const double u0 : {1.0, -1.0}) {
    const std::string prefix = u0 > 0.0 ? "right" : "left";
    for (std::size_t k = 1; k < grid_n; ++k) {
      const double switch_time =
          t_max * static_cast<double>(k) / static_cast<double>(grid_n - 1);
      run({{{switch_time, u0}, {coast, 0.0}},
           prefix + "-then-straight@" + std::to_string(switch_time)},
          switch_time);
    }
    run({{{t_max, u0}}, prefix + "-only"}, t_max);
  }
  return builder.Finish();
}

CandidateControl RandomCandidate(std::uint64_t seed, std::size_t index,
                                 double horizon, const RobotParams& params,
                                 const EscapeRegion& region) {
  std::mt19937_64 rng(SplitMix64(seed ^ SplitMix64(index)));
  std::uniform_int_distribution<std::size_t> segment_count(1, kMaxRandomSegments);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> control_kind(0, 3);

  CandidateControl candidate;
  candidate.tag = "random#" + std::to_string(index);
  const std::size_t n = segment_count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const double duration = (1.0 - unit(rng)) * 2.0 * horizon / static_cast<double>(n);
    double u = 0.0;
    switch (control_kind(rng)) {
      case 0: u = 1.0; break;
      case 1: u = -1.0; break;
      case 2: u = 0.0; break;
      default: u = 2.0 * unit(rng) - 1.0; break;
    }
    candidate.schedule.push_back({duration, u});
  }
  candidate.schedule.push_back({CoastDuration(params, region), 0.0});
  return candidate;
}

DominanceReport RandomControlDominance(const Pose& start,
                                       const RobotParams& params,
                                       const EscapeRegion& region,
                                       std::size_t n_samples, std::uint64_t seed,
                                       double tolerance) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  RequireInside(start, region);
  const double optimal = PlanEscape(start, params, region).total_time;
  ReportBuilder builder(optimal, tolerance);
  const double horizon = std::max(optimal, 1e-9) * 1.5;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const CandidateControl candidate =
        RandomCandidate(seed, i, horizon, params, region);
    builder.Add(candidate, SimulateOpenLoop(start, candidate, params, region));
  }
  return builder.Finish();
}

}  // namespace dubins_escape

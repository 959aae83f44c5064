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

#ifndef DUBINS_ESCAPE_ORACLE_H_
#define DUBINS_ESCAPE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dubins_escape/core.h"

namespace dubins_escape {

// Brute-force checks that no admissible control escapes faster than the
// feedback law.

struct ScheduleSegment {
  double duration = 0.0;
  double u = 0.0;
};

// Piecewise-constant open-loop control.
struct CandidateControl {
  std::vector<ScheduleSegment> schedule;
  std::string tag;

  // Throws std::invalid_argument on a non-positive duration or |u| > 1.
  void Validate() const;
};

// Escape time of an open-loop schedule: the first time the robot reaches the
// boundary from inside, or nullopt if the schedule ends inside the region.
// Each constant-control segment is solved in closed form.
std::optional<double> SimulateOpenLoop(const Pose& start,
                                       const CandidateControl& control,
                                       const RobotParams& params,
                                       const EscapeRegion& region);

struct DominanceViolation {
  CandidateControl candidate;
  double escape_time = 0.0;
};

struct DominanceReport {
  // +infinity when no candidate escaped.
  double best_candidate_time = 0.0;
  std::string best_candidate_tag;
  double optimal_time = 0.0;
  // best_candidate_time - optimal_time.
  double margin = 0.0;
  double tolerance = 0.0;
  std::size_t n_candidates = 0;
  std::size_t n_escaped = 0;
  // Total number of candidates faster than optimal_time - tolerance. Only
  // the first kMaxRecordedViolations are kept in `violations`.
  std::size_t n_violations = 0;
  std::vector<DominanceViolation> violations;
  // Bang-switch sweeps only: switch time of the best candidate.
  double best_switch_time = 0.0;

  static constexpr std::size_t kMaxRecordedViolations = 32;
};

inline constexpr double kSweepTolerance = 1e-4;
inline constexpr double kRandomTolerance = 1e-4;
inline constexpr double kStructuredTolerance = 1e-9;

// Candidates: bang +1 or -1 until a switch time on a uniform grid over
// [0, EscapeTimeBound], then straight; plus the two pure bangs. Switch time
// 0 is the pure straight line. Throws std::invalid_argument if grid_n < 2.
DominanceReport BangSwitchSweep(const Pose& start, const RobotParams& params,
                                const EscapeRegion& region, std::size_t grid_n,
                                double tolerance = kSweepTolerance);

// Random piecewise-constant schedules of 1 to 8 segments with random
// durations and controls, each followed by a straight coast. Candidate i is
// drawn from a generator seeded by (seed, i), so the report does not depend
// on evaluation order. Throws std::invalid_argument if n_samples < 1.
DominanceReport RandomControlDominance(const Pose& start,
                                       const RobotParams& params,
                                       const EscapeRegion& region,
                                       std::size_t n_samples, std::uint64_t seed,
                                       double tolerance = kRandomTolerance);

// The random candidate with index `index` for the given seed.
CandidateControl RandomCandidate(std::uint64_t seed, std::size_t index,
                                 double horizon, const RobotParams& params,
                                 const EscapeRegion& region);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_ORACLE_H_

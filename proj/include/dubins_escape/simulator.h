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

#ifndef DUBINS_ESCAPE_SIMULATOR_H_
#define DUBINS_ESCAPE_SIMULATOR_H_

#include <stdexcept>

#include "dubins_escape/core.h"
#include "dubins_escape/feedback.h"
#include "dubins_escape/trajectory.h"

namespace dubins_escape {

struct SimOptions {
  // Maximum spacing between recorded samples, seconds.
  double dt_max = 1e-3;
  // Event localization tolerance, seconds.
  double event_tolerance = 1e-10;
  // Divergence guard, seconds.
  double max_time = 1.0;
};

// dt_max = 1e-3 rho / v, event_tolerance = 1e-10 s and
// max_time = 2 (2 pi varrho + rho) / v.
SimOptions DefaultSimOptions(const RobotParams& params,
                             const EscapeRegion& region);

// Upper bound on any optimal escape time: one full turn plus a diameter,
// doubled.
double EscapeTimeBound(const RobotParams& params, const EscapeRegion& region);

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed-form propagation of the Dubins car under a constant control for
// `dt` seconds. Exact for every u in [-1, 1].
Pose StepExact(const Pose& pose, Control u, double dt,
               const RobotParams& params);

// Closed-loop simulation of the optimal feedback law until the robot reaches
// the boundary moving outwards.
//
// Switch and exit events are bracketed on the sample grid and refined by
// bisection to `opts.event_tolerance`. After the switch the heading is
// snapped onto the azimuth and the control is held at 0.
//
// Throws std::invalid_argument if `start` is not strictly inside `region`
// or the options are invalid, and DivergenceError if the escape takes
// longer than `opts.max_time`.
Trajectory Simulate(const Pose& start, const RobotParams& params,
                    const EscapeRegion& region, const SimOptions& opts);
Trajectory Simulate(const Pose& start, const RobotParams& params,
                    const EscapeRegion& region);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_SIMULATOR_H_

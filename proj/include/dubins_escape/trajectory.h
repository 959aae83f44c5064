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

#ifndef DUBINS_ESCAPE_TRAJECTORY_H_
#define DUBINS_ESCAPE_TRAJECTORY_H_

#include <vector>

#include "dubins_escape/core.h"

namespace dubins_escape {

enum class EventKind {
  kSwitchToSingular,
  kBoundaryExit,
};

struct TrajectoryEvent {
  double time = 0.0;
  EventKind kind = EventKind::kBoundaryExit;
};

// One recorded state. `control` is the control applied from this sample to
// the next one; on the final (exit) sample it is the control active at exit.
struct TrajectorySample {
  double time = 0.0;
  Pose pose;
  double control = 0.0;
  double range = 0.0;
  double azimuth = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<TrajectoryEvent> events;
  double exit_time = 0.0;
  Pose exit_pose;

  bool has_switch() const {
    return !events.empty() && events.front().kind == EventKind::kSwitchToSingular;
  }
};

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_TRAJECTORY_H_

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

#ifndef DUBINS_ESCAPE_PLANNER_H_
#define DUBINS_ESCAPE_PLANNER_H_

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dubins_escape/core.h"

namespace dubins_escape {

enum class TurnDirection {
  kClockwise,         // right turn, u = +1
  kCounterClockwise,  // left turn, u = -1
};

struct TurningCircle {
  Vec2 center;
  double radius = 0.0;
  TurnDirection direction = TurnDirection::kClockwise;
};

// Circle traced by a maximum-rate turn from `pose` in direction `dir`.
TurningCircle MakeTurningCircle(const Pose& pose, TurnDirection dir,
                                const RobotParams& params);

// Points where the two tangent lines through `point` touch `circle`.
// Returns the same point twice when `point` lies on the circle and nullopt
// when it lies strictly inside.
std::optional<std::pair<Vec2, Vec2>> TangentPoints(Vec2 point,
                                                   const TurningCircle& circle);

struct ArcSegment {
  Vec2 center;
  double radius = 0.0;
  // Angle of the start point as seen from the center.
  double start_angle = 0.0;
  // Signed sweep; negative sweeps run clockwise.
  double sweep = 0.0;

  double length() const { return std::abs(sweep) * radius; }
  Vec2 PointAt(double fraction) const {
    return center + radius * UnitVector(start_angle + fraction * sweep);
  }
  Vec2 start() const { return PointAt(0.0); }
  Vec2 end() const { return PointAt(1.0); }
  // Direction of travel at the end point.
  double end_heading() const {
    return WrapAngle(start_angle + sweep + (sweep < 0.0 ? -0.5 : 0.5) * kPi);
  }
};

struct LineSegment {
  Vec2 start;
  Vec2 end;

  double length() const { return Norm(end - start); }
};

using PathSegment = std::variant<ArcSegment, LineSegment>;

enum class PathClass { kLine, kArc, kArcLine };

std::string_view ToString(PathClass c);

struct EscapePath {
  std::vector<PathSegment> segments;
  double total_length = 0.0;
  double total_time = 0.0;
  double final_heading = 0.0;

  PathClass classification() const;
  Vec2 end_point() const;
  // Time spent on the initial turn; 0 for a straight path.
  double turn_duration(const RobotParams& params) const;
  // Position at `fraction` of the total length, fraction in [0, 1].
  Vec2 PointAtFraction(double fraction) const;
};

// Chord through the start position along the initial velocity and the two
// boundary arcs it cuts off.
struct ChordPartition {
  Vec2 chord_point;
  Vec2 chord_direction;
  // Boundary points at the front and back end of the chord.
  Vec2 front_end;
  Vec2 back_end;
  // Signed distance of the chord from the origin along the left normal of
  // chord_direction. 0 means the chord passes through the center.
  double offset = 0.0;
  // Arcs are stored as (start angle, counterclockwise sweep).
  double shorter_start = 0.0;
  double shorter_sweep = 0.0;
  double longer_start = 0.0;
  double longer_sweep = 0.0;

  bool is_tie(double tolerance = 1e-12) const {
    return std::abs(offset) <= tolerance;
  }
  // True iff boundary point `p` belongs to the shorter arc (or to either arc
  // under a tie), within `tolerance`.
  bool OnShorterArc(Vec2 p, double tolerance = 1e-9) const;
};

// Throws std::invalid_argument unless the start lies strictly inside.
ChordPartition MakeChordPartition(const Pose& start, const EscapeRegion& region);

// Minimum-time escape path built from the turning circle selected by the
// feedback law: a radial line, an arc to the boundary, or an arc to the
// radial tangent point followed by the radial line.
//
// Throws std::invalid_argument unless the start lies strictly inside.
EscapePath PlanEscape(const Pose& start, const RobotParams& params,
                      const EscapeRegion& region);

// Length of the turn-then-straight path from `start` to boundary point
// `exit`: the engaged turning circle is followed up to the tangent point from
// which the straight line heads towards `exit`. For an aligned start the
// clockwise circle is used.
//
// Throws std::domain_error when `exit` lies inside the turning circle.
double ExitPointObjective(Vec2 exit, const Pose& start,
                          const RobotParams& params, const EscapeRegion& region);

bool VerifyShorterArc(const EscapePath& path, const ChordPartition& partition);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_PLANNER_H_

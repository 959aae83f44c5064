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

#include "dubins_escape/planner.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dubins_escape/feedback.h"

namespace dubins_escape {
namespace {

// Starts this close to the boundary (relative to rho) and moving outwards
// have already escaped.
constexpr double kBoundaryEpsilon = 1e-12;

// Sweeps beyond this are wrap-around artifacts of a zero sweep: the turn
// towards the radial line never exceeds half a revolution.
constexpr double kMaxSwitchSweep = kPi + 1e-6;

double PositiveModulo(double angle) {
  double m = std::fmod(angle, kTwoPi);
  if (m < 0.0) m += kTwoPi;
  return m;
}

Vec2 Reflect(Vec2 p, Vec2 axis) { return 2.0 * Dot(p, axis) * axis - p; }

// Unit direction of clockwise travel at angle `alpha` on a circle.
Vec2 ClockwiseTangent(double alpha) {
  return {std::sin(alpha), -std::cos(alpha)};
}

// Clockwise sweep from `start_angle` on circle (center, radius) to the first
// point on the boundary of the region crossed outwards.
std::optional<double> ClockwiseBoundaryCrossing(Vec2 center, double radius,
                                                double start_angle,
                                                double region_radius) {
  const double d = Norm(center);
  if (d < kOriginEpsilon || d + radius <= region_radius) return std::nullopt;
  // Intersection of |x| = rho and |x - c| = varrho: project onto the line of
  // centers, then offset along its normal.
  const double along = (region_radius * region_radius + d * d - radius * radius) /
                       (2.0 * d);
  const double across =
      std::sqrt(std::max(0.0, region_radius * region_radius - along * along));
  const Vec2 axis = (1.0 / d) * center;
  std::optional<double> best;
  for (const double sign : {1.0, -1.0}) {
    const Vec2 x = along * axis + sign * across * PerpCcw(axis);
    const double alpha = Angle(x - center);
    if (Dot(ClockwiseTangent(alpha), x) < -1e-12 * region_radius) continue;
    const double sweep = PositiveModulo(start_angle - alpha);
    if (!best || sweep < *best) best = sweep;
  }
  return best;
}

EscapePath Finish(std::vector<PathSegment> segments, double final_heading,
                  const RobotParams& params) {
  EscapePath path;
  path.segments = std::move(segments);
  for (const PathSegment& segment : path.segments) {
    path.total_length +=
        std::visit([](const auto& s) { return s.length(); }, segment);
  }
  path.total_time = path.total_length / params.speed();
  path.final_heading = WrapAngle(final_heading);
  return path;
}

EscapePath RadialLine(Vec2 from, double direction, const RobotParams& params,
                      const EscapeRegion& region) {
  const Vec2 end = region.radius() * UnitVector(direction);
  return Finish({LineSegment{from, end}}, direction, params);
}

// Plan for a start that must turn right (wrap(theta - phi) > 0).
EscapePath PlanRightTurn(const Pose& start, const RobotParams& params,
                         const EscapeRegion& region) {
  const TurningCircle circle =
      MakeTurningCircle(start, TurnDirection::kClockwise, params);
  const double start_angle = Angle(start.position() - circle.center);

  // Of the two tangent points seen from the origin, the switch happens where
  // clockwise travel points radially outwards.
  const auto tangents = TangentPoints(Vec2{}, circle);
  Vec2 switch_point = tangents ? tangents->first : start.position();
  if (tangents) {
    const auto outwardness = [&](Vec2 tau) {
      return Dot(ClockwiseTangent(Angle(tau - circle.center)), tau);
    };
    if (outwardness(tangents->second) > outwardness(tangents->first)) {
      switch_point = tangents->second;
    }
  }
  double switch_sweep =
      PositiveModulo(start_angle - Angle(switch_point - circle.center));
  if (switch_sweep > kMaxSwitchSweep) switch_sweep = 0.0;

  const std::optional<double> crossing = ClockwiseBoundaryCrossing(
      circle.center, circle.radius, start_angle, region.radius());
  if (crossing && *crossing <= switch_sweep) {
    const ArcSegment arc{circle.center, circle.radius, start_angle, -*crossing};
    return Finish({arc}, arc.end_heading(), params);
  }
  if (switch_sweep == 0.0) {
    return RadialLine(start.position(), Angle(start.position()), params, region);
  }
  const ArcSegment arc{circle.center, circle.radius, start_angle, -switch_sweep};
  const Vec2 tau = arc.end();
  const double radial = Angle(tau);
  return Finish({arc, LineSegment{tau, region.radius() * UnitVector(radial)}},
                radial, params);
}

EscapePath Mirror(const EscapePath& path, Vec2 axis, const RobotParams& params) {
  const double axis_angle = Angle(axis);
  std::vector<PathSegment> segments;
  for (const PathSegment& segment : path.segments) {
    if (const auto* arc = std::get_if<ArcSegment>(&segment)) {
      segments.push_back(ArcSegment{Reflect(arc->center, axis), arc->radius,
                                    WrapAngle(2.0 * axis_angle - arc->start_angle),
                                    -arc->sweep});
    } else {
      const auto& line = std::get<LineSegment>(segment);
      segments.push_back(
          LineSegment{Reflect(line.start, axis), Reflect(line.end, axis)});
    }
  }
  return Finish(std::move(segments), 2.0 * axis_angle - path.final_heading,
                params);
}

}  // namespace

std::string_view ToString(PathClass c) {
  switch (c) {
    case PathClass::kLine:
      return "line";
    case PathClass::kArc:
      return "arc";
    case PathClass::kArcLine:
      return "arc+line";
  }
  return "unknown";
}

PathClass EscapePath::classification() const {
  if (segments.empty() || std::holds_alternative<LineSegment>(segments.front())) {
    return PathClass::kLine;
  }
  return segments.size() == 1 ? PathClass::kArc : PathClass::kArcLine;
}

Vec2 EscapePath::end_point() const {
  if (segments.empty()) return {};
  if (const auto* arc = std::get_if<ArcSegment>(&segments.back())) return arc->end();
  return std::get<LineSegment>(segments.back()).end;
}

double EscapePath::turn_duration(const RobotParams& params) const {
  if (segments.empty()) return 0.0;
  if (const auto* arc = std::get_if<ArcSegment>(&segments.front())) {
    return arc->length() / params.speed();
  }
  return 0.0;
}

Vec2 EscapePath::PointAtFraction(double fraction) const {
  double remaining = std::clamp(fraction, 0.0, 1.0) * total_length;
  for (const PathSegment& segment : segments) {
    const double length =
        std::visit([](const auto& s) { return s.length(); }, segment);
    if (remaining <= length || &segment == &segments.back()) {
      const double f = length > 0.0 ? std::min(remaining / length, 1.0) : 1.0;
      if (const auto* arc = std::get_if<ArcSegment>(&segment)) {
        return arc->PointAt(f);
      }
      const auto& line = std::get<LineSegment>(segment);
      return line.start + f * (line.end - line.start);
    }
    remaining -= length;
  }
  return end_point();
}

TurningCircle MakeTurningCircle(const Pose& pose, TurnDirection dir,
                                const RobotParams& params) {
  const Vec2 normal = dir == TurnDirection::kClockwise
                          ? PerpCw(pose.direction())
                          : PerpCcw(pose.direction());
  return {pose.position() + params.turn_radius() * normal, params.turn_radius(),
          dir};
}

std::optional<std::pair<Vec2, Vec2>> TangentPoints(Vec2 point,
                                                   const TurningCircle& circle) {
  const Vec2 offset = point - circle.center;
  const double d2 = SquaredNorm(offset);
  const double r2 = circle.radius * circle.radius;
  const double on_circle_tol = 1e-12 * std::max(1.0, r2);
  if (std::abs(d2 - r2) <= on_circle_tol) return std::pair{point, point};
  if (d2 < r2) return std::nullopt;
  const Vec2 q = PerpCcw(offset);
  const Vec2 foot = circle.center + (r2 / d2) * offset;
  const double lateral = circle.radius / d2 * std::sqrt(d2 - r2);
  return std::pair{foot + lateral * q, foot - lateral * q};
}

bool ChordPartition::OnShorterArc(Vec2 p, double tolerance) const {
  if (is_tie()) return true;
  const double side = Dot(PerpCcw(chord_direction), p) - offset;
  return (offset > 0.0 ? side : -side) >= -tolerance;
}

ChordPartition MakeChordPartition(const Pose& start,
                                  const EscapeRegion& region) {
  const Vec2 p = start.position();
  const double rho = region.radius();
  if (!(Norm(p) < rho)) {
    throw std::invalid_argument("chord start must lie strictly inside the region");
  }
  ChordPartition partition;
  partition.chord_point = p;
  partition.chord_direction = start.direction();
  const Vec2 h = partition.chord_direction;
  const double b = Dot(p, h);
  const double disc = std::sqrt(b * b - SquaredNorm(p) + rho * rho);
  partition.front_end = p + (-b + disc) * h;
  partition.back_end = p + (-b - disc) * h;
  partition.offset = Dot(PerpCcw(h), p);

  // Counterclockwise from the front end to the back end runs along the left
  // side of the chord.
  const double front = Angle(partition.front_end);
  const double back = Angle(partition.back_end);
  const double left_sweep = PositiveModulo(back - front);
  const double right_sweep = kTwoPi - left_sweep;
  if (partition.offset >= 0.0) {
    partition.shorter_start = front;
    partition.shorter_sweep = left_sweep;
    partition.longer_start = back;
    partition.longer_sweep = right_sweep;
  } else {
    partition.shorter_start = back;
    partition.shorter_sweep = right_sweep;
    partition.longer_start = front;
    partition.longer_sweep = left_sweep;
  }
  return partition;
}

EscapePath PlanEscape(const Pose& start_in, const RobotParams& params,
                      const EscapeRegion& region) {
  const Pose start = Pose::Make(start_in.x, start_in.y, start_in.heading);
  const PolarPose polar = ToPolar(start);
  const double rho = region.radius();
  if (!(polar.range < rho)) {
    throw std::invalid_argument("start pose must lie strictly inside the region");
  }
  if (rho - polar.range <= kBoundaryEpsilon * rho && polar.azimuth_defined &&
      std::cos(WrapAngle(start.heading - polar.azimuth)) >= 0.0) {
    return Finish({LineSegment{start.position(), start.position()}},
                  start.heading, params);
  }

  const double u = OptimalControl(start).value();
  if (u == 0.0) {
    const double ray = polar.azimuth_defined ? polar.azimuth : start.heading;
    return RadialLine(start.position(), ray, params, region);
  }
  if (u > 0.0) return PlanRightTurn(start, params, region);

  // Left turns are planned as right turns mirrored about the initial radial
  // line.
  const Vec2 axis = UnitVector(polar.azimuth);
  const Vec2 mirrored = Reflect(start.position(), axis);
  const Pose mirrored_start =
      Pose::Make(mirrored.x, mirrored.y, 2.0 * polar.azimuth - start.heading);
  return Mirror(PlanRightTurn(mirrored_start, params, region), axis, params);
}

double ExitPointObjective(Vec2 exit, const Pose& start,
                          const RobotParams& params,
                          const EscapeRegion& region) {
  if (std::abs(Norm(exit) - region.radius()) > 1e-9 * region.radius()) {
    throw std::invalid_argument("exit point must lie on the region boundary");
  }
  const bool left = OptimalControl(start).value() < 0.0;
  const TurningCircle circle = MakeTurningCircle(
      start, left ? TurnDirection::kCounterClockwise : TurnDirection::kClockwise,
      params);
  const auto tangents = TangentPoints(exit, circle);
  if (!tangents) {
    throw std::domain_error("exit point lies inside the turning circle");
  }
  const double direction = left ? -1.0 : 1.0;
  const auto travel = [&](Vec2 tau) {
    return direction * ClockwiseTangent(Angle(tau - circle.center));
  };
  // Only one tangent point sends the straight segment towards the exit.
  const auto heads_to_exit = [&](Vec2 tau) { return Dot(travel(tau), exit - tau); };
  const Vec2 tau = heads_to_exit(tangents->second) > heads_to_exit(tangents->first)
                       ? tangents->second
                       : tangents->first;

  const double start_angle = Angle(start.position() - circle.center);
  double sweep =
      PositiveModulo(direction * (start_angle - Angle(tau - circle.center)));
  if (sweep > kTwoPi - 1e-9) sweep = 0.0;
  return sweep * circle.radius + Norm(exit - tau);
}

bool VerifyShorterArc(const EscapePath& path, const ChordPartition& partition) {
  return partition.OnShorterArc(path.end_point());
}

}  // namespace dubins_escape

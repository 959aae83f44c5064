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

#ifndef DUBINS_ESCAPE_CORE_H_
#define DUBINS_ESCAPE_CORE_H_

#include <cmath>
#include <numbers>

namespace dubins_escape {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this range the azimuth of a position is undefined.
inline constexpr double kOriginEpsilon = 1e-12;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double Dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double SquaredNorm(Vec2 a) { return Dot(a, a); }
inline double Angle(Vec2 a) { return std::atan2(a.y, a.x); }
inline Vec2 UnitVector(double angle) { return {std::cos(angle), std::sin(angle)}; }
// Rotations by +pi/2 (counterclockwise) and -pi/2 (clockwise).
inline Vec2 PerpCcw(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 PerpCw(Vec2 a) { return {a.y, -a.x}; }

// Vehicle speed v and maximum turn rate omega. The minimum turn radius is
// v / omega.
class RobotParams {
 public:
  // Throws std::invalid_argument unless both values are finite and positive.
  RobotParams(double speed, double max_turn_rate);

  double speed() const { return speed_; }
  double max_turn_rate() const { return max_turn_rate_; }
  double turn_radius() const { return turn_radius_; }

 private:
  double speed_;
  double max_turn_rate_;
  double turn_radius_;
};

// Open disc of radius rho centered at the origin.
class EscapeRegion {
 public:
  explicit EscapeRegion(double radius);

  double radius() const { return radius_; }
  bool Contains(Vec2 p) const;

 private:
  double radius_;
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  // Radians in (-pi, pi].
  double heading = 0.0;

  // Validates finiteness and wraps the heading. Throws std::domain_error.
  static Pose Make(double x, double y, double heading);

  Vec2 position() const { return {x, y}; }
  Vec2 direction() const { return UnitVector(heading); }
};

struct PolarPose {
  double range = 0.0;
  double azimuth = 0.0;
  bool azimuth_defined = false;
};

// Normalized turn rate in [-1, 1]. Positive values turn right (heading
// decreases).
class Control {
 public:
  constexpr Control() = default;
  // Throws std::invalid_argument if |u| > 1 or u is not finite.
  explicit Control(double u);

  constexpr double value() const { return u_; }
  friend bool operator==(Control, Control) = default;

 private:
  double u_ = 0.0;
};

struct StateDerivative {
  double dx = 0.0;
  double dy = 0.0;
  double dheading = 0.0;
};

// Wraps an angle to (-pi, pi]; -pi maps to pi. Throws std::domain_error on
// non-finite input.
double WrapAngle(double angle);

PolarPose ToPolar(const Pose& pose);
Vec2 FromPolar(double range, double azimuth);

// (v cos theta, v sin theta, -omega u).
StateDerivative Dynamics(const Pose& pose, Control u, const RobotParams& params);

// Rate of change of the range, v cos(theta - phi). Throws std::domain_error
// when the pose sits at the origin.
double RadialRate(const Pose& pose, const RobotParams& params);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_CORE_H_

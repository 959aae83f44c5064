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

#include "dubins_escape/core.h"

#include <stdexcept>
#include <string>

namespace dubins_escape {
namespace {

bool PositiveFinite(double value) { return std::isfinite(value) && value > 0.0; }

}  // namespace

RobotParams::RobotParams(double speed, double max_turn_rate)
    : speed_(speed), max_turn_rate_(max_turn_rate) {
  if (!PositiveFinite(speed)) {
    throw std::invalid_argument("speed must be finite and positive, got " +
                                std::to_string(speed));
  }
  if (!PositiveFinite(max_turn_rate)) {
    throw std::invalid_argument(
        "max_turn_rate must be finite and positive, got " +
        std::to_string(max_turn_rate));
  }
  turn_radius_ = speed / max_turn_rate;
}

EscapeRegion::EscapeRegion(double radius) : radius_(radius) {
  if (!PositiveFinite(radius)) {
    throw std::invalid_argument("region radius must be finite and positive, got " +
                                std::to_string(radius));
  }
}

bool EscapeRegion::Contains(Vec2 p) const { return Norm(p) < radius_; }

Pose Pose::Make(double x, double y, double heading) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::domain_error("pose position must be finite");
  }
  return Pose{x, y, WrapAngle(heading)};
}

Control::Control(double u) : u_(u) {
  if (!std::isfinite(u) || std::abs(u) > 1.0) {
    throw std::invalid_argument("control must lie in [-1, 1], got " +
                                std::to_string(u));
  }
}

double WrapAngle(double angle) {
  if (!std::isfinite(angle)) {
    throw std::domain_error("cannot wrap a non-finite angle");
  }
  // std::remainder is exact and lands in [-pi, pi].
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -kPi) wrapped += kTwoPi;
  return wrapped;
}

PolarPose ToPolar(const Pose& pose) {
  if (!std::isfinite(pose.x) || !std::isfinite(pose.y)) {
    throw std::domain_error("pose position must be finite");
  }
  PolarPose polar;
  polar.range = std::hypot(pose.x, pose.y);
  polar.azimuth_defined = polar.range >= kOriginEpsilon;
  polar.azimuth =
      polar.azimuth_defined ? WrapAngle(std::atan2(pose.y, pose.x)) : 0.0;
  return polar;
}

Vec2 FromPolar(double range, double azimuth) {
  return {range * std::cos(azimuth), range * std::sin(azimuth)};
}

StateDerivative Dynamics(const Pose& pose, Control u,
                         const RobotParams& params) {
  return {params.speed() * std::cos(pose.heading),
          params.speed() * std::sin(pose.heading),
          -params.max_turn_rate() * u.value()};
}

double RadialRate(const Pose& pose, const RobotParams& params) {
  const PolarPose polar = ToPolar(pose);
  if (!polar.azimuth_defined) {
    throw std::domain_error("radial rate is undefined at the origin");
  }
  return params.speed() * std::cos(WrapAngle(pose.heading - polar.azimuth));
}

}  // namespace dubins_escape

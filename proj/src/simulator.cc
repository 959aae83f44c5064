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

#include "dubins_escape/simulator.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace dubins_escape {
namespace {

// Caps on the heading change and the azimuth sweep within one step while
// turning. They keep at most one extremum of the range inside a step.
constexpr double kMaxStepTurn = 0.25;
constexpr double kMaxStepAzimuthSweep = 0.25;

double Sinc(double x) {
  return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

TrajectorySample MakeSample(double t, const Pose& pose, Control u) {
  const PolarPose polar = ToPolar(pose);
  return {t, pose, u.value(), polar.range, polar.azimuth};
}

// True once wrap(theta - phi) has reached the switching manifold from the
// side selected by `u`.
bool AlignmentReached(const Pose& pose, Control u) {
  const PolarPose polar = ToPolar(pose);
  if (!polar.azimuth_defined) return false;
  return WrapAngle(pose.heading - polar.azimuth) * u.value() <= kAlignEpsilon;
}

class ClosedLoopStepper {
 public:
  ClosedLoopStepper(const RobotParams& params, const EscapeRegion& region,
                    const SimOptions& opts)
      : params_(params), region_(region), opts_(opts) {}

  // Time in (0, span] at which `pose` driven by `u` first reaches the
  // switching manifold, if it does.
  std::optional<double> FindSwitch(const Pose& pose, Control u,
                                   double span) const {
    if (u.value() == 0.0) return std::nullopt;
    if (!AlignmentReached(StepExact(pose, u, span, params_), u)) {
      return std::nullopt;
    }
    return Bisect(0.0, span, [&](double s) {
      return AlignmentReached(StepExact(pose, u, s, params_), u);
    });
  }

  // Time in (0, span] at which `pose` driven by `u` first reaches the
  // boundary, if it does.
  std::optional<double> FindExit(const Pose& pose, Control u,
                                 double span) const {
    const auto outside = [&](double s) {
      return Norm(StepExact(pose, u, s, params_).position()) >= region_.radius();
    };
    if (outside(span)) return Bisect(0.0, span, outside);
    if (u.value() == 0.0) return std::nullopt;

    // The arc may poke out of the region and come back within one step.
    // Check the point of the turning circle farthest from the origin.
    const double curvature_radius =
        params_.speed() / (params_.max_turn_rate() * u.value());
    const Vec2 center =
        pose.position() + curvature_radius * PerpCw(pose.direction());
    if (Norm(center) < kOriginEpsilon) return std::nullopt;
    const double turn_rate = -params_.max_turn_rate() * u.value();
    const double start_angle = Angle(pose.position() - center);
    const double far_angle = Angle(center);
    double to_far = std::fmod((far_angle - start_angle) * (turn_rate > 0 ? 1 : -1),
                              kTwoPi);
    if (to_far < 0.0) to_far += kTwoPi;
    const double peak_time = to_far / std::abs(turn_rate);
    if (peak_time <= 0.0 || peak_time >= span || !outside(peak_time)) {
      return std::nullopt;
    }
    return Bisect(0.0, peak_time, outside);
  }

 private:
  // Smallest time with pred == true, to within the event tolerance, given
  // pred(lo) == false and pred(hi) == true. Returns the upper bracket end.
  template <typename Pred>
  double Bisect(double lo, double hi, Pred pred) const {
    while (hi - lo > opts_.event_tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (pred(mid) ? hi : lo) = mid;
    }
    return hi;
  }

  const RobotParams& params_;
  const EscapeRegion& region_;
  const SimOptions& opts_;
};

void ValidateOptions(const SimOptions& opts) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(opts.dt_max) || !positive(opts.event_tolerance) ||
      !positive(opts.max_time)) {
    throw std::invalid_argument(
        "simulation options must be finite and positive");
  }
}

}  // namespace

double EscapeTimeBound(const RobotParams& params, const EscapeRegion& region) {
  return 2.0 * (kTwoPi * params.turn_radius() + region.radius()) /
         params.speed();
}

SimOptions DefaultSimOptions(const RobotParams& params,
                             const EscapeRegion& region) {
  SimOptions opts;
  opts.dt_max = 1e-3 * region.radius() / params.speed();
  opts.event_tolerance = 1e-10;
  opts.max_time = EscapeTimeBound(params, region);
  return opts;
}

Pose StepExact(const Pose& pose, Control u, double dt,
               const RobotParams& params) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("step duration must be finite and non-negative");
  }
  // sin(a + h) - sin(a) = 2 cos(a + h/2) sin(h/2), and likewise for cos, so
  // the chord of the arc is v dt sinc(h/2) along the mid-arc heading. This
  // form stays accurate as the turn rate goes to zero.
  const double turn = -params.max_turn_rate() * u.value() * dt;
  const double mid_heading = pose.heading + 0.5 * turn;
  const double chord = params.speed() * dt * Sinc(0.5 * turn);
  return {pose.x + chord * std::cos(mid_heading),
          pose.y + chord * std::sin(mid_heading),
          WrapAngle(pose.heading + turn)};
}

Trajectory Simulate(const Pose& start, const RobotParams& params,
                    const EscapeRegion& region, const SimOptions& opts) {
  ValidateOptions(opts);
  const PolarPose start_polar = ToPolar(start);
  if (!(start_polar.range < region.radius())) {
    throw std::invalid_argument("start pose must lie strictly inside the region");
  }

  const ClosedLoopStepper stepper(params, region, opts);
  Trajectory trajectory;
  Pose pose = Pose::Make(start.x, start.y, start.heading);
  double t = 0.0;
  Control u = OptimalControl(pose);
  if (u.value() == 0.0 && start_polar.azimuth_defined) {
    pose.heading = start_polar.azimuth;
  }
  trajectory.samples.push_back(MakeSample(t, pose, u));

  while (true) {
    if (t >= opts.max_time) {
      throw DivergenceError("no escape within " + std::to_string(opts.max_time) +
                            " s");
    }
    double span = std::min(opts.dt_max, opts.max_time - t);
    if (u.value() != 0.0) {
      span = std::min(span, kMaxStepTurn / params.max_turn_rate());
      const double range = Norm(pose.position());
      span = std::min(span, std::max(kMaxStepAzimuthSweep * range / params.speed(),
                                     opts.event_tolerance));
    }

    const std::optional<double> switch_time = stepper.FindSwitch(pose, u, span);
    if (switch_time) span = *switch_time;

    if (const std::optional<double> exit_time = stepper.FindExit(pose, u, span)) {
      pose = StepExact(pose, u, *exit_time, params);
      t += *exit_time;
      trajectory.samples.push_back(MakeSample(t, pose, u));
      trajectory.events.push_back({t, EventKind::kBoundaryExit});
      trajectory.exit_time = t;
      trajectory.exit_pose = pose;
      return trajectory;
    }

    pose = StepExact(pose, u, span, params);
    t += span;
    if (switch_time) {
      pose.heading = ToPolar(pose).azimuth;
      u = Control(0.0);
      trajectory.events.push_back({t, EventKind::kSwitchToSingular});
    }
    trajectory.samples.push_back(MakeSample(t, pose, u));
  }
}

Trajectory Simulate(const Pose& start, const RobotParams& params,
                    const EscapeRegion& region) {
  return Simulate(start, params, region, DefaultSimOptions(params, region));
}

}  // namespace dubins_escape

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

#include "dubins_escape/feedback.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dubins_escape {
namespace {

// Exits with cos(theta(T) - phi(T)) above -kExitCosTolerance are accepted;
// anything below violates the outward-exit constraint.
constexpr double kExitCosTolerance = 1e-9;
constexpr double kMinExitCos = 1e-12;

// Largest heading change per RK4 substep when integrating lambda_theta.
constexpr double kMaxSubstepTurn = 0.02;

int Sign(double value) { return (value > 0.0) - (value < 0.0); }

}  // namespace

Control OptimalControl(const Pose& pose) {
  const PolarPose polar = ToPolar(pose);
  if (!polar.azimuth_defined) return Control(0.0);
  const double misalignment = WrapAngle(pose.heading - polar.azimuth);
  if (std::abs(misalignment) <= kAlignEpsilon) return Control(0.0);
  // WrapAngle never returns -pi, so heading straight at the center yields +1.
  return Control(misalignment > 0.0 ? 1.0 : -1.0);
}

double Hamiltonian(const Pose& pose, Control u, const Costate& costate,
                   const RobotParams& params) {
  return 1.0 + costate.lambda_x * params.speed() * std::cos(pose.heading) +
         costate.lambda_y * params.speed() * std::sin(pose.heading) -
         costate.lambda_theta * params.max_turn_rate() * u.value();
}

double ReducedHamiltonian(double heading, double terminal_azimuth, double beta,
                          double lambda_theta, double u,
                          const RobotParams& params) {
  return 1.0 + beta * std::cos(heading - terminal_azimuth) -
         lambda_theta * params.max_turn_rate() * u;
}

CostateProfile ReconstructCostate(const Trajectory& trajectory,
                                  const RobotParams& params,
                                  const EscapeRegion& region) {
  const auto& samples = trajectory.samples;
  if (samples.empty()) {
    throw std::invalid_argument("cannot reconstruct costates of an empty trajectory");
  }
  const Pose& exit = trajectory.exit_pose;
  const PolarPose exit_polar = ToPolar(exit);
  const double exit_cos = std::cos(WrapAngle(exit.heading - exit_polar.azimuth));
  if (exit_cos < -kExitCosTolerance) {
    throw std::domain_error(
        "trajectory exits inwards: cos(theta(T) - phi(T)) = " +
        std::to_string(exit_cos));
  }

  CostateProfile costate;
  costate.terminal_azimuth = exit_polar.azimuth;
  costate.beta = -1.0 / std::max(exit_cos, kMinExitCos);
  costate.mu = costate.beta / (params.speed() * region.radius());
  costate.lambda_x = costate.mu * exit.x;
  costate.lambda_y = costate.mu * exit.y;

  const double omega = params.max_turn_rate();
  const double phi_T = costate.terminal_azimuth;
  const double beta = costate.beta;

  costate.lambda_theta.assign(samples.size(), 0.0);
  for (std::size_t i = samples.size() - 1; i-- > 0;) {
    const TrajectorySample& from = samples[i];
    const double dt = samples[i + 1].time - from.time;
    const double turn_rate = -omega * from.control;
    const int substeps = std::max(
        1, static_cast<int>(std::ceil(std::abs(turn_rate) * dt / kMaxSubstepTurn)));
    const double h = dt / substeps;
    // Heading along the interval is known in closed form, so the right-hand
    // side depends on time only and RK4 reduces to Simpson's rule.
    const auto rate = [&](double s) {
      return beta * std::sin(from.pose.heading + turn_rate * s - phi_T);
    };
    double lambda = costate.lambda_theta[i + 1];
    for (int k = substeps; k > 0; --k) {
      const double s1 = k * h;
      const double k1 = rate(s1);
      const double k2 = rate(s1 - 0.5 * h);
      const double k4 = rate(s1 - h);
      lambda -= h / 6.0 * (k1 + 4.0 * k2 + k4);
    }
    costate.lambda_theta[i] = lambda;
  }
  return costate;
}

PmpReport CheckPmp(const Trajectory& trajectory, const CostateProfile& costate,
                   const RobotParams& params) {
  const auto& samples = trajectory.samples;
  PmpReport report;
  report.beta = costate.beta;
  report.terminal_radial_rate = RadialRate(trajectory.exit_pose, params);
  report.terminal_lambda_theta =
      costate.lambda_theta.empty() ? 0.0 : costate.lambda_theta.back();

  std::size_t matched = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const TrajectorySample& sample = samples[i];
    const double lambda = costate.lambda_theta.at(i);
    const double h = ReducedHamiltonian(sample.pose.heading,
                                        costate.terminal_azimuth, costate.beta,
                                        lambda, sample.control, params);
    report.max_abs_hamiltonian = std::max(report.max_abs_hamiltonian, std::abs(h));

    if (std::abs(lambda) > kSignEpsilon) {
      ++report.sign_checked_samples;
      if (Sign(lambda) == Sign(sample.control)) ++matched;
    }
    if (i + 1 < samples.size() && sample.control != 0.0) {
      // On a bang interval |lambda_theta| shrinks towards the switch or exit.
      const double step = costate.lambda_theta.at(i + 1) - lambda;
      report.max_monotonicity_violation = std::max(
          report.max_monotonicity_violation, Sign(sample.control) * step);
    }
  }
  if (report.sign_checked_samples > 0) {
    report.sign_match_fraction =
        static_cast<double>(matched) / static_cast<double>(report.sign_checked_samples);
  }
  return report;
}

PmpReport CheckPmp(const Trajectory& trajectory, const RobotParams& params,
                   const EscapeRegion& region) {
  return CheckPmp(trajectory, ReconstructCostate(trajectory, params, region),
                  params);
}

}  // namespace dubins_escape

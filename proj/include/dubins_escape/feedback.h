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

#ifndef DUBINS_ESCAPE_FEEDBACK_H_
#define DUBINS_ESCAPE_FEEDBACK_H_

#include <vector>

#include "dubins_escape/core.h"
#include "dubins_escape/trajectory.h"

namespace dubins_escape {

// Half-width of the band around the switching manifold theta = phi inside
// which the feedback law returns the singular control 0.
inline constexpr double kAlignEpsilon = 1e-9;

// Costate magnitudes below this are treated as unsigned when comparing
// sign(lambda_theta) with the applied control.
inline constexpr double kSignEpsilon = 1e-8;

// Time-optimal escape law: u = sign(wrap(theta - phi)).
//
// Returns 0 inside the alignment band and at the origin, and +1 when the
// robot heads straight at the center (wrap(theta - phi) == pi).
Control OptimalControl(const Pose& pose);

struct Costate {
  double lambda_x = 0.0;
  double lambda_y = 0.0;
  double lambda_theta = 0.0;
  // beta = v * mu * rho.
  double beta = 0.0;
};

// 1 + lambda_x v cos(theta) + lambda_y v sin(theta) - lambda_theta omega u.
double Hamiltonian(const Pose& pose, Control u, const Costate& costate,
                   const RobotParams& params);

// The Hamiltonian after substituting the terminal transversality conditions:
// 1 + beta cos(theta - phi(T)) - lambda_theta omega u.
double ReducedHamiltonian(double heading, double terminal_azimuth, double beta,
                          double lambda_theta, double u,
                          const RobotParams& params);

// Costates along a trajectory. lambda_x, lambda_y and beta are constant;
// lambda_theta has one entry per trajectory sample.
struct CostateProfile {
  double beta = 0.0;
  double mu = 0.0;
  double lambda_x = 0.0;
  double lambda_y = 0.0;
  double terminal_azimuth = 0.0;
  std::vector<double> lambda_theta;

  Costate at(std::size_t i) const {
    return {lambda_x, lambda_y, lambda_theta.at(i), beta};
  }
};

// Rebuilds the costates of an escape trajectory from the terminal
// conditions: beta = -1 / cos(theta(T) - phi(T)), lambda_theta(T) = 0 and
// d(lambda_theta)/dt = beta sin(theta(t) - phi(T)) integrated backwards with
// classical RK4 on the recorded time grid.
//
// Throws std::invalid_argument for an empty trajectory and std::domain_error
// when the exit has cos(theta(T) - phi(T)) < 0 beyond tolerance.
CostateProfile ReconstructCostate(const Trajectory& trajectory,
                                  const RobotParams& params,
                                  const EscapeRegion& region);

struct PmpReport {
  double max_abs_hamiltonian = 0.0;
  // Fraction of samples with |lambda_theta| > kSignEpsilon on which
  // sign(lambda_theta) equals the applied control; 1 when there are none.
  double sign_match_fraction = 1.0;
  std::size_t sign_checked_samples = 0;
  double terminal_radial_rate = 0.0;
  double beta = 0.0;
  double terminal_lambda_theta = 0.0;
  // Largest increase of lambda_theta over a step where it should be
  // non-increasing (or decrease where it should be non-decreasing).
  double max_monotonicity_violation = 0.0;
};

PmpReport CheckPmp(const Trajectory& trajectory, const CostateProfile& costate,
                   const RobotParams& params);
PmpReport CheckPmp(const Trajectory& trajectory, const RobotParams& params,
                   const EscapeRegion& region);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_FEEDBACK_H_

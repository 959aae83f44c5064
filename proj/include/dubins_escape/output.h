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

#ifndef DUBINS_ESCAPE_OUTPUT_H_
#define DUBINS_ESCAPE_OUTPUT_H_

#include <ostream>
#include <string>
#include <vector>

#include "dubins_escape/core.h"
#include "dubins_escape/feedback.h"
#include "dubins_escape/trajectory.h"

namespace dubins_escape {

inline constexpr char kTrajectoryCsvHeader[] =
    "t,x,y,theta,u,r,phi,lambda_theta,H";

// Plain decimal notation (no exponent) with `significant` significant digits.
std::string FormatDecimal(double value, int significant = 12);

// One row per trajectory sample, the last row being the exit event. The H
// column is the reduced Hamiltonian. Throws std::invalid_argument for an
// empty trajectory or mismatched costates.
void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory,
                        const CostateProfile& costate, const RobotParams& params);

struct SvgTrace {
  std::string label;
  std::vector<Vec2> points;
  // Switch points are drawn as hollow markers, exits as filled ones.
  std::vector<Vec2> switch_points;
  std::vector<Vec2> exit_points;
};

SvgTrace MakeSvgTrace(std::string label, const Trajectory& trajectory);

// Isotropic plot of the region boundary with the traces overlaid.
std::string RenderSvg(const std::string& title, double region_radius,
                      const std::vector<SvgTrace>& traces);

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_OUTPUT_H_

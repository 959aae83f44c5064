# Copyright 2026 The Dubins Escape Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Time-optimal exit of a Dubins car from a disc."""

from ._dubins_escape import (
    DivergenceError,
    DominanceReport,
    EscapePath,
    EscapeRegion,
    ParseError,
    PmpReport,
    Pose,
    RobotParams,
    RunReport,
    Scenario,
    Trajectory,
    ValidationError,
    bang_switch_sweep,
    bundled_corpus,
    check_pmp,
    exit_point_objective,
    format_scenarios,
    lambda_theta,
    optimal_control,
    parse_scenarios,
    plan_escape,
    random_control_dominance,
    run_scenario,
    simulate,
    to_polar,
    wrap_angle,
)

__all__ = [
    "DivergenceError",
    "DominanceReport",
    "EscapePath",
    "EscapeRegion",
    "ParseError",
    "PmpReport",
    "Pose",
    "RobotParams",
    "RunReport",
    "Scenario",
    "Trajectory",
    "ValidationError",
    "bang_switch_sweep",
    "bundled_corpus",
    "check_pmp",
    "exit_point_objective",
    "format_scenarios",
    "lambda_theta",
    "optimal_control",
    "parse_scenarios",
    "plan_escape",
    "random_control_dominance",
    "run_scenario",
    "simulate",
    "to_polar",
    "wrap_angle",
]

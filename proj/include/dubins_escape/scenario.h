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

#ifndef DUBINS_ESCAPE_SCENARIO_H_
#define DUBINS_ESCAPE_SCENARIO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dubins_escape/core.h"

namespace dubins_escape {

// One escape problem. Scenario files are line-oriented UTF-8:
//
//   # comment
//   [scenario diag.omega_pi]
//   v = 1
//   omega = pi
//   rho = 1
//   x0 = 0.25, y0 = 0.25, theta0 = pi
//
// Every key is required once per block. Values are decimal numbers or
// multiples of pi such as "pi", "-pi/2", "3*pi/4" or "0.5pi".
struct Scenario {
  std::string name;
  double v = 1.0;
  double omega = 1.0;
  double rho = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
  double theta0 = 0.0;

  RobotParams params() const { return RobotParams(v, omega); }
  EscapeRegion region() const { return EscapeRegion(rho); }
  Pose start() const { return Pose::Make(x0, y0, theta0); }
  // Text before the first '.', used to group scenarios into one plot.
  std::string group() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string scenario, std::string field,
                  const std::string& message);
  const std::string& scenario() const { return scenario_; }
  const std::string& field() const { return field_; }

 private:
  std::string scenario_;
  std::string field_;
};

// Parses a numeric value or a multiple of pi. Throws std::invalid_argument.
double ParseValue(std::string_view text);

// Throws ParseError for malformed lines and ValidationError when a scenario
// is incomplete or breaks an invariant.
std::vector<Scenario> ParseScenarioText(std::string_view text);

// Inverse of ParseScenarioText. Values are printed with round-trip precision.
std::string FormatScenarios(const std::vector<Scenario>& scenarios);

// Checks v, omega, rho > 0 and x0^2 + y0^2 < rho^2.
void ValidateScenario(const Scenario& scenario);

// v = 1, rho = 1, omega in {pi/100, pi/6, pi, 100 pi}, from the starts
// (0.25, 0.25, pi), (0.25, 0, pi), (0, 0.25, pi) and (0, 0.5, pi).
std::vector<Scenario> BundledCorpus();

}  // namespace dubins_escape

#endif  // DUBINS_ESCAPE_SCENARIO_H_

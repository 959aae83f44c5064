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

#include "dubins_escape/scenario.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

namespace dubins_escape {
namespace {

constexpr std::array<std::string_view, 6> kKeys = {"v",  "omega", "rho",
                                                   "x0", "y0",    "theta0"};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> ParseNumber(std::string_view s) {
  s = Trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

bool ValidName(std::string_view name) {
  if (name.empty()) return false;
  for (const char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' &&
        c != '.' && c != '+') {
      return false;
    }
  }
  return true;
}

double* Field(Scenario& s, std::string_view key) {
  if (key == "v") return &s.v;
  if (key == "omega") return &s.omega;
  if (key == "rho") return &s.rho;
  if (key == "x0") return &s.x0;
  if (key == "y0") return &s.y0;
  if (key == "theta0") return &s.theta0;
  return nullptr;
}

std::string FormatDouble(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

struct PendingScenario {
  Scenario scenario;
  std::set<std::string, std::less<>> seen;
  std::size_t header_line = 0;
};

void FinishScenario(const PendingScenario& pending,
                    std::vector<Scenario>& scenarios,
                    std::set<std::string, std::less<>>& names) {
  for (const std::string_view key : kKeys) {
    if (!pending.seen.contains(key)) {
      throw ValidationError(pending.scenario.name, std::string(key),
                            "missing value");
    }
  }
  ValidateScenario(pending.scenario);
  if (!names.insert(pending.scenario.name).second) {
    throw ValidationError(pending.scenario.name, "name", "duplicate scenario name");
  }
  scenarios.push_back(pending.scenario);
}

}  // namespace

std::string Scenario::group() const { return name.substr(0, name.find('.')); }

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

ValidationError::ValidationError(std::string scenario, std::string field,
                                 const std::string& message)
    : std::runtime_error("scenario '" + scenario + "', field '" + field +
                         "': " + message),
      scenario_(std::move(scenario)),
      field_(std::move(field)) {}

double ParseValue(std::string_view text) {
  std::string_view s = Trim(text);
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1.0;
    s = Trim(s.substr(1));
  }
  const std::size_t pi = s.find("pi");
  std::optional<double> value;
  if (pi == std::string_view::npos) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    value = ParseNumber(s);
  } else {
    std::string_view coefficient = Trim(s.substr(0, pi));
    if (!coefficient.empty() && coefficient.back() == '*') {
      coefficient = Trim(coefficient.substr(0, coefficient.size() - 1));
    }
    std::string_view rest = Trim(s.substr(pi + 2));
    const std::optional<double> scale =
        coefficient.empty() ? std::optional<double>(1.0) : ParseNumber(coefficient);
    std::optional<double> divisor = 1.0;
    if (!rest.empty()) {
      divisor = rest.front() == '/' ? ParseNumber(rest.substr(1)) : std::nullopt;
    }
    if (scale && divisor && *divisor != 0.0) value = *scale * kPi / *divisor;
  }
  if (!value || !std::isfinite(*value)) {
    throw std::invalid_argument("malformed value '" + std::string(text) + "'");
  }
  return sign * *value;
}

void ValidateScenario(const Scenario& s) {
  const auto positive = [&](double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw ValidationError(s.name, field,
                            "must be positive, got " + FormatDouble(value));
    }
  };
  positive(s.v, "v");
  positive(s.omega, "omega");
  positive(s.rho, "rho");
  for (const auto& [value, field] :
       {std::pair{s.x0, "x0"}, std::pair{s.y0, "y0"}, std::pair{s.theta0, "theta0"}}) {
    if (!std::isfinite(value)) throw ValidationError(s.name, field, "must be finite");
  }
  if (!(s.x0 * s.x0 + s.y0 * s.y0 < s.rho * s.rho)) {
    throw ValidationError(s.name, "x0,y0",
                          "start must lie strictly inside the region");
  }
}

std::vector<Scenario> ParseScenarioText(std::string_view text) {
  std::vector<Scenario> scenarios;
  std::set<std::string, std::less<>> names;
  std::optional<PendingScenario> pending;

  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const std::size_t newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{}
                                             : text.substr(newline + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      constexpr std::string_view kHeader = "[scenario";
      if (line.back() != ']' || !line.starts_with(kHeader) ||
          line.size() <= kHeader.size() ||
          !std::isspace(static_cast<unsigned char>(line[kHeader.size()]))) {
        throw ParseError(line_number, "expected '[scenario <name>]'");
      }
      const std::string_view name =
          Trim(line.substr(kHeader.size(), line.size() - kHeader.size() - 1));
      if (!ValidName(name)) {
        throw ParseError(line_number, "invalid scenario name '" +
                                          std::string(name) + "'");
      }
      if (pending) FinishScenario(*pending, scenarios, names);
      pending.emplace();
      pending->scenario.name = std::string(name);
      pending->header_line = line_number;
      continue;
    }

    if (!pending) {
      throw ParseError(line_number, "assignment outside a [scenario] block");
    }
    while (!line.empty()) {
      const std::size_t comma = line.find(',');
      const std::string_view assignment = Trim(line.substr(0, comma));
      line = comma == std::string_view::npos ? std::string_view{}
                                             : line.substr(comma + 1);
      const std::size_t eq = assignment.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(line_number, "expected 'key = value'");
      }
      const std::string_view key = Trim(assignment.substr(0, eq));
      double* field = Field(pending->scenario, key);
      if (field == nullptr) {
        throw ParseError(line_number, "unknown key '" + std::string(key) + "'");
      }
      if (!pending->seen.insert(std::string(key)).second) {
        throw ParseError(line_number, "duplicate key '" + std::string(key) + "'");
      }
      try {
        *field = ParseValue(assignment.substr(eq + 1));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_number, e.what());
      }
    }
  }
  if (pending) FinishScenario(*pending, scenarios, names);
  return scenarios;
}

std::string FormatScenarios(const std::vector<Scenario>& scenarios) {
  std::string out;
  for (const Scenario& s : scenarios) {
    out += "[scenario " + s.name + "]\n";
    out += "v = " + FormatDouble(s.v) + "\n";
    out += "omega = " + FormatDouble(s.omega) + "\n";
    out += "rho = " + FormatDouble(s.rho) + "\n";
    out += "x0 = " + FormatDouble(s.x0) + ", y0 = " + FormatDouble(s.y0) +
           ", theta0 = " + FormatDouble(s.theta0) + "\n\n";
  }
  return out;
}

std::vector<Scenario> BundledCorpus() {
  struct Start {
    const char* group;
    double x0;
    double y0;
  };
  // y_axis_near and y_axis_far are two readings of the same third start.
  constexpr std::array<Start, 4> kStarts = {{{"diag", 0.25, 0.25},
                                             {"x_axis", 0.25, 0.0},
                                             {"y_axis_near", 0.0, 0.25},
                                             {"y_axis_far", 0.0, 0.5}}};
  const std::array<std::pair<const char*, double>, 4> kRates = {
      {{"omega_pi_over_100", kPi / 100.0},
       {"omega_pi_over_6", kPi / 6.0},
       {"omega_pi", kPi},
       {"omega_100pi", 100.0 * kPi}}};
  std::vector<Scenario> corpus;
  for (const Start& start : kStarts) {
    for (const auto& [suffix, omega] : kRates) {
      corpus.push_back({std::string(start.group) + "." + suffix, 1.0, omega, 1.0,
                        start.x0, start.y0, kPi});
    }
  }
  return corpus;
}

}  // namespace dubins_escape

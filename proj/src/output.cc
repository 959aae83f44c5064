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

#include "dubins_escape/output.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dubins_escape {
namespace {

constexpr std::size_t kMaxSvgPoints = 2000;
constexpr std::array<const char*, 6> kColors = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string Coord(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

std::string EscapeXml(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string FormatDecimal(double value, int significant) {
  if (value == 0.0 || !std::isfinite(value)) {
    return value == 0.0 ? "0" : (std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf"));
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  const int decimals = std::max(0, significant - 1 - exponent);
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  std::string text = buffer;
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (text == "-0") text = "0";
  return text;
}

void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory,
                        const CostateProfile& costate, const RobotParams& params) {
  const auto& samples = trajectory.samples;
  if (samples.empty()) throw std::invalid_argument("empty trajectory");
  if (costate.lambda_theta.size() != samples.size()) {
    throw std::invalid_argument("costate profile does not match trajectory");
  }
  out << kTrajectoryCsvHeader << '\n';
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const TrajectorySample& s = samples[i];
    const double lambda = costate.lambda_theta[i];
    const double h = ReducedHamiltonian(s.pose.heading, costate.terminal_azimuth,
                                        costate.beta, lambda, s.control, params);
    out << FormatDecimal(s.time) << ',' << FormatDecimal(s.pose.x) << ','
        << FormatDecimal(s.pose.y) << ',' << FormatDecimal(s.pose.heading) << ','
        << FormatDecimal(s.control) << ',' << FormatDecimal(s.range) << ','
        << FormatDecimal(s.azimuth) << ',' << FormatDecimal(lambda) << ','
        << FormatDecimal(h) << '\n';
  }
}

SvgTrace MakeSvgTrace(std::string label, const Trajectory& trajectory) {
  SvgTrace trace;
  trace.label = std::move(label);
  const auto& samples = trajectory.samples;
  const std::size_t stride = std::max<std::size_t>(1, samples.size() / kMaxSvgPoints);
  for (std::size_t i = 0; i < samples.size(); i += stride) {
    trace.points.push_back(samples[i].pose.position());
  }
  if (!samples.empty() && (samples.size() - 1) % stride != 0) {
    trace.points.push_back(samples.back().pose.position());
  }
  for (const TrajectoryEvent& event : trajectory.events) {
    const auto it = std::find_if(samples.begin(), samples.end(), [&](const auto& s) {
      return s.time == event.time;
    });
    if (it == samples.end()) continue;
    (event.kind == EventKind::kSwitchToSingular ? trace.switch_points
                                                : trace.exit_points)
        .push_back(it->pose.position());
  }
  return trace;
}

std::string RenderSvg(const std::string& title, double region_radius,
                      const std::vector<SvgTrace>& traces) {
  const double extent = 1.15 * region_radius;
  const double marker = 0.015 * region_radius;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
      << "viewBox=\"" << Coord(-extent) << ' ' << Coord(-extent) << ' '
      << Coord(2 * extent) << ' ' << Coord(2 * extent)
      << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  svg << "<title>" << EscapeXml(title) << "</title>\n";
  // World y points up.
  svg << "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  svg << "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"" << Coord(region_radius)
      << "\" stroke=\"#000000\" stroke-width=\"1.5\" "
         "vector-effect=\"non-scaling-stroke\"/>\n";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const SvgTrace& trace = traces[i];
    const char* color = kColors[i % kColors.size()];
    svg << "<polyline class=\"path\" data-label=\"" << EscapeXml(trace.label)
        << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
      if (k > 0) svg << ' ';
      svg << Coord(trace.points[k].x) << ',' << Coord(trace.points[k].y);
    }
    svg << "\"/>\n";
    for (const Vec2 p : trace.switch_points) {
      svg << "<circle class=\"switch\" cx=\"" << Coord(p.x) << "\" cy=\""
          << Coord(p.y) << "\" r=\"" << Coord(marker) << "\" stroke=\"" << color
          << "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    for (const Vec2 p : trace.exit_points) {
      svg << "<circle class=\"exit\" cx=\"" << Coord(p.x) << "\" cy=\"" << Coord(p.y)
          << "\" r=\"" << Coord(marker) << "\" fill=\"" << color << "\"/>\n";
    }
  }
  svg << "</g>\n";
  const double font = 0.04 * region_radius;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    svg << "<text x=\"" << Coord(-extent + 0.5 * font) << "\" y=\""
        << Coord(-extent + (1.5 + 1.2 * static_cast<double>(i)) * font)
        << "\" font-size=\"" << Coord(font) << "\" fill=\""
        << kColors[i % kColors.size()] << "\">" << EscapeXml(traces[i].label)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dubins_escape

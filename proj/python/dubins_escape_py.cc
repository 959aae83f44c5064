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

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <variant>

#include "dubins_escape/batch.h"
#include "dubins_escape/core.h"
#include "dubins_escape/feedback.h"
#include "dubins_escape/oracle.h"
#include "dubins_escape/output.h"
#include "dubins_escape/planner.h"
#include "dubins_escape/scenario.h"
#include "dubins_escape/simulator.h"

namespace py = pybind11;
namespace de = dubins_escape;

namespace {

py::dict SegmentToDict(const de::PathSegment& segment) {
  py::dict d;
  if (const auto* arc = std::get_if<de::ArcSegment>(&segment)) {
    d["kind"] = "arc";
    d["center"] = py::make_tuple(arc->center.x, arc->center.y);
    d["radius"] = arc->radius;
    d["start_angle"] = arc->start_angle;
    d["sweep"] = arc->sweep;
    d["length"] = arc->length();
  } else {
    const auto& line = std::get<de::LineSegment>(segment);
    d["kind"] = "line";
    d["start"] = py::make_tuple(line.start.x, line.start.y);
    d["end"] = py::make_tuple(line.end.x, line.end.y);
    d["length"] = line.length();
  }
  return d;
}

// Column-oriented copy of the samples, one numpy array per field.
py::dict SampleArrays(const de::Trajectory& traj) {
  const auto n = static_cast<py::ssize_t>(traj.samples.size());
  py::array_t<double> t(n), x(n), y(n), theta(n), u(n), r(n), phi(n);
  auto tv = t.mutable_unchecked<1>();
  auto xv = x.mutable_unchecked<1>();
  auto yv = y.mutable_unchecked<1>();
  auto thv = theta.mutable_unchecked<1>();
  auto uv = u.mutable_unchecked<1>();
  auto rv = r.mutable_unchecked<1>();
  auto pv = phi.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& s = traj.samples[static_cast<std::size_t>(i)];
    tv(i) = s.time;
    xv(i) = s.pose.x;
    yv(i) = s.pose.y;
    thv(i) = s.pose.heading;
    uv(i) = s.control;
    rv(i) = s.range;
    pv(i) = s.azimuth;
  }
  py::dict d;
  d["t"] = t;
  d["x"] = x;
  d["y"] = y;
  d["theta"] = theta;
  d["u"] = u;
  d["r"] = r;
  d["phi"] = phi;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dubins_escape, m) {
  m.doc() = "Time-optimal exit of a Dubins car from a disc";

  py::register_exception<de::DivergenceError>(m, "DivergenceError", PyExc_RuntimeError);
  py::register_exception<de::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<de::ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<de::RobotParams>(m, "RobotParams")
      .def(py::init<double, double>(), py::arg("speed"), py::arg("max_turn_rate"))
      .def_property_readonly("speed", &de::RobotParams::speed)
      .def_property_readonly("max_turn_rate", &de::RobotParams::max_turn_rate)
      .def_property_readonly("turn_radius", &de::RobotParams::turn_radius);

  py::class_<de::EscapeRegion>(m, "EscapeRegion")
      .def(py::init<double>(), py::arg("radius"))
      .def_property_readonly("radius", &de::EscapeRegion::radius);

  py::class_<de::Pose>(m, "Pose")
      .def(py::init(&de::Pose::Make), py::arg("x"), py::arg("y"), py::arg("heading"))
      .def_readonly("x", &de::Pose::x)
      .def_readonly("y", &de::Pose::y)
      .def_readonly("heading", &de::Pose::heading)
      .def("__repr__", [](const de::Pose& p) {
        std::ostringstream s;
        s << "Pose(" << p.x << ", " << p.y << ", " << p.heading << ")";
        return s.str();
      });

  m.def("wrap_angle", &de::WrapAngle, py::arg("angle"));
  m.def(
      "to_polar",
      [](const de::Pose& p) {
        const de::PolarPose polar = de::ToPolar(p);
        return py::make_tuple(polar.range, polar.azimuth, polar.azimuth_defined);
      },
      py::arg("pose"), "Returns (range, azimuth, azimuth_defined).");
  m.def(
      "optimal_control", [](const de::Pose& p) { return de::OptimalControl(p).value(); },
      py::arg("pose"));

  py::class_<de::EscapePath>(m, "EscapePath")
      .def_readonly("total_length", &de::EscapePath::total_length)
      .def_readonly("total_time", &de::EscapePath::total_time)
      .def_readonly("final_heading", &de::EscapePath::final_heading)
      .def_property_readonly("classification",
                             [](const de::EscapePath& p) {
                               return std::string(de::ToString(p.classification()));
                             })
      .def_property_readonly("end_point",
                             [](const de::EscapePath& p) {
                               const de::Vec2 e = p.end_point();
                               return py::make_tuple(e.x, e.y);
                             })
      .def_property_readonly("segments", [](const de::EscapePath& p) {
        py::list out;
        for (const auto& s : p.segments) out.append(SegmentToDict(s));
        return out;
      });

  m.def("plan_escape", &de::PlanEscape, py::arg("start"), py::arg("params"), py::arg("region"));
  m.def(
      "exit_point_objective",
      [](double x, double y, const de::Pose& start, const de::RobotParams& params,
         const de::EscapeRegion& region) {
        return de::ExitPointObjective({x, y}, start, params, region);
      },
      py::arg("x"), py::arg("y"), py::arg("start"), py::arg("params"), py::arg("region"));

  py::class_<de::Trajectory>(m, "Trajectory")
      .def_readonly("exit_time", &de::Trajectory::exit_time)
      .def_readonly("exit_pose", &de::Trajectory::exit_pose)
      .def_property_readonly("has_switch", &de::Trajectory::has_switch)
      .def_property_readonly("switch_time",
                             [](const de::Trajectory& t) -> py::object {
                               if (!t.has_switch()) return py::none();
                               return py::float_(t.events.front().time);
                             })
      .def("__len__", [](const de::Trajectory& t) { return t.samples.size(); })
      .def("arrays", &SampleArrays);

  m.def(
      "simulate",
      [](const de::Pose& start, const de::RobotParams& params, const de::EscapeRegion& region) {
        py::gil_scoped_release release;
        return de::Simulate(start, params, region);
      },
      py::arg("start"), py::arg("params"), py::arg("region"));

  py::class_<de::PmpReport>(m, "PmpReport")
      .def_readonly("max_abs_hamiltonian", &de::PmpReport::max_abs_hamiltonian)
      .def_readonly("sign_match_fraction", &de::PmpReport::sign_match_fraction)
      .def_readonly("sign_checked_samples", &de::PmpReport::sign_checked_samples)
      .def_readonly("terminal_radial_rate", &de::PmpReport::terminal_radial_rate)
      .def_readonly("beta", &de::PmpReport::beta)
      .def_readonly("terminal_lambda_theta", &de::PmpReport::terminal_lambda_theta);

  m.def(
      "check_pmp",
      [](const de::Trajectory& t, const de::RobotParams& params, const de::EscapeRegion& region) {
        return de::CheckPmp(t, params, region);
      },
      py::arg("trajectory"), py::arg("params"), py::arg("region"));
  m.def(
      "lambda_theta",
      [](const de::Trajectory& t, const de::RobotParams& params, const de::EscapeRegion& region) {
        const auto profile = de::ReconstructCostate(t, params, region);
        py::array_t<double> out(static_cast<py::ssize_t>(profile.lambda_theta.size()));
        std::copy(profile.lambda_theta.begin(), profile.lambda_theta.end(),
                  out.mutable_data());
        return out;
      },
      py::arg("trajectory"), py::arg("params"), py::arg("region"));

  py::class_<de::DominanceReport>(m, "DominanceReport")
      .def_readonly("best_candidate_time", &de::DominanceReport::best_candidate_time)
      .def_readonly("best_candidate_tag", &de::DominanceReport::best_candidate_tag)
      .def_readonly("optimal_time", &de::DominanceReport::optimal_time)
      .def_readonly("margin", &de::DominanceReport::margin)
      .def_readonly("n_candidates", &de::DominanceReport::n_candidates)
      .def_readonly("n_escaped", &de::DominanceReport::n_escaped)
      .def_readonly("n_violations", &de::DominanceReport::n_violations)
      .def_readonly("best_switch_time", &de::DominanceReport::best_switch_time);

  m.def(
      "bang_switch_sweep",
      [](const de::Pose& start, const de::RobotParams& params, const de::EscapeRegion& region,
         std::size_t grid_n, double tolerance) {
        py::gil_scoped_release release;
        return de::BangSwitchSweep(start, params, region, grid_n, tolerance);
      },
      py::arg("start"), py::arg("params"), py::arg("region"), py::arg("grid_n") = 10000,
      py::arg("tolerance") = de::kSweepTolerance);
  m.def(
      "random_control_dominance",
      [](const de::Pose& start, const de::RobotParams& params, const de::EscapeRegion& region,
         std::size_t n_samples, std::uint64_t seed, double tolerance) {
        py::gil_scoped_release release;
        return de::RandomControlDominance(start, params, region, n_samples, seed, tolerance);
      },
      py::arg("start"), py::arg("params"), py::arg("region"), py::arg("n_samples") = 10000,
      py::arg("seed") = 1, py::arg("tolerance") = de::kRandomTolerance);

  py::class_<de::Scenario>(m, "Scenario")
      .def(py::init([](std::string name, double v, double omega, double rho, double x0,
                       double y0, double theta0) {
             return de::Scenario{std::move(name), v, omega, rho, x0, y0, theta0};
           }),
           py::arg("name"), py::arg("v"), py::arg("omega"), py::arg("rho"), py::arg("x0"),
           py::arg("y0"), py::arg("theta0"))
      .def_readonly("name", &de::Scenario::name)
      .def_readonly("v", &de::Scenario::v)
      .def_readonly("omega", &de::Scenario::omega)
      .def_readonly("rho", &de::Scenario::rho)
      .def_readonly("x0", &de::Scenario::x0)
      .def_readonly("y0", &de::Scenario::y0)
      .def_readonly("theta0", &de::Scenario::theta0)
      .def_property_readonly("group", &de::Scenario::group)
      .def(py::self == py::self);

  m.def("parse_scenarios", [](const std::string& text) { return de::ParseScenarioText(text); },
        py::arg("text"));
  m.def("format_scenarios", &de::FormatScenarios, py::arg("scenarios"));
  m.def("bundled_corpus", &de::BundledCorpus);

  py::class_<de::RunReport>(m, "RunReport")
      .def_readonly("name", &de::RunReport::name)
      .def_readonly("plan_time", &de::RunReport::plan_time)
      .def_readonly("sim_time", &de::RunReport::sim_time)
      .def_readonly("delta", &de::RunReport::delta)
      .def_readonly("pmp", &de::RunReport::pmp)
      .def_readonly("failures", &de::RunReport::failures)
      .def_property_readonly("classification",
                             [](const de::RunReport& r) {
                               return std::string(de::ToString(r.classification));
                             })
      .def_property_readonly("ok", &de::RunReport::ok);

  m.def(
      "run_scenario",
      [](const de::Scenario& scenario, const std::string& oracle, std::uint64_t seed,
         double tolerance) {
        de::RunOptions options;
        options.oracle = de::ParseOracleMode(oracle);
        options.seed = seed;
        options.tolerance = tolerance;
        py::gil_scoped_release release;
        return de::RunScenario(scenario, options).report;
      },
      py::arg("scenario"), py::arg("oracle") = "none", py::arg("seed") = 1,
      py::arg("tolerance") = 1e-6);
}

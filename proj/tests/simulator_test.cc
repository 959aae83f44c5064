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

#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "reference_integrator.h"

namespace dubins_escape {
namespace {

using ::dubins_escape::testing::ReferenceEscape;

TEST(StepExact, Examples) {
  const RobotParams unit(1.0, 1.0);
  Pose p = StepExact(Pose{0, 0, 0}, Control(0.0), 1.0, unit);
  EXPECT_DOUBLE_EQ(p.x, 1.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  EXPECT_DOUBLE_EQ(p.heading, 0.0);

  const RobotParams params(1.0, 2.0);
  p = StepExact(Pose{0, 0, 0}, Control(1.0), kPi / 2.0, params);
  EXPECT_NEAR(p.x, 0.0, 1e-15);
  EXPECT_NEAR(p.y, -2.0 * params.turn_radius(), 1e-15);
  EXPECT_NEAR(std::abs(p.heading), kPi, 1e-15);

  const Pose start{0.3, -0.2, 1.1};
  p = StepExact(start, Control(-1.0), kTwoPi / 2.0, params);
  EXPECT_NEAR(p.x, start.x, 1e-12);
  EXPECT_NEAR(p.y, start.y, 1e-12);
  EXPECT_NEAR(p.heading, start.heading, 1e-12);
  EXPECT_THROW(StepExact(start, Control(0.0), -1.0, params), std::invalid_argument);
}

// Compare against RK4 with a fine step on random constant controls.
TEST(StepExact, MatchesNumericalIntegration) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const RobotParams params(1.0 + unit(rng) * 0.5, 3.0 + 2.0 * unit(rng));
    const Pose start{unit(rng), unit(rng), kPi * unit(rng)};
    const double u = unit(rng);
    const double duration = 1.5 + unit(rng);
    const int n = 4000;
    const double h = duration / n;
    double x = start.x, y = start.y, th = start.heading;
    const double v = params.speed(), rate = -params.max_turn_rate() * u;
    for (int k = 0; k < n; ++k) {
      const double a1 = th, a2 = th + 0.5 * h * rate, a4 = th + h * rate;
      x += h / 6.0 * v * (std::cos(a1) + 4.0 * std::cos(a2) + std::cos(a4));
      y += h / 6.0 * v * (std::sin(a1) + 4.0 * std::sin(a2) + std::sin(a4));
      th += h * rate;
    }
    const Pose exact = StepExact(start, Control(u), duration, params);
    ASSERT_NEAR(exact.x, x, 1e-10);
    ASSERT_NEAR(exact.y, y, 1e-10);
    ASSERT_NEAR(std::abs(std::remainder(exact.heading - th, kTwoPi)), 0.0, 1e-10);
  }
}

TEST(Simulate, AlignedStartIsStraight) {
  const RobotParams params(1.0, 1.0);
  const Trajectory traj = Simulate(Pose{0.5, 0, 0}, params, EscapeRegion(1.0));
  EXPECT_NEAR(traj.exit_time, 0.5, 1e-9);
  ASSERT_EQ(traj.events.size(), 1u);
  EXPECT_EQ(traj.events[0].kind, EventKind::kBoundaryExit);
  for (const auto& s : traj.samples) {
    ASSERT_EQ(s.control, 0.0);
    ASSERT_NEAR(s.pose.y, 0.0, 1e-15);
  }
}

// Expected 0.722734247813 s: the turning circle about (1.5, 0) meets the unit
// circle at (0.75, 0.661437827766) after a clockwise sweep of
// pi - atan2(0.661437827766, -0.75) rad.
TEST(Simulate, PureArcExample) {
  const RobotParams params(1.0, 1.0);
  const Trajectory traj = Simulate(Pose{0.5, 0, kPi / 2}, params, EscapeRegion(1.0));
  EXPECT_NEAR(traj.exit_time, 0.722734247813, 1e-9);
  EXPECT_FALSE(traj.has_switch());
  EXPECT_NEAR(traj.exit_pose.x, 0.75, 1e-9);
  EXPECT_NEAR(traj.exit_pose.y, std::sqrt(1.0 - 0.75 * 0.75), 1e-9);
  const auto ref = ReferenceEscape(0.5, 0, kPi / 2, 1.0, 1.0, 1.0, 1e-5);
  EXPECT_NEAR(traj.exit_time, ref.exit_time, 1e-7);
}

TEST(Simulate, DiagonalStartTurnsThenFollowsRadialLine) {
  const RobotParams params(1.0, kPi);
  const EscapeRegion region(1.0);
  const Trajectory traj = Simulate(Pose{0.25, 0.25, kPi}, params, region);
  ASSERT_EQ(traj.events.size(), 2u);
  EXPECT_EQ(traj.events[0].kind, EventKind::kSwitchToSingular);
  EXPECT_EQ(traj.events[1].kind, EventKind::kBoundaryExit);
  EXPECT_EQ(traj.samples.front().control, 1.0);
  EXPECT_EQ(traj.samples.back().control, 0.0);
  EXPECT_NEAR(WrapAngle(traj.exit_pose.heading - std::atan2(traj.exit_pose.y, traj.exit_pose.x)),
              0.0, 1e-12);
}

// Exit times from the reference RK4 integrator (step 2e-6 s, 2e-7 s for
// omega = 100 pi), frozen here.
struct FrozenCase {
  double omega, x0, y0, expected;
};

class SimulateFrozen : public ::testing::TestWithParam<FrozenCase> {};

TEST_P(SimulateFrozen, MatchesReferenceIntegration) {
  const FrozenCase c = GetParam();
  const Trajectory traj =
      Simulate(Pose{c.x0, c.y0, kPi}, RobotParams(1.0, c.omega), EscapeRegion(1.0));
  EXPECT_NEAR(traj.exit_time, c.expected, 1e-5);
}

INSTANTIATE_TEST_SUITE_P(
    StartsAndRates, SimulateFrozen,
    ::testing::Values(FrozenCase{kPi / 100, 0.25, 0.25, 1.2122837633872376},
                      FrozenCase{kPi / 100, 0.25, 0.0, 1.24998971954645},
                      FrozenCase{kPi / 100, 0.0, 0.25, 0.9645026930314975},
                      FrozenCase{kPi / 100, 0.0, 0.5, 0.8593288479890439},
                      FrozenCase{kPi / 6, 0.25, 0.25, 1.1326036823418646},
                      FrozenCase{kPi / 6, 0.25, 0.0, 1.2471732169554515},
                      FrozenCase{kPi / 6, 0.0, 0.25, 0.9193368551823404},
                      FrozenCase{kPi / 6, 0.0, 0.5, 0.776299509456322},
                      FrozenCase{kPi, 0.25, 0.25, 0.927503873791108},
                      FrozenCase{kPi, 0.25, 0.0, 1.1738447331793642},
                      FrozenCase{kPi, 0.0, 0.25, 0.8399605810365673},
                      FrozenCase{kPi, 0.0, 0.5, 0.6189626447646664},
                      FrozenCase{100 * kPi, 0.25, 0.25, 0.6516543256076563},
                      FrozenCase{100 * kPi, 0.25, 0.0, 0.7599189473536617},
                      FrozenCase{100 * kPi, 0.0, 0.25, 0.7517968913400532},
                      FrozenCase{100 * kPi, 0.0, 0.5, 0.5018068331423106}));

class SimulateProperties : public ::testing::TestWithParam<double> {};

TEST_P(SimulateProperties, ExitSpeedTaxonomyAndAlignment) {
  const double omega = GetParam();
  const RobotParams params(1.0, omega);
  const EscapeRegion region(1.0);
  const SimOptions opts = DefaultSimOptions(params, region);
  std::mt19937_64 rng(static_cast<std::uint64_t>(omega * 977));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double r = std::sqrt(unit(rng));
    const double phi = kTwoPi * unit(rng);
    const Pose start =
        Pose::Make(0.999 * r * std::cos(phi), 0.999 * r * std::sin(phi), kTwoPi * unit(rng));
    const Trajectory traj = Simulate(start, params, region, opts);

    // Exit validity.
    const PolarPose exit = ToPolar(traj.exit_pose);
    ASSERT_LE(std::abs(exit.range - region.radius()), opts.event_tolerance * params.speed());
    ASSERT_GE(exit.range, region.radius());
    ASSERT_GE(RadialRate(traj.exit_pose, params), -opts.event_tolerance);

    // Event taxonomy: {exit} or {switch, exit}.
    ASSERT_GE(traj.events.size(), 1u);
    ASSERT_LE(traj.events.size(), 2u);
    ASSERT_EQ(traj.events.back().kind, EventKind::kBoundaryExit);
    if (traj.events.size() == 2) {
      ASSERT_EQ(traj.events.front().kind, EventKind::kSwitchToSingular);
    }

    double previous_misalignment = kPi + 1e-9;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
      const auto& s = traj.samples[k];
      if (k > 0) {
        const auto& prev = traj.samples[k - 1];
        const double dt = s.time - prev.time;
        ASSERT_GT(dt, 0.0);
        const double moved = Norm(s.pose.position() - prev.pose.position());
        ASSERT_LE(moved, params.speed() * dt + 1e-12);
        if (prev.control == 0.0) ASSERT_NEAR(moved, params.speed() * dt, 1e-12);
      }
      const double misalignment = std::abs(WrapAngle(s.pose.heading - s.azimuth));
      ASSERT_LE(misalignment, previous_misalignment + 1e-9) << k;
      previous_misalignment = misalignment;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(TurnRates, SimulateProperties,
                         ::testing::Values(0.01, 0.5, kPi, 30.0, 1000.0));

TEST(Simulate, RefinementConvergence) {
  const RobotParams params(1.0, kPi);
  const EscapeRegion region(1.0);
  SimOptions opts = DefaultSimOptions(params, region);
  for (const Pose start : {Pose{0.25, 0.25, kPi}, Pose{0.5, 0, kPi / 2}, Pose{-0.3, 0.6, 0.4}}) {
    const double coarse = Simulate(start, params, region, opts).exit_time;
    SimOptions fine = opts;
    fine.dt_max *= 0.5;
    const double refined = Simulate(start, params, region, fine).exit_time;
    EXPECT_LT(std::abs(coarse - refined), 10 * opts.event_tolerance);
  }
}

TEST(Simulate, Errors) {
  const RobotParams params(1.0, 1.0);
  const EscapeRegion region(1.0);
  EXPECT_THROW(Simulate(Pose{1.0, 0, 0}, params, region), std::invalid_argument);
  EXPECT_THROW(Simulate(Pose{2.0, 0, 0}, params, region), std::invalid_argument);
  SimOptions opts = DefaultSimOptions(params, region);
  opts.max_time = 0.1;
  EXPECT_THROW(Simulate(Pose{0, 0, 0}, params, region, opts), DivergenceError);
  opts.dt_max = 0.0;
  EXPECT_THROW(Simulate(Pose{0, 0, 0}, params, region, opts), std::invalid_argument);
}

TEST(Simulate, StartAtOriginGoesStraight) {
  const Trajectory traj = Simulate(Pose{0, 0, 1.0}, RobotParams(1.0, 2.0), EscapeRegion(2.0));
  EXPECT_NEAR(traj.exit_time, 2.0, 1e-9);
  EXPECT_NEAR(traj.exit_pose.heading, 1.0, 1e-15);
}

}  // namespace
}  // namespace dubins_escape

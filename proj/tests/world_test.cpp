// Copyright 2026 The bladenav Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bladenav/world.hpp"
#include "test_support.hpp"

namespace bladenav
{
namespace
{

using testing::Gen;

Blade slider_s5()
{
  Blade b;
  b.kind = BladeKind::kSlider;
  b.anchor = {5, 0};
  b.axis = {0, 1};
  b.length = 3;
  b.omega = 1;
  b.phase = 0;
  b.half_width = 0.25;
  return b;
}

Blade pendulum()
{
  Blade b;
  b.kind = BladeKind::kPendulum;
  b.anchor = {0, 4};
  b.axis = {0, -1};
  b.length = 3;
  b.amplitude = 0.8;
  b.omega = 0.5;
  b.phase = 0;
  b.half_width = 0.3;
  return b;
}

double deflection(const Blade & b, double t)
{
  const BladePose p = blade_pose(b, t);
  const Vec2 r = p.reference - b.anchor;
  return std::atan2(cross(b.axis, r), dot(b.axis, r));
}

TEST(BladePose, PendulumAtRestAlongAxis)
{
  const Blade b = pendulum();
  const BladePose p = blade_pose(b, 0.0);
  EXPECT_NEAR(p.reference.x, 0.0, 1e-12);
  EXPECT_NEAR(p.reference.y, 1.0, 1e-12);
  EXPECT_NEAR(deflection(b, 0.0), 0.0, 1e-12);
  EXPECT_EQ(p.seg_a, b.anchor);
}

TEST(BladePose, PendulumQuarterPeriodAtAmplitude)
{
  const Blade b = pendulum();
  EXPECT_NEAR(deflection(b, std::numbers::pi / (2 * b.omega)), b.amplitude, 1e-12);
}

TEST(BladePose, SliderQuarterPeriod)
{
  const Blade b = slider_s5();
  const double t = std::numbers::pi / 2;
  const BladePose p = blade_pose(b, t);
  EXPECT_NEAR(p.reference.x, 5.0, 1e-12);
  EXPECT_NEAR(p.reference.y, 3.0, 1e-12);
  EXPECT_NEAR(p.edge_velocity.x, 0.0, 1e-12);
  EXPECT_NEAR(p.edge_velocity.y, 0.0, 1e-12);
  // Central finite difference confirms the analytic zero.
  const double h = 1e-6;
  const Vec2 fd = (blade_pose(b, t + h).reference - blade_pose(b, t - h).reference) / (2 * h);
  EXPECT_NEAR(fd.norm(), 0.0, 1e-6);
  // At the turnaround the leading edge faces the returning motion.
  EXPECT_LT(p.e_edge.y, p.f_edge.y);
}

TEST(BladePose, SliderBodyIsPerpendicularToTravel)
{
  const Blade b = slider_s5();
  const BladePose p = blade_pose(b, 0.3);
  EXPECT_NEAR(dot(p.seg_b - p.seg_a, b.axis), 0.0, 1e-12);
  EXPECT_NEAR(distance(p.seg_a, p.seg_b), 2 * b.half_width, 1e-12);
}

TEST(BladePose, PropertyEdgesAndBounds)
{
  Gen gen(21);
  for (int i = 0; i < 2000; ++i) {
    const Blade b = gen.blade();
    const double t = gen.uniform(0.0, 100.0);
    const BladePose p = blade_pose(b, t);
    ASSERT_NEAR(distance(p.e_edge, p.f_edge), 2 * b.half_width, 1e-9);
    if (b.kind == BladeKind::kPendulum) {
      ASSERT_LE(std::abs(deflection(b, t)), b.amplitude + 1e-12);
      ASSERT_NEAR(distance(p.reference, b.anchor), b.length, 1e-9);
    } else {
      ASSERT_LE(distance(p.reference, b.anchor), b.length + 1e-12);
    }
    if (p.edge_velocity.norm() > 1e-6) {
      // E leads along the motion.
      ASSERT_GT(dot(p.e_edge - p.f_edge, p.edge_velocity), 0.0);
    }
  }
}

TEST(BladePose, PropertyEdgeVelocityMatchesFiniteDifference)
{
  Gen gen(22);
  const double h = 1e-6;
  for (int i = 0; i < 1000; ++i) {
    const Blade b = gen.blade();
    const double t = gen.uniform(h, 100.0);
    const Vec2 v = blade_pose(b, t).edge_velocity;
    const Vec2 fd = (blade_pose(b, t + h).reference - blade_pose(b, t - h).reference) / (2 * h);
    // Relative to the blade's peak edge speed so turnarounds do not divide by ~0.
    ASSERT_LE((v - fd).norm(), 1e-4 * std::max(v.norm(), max_edge_speed(b))) << i;
  }
}

TEST(BladeValidate, RejectsBadFields)
{
  Blade b = pendulum();
  EXPECT_NO_THROW(validate(b));
  b.amplitude = 0.0;
  EXPECT_THROW(validate(b), std::invalid_argument);
  b = pendulum();
  b.amplitude = 4.0;
  EXPECT_THROW(validate(b), std::invalid_argument);
  b = slider_s5();
  b.omega = 0;
  EXPECT_THROW(validate(b), std::invalid_argument);
  b = slider_s5();
  b.length = -1;
  EXPECT_THROW(validate(b), std::invalid_argument);
  b = slider_s5();
  b.half_width = -0.1;
  EXPECT_THROW(validate(b), std::invalid_argument);
  b = slider_s5();
  b.axis = {0, 2};
  EXPECT_THROW(validate(b), std::invalid_argument);
}

TEST(BladeClearance, Examples)
{
  const Blade b = slider_s5();
  const double r = 0.2;
  const Segment c = blade_centerline(b, 0.0);
  const Vec2 mid = 0.5 * (c.a + c.b);
  EXPECT_NEAR(blade_clearance(mid, r, b, 0.0), -(b.half_width + r), 1e-12);
  const Vec2 away = mid + (b.half_width + r + 1.0) * b.axis;
  EXPECT_NEAR(blade_clearance(away, r, b, 0.0), 1.0, 1e-9);
}

TEST(BladeClearance, EmptyWorldIsInfinite)
{
  EXPECT_TRUE(std::isinf(min_clearance({0, 0}, 0.2, {}, 0.0)));
}

// Oracle: the body is the set of points within half_width of the centerline,
// i.e. a rectangle with rounded ends. Sample it on a polar-offset grid and
// test whether any sample falls inside the drone disc.
bool dense_overlap(const Vec2 & p, double r, const Segment & c, double hw)
{
  constexpr int kAlong = 200;
  constexpr int kRadial = 20;
  constexpr int kAngular = 72;
  for (int i = 0; i <= kAlong; ++i) {
    const Vec2 q = c.a + (static_cast<double>(i) / kAlong) * (c.b - c.a);
    for (int j = 0; j <= kRadial; ++j) {
      const double rho = hw * j / kRadial;
      for (int k = 0; k < kAngular; ++k) {
        const double a = 2 * std::numbers::pi * k / kAngular;
        if (distance(p, q + rho * Vec2{std::cos(a), std::sin(a)}) < r) {
          return true;
        }
      }
    }
  }
  return false;
}

TEST(BladeClearance, PropertyAgreesWithDenseOverlapOracle)
{
  Gen gen(23);
  int collisions = 0;
  int checked = 0;
  while (checked < 1000) {
    Blade b = gen.blade();
    b.length = gen.uniform(0.5, 2.0);
    b.half_width = gen.uniform(0.1, 0.5);
    const double t = gen.uniform(0.0, 20.0);
    const double r = gen.uniform(0.1, 0.4);
    const Segment c = blade_centerline(b, t);
    const Vec2 p = c.a + gen.uniform(-0.3, 1.3) * (c.b - c.a) + gen.vec(0.0, 1.5);
    const double clearance = blade_clearance(p, r, b, t);
    // The sampled oracle resolves the boundary only to its grid pitch.
    if (std::abs(clearance) < 0.02) {
      continue;
    }
    ++checked;
    const bool hit = dense_overlap(p, r, c, b.half_width);
    ASSERT_EQ(clearance < 0.0, hit) << "clearance " << clearance;
    collisions += hit;
  }
  EXPECT_GT(collisions, 100);
}

DroneState drone_at(const Vec2 & p, const Vec2 & v)
{
  DroneState d;
  d.position = p;
  d.velocity = v;
  return d;
}

Blade static_slider_at(const Vec2 & center)
{
  // Phase 0 at t = 0 puts the bar center on the anchor.
  Blade b = slider_s5();
  b.anchor = center;
  b.axis = {1, 0};  // bar runs along y
  return b;
}

TEST(Sense, BladeBehindExcluded)
{
  const std::vector<Blade> blades{static_slider_at({-3, 0})};
  EXPECT_TRUE(sense(drone_at({0, 0}, {1, 0}), blades, 0.0, 10.0).empty());
}

TEST(Sense, RangeBoundary)
{
  const double range = 4.0;
  const double hw = slider_s5().half_width;
  const double eps = 1e-6;
  // The nearest body point of a bar centered at x lies at x - hw along the heading.
  const std::vector<Blade> outside{static_slider_at({range + hw + eps, 0})};
  const std::vector<Blade> inside{static_slider_at({range + hw - eps, 0})};
  EXPECT_TRUE(sense(drone_at({0, 0}, {1, 0}), outside, 0.0, range).empty());
  const auto s = sense(drone_at({0, 0}, {1, 0}), inside, 0.0, range);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].distance, range - eps, 1e-9);
}

TEST(Sense, ZeroVelocityThrows)
{
  const std::vector<Blade> blades{static_slider_at({3, 0})};
  EXPECT_THROW(sense(drone_at({0, 0}, {0, 0}), blades, 0.0, 10.0), std::domain_error);
}

TEST(Sense, ThreeBladeOrderingMatchesBruteForce)
{
  const std::vector<Blade> blades{
    static_slider_at({6, 1}), static_slider_at({2, -1}), static_slider_at({4, 3})};
  const DroneState d = drone_at({0, 0}, {1, 0});
  const auto s = sense(d, blades, 0.0, 20.0);
  ASSERT_EQ(s.size(), 3u);
  // Brute-force distances from densely sampled centerlines.
  std::vector<std::pair<double, int>> oracle;
  for (int i = 0; i < 3; ++i) {
    const Segment c = blade_centerline(blades[i], 0.0);
    double best = 1e300;
    for (int k = 0; k <= 10000; ++k) {
      best = std::min(best, distance(d.position, c.a + (k / 10000.0) * (c.b - c.a)));
    }
    oracle.emplace_back(best - blades[i].half_width, i);
  }
  std::sort(oracle.begin(), oracle.end());
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(s[i].id, oracle[i].second);
    EXPECT_NEAR(s[i].distance, oracle[i].first, 1e-6);
  }
}

TEST(Sense, PropertyNeverReturnsBladeBehind)
{
  Gen gen(24);
  for (int i = 0; i < 500; ++i) {
    std::vector<Blade> blades;
    const int n = gen.integer(1, 6);
    for (int k = 0; k < n; ++k) {
      blades.push_back(gen.blade());
    }
    const DroneState d = drone_at(gen.point(5.0), gen.vec(0.5, 2.0));
    const double t = gen.uniform(0.0, 30.0);
    const double range = gen.uniform(1.0, 15.0);
    const auto s = sense(d, blades, t, range);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const Blade & b = blades[s[k].id];
      const Segment c = blade_centerline(b, t);
      const Vec2 q = closest_point_on_segment(d.position, c.a, c.b);
      const double cd = distance(d.position, q);
      const Vec2 nearest = cd > b.half_width ? q + (b.half_width / cd) * (d.position - q) :
        d.position;
      ASSERT_GE(dot(nearest - d.position, d.velocity), 0.0);
      ASSERT_LE(s[k].distance, range);
      if (k > 0) {
        ASSERT_LE(s[k - 1].distance, s[k].distance);
      }
    }
  }
}

TEST(StepDrone, EulerStep)
{
  const DroneState d = drone_at({0, 0}, {1, 0});
  const DroneState n = step_drone(d, {1, 0}, 0.5);
  EXPECT_EQ(n.position, (Vec2{0.5, 0}));
  EXPECT_EQ(n.velocity, (Vec2{1, 0}));
}

TEST(StepDrone, TwoStepsEqualOneDoubleStep)
{
  const DroneState d = drone_at({1, 2}, {0.6, 0.8});
  const Vec2 v{0.8, -0.6};
  const DroneState twice = step_drone(step_drone(d, v, 0.1), v, 0.1);
  const DroneState once = step_drone(d, v, 0.2);
  EXPECT_NEAR(twice.position.x, once.position.x, 1e-12);
  EXPECT_NEAR(twice.position.y, once.position.y, 1e-12);
}

TEST(StepDrone, HundredStepsPathLength)
{
  DroneState d = drone_at({0, 0}, {1, 0});
  const double dt = 0.01;
  double length = 0;
  for (int i = 0; i < 100; ++i) {
    const DroneState n = step_drone(d, {0.6, 0.8}, dt);
    length += distance(d.position, n.position);
    d = n;
  }
  EXPECT_NEAR(length, 100 * dt, 1e-9);
}

TEST(StepDrone, OutOfBandSpeedIsContractViolation)
{
  const DroneState d = drone_at({0, 0}, {1, 0});
  EXPECT_THROW(step_drone(d, {0.5, 0}, 0.1), std::logic_error);
  EXPECT_THROW(step_drone(d, {2.5, 0}, 0.1), std::logic_error);
  EXPECT_NO_THROW(step_drone(d, {2.0, 0}, 0.1));
}

}  // namespace
}  // namespace bladenav

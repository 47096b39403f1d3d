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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bladenav/geom.hpp"
#include "test_support.hpp"

namespace bladenav
{
namespace
{

using testing::Gen;

TEST(SinBetween, PerpendicularIsOne)
{
  EXPECT_DOUBLE_EQ(sin_between({1, 0}, {0, 1}), 1.0);
}

TEST(SinBetween, ParallelIsZero)
{
  EXPECT_DOUBLE_EQ(sin_between({1, 0}, {3, 0}), 0.0);
}

TEST(SinBetween, FortyFiveDegrees)
{
  // Independent oracle: sine of the difference of polar angles.
  const double oracle = std::abs(std::sin(std::atan2(1.0, 1.0) - std::atan2(0.0, 1.0)));
  EXPECT_NEAR(sin_between({1, 0}, {1, 1}), oracle, 1e-9);
  EXPECT_NEAR(sin_between({1, 0}, {1, 1}), 0.70710678, 1e-8);
}

TEST(SinBetween, ZeroArgumentNamesTheArgument)
{
  try {
    sin_between({0, 0}, {1, 0});
    FAIL() << "expected domain_error";
  } catch (const std::domain_error & e) {
    EXPECT_NE(std::string(e.what()).find("argument u"), std::string::npos);
  }
  try {
    sin_between({1, 0}, {0, 0});
    FAIL() << "expected domain_error";
  } catch (const std::domain_error & e) {
    EXPECT_NE(std::string(e.what()).find("argument v"), std::string::npos);
  }
}

TEST(SinBetween, PropertySymmetricAndScaleInvariant)
{
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 u = gen.vec(1e-3, 1e3);
    const Vec2 v = gen.vec(1e-3, 1e3);
    const double k = gen.uniform(1e-3, 1e3);
    const double s = sin_between(u, v);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
    ASSERT_NEAR(sin_between(v, u), s, 1e-12 * std::max(1.0, s));
    ASSERT_NEAR(sin_between(k * u, v), s, 1e-12 * std::max(1.0, s));
  }
}

TEST(SinBetween, PropertyMatchesSineOfAngle)
{
  Gen gen(12);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 u = gen.vec(0.1, 10.0);
    const Vec2 v = gen.vec(0.1, 10.0);
    ASSERT_NEAR(sin_between(u, v), std::sin(angle_at({0, 0}, u, v)), 1e-9);
  }
}

TEST(AngleAt, Examples)
{
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {0, 1}), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {2, 0}), 0.0, 1e-15);
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {-1, 1e-9}), std::atan2(1e-9, -1.0), 1e-15);
  EXPECT_NEAR(angle_at({0, 0}, {1, 0}, {-1, 1e-9}), std::numbers::pi, 1e-8);
}

TEST(AngleAt, CoincidentPointThrows)
{
  EXPECT_THROW(angle_at({1, 1}, {1, 1}, {0, 0}), std::domain_error);
  EXPECT_THROW(angle_at({1, 1}, {0, 0}, {1, 1}), std::domain_error);
}

TEST(AngleAt, PropertyAgreesWithAcosOracle)
{
  Gen gen(13);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 o = gen.point(10.0);
    const Vec2 p = o + gen.vec(0.1, 5.0);
    const Vec2 q = o + gen.vec(0.1, 5.0);
    const Vec2 a = p - o;
    const Vec2 b = q - o;
    const double c = std::clamp(dot(a, b) / (a.norm() * b.norm()), -1.0, 1.0);
    const double angle = angle_at(o, p, q);
    ASSERT_GE(angle, 0.0);
    ASSERT_LE(angle, std::numbers::pi);
    // acos is ill-conditioned near 0 and pi; compare cosines there instead.
    ASSERT_NEAR(std::cos(angle), c, 1e-9);
  }
}

TEST(SegmentIntersection, Examples)
{
  const auto cross_point = segment_intersection({0, 0}, {2, 0}, {1, -1}, {1, 1});
  ASSERT_TRUE(cross_point);
  EXPECT_NEAR(cross_point->x, 1.0, 1e-12);
  EXPECT_NEAR(cross_point->y, 0.0, 1e-12);

  EXPECT_FALSE(segment_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}));

  const auto diag = segment_intersection({0, 0}, {4, 4}, {0, 4}, {4, 0});
  ASSERT_TRUE(diag);
  EXPECT_NEAR(diag->x, 2.0, 1e-12);
  EXPECT_NEAR(diag->y, 2.0, 1e-12);
}

TEST(SegmentIntersection, EndpointTouch)
{
  const auto p = segment_intersection({0, 0}, {1, 0}, {1, 0}, {1, 5});
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->x, 1.0, 1e-12);
  EXPECT_NEAR(p->y, 0.0, 1e-12);
}

TEST(SegmentIntersection, CollinearOverlapPicksEndpointNearestA1)
{
  const auto p = segment_intersection({0, 0}, {4, 0}, {3, 0}, {1, 0});
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Vec2{1, 0}));

  const auto q = segment_intersection({4, 0}, {0, 0}, {1, 0}, {3, 0});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, (Vec2{3, 0}));

  // a1 inside the other segment: the overlap starts at a1.
  const auto r = segment_intersection({2, 0}, {6, 0}, {0, 0}, {4, 0});
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (Vec2{2, 0}));

  EXPECT_FALSE(segment_intersection({0, 0}, {1, 0}, {2, 0}, {3, 0}));
}

TEST(SegmentIntersection, PropertyResultLiesOnBothSegments)
{
  Gen gen(14);
  int hits = 0;
  for (int i = 0; i < 5000; ++i) {
    const Vec2 a1 = gen.point(5.0);
    const Vec2 a2 = gen.point(5.0);
    const Vec2 b1 = gen.point(5.0);
    const Vec2 b2 = gen.point(5.0);
    const auto p = segment_intersection(a1, a2, b1, b2);
    // Oracle for existence: opposite orientation signs on both segments.
    const double o1 = cross(a2 - a1, b1 - a1);
    const double o2 = cross(a2 - a1, b2 - a1);
    const double o3 = cross(b2 - b1, a1 - b1);
    const double o4 = cross(b2 - b1, a2 - b1);
    const bool proper = o1 * o2 < 0.0 && o3 * o4 < 0.0;
    if (proper) {
      ASSERT_TRUE(p) << i;
    }
    if (p) {
      ++hits;
      ASSERT_LE(point_segment_distance(*p, a1, a2), 1e-9);
      ASSERT_LE(point_segment_distance(*p, b1, b2), 1e-9);
    }
  }
  EXPECT_GT(hits, 100);
}

TEST(PointSegmentDistance, Examples)
{
  EXPECT_DOUBLE_EQ(point_segment_distance({0, 1}, {-1, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({2, 0}, {0, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(PointSegmentDistance, PropertyZeroExactlyOnSegment)
{
  Gen gen(15);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 s1 = gen.point(5.0);
    const Vec2 s2 = gen.point(5.0);
    const double f = gen.uniform(0.0, 1.0);
    const Vec2 on = s1 + f * (s2 - s1);
    ASSERT_LE(point_segment_distance(on, s1, s2), 1e-12 * (1.0 + on.norm()));
    const Vec2 off = on + gen.vec(1e-3, 1.0);
    const double d = point_segment_distance(off, s1, s2);
    // Brute-force oracle: dense sampling of the segment.
    double brute = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 2000; ++k) {
      brute = std::min(brute, distance(off, s1 + (k / 2000.0) * (s2 - s1)));
    }
    ASSERT_LE(d, brute + 1e-12);
    ASSERT_GE(d, brute - (s2 - s1).norm() / 2000.0);
    ASSERT_GT(d, 0.0);
  }
}

TEST(SegmentSegmentDistance, CrossingIsZeroAndDisjointPositive)
{
  EXPECT_DOUBLE_EQ(segment_segment_distance({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}}), 0.0);
  EXPECT_DOUBLE_EQ(segment_segment_distance({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}), 1.0);
  EXPECT_DOUBLE_EQ(segment_segment_distance({{0, 0}, {1, 0}}, {{4, 4}, {4, 4}}), 5.0);
}

TEST(Normalized, UnitLengthAndZeroThrows)
{
  EXPECT_NEAR(normalized({3, 4}).norm(), 1.0, 1e-15);
  EXPECT_THROW(normalized({0, 0}), std::domain_error);
}

}  // namespace
}  // namespace bladenav

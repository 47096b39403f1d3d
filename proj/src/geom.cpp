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

#include "bladenav/geom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bladenav
{

namespace
{

constexpr double kRelEps = 1e-12;

}  // namespace

Vec2 normalized(const Vec2 & a)
{
  const double n = a.norm();
  if (!(n > 0.0)) {
    throw std::domain_error("normalized: zero-length vector");
  }
  return a / n;
}

double sin_between(const Vec2 & u, const Vec2 & v)
{
  const double nu = u.norm();
  const double nv = v.norm();
  if (!(nu > 0.0)) {
    throw std::domain_error("sin_between: argument u has zero length");
  }
  if (!(nv > 0.0)) {
    throw std::domain_error("sin_between: argument v has zero length");
  }
  // Normalizing first keeps the result exactly symmetric and scale-free.
  const Vec2 a = u / nu;
  const Vec2 b = v / nv;
  return std::min(1.0, std::abs(cross(a, b)));
}

double angle_at(const Vec2 & vertex, const Vec2 & p, const Vec2 & q)
{
  const Vec2 u = p - vertex;
  const Vec2 v = q - vertex;
  if (!(u.norm() > 0.0)) {
    throw std::domain_error("angle_at: first point coincides with the vertex");
  }
  if (!(v.norm() > 0.0)) {
    throw std::domain_error("angle_at: second point coincides with the vertex");
  }
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

Vec2 closest_point_on_segment(const Vec2 & p, const Vec2 & s1, const Vec2 & s2)
{
  const Vec2 d = s2 - s1;
  const double len2 = dot(d, d);
  if (len2 == 0.0) {
    return s1;
  }
  const double s = std::clamp(dot(p - s1, d) / len2, 0.0, 1.0);
  return s1 + s * d;
}

double point_segment_distance(const Vec2 & p, const Vec2 & s1, const Vec2 & s2)
{
  return distance(p, closest_point_on_segment(p, s1, s2));
}

std::optional<Vec2> segment_intersection(
  const Vec2 & a1, const Vec2 & a2, const Vec2 & b1, const Vec2 & b2)
{
  const Vec2 da = a2 - a1;
  const Vec2 db = b2 - b1;
  const double la = da.norm();
  const double lb = db.norm();
  const double scale = std::max({la, lb, a1.norm(), b1.norm(), 1.0});
  const double tol = kRelEps * scale;

  if (la == 0.0) {
    if (point_segment_distance(a1, b1, b2) <= tol) {
      return a1;
    }
    return std::nullopt;
  }
  if (lb == 0.0) {
    if (point_segment_distance(b1, a1, a2) <= tol) {
      return b1;
    }
    return std::nullopt;
  }

  const Vec2 w = b1 - a1;
  const double denom = cross(da, db);
  if (std::abs(denom) > kRelEps * la * lb) {
    const double s = cross(w, db) / denom;
    const double u = cross(w, da) / denom;
    const double ts = tol / la;
    const double tu = tol / lb;
    if (s < -ts || s > 1.0 + ts || u < -tu || u > 1.0 + tu) {
      return std::nullopt;
    }
    return a1 + std::clamp(s, 0.0, 1.0) * da;
  }

  // Parallel: only collinear overlap can intersect.
  if (std::abs(cross(w, da)) / la > tol) {
    return std::nullopt;
  }
  const double inv = 1.0 / dot(da, da);
  const double s1 = dot(b1 - a1, da) * inv;
  const double s2 = dot(b2 - a1, da) * inv;
  const double lo = std::max(0.0, std::min(s1, s2));
  const double hi = std::min(1.0, std::max(s1, s2));
  if (lo > hi + tol / la) {
    return std::nullopt;
  }
  return a1 + std::min(lo, 1.0) * da;
}

double segment_segment_distance(const Segment & s, const Segment & t)
{
  if (segment_intersection(s.a, s.b, t.a, t.b)) {
    return 0.0;
  }
  return std::min(
    {point_segment_distance(s.a, t.a, t.b), point_segment_distance(s.b, t.a, t.b),
      point_segment_distance(t.a, s.a, s.b), point_segment_distance(t.b, s.a, s.b)});
}

}  // namespace bladenav

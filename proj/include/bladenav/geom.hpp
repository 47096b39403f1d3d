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

#ifndef BLADENAV__GEOM_HPP_
#define BLADENAV__GEOM_HPP_

#include <cmath>
#include <optional>

namespace bladenav
{

/// Planar vector or point, in meters (positions) or m/s (velocities).
struct Vec2
{
  double x{0.0};
  double y{0.0};

  constexpr Vec2 & operator+=(const Vec2 & o)
  {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2 & operator-=(const Vec2 & o)
  {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2 & operator*=(double k)
  {
    x *= k;
    y *= k;
    return *this;
  }

  bool is_finite() const {return std::isfinite(x) && std::isfinite(y);}
  double norm() const {return std::hypot(x, y);}

  friend constexpr bool operator==(const Vec2 &, const Vec2 &) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2 & b) {return a += b;}
constexpr Vec2 operator-(Vec2 a, const Vec2 & b) {return a -= b;}
constexpr Vec2 operator-(const Vec2 & a) {return {-a.x, -a.y};}
constexpr Vec2 operator*(Vec2 a, double k) {return a *= k;}
constexpr Vec2 operator*(double k, Vec2 a) {return a *= k;}
constexpr Vec2 operator/(const Vec2 & a, double k) {return {a.x / k, a.y / k};}

constexpr double dot(const Vec2 & a, const Vec2 & b) {return a.x * b.x + a.y * b.y;}
/// z-component of the 3D cross product.
constexpr double cross(const Vec2 & a, const Vec2 & b) {return a.x * b.y - a.y * b.x;}
/// Counter-clockwise quarter turn.
constexpr Vec2 perp(const Vec2 & a) {return {-a.y, a.x};}

inline double distance(const Vec2 & a, const Vec2 & b) {return (a - b).norm();}

inline Vec2 rotate(const Vec2 & a, double angle)
{
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

/// Unit vector along `a`; throws std::domain_error for a zero-length input.
Vec2 normalized(const Vec2 & a);

/// Closed directed segment.
struct Segment
{
  Vec2 a;
  Vec2 b;

  double length() const {return distance(a, b);}
  Vec2 direction() const {return b - a;}
};

/// Sine of the unsigned angle between two directions, |u x v| / (|u| |v|).
/// Throws std::domain_error naming the zero-length argument.
double sin_between(const Vec2 & u, const Vec2 & v);

/// Interior angle p-vertex-q in [0, pi].
/// Throws std::domain_error if p or q coincides with the vertex.
double angle_at(const Vec2 & vertex, const Vec2 & p, const Vec2 & q);

/// Unique intersection point of two closed segments. For collinear overlap the
/// overlap endpoint nearest `a1` is returned.
std::optional<Vec2> segment_intersection(
  const Vec2 & a1, const Vec2 & a2, const Vec2 & b1, const Vec2 & b2);

/// Closest point of the closed segment s1-s2 to p (s1 == s2 allowed).
Vec2 closest_point_on_segment(const Vec2 & p, const Vec2 & s1, const Vec2 & s2);

double point_segment_distance(const Vec2 & p, const Vec2 & s1, const Vec2 & s2);

/// Minimum distance between two closed segments; zero when they intersect.
double segment_segment_distance(const Segment & s, const Segment & t);

}  // namespace bladenav

#endif  // BLADENAV__GEOM_HPP_

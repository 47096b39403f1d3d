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

#ifndef BLADENAV__WORLD_HPP_
#define BLADENAV__WORLD_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "bladenav/geom.hpp"

namespace bladenav
{

enum class BladeKind
{
  kPendulum,
  kSlider,
};

std::string_view to_string(BladeKind kind);

/**
 * @brief Oscillating obstacle.
 *
 * Pendulum: a rod of `length` hinged at `anchor`, resting along `axis` and
 * deflected by amplitude * sin(omega * t + phase).
 *
 * Slider: a bar of length 2 * half_width, perpendicular to `axis`, whose
 * center travels anchor + axis * length * sin(omega * t + phase).
 *
 * In both cases the body is the set of points within half_width of the
 * moving centerline.
 */
struct Blade
{
  BladeKind kind{BladeKind::kSlider};
  Vec2 anchor;
  double length{1.0};
  double half_width{0.25};
  double amplitude{0.0};  ///< radians, pendulum only
  double omega{1.0};      ///< rad/s
  double phase{0.0};      ///< rad
  Vec2 axis{0.0, 1.0};    ///< unit direction

  bool operator==(const Blade &) const = default;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate(const Blade & blade);

/// Peak speed of the fastest body point (pendulum tip or slider bar).
double max_edge_speed(const Blade & blade);

struct BladePose
{
  Vec2 e_edge;         ///< leading edge, ahead of `reference` along the motion
  Vec2 f_edge;         ///< trailing edge, 2 * half_width behind e_edge
  Vec2 seg_a;          ///< centerline endpoints
  Vec2 seg_b;
  Vec2 reference;      ///< pendulum tip or slider bar center
  Vec2 edge_velocity;  ///< d(reference)/dt
};

BladePose blade_pose(const Blade & blade, double t);

Segment blade_centerline(const Blade & blade, double t);

/// Signed clearance between a disc at `p` and the blade body; negative means overlap.
double blade_clearance(const Vec2 & p, double drone_radius, const Blade & blade, double t);

/// Minimum clearance against all blades; +infinity when there are none.
double min_clearance(
  const Vec2 & p, double drone_radius, std::span<const Blade> blades, double t);

struct DroneState
{
  Vec2 position;
  Vec2 velocity;
  double radius{0.2};
  double nominal_speed{1.0};
  double max_speed{2.0};
};

struct SensedBlade
{
  int id{0};           ///< index into the blade list
  BladePose pose;
  double distance{0};  ///< drone position to the nearest body point
};

/// Blades whose nearest body point is within `range` and in the closed
/// forward half-plane of the drone heading, nearest first (ties by id).
/// Throws std::domain_error when the drone velocity is zero.
std::vector<SensedBlade> sense(
  const DroneState & drone, std::span<const Blade> blades, double t, double range);

/// Explicit Euler step with the commanded velocity. Throws std::logic_error if
/// the commanded speed lies outside [nominal_speed, max_speed].
DroneState step_drone(const DroneState & drone, const Vec2 & commanded_velocity, double dt);

}  // namespace bladenav

#endif  // BLADENAV__WORLD_HPP_

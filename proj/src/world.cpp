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

#include "bladenav/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bladenav
{

std::string_view to_string(BladeKind kind)
{
  switch (kind) {
    case BladeKind::kPendulum:
      return "pendulum";
    case BladeKind::kSlider:
      return "slider";
  }
  return "unknown";
}

void validate(const Blade & blade)
{
  if (!blade.anchor.is_finite() || !blade.axis.is_finite()) {
    throw std::invalid_argument("blade: anchor and axis must be finite");
  }
  if (std::abs(blade.axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("blade: axis must be a unit vector");
  }
  if (!(blade.length > 0.0) || !std::isfinite(blade.length)) {
    throw std::invalid_argument("blade: length must be > 0");
  }
  if (!(blade.half_width >= 0.0) || !std::isfinite(blade.half_width)) {
    throw std::invalid_argument("blade: half_width must be >= 0");
  }
  if (!(blade.omega > 0.0) || !std::isfinite(blade.omega)) {
    throw std::invalid_argument("blade: omega must be > 0");
  }
  if (!std::isfinite(blade.phase)) {
    throw std::invalid_argument("blade: phase must be finite");
  }
  if (blade.kind == BladeKind::kPendulum &&
    !(blade.amplitude > 0.0 && blade.amplitude <= std::numbers::pi))
  {
    throw std::invalid_argument("blade: pendulum amplitude must lie in (0, pi]");
  }
}

double max_edge_speed(const Blade & blade)
{
  if (blade.kind == BladeKind::kPendulum) {
    return blade.length * blade.amplitude * blade.omega;
  }
  return blade.length * blade.omega;
}

namespace
{

struct Kinematics
{
  Vec2 reference;
  Vec2 velocity;
  Vec2 acceleration;
  Segment centerline;
};

Kinematics kinematics(const Blade & blade, double t)
{
  const double arg = blade.omega * t + blade.phase;
  const double s = std::sin(arg);
  const double c = std::cos(arg);
  Kinematics k;
  if (blade.kind == BladeKind::kPendulum) {
    const double theta = blade.amplitude * s;
    const double theta_dot = blade.amplitude * blade.omega * c;
    const double theta_ddot = -blade.amplitude * blade.omega * blade.omega * s;
    const Vec2 radial = rotate(blade.axis, theta);
    const Vec2 tangent = perp(radial);
    k.reference = blade.anchor + blade.length * radial;
    k.velocity = blade.length * theta_dot * tangent;
    k.acceleration = blade.length * (theta_ddot * tangent - theta_dot * theta_dot * radial);
    k.centerline = {blade.anchor, k.reference};
  } else {
    const double amp = blade.length;
    k.reference = blade.anchor + amp * s * blade.axis;
    k.velocity = amp * blade.omega * c * blade.axis;
    k.acceleration = -amp * blade.omega * blade.omega * s * blade.axis;
    const Vec2 across = blade.half_width * perp(blade.axis);
    k.centerline = {k.reference - across, k.reference + across};
  }
  return k;
}

}  // namespace

Segment blade_centerline(const Blade & blade, double t)
{
  return kinematics(blade, t).centerline;
}

BladePose blade_pose(const Blade & blade, double t)
{
  const Kinematics k = kinematics(blade, t);
  // At a turnaround the velocity vanishes; the edge then faces the upcoming motion.
  const double speed_scale = std::max(max_edge_speed(blade), 1e-300);
  Vec2 motion = k.velocity;
  if (motion.norm() <= 1e-12 * speed_scale) {
    motion = k.acceleration;
  }
  if (!(motion.norm() > 0.0)) {
    motion = blade.kind == BladeKind::kPendulum ? perp(blade.axis) : blade.axis;
  }
  const Vec2 u = normalized(motion);

  BladePose pose;
  pose.reference = k.reference;
  pose.edge_velocity = k.velocity;
  pose.seg_a = k.centerline.a;
  pose.seg_b = k.centerline.b;
  pose.e_edge = k.reference + blade.half_width * u;
  pose.f_edge = k.reference - blade.half_width * u;
  return pose;
}

double blade_clearance(const Vec2 & p, double drone_radius, const Blade & blade, double t)
{
  const Segment c = blade_centerline(blade, t);
  return point_segment_distance(p, c.a, c.b) - (blade.half_width + drone_radius);
}

double min_clearance(
  const Vec2 & p, double drone_radius, std::span<const Blade> blades, double t)
{
  double best = std::numeric_limits<double>::infinity();
  for (const Blade & b : blades) {
    best = std::min(best, blade_clearance(p, drone_radius, b, t));
  }
  return best;
}

std::vector<SensedBlade> sense(
  const DroneState & drone, std::span<const Blade> blades, double t, double range)
{
  if (!(drone.velocity.norm() > 0.0)) {
    throw std::domain_error("sense: drone velocity is zero, heading undefined");
  }
  const Vec2 heading = normalized(drone.velocity);
  std::vector<SensedBlade> out;
  for (std::size_t i = 0; i < blades.size(); ++i) {
    const Blade & blade = blades[i];
    const BladePose pose = blade_pose(blade, t);
    const Vec2 c = closest_point_on_segment(drone.position, pose.seg_a, pose.seg_b);
    const Vec2 to_drone = drone.position - c;
    const double centerline_dist = to_drone.norm();
    // Nearest body point: step half_width from the centerline toward the drone.
    Vec2 nearest = drone.position;
    double dist = 0.0;
    if (centerline_dist > blade.half_width) {
      nearest = c + (blade.half_width / centerline_dist) * to_drone;
      dist = centerline_dist - blade.half_width;
    }
    if (dist > range) {
      continue;
    }
    if (dot(nearest - drone.position, heading) < 0.0) {
      continue;
    }
    out.push_back({static_cast<int>(i), pose, dist});
  }
  std::stable_sort(
    out.begin(), out.end(), [](const SensedBlade & l, const SensedBlade & r) {
      if (l.distance != r.distance) {
        return l.distance < r.distance;
      }
      return l.id < r.id;
    });
  return out;
}

DroneState step_drone(const DroneState & drone, const Vec2 & commanded_velocity, double dt)
{
  if (!(dt > 0.0)) {
    throw std::logic_error("step_drone: dt must be > 0");
  }
  const double speed = commanded_velocity.norm();
  const double tol = 1e-9 * drone.nominal_speed;
  if (speed < drone.nominal_speed - tol || speed > drone.max_speed + tol) {
    throw std::logic_error(
            "step_drone: commanded speed " + std::to_string(speed) +
            " outside [nominal_speed, max_speed]");
  }
  DroneState next = drone;
  next.position = drone.position + dt * commanded_velocity;
  next.velocity = commanded_velocity;
  return next;
}

}  // namespace bladenav

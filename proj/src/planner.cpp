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

#include "bladenav/planner.hpp"

#include <algorithm>
#include <stdexcept>

namespace bladenav
{

LegPlan replan(const Vec2 & current, const Vec2 & goal, int legs_so_far)
{
  return {current, goal, legs_so_far + 1};
}

double path_cost(std::span<const Vec2> vertices)
{
  double total = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    total += distance(vertices[i - 1], vertices[i]);
  }
  return total;
}

double path_cost(const PathRecord & path)
{
  return path_cost(std::span<const Vec2>(path.vertices));
}

LegPlan baseline_rejoin(
  const Vec2 & current, const Segment & ideal, [[maybe_unused]] const Vec2 & goal,
  int legs_so_far)
{
  if (!(ideal.length() > 0.0)) {
    throw std::domain_error("baseline_rejoin: ideal path has zero length");
  }
  return {current, closest_point_on_segment(current, ideal.a, ideal.b), legs_so_far + 1};
}

double angle_at_goal(const Segment & ideal, const Vec2 & leg_origin)
{
  if (leg_origin == ideal.b || ideal.a == ideal.b) {
    return 0.0;
  }
  return angle_at(ideal.b, ideal.a, leg_origin);
}

double detour_estimate(
  const DecisionGeometry & g, Action action, const Vec2 & goal, const Vec2 & direction)
{
  if (action == Action::kMaintain || action == Action::kFollow || !(direction.norm() > 0.0)) {
    return 0.0;
  }
  const Vec2 & d = g.d_point;
  const Vec2 p = d + distance(d, g.e_point) * normalized(direction);
  const double extra = distance(d, p) + distance(p, goal) - distance(d, goal);
  return std::max(0.0, extra);
}

double detour_estimate(
  const DecisionGeometry & g, Action action, const Vec2 & goal, const DroneState & drone,
  const PolicyParams & params)
{
  if (action == Action::kMaintain || action == Action::kFollow) {
    return 0.0;
  }
  return detour_estimate(g, action, goal, steering_vector(action, drone, g, params).velocity);
}

}  // namespace bladenav

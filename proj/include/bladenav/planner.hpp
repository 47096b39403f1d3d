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

#ifndef BLADENAV__PLANNER_HPP_
#define BLADENAV__PLANNER_HPP_

#include <span>
#include <vector>

#include "bladenav/geom.hpp"
#include "bladenav/policy.hpp"

namespace bladenav
{

/// Straight leg currently being flown.
struct LegPlan
{
  Vec2 origin;
  Vec2 target;
  int leg_index{0};

  bool is_terminal() const {return origin == target;}
  Segment segment() const {return {origin, target};}
};

struct PathRecord
{
  std::vector<Vec2> vertices;
  Segment ideal;
};

/// New leg from the present location straight to the goal.
LegPlan replan(const Vec2 & current, const Vec2 & goal, int legs_so_far);

/// Polyline length of the traversed vertices.
double path_cost(std::span<const Vec2> vertices);
double path_cost(const PathRecord & path);

/// Return-to-initial-path leg: targets the clamped perpendicular foot of
/// `current` on `ideal`. Throws std::domain_error for a zero-length ideal.
LegPlan baseline_rejoin(const Vec2 & current, const Segment & ideal, const Vec2 & goal, int legs_so_far);

/// Angle at the goal between the ideal path and a replanned leg; 0 when the
/// leg starts on the goal.
double angle_at_goal(const Segment & ideal, const Vec2 & leg_origin);

/// Extra path length of a one-conflict lookahead dodge:
/// |DP| + |P goal| - |D goal| with P = D + unit(direction) * |DE|.
double detour_estimate(
  const DecisionGeometry & g, Action action, const Vec2 & goal, const Vec2 & direction);

/// Convenience overload deriving the action direction from the policy rules.
double detour_estimate(
  const DecisionGeometry & g, Action action, const Vec2 & goal, const DroneState & drone,
  const PolicyParams & params);

}  // namespace bladenav

#endif  // BLADENAV__PLANNER_HPP_

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

#ifndef BLADENAV__SIMULATION_HPP_
#define BLADENAV__SIMULATION_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "bladenav/planner.hpp"
#include "bladenav/policy.hpp"
#include "bladenav/scenario.hpp"

namespace bladenav
{

/// What happens after an evasion: replan straight to the goal (fuzzy) or fly
/// back to the ideal path first (baseline).
enum class PolicyKind
{
  kFuzzy,
  kBaseline,
};

std::string_view to_string(PolicyKind policy);
std::optional<PolicyKind> policy_from_string(std::string_view name);

enum class Outcome
{
  kGoal,
  kCollision,
  kTimeout,
};

std::string_view to_string(Outcome outcome);

struct StepRecord
{
  double t{0};
  Vec2 position;
  Vec2 velocity;
  Action action{Action::kFollow};
  int leg{0};
  double clearance{0};  ///< minimum over the step's end point and midpoint
  std::optional<double> delta;
};

struct ReplanEvent
{
  double t{0};
  Vec2 origin;
  Vec2 target;
  int leg_index{0};
  double goal_angle{0};  ///< angle at the goal between the ideal path and the new leg
};

/// Record 0 is the initial state at t = 0; each later record is one step.
struct TrajectoryLog
{
  std::vector<StepRecord> records;
  std::vector<ReplanEvent> replans;
  Outcome outcome{Outcome::kTimeout};
};

struct Metrics
{
  Outcome outcome{Outcome::kTimeout};
  double path_length{0};
  double ideal_length{0};
  std::optional<double> time_to_goal;
  double min_clearance{0};
  int replan_count{0};
  double boost_time_fraction{0};
};

struct SimulationResult
{
  TrajectoryLog log;
  Metrics metrics;
};

/**
 * @brief Runs the navigation loop until goal, collision or max_steps.
 *
 * Each step: sense, track, replan if the tracked set just emptied, decide
 * (memberships, defuzzify, steer, merge) or follow the leg, integrate, check
 * collisions at the midpoint and end of the step, check the goal.
 * Throws ScenarioError for an invalid scenario before stepping.
 */
SimulationResult run_simulation(const Scenario & scenario, PolicyKind policy);

Metrics compute_metrics(const TrajectoryLog & log, const Scenario & scenario);

struct Comparison
{
  Metrics fuzzy;
  Metrics baseline;
  double ratio{0};  ///< baseline path length / fuzzy path length
};

Comparison compare_policies(const Scenario & scenario);

}  // namespace bladenav

#endif  // BLADENAV__SIMULATION_HPP_

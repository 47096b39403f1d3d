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

#include "bladenav/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bladenav
{

std::string_view to_string(PolicyKind policy)
{
  return policy == PolicyKind::kFuzzy ? "fuzzy" : "baseline";
}

std::optional<PolicyKind> policy_from_string(std::string_view name)
{
  if (name == "fuzzy") {
    return PolicyKind::kFuzzy;
  }
  if (name == "baseline") {
    return PolicyKind::kBaseline;
  }
  return std::nullopt;
}

std::string_view to_string(Outcome outcome)
{
  switch (outcome) {
    case Outcome::kGoal:
      return "goal";
    case Outcome::kCollision:
      return "collision";
    case Outcome::kTimeout:
      return "timeout";
  }
  return "unknown";
}

namespace
{

struct Decision
{
  SteeringCommand command;
  std::optional<double> delta;
};

Decision decide(
  const std::vector<DecisionGeometry> & geometries, const DroneState & drone,
  const PolicyParams & params)
{
  std::vector<SteeringCommand> cmds;
  cmds.reserve(geometries.size());
  for (const DecisionGeometry & g : geometries) {
    const FuzzyMembership mu = memberships(std::clamp(g.delta, -1.0, 1.0), params);
    cmds.push_back(steering_vector(defuzzify(mu, g, params), drone, g, params));
  }
  Decision d{merge_commands(cmds), std::nullopt};
  for (const DecisionGeometry & g : geometries) {
    if (g.blade_id == d.command.blade_id) {
      d.delta = g.delta;
    }
  }
  return d;
}

}  // namespace

SimulationResult run_simulation(const Scenario & scenario, PolicyKind policy)
{
  validate(scenario);

  const std::span<const Blade> blades(scenario.blades);
  const Segment ideal{scenario.start, scenario.goal};
  const double dt = scenario.dt;
  const double tol = scenario.goal_tolerance;

  DroneState drone;
  drone.position = scenario.start;
  drone.radius = scenario.drone.radius;
  drone.nominal_speed = scenario.drone.nominal_speed;
  drone.max_speed = scenario.drone.max_speed;
  drone.velocity = drone.nominal_speed * normalized(scenario.goal - scenario.start);

  LegPlan leg{scenario.start, scenario.goal, 0};
  TrackMap tracks;
  TrajectoryLog log;

  StepRecord initial;
  initial.t = 0.0;
  initial.position = drone.position;
  initial.velocity = drone.velocity;
  initial.action = Action::kFollow;
  initial.leg = leg.leg_index;
  initial.clearance = min_clearance(drone.position, drone.radius, blades, 0.0);
  log.records.push_back(initial);
  if (initial.clearance < 0.0) {
    log.outcome = Outcome::kCollision;
    return {log, compute_metrics(log, scenario)};
  }

  bool finished = false;
  for (int k = 1; k <= scenario.max_steps && !finished; ++k) {
    const double t = static_cast<double>(k - 1) * dt;
    const double t_next = static_cast<double>(k) * dt;

    // The forward view faces along the remaining trajectory, not the momentary dodge heading.
    DroneState viewer = drone;
    if (leg.target != drone.position) {
      viewer.velocity = leg.target - drone.position;
    }
    const auto sensed = sense(viewer, blades, t, scenario.sensor_range);

    // Track against the part of the leg still ahead of the drone.
    TrackingResult tracking;
    if (drone.position != leg.target) {
      Segment ahead{closest_point_on_segment(drone.position, leg.origin, leg.target), leg.target};
      if (!(ahead.length() > 0.0)) {
        ahead.a = drone.position;
      }
      tracking = detect_and_track(
        drone, ahead, sensed, tracks, blades, t, dt, scenario.policy_params.horizon);
    }
    const bool evasion_complete = !tracks.empty() && tracking.tracks.empty();
    tracks = std::move(tracking.tracks);

    if (evasion_complete) {
      if (policy == PolicyKind::kFuzzy) {
        leg = replan(drone.position, scenario.goal, leg.leg_index);
      } else {
        leg = baseline_rejoin(drone.position, ideal, scenario.goal, leg.leg_index);
        if (distance(leg.target, drone.position) <= tol) {
          leg.target = scenario.goal;
        }
      }
      log.replans.push_back(
        {t, leg.origin, leg.target, leg.leg_index, angle_at_goal(ideal, leg.origin)});
    }

    // Decide.
    SteeringCommand cmd;
    std::optional<double> delta;
    if (tracking.geometries.empty()) {
      cmd.action = Action::kFollow;
      const Vec2 to_target = leg.target - drone.position;
      cmd.velocity = to_target.norm() > 0.0 ?
        drone.nominal_speed * normalized(to_target) : drone.velocity;
    } else {
      Decision d = decide(tracking.geometries, drone, scenario.policy_params);
      cmd = d.command;
      delta = d.delta;
    }

    // Integrate. Following a leg lands exactly on its target once it is within one step.
    const Vec2 start_pos = drone.position;
    bool arrived = false;
    if (cmd.action == Action::kFollow &&
      distance(leg.target, drone.position) <= drone.nominal_speed * dt)
    {
      drone.velocity = cmd.velocity;
      drone.position = leg.target;
      arrived = true;
    } else {
      drone = step_drone(drone, cmd.velocity, dt);
    }

    const Vec2 mid = 0.5 * (start_pos + drone.position);
    const double clearance = std::min(
      min_clearance(mid, drone.radius, blades, t + 0.5 * dt),
      min_clearance(drone.position, drone.radius, blades, t_next));

    StepRecord rec;
    rec.t = t_next;
    rec.position = drone.position;
    rec.velocity = cmd.velocity;
    rec.action = cmd.action;
    rec.leg = leg.leg_index;
    rec.clearance = clearance;
    rec.delta = delta;
    log.records.push_back(rec);

    if (clearance < 0.0) {
      log.outcome = Outcome::kCollision;
      finished = true;
    } else if (arrived && leg.target == scenario.goal) {
      log.outcome = Outcome::kGoal;
      finished = true;
    } else if (arrived) {
      // Baseline reached the ideal path: continue along it.
      leg = {drone.position, scenario.goal, leg.leg_index + 1};
    } else if (cmd.action != Action::kFollow && distance(drone.position, scenario.goal) <= tol) {
      log.outcome = Outcome::kGoal;
      finished = true;
    }
  }
  if (!finished) {
    log.outcome = Outcome::kTimeout;
  }
  return {log, compute_metrics(log, scenario)};
}

Metrics compute_metrics(const TrajectoryLog & log, const Scenario & scenario)
{
  Metrics m;
  m.outcome = log.outcome;
  PathRecord path;
  path.ideal = {scenario.start, scenario.goal};
  path.vertices.reserve(log.records.size());
  for (const StepRecord & r : log.records) {
    path.vertices.push_back(r.position);
  }
  m.path_length = path_cost(path);
  m.ideal_length = path.ideal.length();
  if (log.outcome == Outcome::kGoal && !log.records.empty()) {
    m.time_to_goal = log.records.back().t;
  }
  m.min_clearance = std::numeric_limits<double>::infinity();
  int boosted = 0;
  for (const StepRecord & r : log.records) {
    m.min_clearance = std::min(m.min_clearance, r.clearance);
    if (r.action == Action::kPlusBoost) {
      ++boosted;
    }
  }
  m.replan_count = static_cast<int>(log.replans.size());
  const auto steps = log.records.size() > 1 ? log.records.size() - 1 : 0;
  m.boost_time_fraction = steps > 0 ? static_cast<double>(boosted) / static_cast<double>(steps) : 0.0;
  return m;
}

Comparison compare_policies(const Scenario & scenario)
{
  Comparison c;
  c.fuzzy = run_simulation(scenario, PolicyKind::kFuzzy).metrics;
  c.baseline = run_simulation(scenario, PolicyKind::kBaseline).metrics;
  c.ratio = c.fuzzy.path_length > 0.0 ?
    c.baseline.path_length / c.fuzzy.path_length :
    std::numeric_limits<double>::quiet_NaN();
  return c;
}

}  // namespace bladenav

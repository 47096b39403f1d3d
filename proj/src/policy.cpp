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

#include "bladenav/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bladenav
{

std::string_view to_string(Action action)
{
  switch (action) {
    case Action::kPlus:
      return "Plus";
    case Action::kMaintain:
      return "Maintain";
    case Action::kMinus:
      return "Minus";
    case Action::kMinusWidened:
      return "MinusWidened";
    case Action::kPlusBoost:
      return "PlusBoost";
    case Action::kFollow:
      return "Follow";
  }
  return "Unknown";
}

std::optional<Action> action_from_string(std::string_view name)
{
  for (Action a : {Action::kPlus, Action::kMaintain, Action::kMinus, Action::kMinusWidened,
      Action::kPlusBoost, Action::kFollow})
  {
    if (to_string(a) == name) {
      return a;
    }
  }
  return std::nullopt;
}

void validate(const PolicyParams & params)
{
  if (!(params.eq_band > 0.0 && params.eq_band <= 0.5)) {
    throw std::invalid_argument("policy_params: eq_band must lie in (0, 0.5]");
  }
  if (!(params.wide_angle > 0.0 && params.wide_angle < std::numbers::pi)) {
    throw std::invalid_argument("policy_params: wide_angle must lie in (0, pi)");
  }
  if (!(params.k_beta >= 0.0) || !std::isfinite(params.k_beta)) {
    throw std::invalid_argument("policy_params: k_beta must be >= 0");
  }
  if (!(params.k_alpha >= 0.0) || !std::isfinite(params.k_alpha)) {
    throw std::invalid_argument("policy_params: k_alpha must be >= 0");
  }
  if (!(params.horizon > 0.0) || !std::isfinite(params.horizon)) {
    throw std::invalid_argument("policy_params: horizon must be > 0");
  }
}

namespace
{

double safe_sin(const Vec2 & u, const Vec2 & v)
{
  if (!(u.norm() > 0.0) || !(v.norm() > 0.0)) {
    return 0.0;
  }
  return sin_between(u, v);
}

double safe_angle(const Vec2 & vertex, const Vec2 & p, const Vec2 & q)
{
  if (p == vertex || q == vertex) {
    return std::numbers::pi;
  }
  return angle_at(vertex, p, q);
}

}  // namespace

DecisionGeometry make_geometry(
  int blade_id, const Vec2 & a, const Vec2 & b, const Vec2 & c, const Vec2 & d,
  const Vec2 & e, const Vec2 & f, const Vec2 & v_o)
{
  DecisionGeometry g;
  g.blade_id = blade_id;
  g.a_point = a;
  g.b_point = b;
  g.c_point = c;
  g.d_point = d;
  g.e_point = e;
  g.f_point = f;
  g.v_o = v_o;
  g.sin_bac = safe_sin(b - a, c - a);
  g.sin_bde = safe_sin(b - d, e - d);
  g.ang_edf = safe_angle(d, e, f);
  g.ang_edb = safe_angle(d, e, b);
  g.delta = g.sin_bac - g.sin_bde;
  return g;
}

std::optional<double> first_leg_crossing(
  const Blade & blade, const Segment & leg, double inflate, double t, double horizon,
  double step)
{
  if (!(step > 0.0)) {
    throw std::invalid_argument("first_leg_crossing: step must be > 0");
  }
  const double reach = blade.half_width + inflate;
  const auto samples = static_cast<long>(std::floor(horizon / step + 1e-9));
  for (long k = 0; k <= samples; ++k) {
    const double tau = t + static_cast<double>(k) * step;
    if (segment_segment_distance(blade_centerline(blade, tau), leg) <= reach) {
      return tau;
    }
  }
  return std::nullopt;
}

TrackingResult detect_and_track(
  const DroneState & drone, const Segment & leg, std::span<const SensedBlade> sensed,
  const TrackMap & tracked, std::span<const Blade> blades, double t, double dt,
  double horizon)
{
  if (!(leg.length() > 0.0)) {
    throw std::domain_error("detect_and_track: leg has zero length");
  }
  TrackingResult result;
  for (const SensedBlade & s : sensed) {
    if (s.id < 0 || static_cast<std::size_t>(s.id) >= blades.size()) {
      throw std::out_of_range("detect_and_track: sensed blade id " + std::to_string(s.id));
    }
    const Blade & blade = blades[static_cast<std::size_t>(s.id)];
    const auto crossing = first_leg_crossing(blade, leg, drone.radius, t, horizon, dt / 4.0);
    if (!crossing) {
      continue;
    }
    TrackEntry entry;
    if (auto it = tracked.find(s.id); it != tracked.end()) {
      entry = it->second;
    } else {
      entry.a_point = drone.position;
      entry.c_point = s.pose.e_edge;
      entry.tracked_since = t;
    }
    entry.conflict_time = *crossing;
    result.tracks.emplace(s.id, entry);

    DecisionGeometry g = make_geometry(
      s.id, entry.a_point, leg.b, entry.c_point, drone.position, s.pose.e_edge,
      s.pose.f_edge, s.pose.edge_velocity);
    g.conflict_time = *crossing;
    result.geometries.push_back(g);
  }
  return result;
}

double decision_delta(const DecisionGeometry & g)
{
  return g.sin_bac - g.sin_bde;
}

FuzzyMembership memberships(double delta, const PolicyParams & params)
{
  if (!(delta >= -1.0 && delta <= 1.0)) {
    throw std::domain_error("memberships: delta " + std::to_string(delta) + " outside [-1, 1]");
  }
  if (std::abs(delta) <= params.eq_band) {
    return {1.0, 0.0, 0.0};
  }
  if (delta < 0.0) {
    return {0.3, 1.0, 0.3};
  }
  return {0.0, 0.0, 1.0};
}

Action defuzzify(
  const FuzzyMembership & mu, const DecisionGeometry & g, const PolicyParams & params)
{
  if (g.ang_edf >= params.wide_angle) {
    return Action::kPlusBoost;
  }
  Action best = Action::kMaintain;
  double best_mu = mu.mu_maintain;
  if (mu.mu_plus > best_mu) {
    best = Action::kPlus;
    best_mu = mu.mu_plus;
  }
  if (mu.mu_minus > best_mu) {
    best = Action::kMinus;
  }
  if (best == Action::kMinus && g.ang_edf >= g.ang_edb) {
    return Action::kMinusWidened;
  }
  return best;
}

Vec2 path_vector(const DroneState & drone, const DecisionGeometry & g)
{
  if (g.b_point != g.a_point) {
    return drone.nominal_speed * normalized(g.b_point - g.a_point);
  }
  return drone.nominal_speed * normalized(g.b_point - g.d_point);
}

Vec2 maintain_vector(const DroneState & drone, const DecisionGeometry & g)
{
  if (drone.velocity.norm() > 0.0) {
    return drone.nominal_speed * normalized(drone.velocity);
  }
  return path_vector(drone, g);
}

Vec2 raw_direction(
  Action action, const Vec2 & v_d, const Vec2 & v_o, const Vec2 & beta,
  WideOverride wide_override)
{
  switch (action) {
    case Action::kPlus:
      return v_d + v_o;
    case Action::kMinus:
      return v_d - v_o;
    case Action::kMinusWidened:
      return v_d - v_o + beta;
    case Action::kPlusBoost:
      return wide_override == WideOverride::kPlus ? v_d + v_o : v_d - v_o;
    case Action::kMaintain:
    case Action::kFollow:
      return v_d;
  }
  return v_d;
}

Vec2 widening_vector(
  const DroneState & drone, const DecisionGeometry & g, const PolicyParams & params)
{
  const Vec2 sight = g.e_point - g.d_point;
  if (!(sight.norm() > 0.0)) {
    return {};
  }
  Vec2 n = normalized(perp(sight));
  // Away from the trailing edge; F on the sight line keeps the left normal.
  if (dot(n, g.f_point - g.e_point) > 0.0) {
    n = -n;
  }
  const double excess = std::max(0.0, g.ang_edf - g.ang_edb);
  return params.k_beta * drone.nominal_speed * excess * n;
}

SteeringCommand steering_vector(
  Action action, const DroneState & drone, const DecisionGeometry & g,
  const PolicyParams & params)
{
  const Vec2 v_d = action == Action::kMaintain ? maintain_vector(drone, g) : path_vector(drone, g);
  const Vec2 beta = action == Action::kMinusWidened ? widening_vector(drone, g, params) : Vec2{};

  SteeringCommand cmd;
  cmd.action = action;
  cmd.blade_id = g.blade_id;

  double speed = drone.nominal_speed;
  if (action == Action::kPlusBoost) {
    const double ratio = g.ang_edf / std::max(g.ang_edb, params.eq_band);
    speed = std::min(drone.max_speed, drone.nominal_speed * (1.0 + params.k_alpha * ratio));
    // No headroom above nominal: the override still steers but cannot boost.
    if (!(speed > drone.nominal_speed * (1.0 + 1e-9))) {
      speed = drone.nominal_speed;
      cmd.action = Action::kPlus;
    }
  }

  Vec2 r = raw_direction(action, v_d, g.v_o, beta, params.wide_override);
  if (r.norm() < 1e-9) {
    r = maintain_vector(drone, g);
    cmd.degenerate = true;
  }
  cmd.velocity = speed * normalized(r);
  cmd.boost_factor = speed / drone.nominal_speed;

  const Vec2 sight = g.e_point - g.d_point;
  const double range = sight.norm();
  const double closing = range > 0.0 ? dot(drone.velocity - g.v_o, sight / range) : 0.0;
  if (range == 0.0) {
    cmd.time_to_conflict = 0.0;
  } else if (closing > 0.0) {
    cmd.time_to_conflict = range / closing;
  } else {
    cmd.time_to_conflict = std::numeric_limits<double>::infinity();
  }
  return cmd;
}

SteeringCommand merge_commands(std::span<const SteeringCommand> cmds)
{
  if (cmds.empty()) {
    throw std::domain_error("merge_commands: no commands to merge");
  }
  const auto it = std::min_element(
    cmds.begin(), cmds.end(), [](const SteeringCommand & l, const SteeringCommand & r) {
      if (l.time_to_conflict != r.time_to_conflict) {
        return l.time_to_conflict < r.time_to_conflict;
      }
      return l.blade_id < r.blade_id;
    });
  return *it;
}

}  // namespace bladenav

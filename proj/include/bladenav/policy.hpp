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

#ifndef BLADENAV__POLICY_HPP_
#define BLADENAV__POLICY_HPP_

#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bladenav/geom.hpp"
#include "bladenav/world.hpp"

namespace bladenav
{

/**
 * @brief Crisp steering actions.
 *
 * kPlus steers along V_d + V_o, kMaintain keeps V_d, kMinus steers along
 * V_d - V_o, kMinusWidened adds the lateral widening term to kMinus and
 * kPlusBoost is the wide-blade override with a raised speed. kFollow is not
 * produced by the fuzzy rules; it labels plain leg following when no blade is
 * tracked.
 */
enum class Action
{
  kPlus,
  kMaintain,
  kMinus,
  kMinusWidened,
  kPlusBoost,
  kFollow,
};

std::string_view to_string(Action action);
std::optional<Action> action_from_string(std::string_view name);

/// Direction used by the wide-blade override.
enum class WideOverride
{
  kPlus,
  kMinus,
};

struct PolicyParams
{
  double eq_band{0.05};                       ///< half-width of the "equal sines" band
  double wide_angle{std::numbers::pi / 3.0};  ///< angular size that counts as a wide blade
  double k_beta{1.0};                         ///< widening gain
  double k_alpha{0.5};                        ///< boost gain
  double horizon{0.4};                        ///< crossing prediction horizon, seconds
  WideOverride wide_override{WideOverride::kPlus};

  bool operator==(const PolicyParams &) const = default;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate(const PolicyParams & params);

/// Detection-time record kept for a tracked blade.
struct TrackEntry
{
  Vec2 a_point;            ///< drone position when first tracked
  Vec2 c_point;            ///< blade leading edge when first tracked
  double tracked_since{0};
  double conflict_time{0};  ///< absolute time of the first predicted leg crossing

  bool operator==(const TrackEntry &) const = default;
};

using TrackMap = std::map<int, TrackEntry>;

/**
 * @brief Decision points for one tracked blade.
 *
 * A and C are the drone and blade leading edge at detection, D the drone now,
 * E and F the blade leading and trailing edges now and B the leg target.
 */
struct DecisionGeometry
{
  int blade_id{0};
  double conflict_time{0};
  Vec2 a_point;
  Vec2 b_point;
  Vec2 c_point;
  Vec2 d_point;
  Vec2 e_point;
  Vec2 f_point;
  Vec2 v_o;
  double sin_bac{0};
  double sin_bde{0};
  double ang_edf{0};
  double ang_edb{0};
  double delta{0};
};

/// Fills the derived sines and angles from the six points. Degenerate rays
/// (a point coinciding with its vertex) give a sine of 0 and an angle of pi.
DecisionGeometry make_geometry(
  int blade_id, const Vec2 & a, const Vec2 & b, const Vec2 & c, const Vec2 & d,
  const Vec2 & e, const Vec2 & f, const Vec2 & v_o);

/// Earliest sampled time in [t, t + horizon] at which the blade body, inflated
/// by `inflate`, touches `leg`. Samples are spaced by `step`.
std::optional<double> first_leg_crossing(
  const Blade & blade, const Segment & leg, double inflate, double t, double horizon,
  double step);

struct TrackingResult
{
  TrackMap tracks;
  std::vector<DecisionGeometry> geometries;
};

/**
 * @brief Updates the track map and emits one decision geometry per tracked blade.
 *
 * A sensed blade is tracked while its body, sampled every dt/4, is predicted to
 * cross `leg` within `horizon`. Blades that stop crossing or leave the sensed
 * set are dropped. Throws std::domain_error for a zero-length leg.
 */
TrackingResult detect_and_track(
  const DroneState & drone, const Segment & leg, std::span<const SensedBlade> sensed,
  const TrackMap & tracked, std::span<const Blade> blades, double t, double dt,
  double horizon);

/// sin BAC - sin BDE.
double decision_delta(const DecisionGeometry & g);

struct FuzzyMembership
{
  double mu_plus{0};
  double mu_maintain{0};
  double mu_minus{0};

  bool operator==(const FuzzyMembership &) const = default;
};

/// Piecewise-constant rule table over delta. Throws std::domain_error for
/// delta outside [-1, 1].
FuzzyMembership memberships(double delta, const PolicyParams & params);

/// Crisp action: wide-blade override, then argmax (ties Maintain > Plus >
/// Minus), then the width gate on Minus.
Action defuzzify(
  const FuzzyMembership & mu, const DecisionGeometry & g, const PolicyParams & params);

struct SteeringCommand
{
  Action action{Action::kMaintain};
  Vec2 velocity;
  double boost_factor{1.0};
  int blade_id{-1};
  double time_to_conflict{0};  ///< |DE| / closing speed of the current motion; +inf when opening
  bool degenerate{false};      ///< raw direction vanished, fell back to Maintain
};

/// Drone path vector V_d: nominal speed along the leg direction A -> B
/// (D -> B when the drone has not moved since detection).
Vec2 path_vector(const DroneState & drone, const DecisionGeometry & g);

/// Maintain keeps the current heading at nominal speed; a drone at rest
/// falls back to the path vector.
Vec2 maintain_vector(const DroneState & drone, const DecisionGeometry & g);

/// Unnormalized direction for an action given V_d, V_o and the widening term.
Vec2 raw_direction(Action action, const Vec2 & v_d, const Vec2 & v_o, const Vec2 & beta,
  WideOverride wide_override = WideOverride::kPlus);

/// Widening vector for the MinusWidened action.
Vec2 widening_vector(const DroneState & drone, const DecisionGeometry & g, const PolicyParams & params);

SteeringCommand steering_vector(
  Action action, const DroneState & drone, const DecisionGeometry & g,
  const PolicyParams & params);

/// Picks the command for the most imminent conflict. Throws std::domain_error
/// for an empty list.
SteeringCommand merge_commands(std::span<const SteeringCommand> cmds);

}  // namespace bladenav

#endif  // BLADENAV__POLICY_HPP_

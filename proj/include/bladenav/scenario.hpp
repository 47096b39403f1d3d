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

#ifndef BLADENAV__SCENARIO_HPP_
#define BLADENAV__SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bladenav/geom.hpp"
#include "bladenav/policy.hpp"
#include "bladenav/world.hpp"

namespace bladenav
{

/// Drone parameters shared by every run of a scenario.
struct DroneSpec
{
  double radius{0.2};
  double nominal_speed{1.0};
  double max_speed{2.0};

  bool operator==(const DroneSpec &) const = default;
};

struct Scenario
{
  std::string name{"unnamed"};
  Vec2 start;
  Vec2 goal;
  double goal_tolerance{0.1};
  DroneSpec drone;
  double sensor_range{10.0};
  double dt{0.02};
  int max_steps{10000};
  std::vector<Blade> blades;
  PolicyParams policy_params;

  bool operator==(const Scenario &) const = default;
};

/// Malformed or invalid scenario input. `line()` is 1-based, 0 when unknown.
class ScenarioError : public std::runtime_error
{
public:
  explicit ScenarioError(const std::string & what, int line = 0)
  : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
    line_(line)
  {
  }

  int line() const {return line_;}

private:
  int line_;
};

/// Command-line overrides applied before defaults are resolved.
struct ScenarioOverrides
{
  std::optional<double> dt;
  std::optional<int> max_steps;
};

/// Largest dt that keeps one step shorter than a quarter blade half-width.
double max_stable_dt(const Blade & blade, const DroneSpec & drone);

/// Throws ScenarioError naming the first violated invariant.
void validate(const Scenario & scenario);

Scenario parse_scenario(const std::string & text, const ScenarioOverrides & overrides = {});
Scenario load_scenario(const std::filesystem::path & path, const ScenarioOverrides & overrides = {});

/// Serializes every field, including defaults, in the loadable format.
std::string to_yaml(const Scenario & scenario);

/**
 * @brief Random scenario with `blade_count` blades crossing the x axis.
 *
 * Uses std::mt19937_64 seeded with `seed`; each uniform draw is
 * (engine() >> 11) * 2^-53, so the output does not depend on the standard
 * library's distribution implementations.
 */
Scenario generate_scenario(std::uint64_t seed, int blade_count);

}  // namespace bladenav

#endif  // BLADENAV__SCENARIO_HPP_

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

#include "bladenav/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <random>
#include <sstream>
#include <string_view>

namespace bladenav
{

namespace
{

constexpr int kSchemaVersion = 1;

int line_of(const YAML::Node & node)
{
  const YAML::Mark mark = node.Mark();
  return mark.is_null() ? 0 : mark.line + 1;
}

void check_keys(
  const YAML::Node & map, std::string_view where, std::initializer_list<std::string_view> allowed)
{
  if (!map.IsMap()) {
    throw ScenarioError(std::string(where) + " must be a mapping", line_of(map));
  }
  for (const auto & kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ScenarioError(
              "unknown field '" + key + "' in " + std::string(where), line_of(kv.first));
    }
  }
}

double read_double(const YAML::Node & node, std::string_view key)
{
  try {
    const double v = node.as<double>();
    if (!std::isfinite(v)) {
      throw ScenarioError(std::string(key) + " must be finite", line_of(node));
    }
    return v;
  } catch (const YAML::BadConversion &) {
    throw ScenarioError(std::string(key) + " must be a number", line_of(node));
  }
}

int read_int(const YAML::Node & node, std::string_view key)
{
  try {
    return node.as<int>();
  } catch (const YAML::BadConversion &) {
    throw ScenarioError(std::string(key) + " must be an integer", line_of(node));
  }
}

std::string read_string(const YAML::Node & node, std::string_view key)
{
  if (!node.IsScalar()) {
    throw ScenarioError(std::string(key) + " must be a string", line_of(node));
  }
  return node.as<std::string>();
}

Vec2 read_vec2(const YAML::Node & node, std::string_view key)
{
  if (!node.IsSequence() || node.size() != 2) {
    throw ScenarioError(std::string(key) + " must be a two-element list [x, y]", line_of(node));
  }
  return {read_double(node[0], key), read_double(node[1], key)};
}

template<typename T, typename Reader>
void read_optional(const YAML::Node & map, const char * key, T & out, Reader reader)
{
  if (const YAML::Node n = map[key]; n) {
    out = reader(n, key);
  }
}

Blade read_blade(const YAML::Node & node, std::size_t index)
{
  const std::string where = "blade " + std::to_string(index);
  check_keys(
    node, where,
    {"kind", "anchor", "length", "half_width", "amplitude", "omega", "phase", "axis"});
  for (const char * key : {"kind", "anchor", "length", "omega"}) {
    if (!node[key]) {
      throw ScenarioError(where + ": missing required field '" + key + "'", line_of(node));
    }
  }
  Blade blade;
  const std::string kind = read_string(node["kind"], "kind");
  if (kind == "pendulum") {
    blade.kind = BladeKind::kPendulum;
    blade.axis = {0.0, -1.0};
    if (!node["amplitude"]) {
      throw ScenarioError(where + ": pendulum requires 'amplitude'", line_of(node));
    }
  } else if (kind == "slider") {
    blade.kind = BladeKind::kSlider;
    blade.axis = {0.0, 1.0};
    if (node["amplitude"]) {
      throw ScenarioError(
              where + ": 'amplitude' applies to pendulum blades only", line_of(node["amplitude"]));
    }
  } else {
    throw ScenarioError(
            where + ": kind must be 'pendulum' or 'slider', got '" + kind + "'",
            line_of(node["kind"]));
  }
  blade.anchor = read_vec2(node["anchor"], "anchor");
  blade.length = read_double(node["length"], "length");
  blade.omega = read_double(node["omega"], "omega");
  read_optional(node, "half_width", blade.half_width, read_double);
  read_optional(node, "amplitude", blade.amplitude, read_double);
  read_optional(node, "phase", blade.phase, read_double);
  if (const YAML::Node axis = node["axis"]; axis) {
    const Vec2 raw = read_vec2(axis, "axis");
    if (!(raw.norm() > 0.0)) {
      throw ScenarioError(where + ": axis must be non-zero", line_of(axis));
    }
    blade.axis = normalized(raw);
  }
  try {
    validate(blade);
  } catch (const std::invalid_argument & e) {
    throw ScenarioError(where + ": " + e.what(), line_of(node));
  }
  return blade;
}

/// Shortest text that reads back to the same double.
std::string num(double v)
{
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit_vec2(YAML::Emitter & out, const Vec2 & v)
{
  out << YAML::Flow << YAML::BeginSeq << num(v.x) << num(v.y) << YAML::EndSeq;
}

}  // namespace

double max_stable_dt(const Blade & blade, const DroneSpec & drone)
{
  return blade.half_width / (4.0 * std::max(max_edge_speed(blade), drone.max_speed));
}

void validate(const Scenario & s)
{
  if (!s.start.is_finite() || !s.goal.is_finite()) {
    throw ScenarioError("start and goal must be finite");
  }
  if (s.start == s.goal) {
    throw ScenarioError("start must differ from goal");
  }
  if (!(s.goal_tolerance > 0.0)) {
    throw ScenarioError("goal_tolerance must be > 0");
  }
  if (!(s.drone.radius >= 0.0)) {
    throw ScenarioError("drone.radius must be >= 0");
  }
  if (!(s.drone.nominal_speed > 0.0)) {
    throw ScenarioError("drone.nominal_speed must be > 0");
  }
  if (!(s.drone.max_speed >= s.drone.nominal_speed)) {
    throw ScenarioError("drone.max_speed must be >= drone.nominal_speed");
  }
  if (!(s.sensor_range > 0.0)) {
    throw ScenarioError("sensor_range must be > 0");
  }
  if (!(s.dt > 0.0)) {
    throw ScenarioError("dt must be > 0");
  }
  if (s.max_steps <= 0) {
    throw ScenarioError("max_steps must be > 0");
  }
  try {
    validate(s.policy_params);
  } catch (const std::invalid_argument & e) {
    throw ScenarioError(e.what());
  }
  for (std::size_t i = 0; i < s.blades.size(); ++i) {
    try {
      validate(s.blades[i]);
    } catch (const std::invalid_argument & e) {
      throw ScenarioError("blade " + std::to_string(i) + ": " + e.what());
    }
    const double bound = max_stable_dt(s.blades[i], s.drone);
    if (s.dt > bound) {
      std::ostringstream msg;
      msg << "dt " << s.dt << " violates the anti-tunneling bound "
          << "dt <= half_width / (4 * max(blade edge speed, drone max_speed)) = " << bound
          << " for blade " << i;
      throw ScenarioError(msg.str());
    }
  }
}

Scenario parse_scenario(const std::string & text, const ScenarioOverrides & overrides)
{
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException & e) {
    throw ScenarioError("parse error: " + e.msg, e.mark.line + 1);
  }
  if (!root || root.IsNull()) {
    throw ScenarioError("empty scenario document");
  }
  check_keys(
    root, "scenario",
    {"schema", "name", "start", "goal", "goal_tolerance", "drone", "sensor_range", "dt",
      "max_steps", "blades", "policy_params"});

  if (const YAML::Node schema = root["schema"]; schema) {
    if (read_int(schema, "schema") != kSchemaVersion) {
      throw ScenarioError("unsupported schema version", line_of(schema));
    }
  }
  for (const char * key : {"start", "goal"}) {
    if (!root[key]) {
      throw ScenarioError(std::string("missing required field '") + key + "'", line_of(root));
    }
  }

  Scenario s;
  read_optional(root, "name", s.name, read_string);
  s.start = read_vec2(root["start"], "start");
  s.goal = read_vec2(root["goal"], "goal");
  read_optional(root, "goal_tolerance", s.goal_tolerance, read_double);
  read_optional(root, "sensor_range", s.sensor_range, read_double);
  read_optional(root, "dt", s.dt, read_double);
  read_optional(root, "max_steps", s.max_steps, read_int);

  if (const YAML::Node drone = root["drone"]; drone) {
    check_keys(drone, "drone", {"radius", "nominal_speed", "max_speed"});
    read_optional(drone, "radius", s.drone.radius, read_double);
    read_optional(drone, "nominal_speed", s.drone.nominal_speed, read_double);
    read_optional(drone, "max_speed", s.drone.max_speed, read_double);
  }

  if (const YAML::Node blades = root["blades"]; blades) {
    if (!blades.IsSequence()) {
      throw ScenarioError("blades must be a list", line_of(blades));
    }
    for (std::size_t i = 0; i < blades.size(); ++i) {
      s.blades.push_back(read_blade(blades[i], i));
    }
  }

  if (overrides.dt) {
    s.dt = *overrides.dt;
  }
  if (overrides.max_steps) {
    s.max_steps = *overrides.max_steps;
  }

  // The prediction horizon defaults to 20 steps of the effective dt.
  s.policy_params.horizon = 20.0 * s.dt;
  if (const YAML::Node pp = root["policy_params"]; pp) {
    check_keys(
      pp, "policy_params",
      {"eq_band", "wide_angle", "k_beta", "k_alpha", "horizon", "wide_override"});
    read_optional(pp, "eq_band", s.policy_params.eq_band, read_double);
    read_optional(pp, "wide_angle", s.policy_params.wide_angle, read_double);
    read_optional(pp, "k_beta", s.policy_params.k_beta, read_double);
    read_optional(pp, "k_alpha", s.policy_params.k_alpha, read_double);
    read_optional(pp, "horizon", s.policy_params.horizon, read_double);
    if (const YAML::Node w = pp["wide_override"]; w) {
      const std::string dir = read_string(w, "wide_override");
      if (dir == "plus") {
        s.policy_params.wide_override = WideOverride::kPlus;
      } else if (dir == "minus") {
        s.policy_params.wide_override = WideOverride::kMinus;
      } else {
        throw ScenarioError("wide_override must be 'plus' or 'minus'", line_of(w));
      }
    }
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path & path, const ScenarioOverrides & overrides)
{
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open scenario file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), overrides);
}

std::string to_yaml(const Scenario & s)
{
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "schema" << YAML::Value << kSchemaVersion;
  out << YAML::Key << "name" << YAML::Value << s.name;
  out << YAML::Key << "start" << YAML::Value;
  emit_vec2(out, s.start);
  out << YAML::Key << "goal" << YAML::Value;
  emit_vec2(out, s.goal);
  out << YAML::Key << "goal_tolerance" << YAML::Value << num(s.goal_tolerance);
  out << YAML::Key << "drone" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "radius" << YAML::Value << num(s.drone.radius);
  out << YAML::Key << "nominal_speed" << YAML::Value << num(s.drone.nominal_speed);
  out << YAML::Key << "max_speed" << YAML::Value << num(s.drone.max_speed);
  out << YAML::EndMap;
  out << YAML::Key << "sensor_range" << YAML::Value << num(s.sensor_range);
  out << YAML::Key << "dt" << YAML::Value << num(s.dt);
  out << YAML::Key << "max_steps" << YAML::Value << s.max_steps;
  out << YAML::Key << "policy_params" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "eq_band" << YAML::Value << num(s.policy_params.eq_band);
  out << YAML::Key << "wide_angle" << YAML::Value << num(s.policy_params.wide_angle);
  out << YAML::Key << "k_beta" << YAML::Value << num(s.policy_params.k_beta);
  out << YAML::Key << "k_alpha" << YAML::Value << num(s.policy_params.k_alpha);
  out << YAML::Key << "horizon" << YAML::Value << num(s.policy_params.horizon);
  out << YAML::Key << "wide_override" << YAML::Value <<
  (s.policy_params.wide_override == WideOverride::kPlus ? "plus" : "minus");
  out << YAML::EndMap;
  out << YAML::Key << "blades" << YAML::Value << YAML::BeginSeq;
  for (const Blade & b : s.blades) {
    out << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << std::string(to_string(b.kind));
    out << YAML::Key << "anchor" << YAML::Value;
    emit_vec2(out, b.anchor);
    out << YAML::Key << "length" << YAML::Value << num(b.length);
    out << YAML::Key << "half_width" << YAML::Value << num(b.half_width);
    if (b.kind == BladeKind::kPendulum) {
      out << YAML::Key << "amplitude" << YAML::Value << num(b.amplitude);
    }
    out << YAML::Key << "omega" << YAML::Value << num(b.omega);
    out << YAML::Key << "phase" << YAML::Value << num(b.phase);
    out << YAML::Key << "axis" << YAML::Value;
    emit_vec2(out, b.axis);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

namespace
{

class Uniform
{
public:
  explicit Uniform(std::uint64_t seed)
  : engine_(seed) {}

  double operator()(double lo, double hi)
  {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

private:
  std::mt19937_64 engine_;
};

double round3(double v)
{
  return std::round(v * 1000.0) / 1000.0;
}

}  // namespace

Scenario generate_scenario(std::uint64_t seed, int blade_count)
{
  if (blade_count < 0) {
    throw ScenarioError("blade count must be >= 0");
  }
  Uniform uniform(seed);
  Scenario s;
  s.name = "generated_seed" + std::to_string(seed) + "_k" + std::to_string(blade_count);
  const double spacing = 5.0;
  s.start = {0.0, 0.0};
  s.goal = {spacing * (blade_count + 1), 0.0};
  s.sensor_range = 8.0;

  double dt = 0.02;
  for (int i = 0; i < blade_count; ++i) {
    Blade b;
    const double x = round3(spacing * (i + 1) + uniform(-1.0, 1.0));
    const double peak_speed = uniform(0.4, 0.9) * s.drone.nominal_speed;
    b.half_width = round3(uniform(0.15, 0.35));
    b.phase = round3(uniform(0.0, 2.0 * std::numbers::pi));
    if (uniform(0.0, 1.0) < 0.5) {
      b.kind = BladeKind::kSlider;
      b.anchor = {x, 0.0};
      b.axis = {0.0, 1.0};
      b.length = round3(uniform(1.5, 3.0));
      b.omega = round3(peak_speed / b.length);
    } else {
      b.kind = BladeKind::kPendulum;
      b.length = round3(uniform(3.0, 4.0));
      b.anchor = {x, round3(b.length - 0.5)};
      b.axis = {0.0, -1.0};
      b.amplitude = round3(uniform(0.4, 0.9));
      b.omega = round3(peak_speed / (b.length * b.amplitude));
    }
    b.omega = std::max(b.omega, 0.001);
    dt = std::min(dt, max_stable_dt(b, s.drone));
    s.blades.push_back(b);
  }
  s.dt = std::floor(dt * 1000.0) / 1000.0;
  s.policy_params.horizon = round3(20.0 * s.dt);
  s.max_steps = static_cast<int>(std::ceil(20.0 * s.goal.x / (s.drone.nominal_speed * s.dt)));
  validate(s);
  return s;
}

}  // namespace bladenav

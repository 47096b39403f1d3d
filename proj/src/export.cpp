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

#include "bladenav/export.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bladenav
{

namespace
{

std::string fmt9(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt3(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string xml_escape(std::string_view text)
{
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Bounds
{
  double xmin{std::numeric_limits<double>::infinity()};
  double xmax{-std::numeric_limits<double>::infinity()};
  double ymin{std::numeric_limits<double>::infinity()};
  double ymax{-std::numeric_limits<double>::infinity()};

  void add(const Vec2 & p)
  {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
};

/// Outline of the region a blade body can ever occupy.
struct Envelope
{
  bool is_sector{false};
  Vec2 center;
  double radius{0};
  double from_angle{0};
  double to_angle{0};
  std::vector<Vec2> corners;
};

Envelope envelope(const Blade & b)
{
  Envelope env;
  if (b.kind == BladeKind::kPendulum) {
    env.is_sector = true;
    env.center = b.anchor;
    env.radius = b.length + b.half_width;
    const double rest = std::atan2(b.axis.y, b.axis.x);
    env.from_angle = rest - b.amplitude;
    env.to_angle = rest + b.amplitude;
  } else {
    const Vec2 along = (b.length + b.half_width) * b.axis;
    const Vec2 across = 2.0 * b.half_width * perp(b.axis);
    env.corners = {b.anchor - along - across, b.anchor + along - across,
      b.anchor + along + across, b.anchor - along + across};
  }
  return env;
}

void add_envelope(Bounds & bounds, const Envelope & env)
{
  if (!env.is_sector) {
    for (const Vec2 & c : env.corners) {
      bounds.add(c);
    }
    return;
  }
  bounds.add(env.center);
  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples; ++i) {
    const double a = env.from_angle + (env.to_angle - env.from_angle) * i / kSamples;
    bounds.add(env.center + env.radius * Vec2{std::cos(a), std::sin(a)});
  }
}

}  // namespace

void write_csv(std::ostream & out, const TrajectoryLog & log)
{
  out << kCsvHeader << '\n';
  for (const StepRecord & r : log.records) {
    out << fmt9(r.t) << ',' << fmt9(r.position.x) << ',' << fmt9(r.position.y) << ','
        << fmt9(r.velocity.x) << ',' << fmt9(r.velocity.y) << ',' << to_string(r.action) << ','
        << r.leg << ',' << fmt9(r.clearance) << ',';
    if (r.delta) {
      out << fmt9(*r.delta);
    }
    out << '\n';
  }
}

void export_csv(const TrajectoryLog & log, const std::filesystem::path & path)
{
  std::ostringstream out;
  write_csv(out, log);
  write_text_file(path, out.str());
}

void write_svg(std::ostream & out, const TrajectoryLog & log, const Scenario & scenario)
{
  Bounds bounds;
  bounds.add(scenario.start);
  bounds.add(scenario.goal);
  for (const StepRecord & r : log.records) {
    bounds.add(r.position);
  }
  std::vector<Envelope> envelopes;
  for (const Blade & b : scenario.blades) {
    envelopes.push_back(envelope(b));
    add_envelope(bounds, envelopes.back());
  }

  const auto px = [&](const Vec2 & p) {
      return fmt3(kSvgMargin + (p.x - bounds.xmin) * kSvgScale) + "," +
             fmt3(kSvgMargin + (bounds.ymax - p.y) * kSvgScale);
    };
  const double width = 2.0 * kSvgMargin + (bounds.xmax - bounds.xmin) * kSvgScale;
  const double height = 2.0 * kSvgMargin + (bounds.ymax - bounds.ymin) * kSvgScale;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt3(width) << "\" height=\""
      << fmt3(height) << "\" viewBox=\"0 0 " << fmt3(width) << ' ' << fmt3(height) << "\">\n";
  out << "  <title>" << xml_escape(scenario.name) << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "  <g id=\"blades\" fill=\"#f4b183\" fill-opacity=\"0.45\" stroke=\"#c55a11\">\n";
  for (const Envelope & env : envelopes) {
    if (env.is_sector) {
      const double sweep = env.to_angle - env.from_angle;
      if (sweep >= 2.0 * std::numbers::pi - 1e-9) {
        const Vec2 c = env.center;
        out << "    <circle cx=\"" << fmt3(kSvgMargin + (c.x - bounds.xmin) * kSvgScale)
            << "\" cy=\"" << fmt3(kSvgMargin + (bounds.ymax - c.y) * kSvgScale) << "\" r=\""
            << fmt3(env.radius * kSvgScale) << "\"/>\n";
        continue;
      }
      const Vec2 p0 = env.center + env.radius * Vec2{std::cos(env.from_angle),
        std::sin(env.from_angle)};
      const Vec2 p1 = env.center + env.radius * Vec2{std::cos(env.to_angle),
        std::sin(env.to_angle)};
      const int large_arc = sweep > std::numbers::pi ? 1 : 0;
      // The y flip turns counter-clockwise world arcs into clockwise screen arcs (sweep-flag 1).
      out << "    <path d=\"M " << px(env.center) << " L " << px(p0) << " A "
          << fmt3(env.radius * kSvgScale) << ' ' << fmt3(env.radius * kSvgScale) << " 0 "
          << large_arc << " 1 " << px(p1) << " Z\"/>\n";
    } else {
      out << "    <polygon points=\"";
      for (std::size_t i = 0; i < env.corners.size(); ++i) {
        out << (i ? " " : "") << px(env.corners[i]);
      }
      out << "\"/>\n";
    }
  }
  out << "  </g>\n";

  out << "  <line id=\"ideal\" x1=\"" << fmt3(kSvgMargin + (scenario.start.x - bounds.xmin) *
    kSvgScale) << "\" y1=\"" << fmt3(kSvgMargin + (bounds.ymax - scenario.start.y) * kSvgScale)
      << "\" x2=\"" << fmt3(kSvgMargin + (scenario.goal.x - bounds.xmin) * kSvgScale)
      << "\" y2=\"" << fmt3(kSvgMargin + (bounds.ymax - scenario.goal.y) * kSvgScale)
      << "\" stroke=\"black\" stroke-width=\"4\"/>\n";

  out << "  <polyline id=\"actual\" fill=\"none\" stroke=\"#2f5597\" stroke-width=\"2\" "
    "stroke-dasharray=\"8,5\" points=\"";
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    out << (i ? " " : "") << px(log.records[i].position);
  }
  out << "\"/>\n";

  const auto marker = [&](const char * id, const Vec2 & p, const char * color) {
      out << "  <circle id=\"" << id << "\" cx=\""
          << fmt3(kSvgMargin + (p.x - bounds.xmin) * kSvgScale) << "\" cy=\""
          << fmt3(kSvgMargin + (bounds.ymax - p.y) * kSvgScale) << "\" r=\"6\" fill=\"" << color
          << "\"/>\n";
    };
  marker("start", scenario.start, "#00b050");
  marker("goal", scenario.goal, "#c00000");
  out << "</svg>\n";
}

void export_svg(
  const TrajectoryLog & log, const Scenario & scenario, const std::filesystem::path & path)
{
  std::ostringstream out;
  write_svg(out, log, scenario);
  write_text_file(path, out.str());
}

namespace
{

void emit_metrics_body(YAML::Emitter & out, const Metrics & m)
{
  out << YAML::Key << "outcome" << YAML::Value << std::string(to_string(m.outcome));
  out << YAML::Key << "path_length" << YAML::Value << m.path_length;
  out << YAML::Key << "ideal_length" << YAML::Value << m.ideal_length;
  out << YAML::Key << "time_to_goal" << YAML::Value;
  if (m.time_to_goal) {
    out << *m.time_to_goal;
  } else {
    out << YAML::Null;
  }
  out << YAML::Key << "min_clearance" << YAML::Value << m.min_clearance;
  out << YAML::Key << "replan_count" << YAML::Value << m.replan_count;
  out << YAML::Key << "boost_time_fraction" << YAML::Value << m.boost_time_fraction;
}

}  // namespace

std::string metrics_to_yaml(
  const Metrics & metrics, std::string_view scenario_name, PolicyKind policy)
{
  YAML::Emitter out;
  out.SetDoublePrecision(12);
  out << YAML::BeginMap;
  out << YAML::Key << "scenario" << YAML::Value << std::string(scenario_name);
  out << YAML::Key << "policy" << YAML::Value << std::string(to_string(policy));
  emit_metrics_body(out, metrics);
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string comparison_to_yaml(const Comparison & c, std::string_view scenario_name)
{
  YAML::Emitter out;
  out.SetDoublePrecision(12);
  out << YAML::BeginMap;
  out << YAML::Key << "scenario" << YAML::Value << std::string(scenario_name);
  out << YAML::Key << "fuzzy" << YAML::Value << YAML::BeginMap;
  emit_metrics_body(out, c.fuzzy);
  out << YAML::EndMap;
  out << YAML::Key << "baseline" << YAML::Value << YAML::BeginMap;
  emit_metrics_body(out, c.baseline);
  out << YAML::EndMap;
  out << YAML::Key << "path_length_ratio" << YAML::Value << c.ratio;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

void write_text_file(const std::filesystem::path & path, std::string_view text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

}  // namespace bladenav

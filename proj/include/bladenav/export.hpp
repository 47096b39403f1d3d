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

#ifndef BLADENAV__EXPORT_HPP_
#define BLADENAV__EXPORT_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "bladenav/scenario.hpp"
#include "bladenav/simulation.hpp"

namespace bladenav
{

inline constexpr std::string_view kCsvHeader = "t,x,y,vx,vy,action,leg,clearance,delta";

/// One row per record, numbers with 9 significant digits, empty delta when
/// the step made no decision.
void write_csv(std::ostream & out, const TrajectoryLog & log);
void export_csv(const TrajectoryLog & log, const std::filesystem::path & path);

/// Pixels per meter and margin of the world-to-image transform used by the SVG
/// writer: X = margin + (x - xmin) * scale, Y = margin + (ymax - y) * scale,
/// where [xmin, xmax] x [ymin, ymax] bounds the path, markers and blade sweeps.
inline constexpr double kSvgScale = 40.0;
inline constexpr double kSvgMargin = 20.0;

void write_svg(std::ostream & out, const TrajectoryLog & log, const Scenario & scenario);
void export_svg(
  const TrajectoryLog & log, const Scenario & scenario, const std::filesystem::path & path);

std::string metrics_to_yaml(const Metrics & metrics, std::string_view scenario_name,
  PolicyKind policy);
std::string comparison_to_yaml(const Comparison & comparison, std::string_view scenario_name);

/// Writes `text` to `path`; throws std::runtime_error on I/O failure.
void write_text_file(const std::filesystem::path & path, std::string_view text);

}  // namespace bladenav

#endif  // BLADENAV__EXPORT_HPP_

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

#include <cstdint>
#include <exception>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bladenav/export.hpp"
#include "bladenav/scenario.hpp"
#include "bladenav/simulation.hpp"

namespace
{

// Exit codes for scripted batch runs.
constexpr int kExitGoal = 0;
constexpr int kExitCollision = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitInvalid = 4;

int exit_code(bladenav::Outcome outcome)
{
  switch (outcome) {
    case bladenav::Outcome::kGoal:
      return kExitGoal;
    case bladenav::Outcome::kCollision:
      return kExitCollision;
    case bladenav::Outcome::kTimeout:
      return kExitTimeout;
  }
  return kExitInvalid;
}

struct CommonOptions
{
  std::optional<double> dt;
  std::optional<int> max_steps;

  bladenav::ScenarioOverrides overrides() const {return {dt, max_steps};}
};

void add_overrides(CLI::App * cmd, CommonOptions & opts)
{
  cmd->add_option("--dt", opts.dt, "Override the scenario time step (s)")->check(
    CLI::PositiveNumber);
  cmd->add_option("--max-steps", opts.max_steps, "Override the scenario step limit")->check(
    CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Fuzzy blade-evasion navigator: simulate, compare and generate scenarios"};
  app.require_subcommand(1);

  CommonOptions sim_opts;
  std::string sim_scenario;
  std::string sim_policy = "fuzzy";
  std::string sim_csv;
  std::string sim_svg;
  std::string sim_metrics;
  auto * simulate = app.add_subcommand("simulate", "Run one policy on a scenario");
  simulate->add_option("--scenario", sim_scenario, "Scenario file")->required();
  simulate->add_option("--policy", sim_policy, "fuzzy or baseline")
  ->check(CLI::IsMember({"fuzzy", "baseline"}));
  simulate->add_option("--csv", sim_csv, "Trajectory CSV output");
  simulate->add_option("--svg", sim_svg, "Trajectory SVG output");
  simulate->add_option("--metrics", sim_metrics, "Metrics YAML output (stdout if omitted)");
  add_overrides(simulate, sim_opts);

  CommonOptions cmp_opts;
  std::string cmp_scenario;
  std::string cmp_out;
  auto * compare = app.add_subcommand("compare", "Run both policies and compare path lengths");
  compare->add_option("--scenario", cmp_scenario, "Scenario file")->required();
  compare->add_option("--out", cmp_out, "Comparison YAML output")->required();
  add_overrides(compare, cmp_opts);

  std::uint64_t gen_seed = 0;
  int gen_blades = 1;
  std::string gen_out;
  auto * gen = app.add_subcommand("gen", "Generate a random scenario from a seed");
  gen->add_option("--seed", gen_seed, "Seed for std::mt19937_64")->required();
  gen->add_option("--blades", gen_blades, "Number of blades")->required()->check(
    CLI::NonNegativeNumber);
  gen->add_option("--out", gen_out, "Scenario output file")->required();

  CommonOptions batch_opts;
  std::vector<std::string> batch_scenarios;
  std::string batch_policy = "fuzzy";
  std::string batch_dir;
  auto * batch = app.add_subcommand("batch", "Run many scenarios concurrently");
  batch->add_option("scenarios", batch_scenarios, "Scenario files")->required();
  batch->add_option("--policy", batch_policy, "fuzzy or baseline")
  ->check(CLI::IsMember({"fuzzy", "baseline"}));
  batch->add_option("--out-dir", batch_dir, "Directory for <name>.csv and <name>.yaml")
  ->required();
  add_overrides(batch, batch_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*simulate) {
      const auto scenario = bladenav::load_scenario(sim_scenario, sim_opts.overrides());
      const auto policy = *bladenav::policy_from_string(sim_policy);
      const auto result = bladenav::run_simulation(scenario, policy);
      if (!sim_csv.empty()) {
        bladenav::export_csv(result.log, sim_csv);
      }
      if (!sim_svg.empty()) {
        bladenav::export_svg(result.log, scenario, sim_svg);
      }
      const std::string metrics = bladenav::metrics_to_yaml(result.metrics, scenario.name, policy);
      if (sim_metrics.empty()) {
        std::cout << metrics;
      } else {
        bladenav::write_text_file(sim_metrics, metrics);
      }
      return exit_code(result.metrics.outcome);
    }

    if (*compare) {
      const auto scenario = bladenav::load_scenario(cmp_scenario, cmp_opts.overrides());
      const auto comparison = bladenav::compare_policies(scenario);
      bladenav::write_text_file(cmp_out, bladenav::comparison_to_yaml(comparison, scenario.name));
      std::cout << "path length ratio (baseline/fuzzy): " << comparison.ratio << '\n';
      return 0;
    }

    if (*gen) {
      const auto scenario = bladenav::generate_scenario(gen_seed, gen_blades);
      bladenav::write_text_file(gen_out, bladenav::to_yaml(scenario));
      return 0;
    }

    if (*batch) {
      const auto policy = *bladenav::policy_from_string(batch_policy);
      std::filesystem::create_directories(batch_dir);
      std::vector<bladenav::Scenario> scenarios;
      for (const auto & file : batch_scenarios) {
        scenarios.push_back(bladenav::load_scenario(file, batch_opts.overrides()));
      }
      std::vector<std::future<bladenav::SimulationResult>> runs;
      for (const auto & s : scenarios) {
        runs.push_back(std::async(std::launch::async, [&s, policy] {
            return bladenav::run_simulation(s, policy);
          }));
      }
      int worst = kExitGoal;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto result = runs[i].get();
        const auto base = std::filesystem::path(batch_dir) / scenarios[i].name;
        bladenav::export_csv(result.log, base.string() + ".csv");
        bladenav::write_text_file(
          base.string() + ".yaml",
          bladenav::metrics_to_yaml(result.metrics, scenarios[i].name, policy));
        std::cout << scenarios[i].name << ": " << bladenav::to_string(result.metrics.outcome)
                  << '\n';
        worst = std::max(worst, exit_code(result.metrics.outcome));
      }
      return worst;
    }
  } catch (const bladenav::ScenarioError & e) {
    std::cerr << "invalid scenario: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

// Copyright 2026 The nuqr Authors
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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "nuqr/channels.hpp"
#include "nuqr/errors.hpp"
#include "nuqr/experiments.hpp"
#include "nuqr/sweep.hpp"
#include "nuqr/table_io.hpp"

namespace nuqr::cli {
namespace {

// Raw option text; numbers are parsed afterwards so that "pi/2" works.
struct ScenarioOptions {
  std::string experiment;
  std::string theta, dm2, baseline, energy, phi;
  std::string channel, tau, t, chi, mu;
  std::string measures;
  std::string format = "csv";
  std::string output;
  unsigned threads = 1;
  std::vector<std::string> grids;
};

void add_state_options(CLI::App* cmd, ScenarioOptions& o) {
  auto* exp = cmd->add_option("--experiment", o.experiment, "Experiment name from the config");
  auto* theta = cmd->add_option("--theta", o.theta, "Mixing angle in radians (pi forms allowed)");
  cmd->add_option("--dm2", o.dm2, "Mass splitting in eV^2")->needs(theta);
  cmd->add_option("--baseline", o.baseline, "Baseline in km")->needs(theta);
  cmd->add_option("--energy", o.energy, "Neutrino energy in GeV")->needs(theta);
  cmd->add_option("--phi", o.phi, "Oscillation phase in radians; overrides the kinematics");
  exp->excludes(theta);
}

void add_noise_options(CLI::App* cmd, ScenarioOptions& o) {
  cmd->add_option("--channel", o.channel, "Noise channel: ad, pf or pd");
  cmd->add_option("--tau", o.tau, "Channel strength in [0, 1]");
  cmd->add_option("--t", o.t, "Dephasing time");
  cmd->add_option("--chi", o.chi, "Environmental correlation time");
  cmd->add_option("--mu", o.mu, "Classical correlation between the two dephasing channels");
}

void add_output_options(CLI::App* cmd, ScenarioOptions& o) {
  cmd->add_option("--measures", o.measures,
                  "Comma-separated subset of steering_ab,steering_ba,steering_asym,"
                  "log_negativity,coherence_l1");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "Output file (default: standard output)");
}

std::optional<double> real_or_none(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_real(text);
}

Scenario to_scenario(const ScenarioOptions& o) {
  Scenario sc;
  if (!o.experiment.empty()) sc.state.experiment = o.experiment;
  sc.state.theta = real_or_none(o.theta);
  const bool any_kin = !o.dm2.empty() || !o.baseline.empty() || !o.energy.empty();
  if (any_kin) {
    if (o.dm2.empty() || o.baseline.empty() || o.energy.empty()) {
      throw ConfigError("--dm2, --baseline and --energy go together");
    }
    sc.state.kinematics =
        OscillationKinematics{parse_real(o.dm2), parse_real(o.baseline), parse_real(o.energy)};
  }
  sc.state.phi = real_or_none(o.phi);
  if (!o.channel.empty()) sc.channel = parse_channel_kind(o.channel);
  sc.tau = real_or_none(o.tau);
  sc.t = real_or_none(o.t);
  sc.chi = real_or_none(o.chi);
  sc.mu = real_or_none(o.mu);
  if (!o.measures.empty()) sc.measures = parse_measure_list(o.measures);
  sc.threads = o.threads;
  return sc;
}

std::pair<std::string, Grid> split_grid(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("--grid expects VAR=start:stop:count, got '" + arg + "'");
  }
  return {arg.substr(0, eq), parse_grid(arg.substr(eq + 1))};
}

ExperimentRegistry registry_for(const Scenario& sc, const std::string& config_path) {
  if (!sc.state.experiment) return {};
  return load_experiments_file(config_path);
}

void write_table(const ResultTable& table, const ScenarioOptions& o, std::ostream& out) {
  const std::string text = o.format == "json" ? emit_json(table) : emit_csv(table);
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + o.output + "'");
  file << text;
}

void list_experiments(const ExperimentRegistry& registry, const std::string& format,
                      std::ostream& out) {
  if (registry.empty()) {
    if (format == "json") {
      out << "[]\n";
    } else {
      out << "name,theta,delta_m_squared,baseline,energy,phi\n";
    }
    return;
  }
  if (format == "json") {
    out << "[\n";
    for (std::size_t i = 0; i < registry.size(); ++i) {
      const auto& r = registry.records()[i];
      out << "  {\"name\": \"" << r.name << "\", \"theta\": " << format_number(r.theta)
          << ", \"delta_m_squared\": " << format_number(r.delta_m_squared)
          << ", \"baseline\": " << format_number(r.baseline_km)
          << ", \"energy\": " << format_number(r.energy_gev)
          << ", \"phi\": " << format_number(r.phase().radians()) << "}"
          << (i + 1 < registry.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return;
  }
  out << "name,theta,delta_m_squared,baseline,energy,phi\n";
  for (const auto& r : registry.records()) {
    out << r.name << ',' << format_number(r.theta) << ',' << format_number(r.delta_m_squared)
        << ',' << format_number(r.baseline_km) << ',' << format_number(r.energy_gev) << ','
        << format_number(r.phase().radians()) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum resources of two-flavor neutrino oscillations under noise", "nuqr"};
  app.require_subcommand(1);
  std::string config_path = "experiments.conf";
  app.add_option("--config", config_path, "Experiment registry file")->capture_default_str();

  ScenarioOptions point_opts;
  auto* measures_cmd = app.add_subcommand("measures", "Evaluate the measures at one point");
  add_state_options(measures_cmd, point_opts);
  add_noise_options(measures_cmd, point_opts);
  add_output_options(measures_cmd, point_opts);

  ScenarioOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "1-D sweep over phi, tau or t");
  add_state_options(sweep_cmd, sweep_opts);
  add_noise_options(sweep_cmd, sweep_opts);
  add_output_options(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--grid", sweep_opts.grids, "VAR=start:stop:count, VAR in phi, tau, t")
      ->required()
      ->expected(1);
  sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  ScenarioOptions map_opts;
  auto* map_cmd = app.add_subcommand("map", "2-D (tau, t) map with a channel and dephasing");
  add_state_options(map_cmd, map_opts);
  add_noise_options(map_cmd, map_opts);
  add_output_options(map_cmd, map_opts);
  map_cmd->add_option("--grid", map_opts.grids, "tau=start:stop:count and t=start:stop:count")
      ->required()
      ->expected(1, 2);
  map_cmd->add_option("--threads", map_opts.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* experiments_cmd = app.add_subcommand("experiments", "Inspect the experiment registry");
  experiments_cmd->require_subcommand(1);
  std::string list_format = "csv";
  auto* list_cmd = experiments_cmd->add_subcommand("list", "List registered experiments");
  list_cmd->add_option("--format", list_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    if (*measures_cmd) {
      const Scenario sc = to_scenario(point_opts);
      write_table(run_point(sc, registry_for(sc, config_path)), point_opts, out);
    } else if (*sweep_cmd) {
      SweepConfig cfg;
      cfg.scenario = to_scenario(sweep_opts);
      const auto [var, grid] = split_grid(sweep_opts.grids.front());
      cfg.variable = parse_sweep_variable(var);
      cfg.grid = grid;
      write_table(run_sweep(cfg, registry_for(cfg.scenario, config_path)), sweep_opts, out);
    } else if (*map_cmd) {
      MapConfig cfg;
      cfg.scenario = to_scenario(map_opts);
      std::optional<Grid> tau_grid;
      std::optional<Grid> t_grid;
      for (const auto& arg : map_opts.grids) {
        auto [var, grid] = split_grid(arg);
        if (var == "tau" && !tau_grid) {
          tau_grid = grid;
        } else if (var == "t" && !t_grid) {
          t_grid = grid;
        } else {
          throw ConfigError("map takes one tau= and one t= grid, got '" + arg + "'");
        }
      }
      if (!tau_grid || !t_grid) throw ConfigError("map needs both tau= and t= grids");
      cfg.tau_grid = *tau_grid;
      cfg.t_grid = *t_grid;
      write_table(run_density_map(cfg, registry_for(cfg.scenario, config_path)), map_opts, out);
    } else if (*list_cmd) {
      list_experiments(load_experiments_file(config_path), list_format, out);
    }
  } catch (const ConfigError& e) {
    err << "nuqr: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "nuqr: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "nuqr: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace nuqr::cli

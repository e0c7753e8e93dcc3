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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuqr/channels.hpp"
#include "nuqr/experiments.hpp"
#include "nuqr/qstate.hpp"

namespace nuqr {

enum class Measure { SteeringAB, SteeringBA, SteeringAsymmetry, LogNegativity, CoherenceL1 };

/// steering_ab, steering_ba, steering_asym, log_negativity, coherence_l1
std::string_view column_name(Measure m);
/// Accepts the column names above. Throws ConfigError otherwise.
Measure parse_measure(std::string_view name);
std::vector<Measure> all_measures();
/// Comma-separated list of measure names.
std::vector<Measure> parse_measure_list(std::string_view list);

enum class SweepVariable { Phi, Tau, Time };
std::string_view column_name(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);

/// Evenly spaced closed interval [start, stop] with `count` points.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;

  /// Throws ConfigError unless count >= 2 and start < stop (both finite).
  void validate() const;
  std::vector<double> values() const;
};

/// "start:stop:count". Bounds accept plain numbers or multiples of pi such as
/// "pi", "pi/2", "3*pi/4", "0.5pi".
Grid parse_grid(std::string_view text);
/// A real number, or a multiple of pi as above.
double parse_real(std::string_view text);

/// Where the two-qubit state comes from. An explicit `phi` wins over the
/// experiment's phase; inline theta and kinematics are used when no
/// experiment is named.
struct StateSpec {
  std::optional<std::string> experiment;
  std::optional<double> theta;
  std::optional<OscillationKinematics> kinematics;
  std::optional<double> phi;
};

/// Everything except the swept coordinates.
struct Scenario {
  StateSpec state;
  std::optional<ChannelKind> channel;
  std::optional<double> tau;
  std::optional<double> t;
  std::optional<double> chi;
  std::optional<double> mu;
  std::vector<Measure> measures = all_measures();
  /// Worker threads for grid evaluation; output does not depend on it.
  unsigned threads = 1;
};

struct SweepConfig {
  Scenario scenario;
  SweepVariable variable = SweepVariable::Phi;
  Grid grid;
};

struct MapConfig {
  Scenario scenario;  // channel, chi and mu are required
  Grid tau_grid;
  Grid t_grid;
};

/// Column names and rows of finite numbers, in output order.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Single point: columns theta, phi, [tau], [t], then the measures.
ResultTable run_point(const Scenario& scenario, const ExperimentRegistry& registry);

/// 1-D sweep, rows in ascending grid order. Throws ConfigError for an
/// inconsistent configuration and DomainError for out-of-range values.
ResultTable run_sweep(const SweepConfig& cfg, const ExperimentRegistry& registry);

/// 2-D (tau, t) map. Rows are ordered tau-major: all t values for the first
/// tau, then the next tau. Columns tau, t, then the measures.
ResultTable run_density_map(const MapConfig& cfg, const ExperimentRegistry& registry);

}  // namespace nuqr

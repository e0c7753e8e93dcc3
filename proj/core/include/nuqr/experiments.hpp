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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuqr/qstate.hpp"

namespace nuqr {

/// Named oscillation parameter set.
struct ExperimentRecord {
  std::string name;
  double theta = 0.0;            // radians
  double delta_m_squared = 0.0;  // eV^2
  double baseline_km = 0.0;
  double energy_gev = 0.0;
  std::optional<double> phi_override;  // radians, bypasses the kinematics

  MixingAngle mixing_angle() const { return MixingAngle(theta); }
  PhaseAngle phase() const;
};

class ExperimentRegistry {
 public:
  /// Throws ConfigError naming the duplicate when `record.name` is taken.
  void add(ExperimentRecord record);

  const ExperimentRecord* find(std::string_view name) const;
  /// Throws ConfigError for an unknown name.
  const ExperimentRecord& at(std::string_view name) const;

  /// Records in the order they were added.
  const std::vector<ExperimentRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

 private:
  std::vector<ExperimentRecord> records_;
};

/// Parses INI-style sections:
///
///     # comment
///     [KamLAND]
///     theta = 0.59            # radians
///     delta_m_squared = 7.5e-5
///     baseline = 180          # km
///     energy = 0.004          # GeV
///     phi_override = 1.2      # optional
///
/// The three kinematic keys may be left out when phi_override is given.
/// Errors are ConfigError carrying the offending line number.
ExperimentRegistry load_experiments(std::string_view config_text);
ExperimentRegistry load_experiments_file(const std::filesystem::path& path);

}  // namespace nuqr

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

#include "nuqr/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "nuqr/errors.hpp"

namespace nuqr {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view key, std::size_t line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("malformed number '" + std::string(text) + "' for key '" +
                      std::string(key) + "'",
                      line);
  }
  return value;
}

struct PendingSection {
  ExperimentRecord record;
  std::size_t line = 0;
  bool has_theta = false;
  bool has_dm2 = false;
  bool has_baseline = false;
  bool has_energy = false;
  std::set<std::string> keys;
};

ExperimentRecord finish(const PendingSection& s) {
  const auto& r = s.record;
  auto fail = [&](const std::string& what) {
    throw ConfigError("experiment '" + r.name + "': " + what, s.line);
  };
  if (!s.has_theta) fail("missing required field 'theta'");
  if (r.theta < 0.0 || r.theta > std::numbers::pi / 2) fail("theta must lie in [0, pi/2]");

  const bool any_kin = s.has_dm2 || s.has_baseline || s.has_energy;
  const bool all_kin = s.has_dm2 && s.has_baseline && s.has_energy;
  if (!r.phi_override) {
    if (!s.has_dm2) fail("missing required field 'delta_m_squared'");
    if (!s.has_baseline) fail("missing required field 'baseline'");
    if (!s.has_energy) fail("missing required field 'energy'");
  } else if (any_kin && !all_kin) {
    fail("kinematic fields must be given together");
  }
  if (r.phi_override && *r.phi_override < 0.0) fail("phi_override must be non-negative");
  if (all_kin) {
    if (r.baseline_km <= 0.0) fail("baseline must be positive");
    if (r.energy_gev <= 0.0) fail("energy must be positive");
  }
  return r;
}

}  // namespace

PhaseAngle ExperimentRecord::phase() const {
  if (phi_override) return PhaseAngle(*phi_override);
  return oscillation_phase({delta_m_squared, baseline_km, energy_gev});
}

void ExperimentRegistry::add(ExperimentRecord record) {
  if (record.name.empty()) throw ConfigError("experiment name must not be empty");
  if (find(record.name) != nullptr) {
    throw ConfigError("duplicate experiment '" + record.name + "'");
  }
  records_.push_back(std::move(record));
}

const ExperimentRecord* ExperimentRegistry::find(std::string_view name) const {
  const auto it = std::find_if(records_.begin(), records_.end(),
                               [&](const ExperimentRecord& r) { return r.name == name; });
  return it == records_.end() ? nullptr : &*it;
}

const ExperimentRecord& ExperimentRegistry::at(std::string_view name) const {
  if (const auto* r = find(name)) return *r;
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

ExperimentRegistry load_experiments(std::string_view config_text) {
  ExperimentRegistry registry;
  std::optional<PendingSection> current;

  auto flush = [&] {
    if (!current) return;
    auto record = finish(*current);
    if (registry.find(record.name) != nullptr) {
      throw ConfigError("duplicate experiment '" + record.name + "'", current->line);
    }
    registry.add(std::move(record));
    current.reset();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= config_text.size()) {
    const auto eol = config_text.find('\n', pos);
    std::string_view line = config_text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? config_text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      const auto name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw ConfigError("empty experiment name", line_no);
      flush();
      current.emplace();
      current->record.name = std::string(name);
      current->line = line_no;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
    if (!current) throw ConfigError("key outside of an [experiment] section", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto raw = trim(line.substr(eq + 1));
    if (raw.empty()) throw ConfigError("missing value for key '" + std::string(key) + "'", line_no);

    if (!current->keys.insert(std::string(key)).second) {
      throw ConfigError("repeated key '" + std::string(key) + "'", line_no);
    }
    auto& rec = current->record;
    if (key == "theta") {
      rec.theta = parse_number(raw, key, line_no);
      current->has_theta = true;
    } else if (key == "delta_m_squared") {
      rec.delta_m_squared = parse_number(raw, key, line_no);
      current->has_dm2 = true;
    } else if (key == "baseline") {
      rec.baseline_km = parse_number(raw, key, line_no);
      current->has_baseline = true;
    } else if (key == "energy") {
      rec.energy_gev = parse_number(raw, key, line_no);
      current->has_energy = true;
    } else if (key == "phi_override") {
      rec.phi_override = parse_number(raw, key, line_no);
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  flush();
  return registry;
}

ExperimentRegistry load_experiments_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open experiment config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_experiments(buf.str());
}

}  // namespace nuqr

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

#include "nuqr/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <thread>

#include "nuqr/dephasing.hpp"
#include "nuqr/errors.hpp"
#include "nuqr/measures.hpp"

namespace nuqr {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_plain(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

struct Point {
  double theta = 0.0;
  double phi = 0.0;
  std::optional<ChannelKind> channel;
  std::optional<double> tau;
  std::optional<double> t;
  std::optional<DephasingParams> dephasing;
};

ResourceTriple evaluate(const Point& p) {
  DensityMatrix4 rho = build_density_matrix(MixingAngle(p.theta), PhaseAngle(p.phi));
  if (p.channel) rho = apply_channel(rho, *p.channel, NoiseStrength(*p.tau));
  if (p.dephasing) rho = apply_correlated_dephasing(rho, TimePoint(*p.t), *p.dephasing);
  return resource_triple(rho);
}

double pick(const ResourceTriple& r, Measure m) {
  switch (m) {
    case Measure::SteeringAB:
      return r.steering.s_ab;
    case Measure::SteeringBA:
      return r.steering.s_ba;
    case Measure::SteeringAsymmetry:
      return r.steering.asymmetry;
    case Measure::LogNegativity:
      return r.negativity;
    case Measure::CoherenceL1:
      return r.coherence;
  }
  return 0.0;
}

void append_measures(std::vector<double>& row, const ResourceTriple& r,
                     const std::vector<Measure>& measures) {
  for (Measure m : measures) row.push_back(pick(r, m));
}

std::vector<std::string> measure_columns(const std::vector<Measure>& measures) {
  std::vector<std::string> cols;
  for (Measure m : measures) cols.emplace_back(column_name(m));
  return cols;
}

// Runs body(i) for i in [0, n). Each index writes only its own slot, so the
// assembled output does not depend on the thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double resolve_theta(const StateSpec& s, const ExperimentRegistry& registry) {
  if (s.experiment) {
    if (s.theta || s.kinematics) {
      throw ConfigError("give either an experiment name or inline parameters, not both");
    }
    return registry.at(*s.experiment).theta;
  }
  if (!s.theta) throw ConfigError("no state given: name an experiment or pass theta");
  return MixingAngle(*s.theta).radians();
}

std::optional<double> resolve_phi(const StateSpec& s, const ExperimentRegistry& registry) {
  if (s.phi) return PhaseAngle(*s.phi).radians();
  if (s.experiment) return registry.at(*s.experiment).phase().radians();
  if (s.kinematics) return oscillation_phase(*s.kinematics).radians();
  return std::nullopt;
}

// Common checks; `swept` names the coordinates provided by a grid.
Point base_point(const Scenario& sc, const ExperimentRegistry& registry, bool phi_swept,
                 bool tau_swept, bool t_swept) {
  Point p;
  p.theta = resolve_theta(sc.state, registry);
  if (phi_swept) {
    if (sc.state.phi) throw ConfigError("phi is swept; do not also fix it");
  } else {
    const auto phi = resolve_phi(sc.state, registry);
    if (!phi) throw ConfigError("oscillation phase unknown: pass phi or the kinematics");
    p.phi = *phi;
  }

  if (tau_swept && !sc.channel) throw ConfigError("a tau or t sweep needs a channel");
  if (tau_swept && sc.tau) throw ConfigError("tau is swept; do not also fix it");
  if (sc.tau && !sc.channel) throw ConfigError("tau given without a channel");
  if (sc.channel && !tau_swept && !sc.tau) throw ConfigError("channel given without tau");
  p.channel = sc.channel;
  if (sc.tau) p.tau = NoiseStrength(*sc.tau).value();

  if (t_swept && sc.t) throw ConfigError("t is swept; do not also fix it");
  const bool any_dephasing = sc.chi || sc.mu || sc.t || t_swept;
  if (any_dephasing) {
    if (!sc.chi || !sc.mu) throw ConfigError("dephasing needs both chi and mu");
    if (!sc.t && !t_swept) throw ConfigError("dephasing needs a time t");
    p.dephasing = DephasingParams(*sc.chi, *sc.mu);
    if (sc.t) p.t = TimePoint(*sc.t).value();
  }
  if (sc.measures.empty()) throw ConfigError("no measures requested");
  return p;
}

}  // namespace

std::string_view column_name(Measure m) {
  switch (m) {
    case Measure::SteeringAB:
      return "steering_ab";
    case Measure::SteeringBA:
      return "steering_ba";
    case Measure::SteeringAsymmetry:
      return "steering_asym";
    case Measure::LogNegativity:
      return "log_negativity";
    case Measure::CoherenceL1:
      return "coherence_l1";
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : all_measures())
    if (column_name(m) == name) return m;
  throw ConfigError("unknown measure '" + std::string(name) + "'");
}

std::vector<Measure> all_measures() {
  return {Measure::SteeringAB, Measure::SteeringBA, Measure::SteeringAsymmetry,
          Measure::LogNegativity, Measure::CoherenceL1};
}

std::vector<Measure> parse_measure_list(std::string_view list) {
  std::vector<Measure> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = list.find(',', pos);
    const auto item = trim(list.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos));
    if (!item.empty()) {
      const Measure m = parse_measure(item);
      if (std::find(out.begin(), out.end(), m) != out.end()) {
        throw ConfigError("measure '" + std::string(item) + "' listed twice");
      }
      out.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("empty measure list");
  return out;
}

std::string_view column_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::Phi:
      return "phi";
    case SweepVariable::Tau:
      return "tau";
    case SweepVariable::Time:
      return "t";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "phi") return SweepVariable::Phi;
  if (name == "tau") return SweepVariable::Tau;
  if (name == "t") return SweepVariable::Time;
  throw ConfigError("unknown sweep variable '" + std::string(name) + "' (expected phi, tau or t)");
}

void Grid::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw ConfigError("grid bounds must be finite");
  if (count < 2) throw ConfigError("grid needs at least 2 points");
  if (!(start < stop)) throw ConfigError("grid start must be below stop");
}

std::vector<double> Grid::values() const {
  validate();
  std::vector<double> v(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = start + step * static_cast<double>(i);
  v.back() = stop;
  return v;
}

double parse_real(std::string_view text) {
  text = trim(text);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_plain(text);

  std::string_view coeff = trim(text.substr(0, pi_at));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
  double value = std::numbers::pi;
  if (coeff == "-") {
    value = -value;
  } else if (!coeff.empty()) {
    value *= parse_plain(coeff);
  }
  std::string_view rest = trim(text.substr(pi_at + 2));
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("malformed number '" + std::string(text) + "'");
    const double denom = parse_plain(trim(rest.substr(1)));
    if (denom == 0.0) throw ConfigError("division by zero in '" + std::string(text) + "'");
    value /= denom;
  }
  return value;
}

Grid parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    throw ConfigError("grid must be start:stop:count, got '" + std::string(text) + "'");
  }
  Grid g;
  g.start = parse_real(text.substr(0, c1));
  g.stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const auto count_text = trim(text.substr(c2 + 1));
  std::size_t count = 0;
  const auto [ptr, ec] =
      std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
    throw ConfigError("malformed grid count '" + std::string(count_text) + "'");
  }
  g.count = count;
  g.validate();
  return g;
}

ResultTable run_point(const Scenario& scenario, const ExperimentRegistry& registry) {
  const Point p = base_point(scenario, registry, false, false, false);
  ResultTable table;
  table.columns = {"theta", "phi"};
  std::vector<double> row{p.theta, p.phi};
  if (p.tau) {
    table.columns.emplace_back("tau");
    row.push_back(*p.tau);
  }
  if (p.t) {
    table.columns.emplace_back("t");
    row.push_back(*p.t);
  }
  for (auto& c : measure_columns(scenario.measures)) table.columns.push_back(std::move(c));
  append_measures(row, evaluate(p), scenario.measures);
  table.rows.push_back(std::move(row));
  return table;
}

ResultTable run_sweep(const SweepConfig& cfg, const ExperimentRegistry& registry) {
  const auto xs = cfg.grid.values();
  if (cfg.variable == SweepVariable::Time && !cfg.scenario.channel) {
    throw ConfigError("a tau or t sweep needs a channel");
  }
  const Point base = base_point(cfg.scenario, registry, cfg.variable == SweepVariable::Phi,
                                cfg.variable == SweepVariable::Tau,
                                cfg.variable == SweepVariable::Time);

  // Validate every grid value up front so domain errors surface before work starts.
  for (double x : xs) {
    switch (cfg.variable) {
      case SweepVariable::Phi:
        PhaseAngle{x};
        break;
      case SweepVariable::Tau:
        NoiseStrength{x};
        break;
      case SweepVariable::Time:
        TimePoint{x};
        break;
    }
  }

  ResultTable table;
  table.columns.emplace_back(column_name(cfg.variable));
  for (auto& c : measure_columns(cfg.scenario.measures)) table.columns.push_back(std::move(c));
  table.rows.resize(xs.size());

  parallel_for(xs.size(), cfg.scenario.threads, [&](std::size_t i) {
    Point p = base;
    switch (cfg.variable) {
      case SweepVariable::Phi:
        p.phi = xs[i];
        break;
      case SweepVariable::Tau:
        p.tau = xs[i];
        break;
      case SweepVariable::Time:
        p.t = xs[i];
        break;
    }
    std::vector<double> row{xs[i]};
    append_measures(row, evaluate(p), cfg.scenario.measures);
    table.rows[i] = std::move(row);
  });
  return table;
}

ResultTable run_density_map(const MapConfig& cfg, const ExperimentRegistry& registry) {
  const auto& sc = cfg.scenario;
  if (!sc.channel) throw ConfigError("a density map needs a channel");
  if (!sc.chi || !sc.mu) throw ConfigError("a density map needs chi and mu");
  const Point base = base_point(sc, registry, false, true, true);

  const auto taus = cfg.tau_grid.values();
  const auto ts = cfg.t_grid.values();
  for (double x : taus) NoiseStrength{x};
  for (double x : ts) TimePoint{x};

  ResultTable table;
  table.columns = {"tau", "t"};
  for (auto& c : measure_columns(sc.measures)) table.columns.push_back(std::move(c));
  table.rows.resize(taus.size() * ts.size());

  parallel_for(table.rows.size(), sc.threads, [&](std::size_t k) {
    Point p = base;
    p.tau = taus[k / ts.size()];
    p.t = ts[k % ts.size()];
    std::vector<double> row{*p.tau, *p.t};
    append_measures(row, evaluate(p), sc.measures);
    table.rows[k] = std::move(row);
  });
  return table;
}

}  // namespace nuqr

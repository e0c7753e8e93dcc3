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

#include "nuqr/qstate.hpp"

#include <cmath>
#include <numbers>

#include "nuqr/errors.hpp"

namespace nuqr {
namespace {

// ħc in GeV·m.
constexpr double kHbarC = 1.973269804e-16;

}  // namespace

MixingAngle::MixingAngle(double radians) : theta_(radians) {
  if (!std::isfinite(radians) || radians < 0.0 || radians > std::numbers::pi / 2) {
    throw DomainError("mixing angle must lie in [0, pi/2], got " + std::to_string(radians));
  }
}

PhaseAngle::PhaseAngle(double radians) : phi_(radians) {
  if (!std::isfinite(radians) || radians < 0.0) {
    throw DomainError("oscillation phase must be finite and non-negative, got " +
                      std::to_string(radians));
  }
}

double phase_unit_factor() {
  // eV² km / GeV = 1e-18 GeV² · 1e3 m / GeV
  return 1e-15 / (4.0 * kHbarC);
}

PhaseAngle oscillation_phase(const OscillationKinematics& kin) {
  if (!std::isfinite(kin.delta_m_squared)) throw DomainError("mass splitting must be finite");
  if (!std::isfinite(kin.baseline_km) || kin.baseline_km <= 0.0) {
    throw DomainError("baseline must be positive");
  }
  if (!std::isfinite(kin.energy_gev) || kin.energy_gev <= 0.0) {
    throw DomainError("energy must be positive");
  }
  return PhaseAngle(phase_unit_factor() * std::abs(kin.delta_m_squared) * kin.baseline_km /
                    kin.energy_gev);
}

FlavorAmplitudes flavor_amplitudes(MixingAngle theta, PhaseAngle phi) {
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  const Complex rel = std::polar(1.0, 2.0 * phi.radians());
  return {c * c + s * s * rel, s * c * (rel - 1.0)};
}

DensityMatrix4 build_density_matrix(MixingAngle theta, PhaseAngle phi) {
  const double s2t = std::sin(2.0 * theta.radians());
  const double c2t = std::cos(2.0 * theta.radians());
  const double sp = std::sin(phi.radians());
  const double cp = std::cos(phi.radians());
  const double transition = s2t * s2t * sp * sp;
  const Complex coherence = s2t * Complex(-c2t * sp * sp, -sp * cp);
  return DensityMatrix4::x_state(0.0, 1.0 - transition, transition, coherence);
}

double survival_probability(MixingAngle theta, PhaseAngle phi) {
  return 1.0 - transition_probability(theta, phi);
}

double transition_probability(MixingAngle theta, PhaseAngle phi) {
  const double s2t = std::sin(2.0 * theta.radians());
  const double sp = std::sin(phi.radians());
  return s2t * s2t * sp * sp;
}

}  // namespace nuqr

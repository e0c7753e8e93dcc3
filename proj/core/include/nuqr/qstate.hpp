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

#include "nuqr/density_matrix.hpp"

namespace nuqr {

/// Two-flavor mixing angle in radians, restricted to [0, pi/2].
class MixingAngle {
 public:
  explicit MixingAngle(double radians);
  double radians() const noexcept { return theta_; }

 private:
  double theta_;
};

/// Mass splitting in eV^2, baseline in km, energy in GeV.
struct OscillationKinematics {
  double delta_m_squared = 0.0;
  double baseline_km = 0.0;
  double energy_gev = 0.0;
};

/// Kinematic oscillation phase Δm²L/4E in radians, finite and non-negative.
class PhaseAngle {
 public:
  explicit PhaseAngle(double radians);
  double radians() const noexcept { return phi_; }

 private:
  double phi_;
};

/// Survival and transition amplitudes of a flavor state after propagation.
struct FlavorAmplitudes {
  Complex survival;    // U_aa
  Complex transition;  // U_ab
};

/// 1/(4 ħc) expressed in GeV / (eV² km); about 1.267.
double phase_unit_factor();

/// phi = 1.267 |Δm²| L / E. Only |Δm²| enters.
/// Throws DomainError for a non-finite splitting or non-positive L or E.
PhaseAngle oscillation_phase(const OscillationKinematics& kin);

/// Amplitudes with the common phase of the lighter mass state factored out,
/// so they depend on phi only through exp(2 i phi).
FlavorAmplitudes flavor_amplitudes(MixingAngle theta, PhaseAngle phi);

/// Pure state |psi><psi| with |psi> = U_aa |01> + U_ab |10>.
///
/// Only the central block is populated:
///   rho_22 = 1 - sin²2θ sin²φ
///   rho_33 = sin²2θ sin²φ
///   rho_23 = sin2θ (-cos2θ sin²φ - i sinφ cosφ)
DensityMatrix4 build_density_matrix(MixingAngle theta, PhaseAngle phi);

double survival_probability(MixingAngle theta, PhaseAngle phi);
double transition_probability(MixingAngle theta, PhaseAngle phi);

}  // namespace nuqr

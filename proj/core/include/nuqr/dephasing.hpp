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

#include <array>

#include "nuqr/channels.hpp"
#include "nuqr/density_matrix.hpp"
#include "nuqr/qstate.hpp"

namespace nuqr {

/// Random-telegraph environment: correlation time chi > 0 and classical
/// correlation mu in [0, 1] between the two local dephasing channels.
class DephasingParams {
 public:
  DephasingParams(double chi, double mu);

  double chi() const noexcept { return chi_; }
  double mu() const noexcept { return mu_; }

  /// Oscillatory regime, 4 chi² > 1.
  bool non_markovian() const noexcept { return 4.0 * chi_ * chi_ > 1.0; }

 private:
  double chi_;
  double mu_;
};

/// Dimensionless time t >= 0.
class TimePoint {
 public:
  explicit TimePoint(double t);
  double value() const noexcept { return t_; }

 private:
  double t_;
};

/// h(t) = e^{-t/2χ} [cos(υt/2χ) + sin(υt/2χ)/υ] with υ = √(4χ² - 1) when
/// 4χ² > 1, the cosh/sinh twin with υ = √(1 - 4χ²) when 4χ² < 1, and the
/// limit e^{-t/2χ}(1 + t/2χ) at 4χ² = 1. Throws DomainError for chi <= 0.
double decoherence_function(TimePoint t, double chi);

/// p(t) = (1 - h(t)) / 2.
double flip_probability(TimePoint t, double chi);

/// zeta(t) = (1 - mu) h(t)² + mu, the factor applied to rho_23.
double attenuation_factor(TimePoint t, const DephasingParams& params);

/// Scales <01|rho|10> and its conjugate by zeta(t). States outside the X
/// family go through dephasing_kraus_map.
DensityMatrix4 apply_correlated_dephasing(const DensityMatrix4& rho, TimePoint t,
                                          const DephasingParams& params);

/// Joint probabilities p_ij = (1 - mu) p_i p_j + mu p_i δ_ij for i, j in
/// {0, 3} with p_0 = 1 - p(t), p_3 = p(t). Indexed [i == 3][j == 3].
std::array<std::array<double, 2>, 2> dephasing_joint_probabilities(TimePoint t,
                                                                   const DephasingParams& params);

/// Σ L_ij rho L_ij† with L_ij = √p_ij σ_i ⊗ σ_j over the full Pauli set;
/// only σ0 and σ3 carry weight for pure dephasing.
DensityMatrix4 dephasing_kraus_map(const DensityMatrix4& rho, TimePoint t,
                                   const DephasingParams& params);

/// Oscillation state, then the tau channel, then correlated dephasing.
DensityMatrix4 evolve_combined(MixingAngle theta, PhaseAngle phi, ChannelKind kind,
                               NoiseStrength tau, TimePoint t, const DephasingParams& params);

}  // namespace nuqr

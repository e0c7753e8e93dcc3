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

#include "nuqr/dephasing.hpp"

#include <cmath>
#include <string>

#include "nuqr/errors.hpp"

namespace nuqr {
namespace {

std::array<Matrix2c, 4> pauli_set() {
  std::array<Matrix2c, 4> s;
  s[0] << 1.0, 0.0, 0.0, 1.0;
  s[1] << 0.0, 1.0, 1.0, 0.0;
  s[2] << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  s[3] << 1.0, 0.0, 0.0, -1.0;
  return s;
}

}  // namespace

DephasingParams::DephasingParams(double chi, double mu) : chi_(chi), mu_(mu) {
  if (!std::isfinite(chi) || chi <= 0.0) {
    throw DomainError("correlation time chi must be positive, got " + std::to_string(chi));
  }
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw DomainError("correlation parameter mu must lie in [0, 1], got " + std::to_string(mu));
  }
}

TimePoint::TimePoint(double t) : t_(t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("time must be finite and non-negative, got " + std::to_string(t));
  }
}

double decoherence_function(TimePoint t, double chi) {
  if (!std::isfinite(chi) || chi <= 0.0) {
    throw DomainError("correlation time chi must be positive, got " + std::to_string(chi));
  }
  const double x = t.value() / (2.0 * chi);
  const double gap = 4.0 * chi * chi - 1.0;
  if (gap == 0.0) return std::exp(-x) * (1.0 + x);

  const double upsilon = std::sqrt(std::abs(gap));
  if (gap > 0.0) {
    return std::exp(-x) * (std::cos(upsilon * x) + std::sin(upsilon * x) / upsilon);
  }
  // e^{-x}[cosh(υx) + sinh(υx)/υ] split into two decaying exponentials so
  // that long times do not overflow.
  return 0.5 * ((1.0 + 1.0 / upsilon) * std::exp(-(1.0 - upsilon) * x) +
                (1.0 - 1.0 / upsilon) * std::exp(-(1.0 + upsilon) * x));
}

double flip_probability(TimePoint t, double chi) {
  return 0.5 * (1.0 - decoherence_function(t, chi));
}

double attenuation_factor(TimePoint t, const DephasingParams& params) {
  const double h = decoherence_function(t, params.chi());
  return (1.0 - params.mu()) * h * h + params.mu();
}

DensityMatrix4 apply_correlated_dephasing(const DensityMatrix4& rho, TimePoint t,
                                          const DephasingParams& params) {
  if (!rho.has_x_support()) return dephasing_kraus_map(rho, t, params);
  const double zeta = attenuation_factor(t, params);
  return DensityMatrix4::x_state(rho.population(k00), rho.population(k01),
                                 rho.population(k10), zeta * rho.central_coherence());
}

std::array<std::array<double, 2>, 2> dephasing_joint_probabilities(
    TimePoint t, const DephasingParams& params) {
  const double p = flip_probability(t, params.chi());
  const std::array<double, 2> single{1.0 - p, p};
  const double mu = params.mu();
  std::array<std::array<double, 2>, 2> joint{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      joint[i][j] = (1.0 - mu) * single[i] * single[j] + (i == j ? mu * single[i] : 0.0);
  return joint;
}

DensityMatrix4 dephasing_kraus_map(const DensityMatrix4& rho, TimePoint t,
                                   const DephasingParams& params) {
  const auto pauli = pauli_set();
  const auto dephasing = dephasing_joint_probabilities(t, params);

  // Embed the σ0/σ3 probabilities in the full 4x4 Pauli table.
  std::array<std::array<double, 4>, 4> probs{};
  probs[0][0] = dephasing[0][0];
  probs[0][3] = dephasing[0][1];
  probs[3][0] = dephasing[1][0];
  probs[3][3] = dephasing[1][1];

  Matrix4c out = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (probs[i][j] == 0.0) continue;
      const Matrix4c l = std::sqrt(probs[i][j]) * kron(pauli[i], pauli[j]);
      out += l * rho.matrix() * l.adjoint();
    }
  }
  return DensityMatrix4::from_matrix(out);
}

DensityMatrix4 evolve_combined(MixingAngle theta, PhaseAngle phi, ChannelKind kind,
                               NoiseStrength tau, TimePoint t, const DephasingParams& params) {
  const DensityMatrix4 noisy = apply_channel(build_density_matrix(theta, phi), kind, tau);
  return apply_correlated_dephasing(noisy, t, params);
}

}  // namespace nuqr

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
#include <string_view>
#include <vector>

#include "nuqr/density_matrix.hpp"

namespace nuqr {

enum class ChannelKind { AmplitudeDamping, PhaseFlip, PhaseDamping };

/// "ad", "pf" or "pd" (case-insensitive). Throws DomainError otherwise.
ChannelKind parse_channel_kind(std::string_view name);
std::string_view to_string(ChannelKind kind);

/// Channel strength tau in [0, 1].
class NoiseStrength {
 public:
  explicit NoiseStrength(double tau);

  /// tau = 1 - exp(-rate * time).
  static NoiseStrength from_rate(double rate, double time);

  double value() const noexcept { return tau_; }

 private:
  double tau_;
};

/// Operators of a two-qubit CPTP map.
class KrausSet {
 public:
  explicit KrausSet(std::vector<Matrix4c> operators);

  const std::vector<Matrix4c>& operators() const noexcept { return ops_; }

  /// max |Σ K†K - 1| entrywise.
  double completeness_residual() const;

 private:
  std::vector<Matrix4c> ops_;
};

/// Single-qubit Kraus pair of a channel.
std::array<Matrix2c, 2> single_qubit_kraus(ChannelKind kind, NoiseStrength tau);

/// The four products K_i ⊗ K_j of the single-qubit pair, identical noise on
/// both qubits.
KrausSet kraus_set(ChannelKind kind, NoiseStrength tau);

/// Closed-form evolution on the X family:
///   AD: p00 += tau (p01 + p10), p01 and p10 and rho_23 scale by (1 - tau)
///   PF: rho_23 scales by (1 - 2 tau)^2
///   PD: rho_23 scales by (1 - tau)
/// The printed AD result sets rho_33 to (1 - tau) rho_22, which loses trace
/// whenever rho_22 != rho_33; the form above is what the Kraus sum gives.
/// States outside the family go through apply_kraus_generic.
DensityMatrix4 apply_channel(const DensityMatrix4& rho, ChannelKind kind, NoiseStrength tau);

/// Σ K rho K†. Throws StructuralError when the set is not complete within 1e-12.
DensityMatrix4 apply_kraus_generic(const DensityMatrix4& rho, const KrausSet& ks);

/// Kronecker product of two single-qubit operators, A first.
Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

}  // namespace nuqr

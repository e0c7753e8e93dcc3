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
#include "nuqr/oracle.hpp"

namespace nuqr {

/// Entropic steering quantities in both directions.
///
/// s_ab = max(0, (n_ab - 2) / 4). A state steers from A to B when n_ab > 2;
/// n_ab equals 6 - 2 Σ H(σ^B|σ^A), so a Bell state with real coherence
/// reaches n = 6 and s = 1.
struct SteeringReport {
  double n_ab = 0.0;
  double n_ba = 0.0;
  double s_ab = 0.0;
  double s_ba = 0.0;
  double asymmetry = 0.0;
};

struct ResourceTriple {
  SteeringReport steering;
  double negativity = 0.0;
  double coherence = 0.0;
};

/// |n - 2| below this counts as exactly no steering.
inline constexpr double kSteeringZeroTolerance = 1e-12;

/// Closed-form steering quantity built from the Pauli probability tables
/// I = 4 p. The x and y joint tables depend on Re(rho_23) only.
/// Throws StructuralError outside the X family.
double steering_quantity(const DensityMatrix4& rho, SteeringDirection direction);

SteeringReport steering(const DensityMatrix4& rho);

/// max(0, -2 h_min) with h_min the smallest eigenvalue of the partial
/// transpose. Closed form on the X family, Jacobi diagonalisation otherwise.
///
/// This is the quantity output tables label `log_negativity`.
double negativity(const DensityMatrix4& rho);

/// Sum of |rho_ij| over i != j.
double coherence_l1(const DensityMatrix4& rho);

ResourceTriple resource_triple(const DensityMatrix4& rho);

}  // namespace nuqr

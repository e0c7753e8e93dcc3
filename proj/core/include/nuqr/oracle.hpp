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

// Brute-force reference routines. Nothing here knows about the X-state
// family; the closed forms elsewhere in the library are checked against
// these.

#include <array>
#include <span>

#include "nuqr/density_matrix.hpp"

namespace nuqr {

enum class PauliAxis { X, Y, Z };
enum class SteeringDirection { AliceToBob, BobToAlice };

namespace oracle {

/// Outcome statistics of measuring the same Pauli axis on both qubits.
/// Outcome index 0 is +1, index 1 is -1; joint[2 * a + b].
struct MeasurementDistribution {
  PauliAxis axis = PauliAxis::Z;
  std::array<double, 4> joint{};
  std::array<double, 2> marginal_a{};
  std::array<double, 2> marginal_b{};
};

struct EigenSystem {
  std::array<double, 4> values{};  // ascending
  Matrix4c vectors;                // columns, matching `values`
  int sweeps = 0;
};

/// Transpose on the indices of qubit B.
Matrix4c partial_transpose(const Matrix4c& m);
inline Matrix4c partial_transpose(const DensityMatrix4& rho) {
  return partial_transpose(rho.matrix());
}

/// Cyclic Jacobi diagonalisation of a Hermitian matrix. Stops once the
/// off-diagonal Frobenius norm falls below 1e-14 times the matrix norm, or
/// after 100 sweeps. Throws StructuralError if `m` is not Hermitian within
/// 1e-10.
EigenSystem hermitian_eigensystem(const Matrix4c& m);
std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Matrix4c& m);

/// p(a, b) = tr(rho Π_a ⊗ Π_b) with Π± = (1 ± σ)/2.
MeasurementDistribution measurement_distribution(const DensityMatrix4& rho, PauliAxis axis);

/// Shannon entropy in bits; 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// 6 - 2 Σ_{x,y,z} H(σ^B | σ^A) for AliceToBob, with A and B swapped for
/// BobToAlice. Values above 2 violate the entropic steering inequality.
double steering_entropy_oracle(const DensityMatrix4& rho, SteeringDirection direction);

}  // namespace oracle
}  // namespace nuqr

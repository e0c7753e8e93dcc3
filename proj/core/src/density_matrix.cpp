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

#include "nuqr/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nuqr/errors.hpp"

namespace nuqr {

DensityMatrix4 DensityMatrix4::from_matrix(const Matrix4c& m) {
  if (!m.allFinite()) throw StructuralError("density matrix has non-finite entries");

  const double herm = max_abs_diff(m, m.adjoint());
  if (herm > kHermitianTolerance) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (deviation " << herm << ")";
    throw StructuralError(os.str());
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream os;
    os << "density matrix trace is " << tr;
    throw StructuralError(os.str());
  }
  // Symmetrise before the PSD check so the solver sees an exactly
  // self-adjoint input.
  const Matrix4c sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(sym, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues().minCoeff();
  if (lowest < -kPsdTolerance) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lowest;
    throw StructuralError(os.str());
  }
  return DensityMatrix4(m);
}

DensityMatrix4 DensityMatrix4::x_state(double p00, double p01, double p10, Complex c01_10) {
  Matrix4c m = Matrix4c::Zero();
  m(k00, k00) = p00;
  m(k01, k01) = p01;
  m(k10, k10) = p10;
  m(k01, k10) = c01_10;
  m(k10, k01) = std::conj(c01_10);
  return from_matrix(m);
}

bool DensityMatrix4::has_x_support(double tol) const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j && i != k11) continue;
      if ((i == k01 && j == k10) || (i == k10 && j == k01)) continue;
      if (std::abs(m_(i, j)) > tol) return false;
    }
  }
  return true;
}

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace nuqr

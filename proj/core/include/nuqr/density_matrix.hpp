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

#include <complex>

#include <Eigen/Core>

namespace nuqr {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

/// Computational basis of the two mode qubits, qubit A first.
/// Index k holds |a b> with a = k / 2, b = k % 2.
enum Basis : int { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

/// Tolerances shared by every DensityMatrix4 check.
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// Two-qubit density matrix. Every instance is Hermitian, has unit trace and
/// is positive semidefinite; construction fails with StructuralError
/// otherwise.
class DensityMatrix4 {
 public:
  /// Validates `m` and wraps it.
  static DensityMatrix4 from_matrix(const Matrix4c& m);

  /// X-family state with the given populations and the single coherence
  /// <01|rho|10>. Populations of |11> are taken to be zero.
  static DensityMatrix4 x_state(double p00, double p01, double p10, Complex c01_10);

  const Matrix4c& matrix() const noexcept { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  double population(Basis b) const { return m_(b, b).real(); }
  /// The <01|rho|10> entry.
  Complex central_coherence() const { return m_(k01, k10); }

  double trace() const { return m_.trace().real(); }
  double purity() const { return (m_ * m_).trace().real(); }

  /// True when the only non-zero entries are the diagonal (without |11>)
  /// and the <01|rho|10> pair, within `tol`.
  bool has_x_support(double tol = 1e-12) const;

  friend bool operator==(const DensityMatrix4& a, const DensityMatrix4& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit DensityMatrix4(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix4c& a, const Matrix4c& b);
inline double max_abs_diff(const DensityMatrix4& a, const DensityMatrix4& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

}  // namespace nuqr

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

#include "nuqr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nuqr/errors.hpp"

namespace nuqr::oracle {
namespace {

constexpr double kOffDiagonalThreshold = 1e-14;
constexpr int kMaxSweeps = 100;
constexpr double kOracleHermitianTolerance = 1e-10;

double off_diagonal_norm(const Matrix4c& m) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) acc += std::norm(m(i, j));
  return std::sqrt(acc);
}

Matrix2c pauli(PauliAxis axis) {
  Matrix2c s;
  switch (axis) {
    case PauliAxis::X:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliAxis::Y:
      s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    case PauliAxis::Z:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return s;
}

// Π± = (1 ± σ)/2
Matrix2c eigenprojector(PauliAxis axis, int outcome) {
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return 0.5 * (Matrix2c::Identity() + sign * pauli(axis));
}

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

Matrix4c partial_transpose(const Matrix4c& m) {
  Matrix4c out;
  // m(2a+b, 2a'+b') -> out(2a+b', 2a'+b)
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) out(2 * a + bp, 2 * ap + b) = m(2 * a + b, 2 * ap + bp);
  return out;
}

EigenSystem hermitian_eigensystem(const Matrix4c& m) {
  if (!m.allFinite()) throw StructuralError("eigensystem of a non-finite matrix");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kOracleHermitianTolerance) {
    throw StructuralError("hermitian_eigensystem: matrix is not Hermitian");
  }

  Matrix4c a = 0.5 * (m + m.adjoint());
  Matrix4c v = Matrix4c::Identity();
  const double scale = std::max(1.0, a.norm());

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalThreshold * scale) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Phase q so that a(p, q) becomes the real number r, then rotate
        // the real 2x2 block [[a_pp, r], [r, a_qq]].
        const Complex phase = std::conj(a(p, q)) / r;  // e^{-i arg a_pq}
        const double half = 0.5 * std::atan2(2.0 * r, a(q, q).real() - a(p, p).real());
        const double c = std::cos(half);
        const double s = std::sin(half);

        // g = diag(.., phase at q, ..) · R
        Matrix4c g = Matrix4c::Identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * phase;
        g(q, q) = c * phase;

        a = g.adjoint() * a * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * g;
      }
    }
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.sweeps = sweep;
  for (int k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m) {
  return hermitian_eigensystem(m).values;
}

double trace_norm(const Matrix4c& m) {
  const auto values = hermitian_eigenvalues(m);
  return std::accumulate(values.begin(), values.end(), 0.0,
                         [](double acc, double x) { return acc + std::abs(x); });
}

MeasurementDistribution measurement_distribution(const DensityMatrix4& rho, PauliAxis axis) {
  MeasurementDistribution out;
  out.axis = axis;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Matrix4c proj = kron2(eigenprojector(axis, a), eigenprojector(axis, b));
      const double p = (rho.matrix() * proj).trace().real();
      out.joint[2 * a + b] = std::clamp(p, 0.0, 1.0);
    }
  }
  out.marginal_a = {out.joint[0] + out.joint[1], out.joint[2] + out.joint[3]};
  out.marginal_b = {out.joint[0] + out.joint[2], out.joint[1] + out.joint[3]};
  return out;
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

double steering_entropy_oracle(const DensityMatrix4& rho, SteeringDirection direction) {
  double conditional = 0.0;
  for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    const auto dist = measurement_distribution(rho, axis);
    const auto& given = direction == SteeringDirection::AliceToBob ? dist.marginal_a
                                                                   : dist.marginal_b;
    conditional += shannon_entropy(dist.joint) - shannon_entropy(given);
  }
  return 6.0 - 2.0 * conditional;
}

}  // namespace nuqr::oracle

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

#include "nuqr/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "nuqr/errors.hpp"

namespace nuqr {
namespace {

constexpr double kCompletenessTolerance = 1e-12;

}  // namespace

ChannelKind parse_channel_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ad") return ChannelKind::AmplitudeDamping;
  if (lower == "pf") return ChannelKind::PhaseFlip;
  if (lower == "pd") return ChannelKind::PhaseDamping;
  throw DomainError("unknown channel '" + std::string(name) + "' (expected ad, pf or pd)");
}

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      return "ad";
    case ChannelKind::PhaseFlip:
      return "pf";
    case ChannelKind::PhaseDamping:
      return "pd";
  }
  return "?";
}

NoiseStrength::NoiseStrength(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || tau < 0.0 || tau > 1.0) {
    throw DomainError("noise strength tau must lie in [0, 1], got " + std::to_string(tau));
  }
}

NoiseStrength NoiseStrength::from_rate(double rate, double time) {
  if (!std::isfinite(rate) || rate < 0.0 || !std::isfinite(time) || time < 0.0) {
    throw DomainError("decay rate and time must be finite and non-negative");
  }
  return NoiseStrength(-std::expm1(-rate * time));
}

KrausSet::KrausSet(std::vector<Matrix4c> operators) : ops_(std::move(operators)) {}

double KrausSet::completeness_residual() const {
  Matrix4c sum = Matrix4c::Zero();
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return (sum - Matrix4c::Identity()).cwiseAbs().maxCoeff();
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

std::array<Matrix2c, 2> single_qubit_kraus(ChannelKind kind, NoiseStrength tau) {
  const double t = tau.value();
  Matrix2c k1;
  Matrix2c k2;
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      k1 << 1.0, 0.0, 0.0, std::sqrt(1.0 - t);
      k2 << 0.0, std::sqrt(t), 0.0, 0.0;
      break;
    case ChannelKind::PhaseFlip:
      k1 << std::sqrt(t), 0.0, 0.0, std::sqrt(t);
      k2 << std::sqrt(1.0 - t), 0.0, 0.0, -std::sqrt(1.0 - t);
      break;
    case ChannelKind::PhaseDamping:
      k1 << 1.0, 0.0, 0.0, std::sqrt(1.0 - t);
      k2 << 0.0, 0.0, 0.0, std::sqrt(t);
      break;
  }
  return {k1, k2};
}

KrausSet kraus_set(ChannelKind kind, NoiseStrength tau) {
  const auto single = single_qubit_kraus(kind, tau);
  std::vector<Matrix4c> ops;
  ops.reserve(4);
  for (const auto& a : single)
    for (const auto& b : single) ops.push_back(kron(a, b));
  return KrausSet(std::move(ops));
}

DensityMatrix4 apply_channel(const DensityMatrix4& rho, ChannelKind kind, NoiseStrength tau) {
  if (!rho.has_x_support()) return apply_kraus_generic(rho, kraus_set(kind, tau));

  const double t = tau.value();
  const double p00 = rho.population(k00);
  const double p01 = rho.population(k01);
  const double p10 = rho.population(k10);
  const Complex c = rho.central_coherence();

  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      return DensityMatrix4::x_state(p00 + t * (p01 + p10), (1.0 - t) * p01, (1.0 - t) * p10,
                                     (1.0 - t) * c);
    case ChannelKind::PhaseFlip: {
      const double f = (1.0 - 2.0 * t) * (1.0 - 2.0 * t);
      return DensityMatrix4::x_state(p00, p01, p10, f * c);
    }
    case ChannelKind::PhaseDamping:
      return DensityMatrix4::x_state(p00, p01, p10, (1.0 - t) * c);
  }
  throw std::logic_error("unhandled channel kind");
}

DensityMatrix4 apply_kraus_generic(const DensityMatrix4& rho, const KrausSet& ks) {
  const double residual = ks.completeness_residual();
  if (residual > kCompletenessTolerance) {
    throw StructuralError("Kraus set is not complete (residual " + std::to_string(residual) +
                          ")");
  }
  Matrix4c out = Matrix4c::Zero();
  for (const auto& k : ks.operators()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix4::from_matrix(out);
}

}  // namespace nuqr

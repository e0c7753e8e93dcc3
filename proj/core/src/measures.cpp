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

#include "nuqr/measures.hpp"

#include <algorithm>
#include <cmath>

#include "nuqr/errors.hpp"

namespace nuqr {
namespace {

// I log2 I on the I = 4p scale, with 0 log 0 = 0.
double ilog(double value) {
  const double v = std::max(value, 0.0);
  return v > 0.0 ? v * std::log2(v) : 0.0;
}

double normalised_steering(double n) {
  const double excess = n - 2.0;
  if (std::abs(excess) < kSteeringZeroTolerance) return 0.0;
  return std::clamp(excess / 4.0, 0.0, 1.0);
}

}  // namespace

double steering_quantity(const DensityMatrix4& rho, SteeringDirection direction) {
  if (!rho.has_x_support()) {
    throw StructuralError("steering closed form needs an X-state with central coherence only");
  }
  const double p00 = rho.population(k00);
  const double p01 = rho.population(k01);
  const double p10 = rho.population(k10);
  const double p11 = rho.population(k11);
  const double re = rho.central_coherence().real();

  // x and y tables coincide here since <00|rho|11> = 0.
  const double xy = 2.0 * (2.0 * ilog(1.0 + 2.0 * re) + 2.0 * ilog(1.0 - 2.0 * re));
  const double z = ilog(4.0 * p00) + ilog(4.0 * p01) + ilog(4.0 * p10) + ilog(4.0 * p11);
  const double joint = 0.5 * (xy + z);

  // <σz> on the conditioning qubit; the x and y marginals are flat.
  const double bias = direction == SteeringDirection::AliceToBob ? p00 + p01 - p10 - p11
                                                                 : p00 - p01 + p10 - p11;
  const double marginal = 4.0 * ilog(1.0) + ilog(1.0 + bias) + ilog(1.0 - bias);
  return joint - marginal;
}

SteeringReport steering(const DensityMatrix4& rho) {
  SteeringReport r;
  r.n_ab = steering_quantity(rho, SteeringDirection::AliceToBob);
  r.n_ba = steering_quantity(rho, SteeringDirection::BobToAlice);
  r.s_ab = normalised_steering(r.n_ab);
  r.s_ba = normalised_steering(r.n_ba);
  r.asymmetry = std::abs(r.s_ab - r.s_ba);
  return r;
}

double negativity(const DensityMatrix4& rho) {
  double lowest = 0.0;
  if (rho.has_x_support()) {
    // Partial transpose moves the coherence to <00|.|11>.
    const double p00 = rho.population(k00);
    const double p11 = rho.population(k11);
    const double mod = std::abs(rho.central_coherence());
    const double outer =
        0.5 * (p00 + p11) - 0.5 * std::sqrt((p00 - p11) * (p00 - p11) + 4.0 * mod * mod);
    lowest = std::min({outer, rho.population(k01), rho.population(k10)});
  } else {
    lowest = oracle::hermitian_eigenvalues(oracle::partial_transpose(rho))[0];
  }
  return std::max(0.0, -2.0 * lowest);
}

double coherence_l1(const DensityMatrix4& rho) {
  double c = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) c += std::abs(rho(i, j));
  return c;
}

ResourceTriple resource_triple(const DensityMatrix4& rho) {
  ResourceTriple t{steering(rho), negativity(rho), coherence_l1(rho)};
  if ((t.steering.s_ab > 0.0 || t.steering.s_ba > 0.0) && !(t.negativity > 0.0)) {
    throw std::logic_error("steerable state reported with zero negativity");
  }
  return t;
}

}  // namespace nuqr

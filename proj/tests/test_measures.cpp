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

#include <doctest.h>

#include <cmath>
#include <random>

#include "nuqr/channels.hpp"
#include "nuqr/errors.hpp"
#include "nuqr/measures.hpp"
#include "nuqr/oracle.hpp"
#include "test_support.hpp"

using namespace nuqr;
using nuqr::testing::bell_state;
using nuqr::testing::kAllChannels;
using nuqr::testing::kPi;
using nuqr::testing::state;

namespace {
constexpr SteeringDirection kAB = SteeringDirection::AliceToBob;
constexpr SteeringDirection kBA = SteeringDirection::BobToAlice;
}  // namespace

TEST_CASE("steering quantity examples") {
  CHECK(std::abs(steering_quantity(state(0.6, 0.0), kAB) - 2.0) < 1e-12);
  CHECK(std::abs(steering_quantity(bell_state(), kAB) - 6.0) < 1e-12);
  CHECK(std::abs(steering_quantity(bell_state(), kBA) - 6.0) < 1e-12);
  CHECK(std::abs(steering_quantity(state(kPi / 4, kPi / 4), kAB) - 2.0) < 1e-12);
}

TEST_CASE("steering report") {
  const auto bell = steering(bell_state());
  CHECK(std::abs(bell.s_ab - 1.0) < 1e-12);
  CHECK(std::abs(bell.s_ba - 1.0) < 1e-12);
  CHECK(bell.asymmetry == 0.0);

  const auto product = steering(state(0.9, 0.0));
  CHECK(product.s_ab == 0.0);
  CHECK(product.s_ba == 0.0);

  for (double th : testing::theta_grid(20))
    for (double ph : testing::phi_grid(20))
      for (auto kind : kAllChannels)
        for (double tau : {0.0, 0.3, 0.7}) {
          const auto r = steering(apply_channel(state(th, ph), kind, NoiseStrength(tau)));
          CHECK(r.s_ab >= 0.0);
          CHECK(r.s_ab <= 1.0);
          CHECK(r.s_ab == doctest::Approx(std::max(0.0, (r.n_ab - 2) / 4)).epsilon(1e-12));
          CHECK(r.asymmetry == std::abs(r.s_ab - r.s_ba));
          if (kind != ChannelKind::AmplitudeDamping) CHECK(r.asymmetry < 1e-12);
        }
}

TEST_CASE("steering needs the X family") {
  std::mt19937_64 rng(3);
  const auto rho = testing::random_density_matrix(rng);
  CHECK_THROWS_AS(steering_quantity(rho, kAB), StructuralError);
  CHECK_THROWS_AS(steering(rho), StructuralError);
  // |00> population is allowed.
  CHECK_NOTHROW(steering(DensityMatrix4::x_state(0.4, 0.3, 0.3, Complex(0.1, 0.1))));
}

TEST_CASE("closed-form steering matches the entropy oracle") {
  double worst = 0.0;
  for (double th : testing::theta_grid())
    for (double ph : testing::phi_grid())
      for (auto kind : kAllChannels)
        for (double tau : {0.0, 0.25, 0.5, 0.75, 1.0}) {
          const auto rho = apply_channel(state(th, ph), kind, NoiseStrength(tau));
          for (auto dir : {kAB, kBA})
            worst = std::max(worst, std::abs(steering_quantity(rho, dir) -
                                             oracle::steering_entropy_oracle(rho, dir)));
        }
  CHECK(worst < 1e-9);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const auto rho = testing::random_x_state(rng, k % 2 == 0);
    for (auto dir : {kAB, kBA})
      CHECK(std::abs(steering_quantity(rho, dir) - oracle::steering_entropy_oracle(rho, dir)) <
            1e-9);
  }
}

TEST_CASE("negativity") {
  CHECK(std::abs(negativity(bell_state()) - 1.0) < 1e-12);
  CHECK(negativity(state(0.3, 0.0)) == 0.0);
  CHECK(std::abs(negativity(state(kPi / 4, kPi / 4)) - 1.0) < 1e-12);

  SUBCASE("closed form matches the partial transpose path") {
    double worst = 0.0;
    for (double th : testing::theta_grid())
      for (double ph : testing::phi_grid())
        for (auto kind : kAllChannels)
          for (double tau : testing::tau_grid()) {
            const auto rho = apply_channel(state(th, ph), kind, NoiseStrength(tau));
            const auto v = oracle::hermitian_eigenvalues(oracle::partial_transpose(rho));
            worst = std::max(worst, std::abs(negativity(rho) - std::max(0.0, -2.0 * v[0])));
            worst = std::max(
                worst,
                std::abs(negativity(rho) -
                         (oracle::trace_norm(oracle::partial_transpose(rho)) - 1.0)));
          }
    CHECK(worst < 1e-10);
  }
  SUBCASE("general states use the eigen path") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
      const auto rho = testing::random_density_matrix(rng);
      const auto v = oracle::hermitian_eigenvalues(oracle::partial_transpose(rho));
      CHECK(std::abs(negativity(rho) - std::max(0.0, -2.0 * v[0])) < 1e-12);
    }
  }
}

TEST_CASE("l1 coherence") {
  CHECK(std::abs(coherence_l1(bell_state()) - 1.0) < 1e-12);
  Matrix4c d = Matrix4c::Zero();
  d.diagonal() << 0.1, 0.2, 0.3, 0.4;
  CHECK(coherence_l1(DensityMatrix4::from_matrix(d)) == 0.0);
  const auto pd = apply_channel(bell_state(), ChannelKind::PhaseDamping, NoiseStrength(0.5));
  CHECK(std::abs(coherence_l1(pd) - 0.5) < 1e-12);
  CHECK(coherence_l1(DensityMatrix4::from_matrix(Matrix4c::Constant(0.25))) == doctest::Approx(3.0));
}

TEST_CASE("negativity against coherence") {
  for (double th : testing::theta_grid())
    for (double ph : testing::phi_grid())
      for (double tau : testing::tau_grid()) {
        const auto rho0 = state(th, ph);
        for (auto kind : {ChannelKind::PhaseFlip, ChannelKind::PhaseDamping}) {
          const auto rho = apply_channel(rho0, kind, NoiseStrength(tau));
          CHECK(std::abs(negativity(rho) - coherence_l1(rho)) < 1e-12);
        }
        const auto ad = apply_channel(rho0, ChannelKind::AmplitudeDamping, NoiseStrength(tau));
        const double n = negativity(ad), c = coherence_l1(ad);
        CHECK(n <= c + 1e-12);
        if (tau == 0.0) CHECK(std::abs(n - c) < 1e-12);
        if (tau > 0.0 && c > 1e-9) CHECK(n < c);
      }
}

TEST_CASE("resource triple") {
  const auto bell = resource_triple(bell_state());
  CHECK(std::abs(bell.steering.s_ab - 1.0) < 1e-12);
  CHECK(std::abs(bell.negativity - 1.0) < 1e-12);
  CHECK(std::abs(bell.coherence - 1.0) < 1e-12);

  const auto product = resource_triple(state(0.2, 0.0));
  CHECK(product.steering.s_ab == 0.0);
  CHECK(product.negativity == 0.0);
  CHECK(product.coherence == 0.0);

  const auto unsteerable = resource_triple(state(kPi / 4, kPi / 4));
  CHECK(unsteerable.steering.s_ab == 0.0);
  CHECK(std::abs(unsteerable.negativity - 1.0) < 1e-12);
  CHECK(std::abs(unsteerable.coherence - 1.0) < 1e-12);

  for (double th : testing::theta_grid())
    for (double ph : testing::phi_grid())
      for (auto kind : kAllChannels)
        for (double tau : testing::tau_grid()) {
          const auto r = resource_triple(apply_channel(state(th, ph), kind, NoiseStrength(tau)));
          if (r.steering.s_ab > 0.0) CHECK(r.negativity > 1e-12);
        }
}

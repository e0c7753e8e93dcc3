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

#include "nuqr/errors.hpp"
#include "nuqr/qstate.hpp"
#include "test_support.hpp"

using namespace nuqr;
using nuqr::testing::kPi;
using nuqr::testing::linspace;

TEST_CASE("oscillation phase") {
  CHECK(phase_unit_factor() == doctest::Approx(1.266932679419849).epsilon(1e-14));

  SUBCASE("golden value") {
    const auto phi = oscillation_phase({7.5e-5, 180.0, 0.005});
    CHECK(std::abs(phi.radians() - 3.4207182344335916) < 1e-13);
  }
  SUBCASE("zero splitting") {
    CHECK(oscillation_phase({0.0, 295.0, 0.6}).radians() == 0.0);
  }
  SUBCASE("depends on L/E only") {
    const double a = oscillation_phase({2.4e-3, 735.0, 3.0}).radians();
    const double b = oscillation_phase({2.4e-3, 1470.0, 6.0}).radians();
    CHECK(std::abs(a - b) < 1e-15);
  }
  SUBCASE("sign of the splitting is dropped") {
    CHECK(oscillation_phase({-2.5e-3, 295.0, 0.6}).radians() ==
          oscillation_phase({2.5e-3, 295.0, 0.6}).radians());
  }
  SUBCASE("bad kinematics") {
    CHECK_THROWS_AS(oscillation_phase({1e-3, 0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(oscillation_phase({1e-3, 1.0, -1.0}), DomainError);
    CHECK_THROWS_AS(oscillation_phase({1e-3, INFINITY, 1.0}), DomainError);
    CHECK_THROWS_AS(oscillation_phase({NAN, 1.0, 1.0}), DomainError);
  }
}

TEST_CASE("parameter types reject out-of-range values") {
  CHECK_NOTHROW(MixingAngle{0.0});
  CHECK_NOTHROW(MixingAngle{kPi / 2});
  CHECK_THROWS_AS(MixingAngle{-1e-9}, DomainError);
  CHECK_THROWS_AS(MixingAngle{kPi / 2 + 1e-9}, DomainError);
  CHECK_THROWS_AS(MixingAngle{NAN}, DomainError);
  CHECK_THROWS_AS(PhaseAngle{-0.1}, DomainError);
  CHECK_THROWS_AS(PhaseAngle{INFINITY}, DomainError);
}

TEST_CASE("flavor amplitudes") {
  SUBCASE("no mixing") {
    const auto u = flavor_amplitudes(MixingAngle(0.0), PhaseAngle(1.3));
    CHECK(std::abs(std::abs(u.survival) - 1.0) < 1e-15);
    CHECK(std::abs(u.transition) == 0.0);
  }
  SUBCASE("zero phase") {
    const auto u = flavor_amplitudes(MixingAngle(0.7), PhaseAngle(0.0));
    CHECK(std::abs(u.survival - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(u.transition) < 1e-15);
  }
  SUBCASE("equal split") {
    const auto u = flavor_amplitudes(MixingAngle(kPi / 4), PhaseAngle(kPi / 4));
    CHECK(std::norm(u.survival) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::norm(u.transition) == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("normalization on a 100x100 grid") {
    double worst = 0.0;
    for (double th : linspace(0.0, kPi / 2, 100))
      for (double ph : linspace(0.0, kPi, 100)) {
        const auto u = flavor_amplitudes(MixingAngle(th), PhaseAngle(ph));
        worst = std::max(worst, std::abs(std::norm(u.survival) + std::norm(u.transition) - 1.0));
        const double s = std::sin(2 * th) * std::sin(ph);
        worst = std::max(worst, std::abs(std::norm(u.survival) - (1.0 - s * s)));
      }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("density matrix elements") {
  SUBCASE("theta = phi = pi/4") {
    const auto rho = build_density_matrix(MixingAngle(kPi / 4), PhaseAngle(kPi / 4));
    CHECK(std::abs(rho.population(k01) - 0.5) < 1e-15);
    CHECK(std::abs(rho.population(k10) - 0.5) < 1e-15);
    CHECK(std::abs(rho.central_coherence() - Complex(0.0, -0.5)) < 1e-15);
  }
  SUBCASE("initial flavor state") {
    const auto rho = build_density_matrix(MixingAngle(0.4), PhaseAngle(0.0));
    Matrix4c expect = Matrix4c::Zero();
    expect(k01, k01) = 1.0;
    CHECK(max_abs_diff(rho.matrix(), expect) == 0.0);
  }
  SUBCASE("Bell point") {
    const auto rho = build_density_matrix(MixingAngle(kPi / 8), PhaseAngle(kPi / 2));
    CHECK(std::abs(rho.population(k01) - 0.5) < 1e-15);
    CHECK(std::abs(rho.population(k10) - 0.5) < 1e-15);
    CHECK(std::abs(rho.central_coherence() - Complex(-0.5, 0.0)) < 1e-15);
  }
  SUBCASE("printed element formulas") {
    for (double th : linspace(0.0, kPi / 2, 23))
      for (double ph : linspace(0.0, kPi, 29)) {
        const auto rho = build_density_matrix(MixingAngle(th), PhaseAngle(ph));
        const double s2 = std::sin(2 * th), c2 = std::cos(2 * th);
        const double sp = std::sin(ph), cp = std::cos(ph);
        CHECK(std::abs(rho.population(k01) - (1 - s2 * s2 * sp * sp)) < 1e-14);
        CHECK(std::abs(rho.population(k10) - s2 * s2 * sp * sp) < 1e-14);
        CHECK(std::abs(rho.central_coherence() - Complex(-s2 * c2 * sp * sp, -s2 * sp * cp)) <
              1e-14);
      }
  }
}

TEST_CASE("density matrix properties") {
  double outer = 0.0, purity = 0.0, mirror = 0.0, block = 0.0;
  for (double th : linspace(0.0, kPi / 2, 100))
    for (double ph : linspace(0.0, kPi, 100)) {
      const MixingAngle theta(th);
      const auto rho = build_density_matrix(theta, PhaseAngle(ph));
      const auto u = flavor_amplitudes(theta, PhaseAngle(ph));
      Eigen::Matrix<Complex, 4, 1> psi = Eigen::Matrix<Complex, 4, 1>::Zero();
      psi(k01) = u.survival;
      psi(k10) = u.transition;
      outer = std::max(outer, max_abs_diff(rho.matrix(), psi * psi.adjoint()));
      purity = std::max(purity, std::abs(rho.purity() - 1.0));

      const auto twin = build_density_matrix(theta, PhaseAngle(kPi - ph));
      mirror = std::max({mirror, std::abs(rho.population(k01) - twin.population(k01)),
                         std::abs(rho.population(k10) - twin.population(k10)),
                         std::abs(std::abs(rho.central_coherence()) -
                                  std::abs(twin.central_coherence()))});
      block = std::max(block, std::abs(std::norm(rho.central_coherence()) -
                                       rho.population(k01) * rho.population(k10)));
      CHECK(rho.has_x_support());
      CHECK(rho(k11, k11) == Complex(0.0));
    }
  CHECK(outer < 1e-12);
  CHECK(purity < 1e-12);
  CHECK(mirror < 1e-12);
  CHECK(block < 1e-12);
}

TEST_CASE("survival and transition probabilities") {
  CHECK(std::abs(survival_probability(MixingAngle(kPi / 4), PhaseAngle(kPi / 2))) < 1e-15);
  CHECK(std::abs(transition_probability(MixingAngle(kPi / 4), PhaseAngle(kPi / 2)) - 1.0) < 1e-15);
  CHECK(survival_probability(MixingAngle(0.0), PhaseAngle(2.2)) == 1.0);
  CHECK(std::abs(survival_probability(MixingAngle(kPi / 8), PhaseAngle(kPi / 2)) - 0.5) < 1e-15);
  CHECK(std::abs(transition_probability(MixingAngle(kPi / 8), PhaseAngle(kPi / 2)) - 0.5) < 1e-15);
  for (double th : linspace(0.0, kPi / 2, 40))
    for (double ph : linspace(0.0, 3 * kPi, 40)) {
      const double s = survival_probability(MixingAngle(th), PhaseAngle(ph));
      const double t = transition_probability(MixingAngle(th), PhaseAngle(ph));
      CHECK(s >= 0.0);
      CHECK(t >= 0.0);
      CHECK(std::abs(s + t - 1.0) < 1e-12);
    }
}

TEST_CASE("DensityMatrix4 validation") {
  Matrix4c m = Matrix4c::Identity() / 4.0;
  CHECK_NOTHROW(DensityMatrix4::from_matrix(m));

  Matrix4c bad_trace = m * 1.01;
  CHECK_THROWS_AS(DensityMatrix4::from_matrix(bad_trace), StructuralError);

  Matrix4c non_hermitian = m;
  non_hermitian(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix4::from_matrix(non_hermitian), StructuralError);

  Matrix4c negative = Matrix4c::Zero();
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix4::from_matrix(negative), StructuralError);

  CHECK_THROWS_AS(DensityMatrix4::x_state(0.0, 0.5, 0.5, Complex(0.6, 0.0)), StructuralError);
  const auto x = DensityMatrix4::x_state(0.2, 0.3, 0.5, Complex(0.1, -0.2));
  CHECK(x.has_x_support());
  CHECK(std::abs(x.trace() - 1.0) < 1e-15);
  CHECK(x(k10, k01) == std::conj(x.central_coherence()));
}

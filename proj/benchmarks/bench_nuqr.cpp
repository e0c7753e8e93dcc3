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

#include <benchmark/benchmark.h>

#include <numbers>

#include "nuqr/channels.hpp"
#include "nuqr/dephasing.hpp"
#include "nuqr/experiments.hpp"
#include "nuqr/measures.hpp"
#include "nuqr/oracle.hpp"
#include "nuqr/sweep.hpp"
#include "nuqr/table_io.hpp"

namespace {

using namespace nuqr;

DensityMatrix4 sample_state() {
  return build_density_matrix(MixingAngle(0.55), PhaseAngle(1.3));
}

void BM_BuildDensityMatrix(benchmark::State& state) {
  double phi = 0.0;
  for (auto _ : state) {
    phi += 1e-6;
    benchmark::DoNotOptimize(build_density_matrix(MixingAngle(0.55), PhaseAngle(phi)));
  }
}
BENCHMARK(BM_BuildDensityMatrix);

void BM_ApplyChannelClosedForm(benchmark::State& state) {
  const auto rho = sample_state();
  const auto kind = static_cast<ChannelKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_channel(rho, kind, NoiseStrength(0.3)));
}
BENCHMARK(BM_ApplyChannelClosedForm)->DenseRange(0, 2);

void BM_ApplyChannelKraus(benchmark::State& state) {
  const auto rho = sample_state();
  const auto kind = static_cast<ChannelKind>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_kraus_generic(rho, kraus_set(kind, NoiseStrength(0.3))));
}
BENCHMARK(BM_ApplyChannelKraus)->DenseRange(0, 2);

void BM_JacobiEigenvalues(benchmark::State& state) {
  const Matrix4c pt = oracle::partial_transpose(sample_state());
  for (auto _ : state) benchmark::DoNotOptimize(oracle::hermitian_eigenvalues(pt));
}
BENCHMARK(BM_JacobiEigenvalues);

void BM_SteeringClosedForm(benchmark::State& state) {
  const auto rho = apply_channel(sample_state(), ChannelKind::AmplitudeDamping, NoiseStrength(0.2));
  for (auto _ : state) benchmark::DoNotOptimize(steering(rho));
}
BENCHMARK(BM_SteeringClosedForm);

void BM_SteeringOracle(benchmark::State& state) {
  const auto rho = apply_channel(sample_state(), ChannelKind::AmplitudeDamping, NoiseStrength(0.2));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle::steering_entropy_oracle(rho, SteeringDirection::AliceToBob));
}
BENCHMARK(BM_SteeringOracle);

void BM_DephasingScaling(benchmark::State& state) {
  const auto rho = sample_state();
  const DephasingParams params(5.0, 0.8);
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_correlated_dephasing(rho, TimePoint(2.0), params));
}
BENCHMARK(BM_DephasingScaling);

void BM_DephasingKrausMap(benchmark::State& state) {
  const auto rho = sample_state();
  const DephasingParams params(5.0, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(dephasing_kraus_map(rho, TimePoint(2.0), params));
}
BENCHMARK(BM_DephasingKrausMap);

void BM_DensityMap(benchmark::State& state) {
  const ExperimentRegistry registry;
  Scenario s;
  s.state.theta = std::numbers::pi / 8;
  s.state.phi = std::numbers::pi / 2;
  s.channel = ChannelKind::AmplitudeDamping;
  s.chi = 5.0;
  s.mu = 0.8;
  s.threads = static_cast<unsigned>(state.range(0));
  const MapConfig cfg{s, {0.0, 1.0, 64}, {0.0, 10.0, 64}};
  for (auto _ : state) benchmark::DoNotOptimize(emit_csv(run_density_map(cfg, registry)));
  state.SetItemsProcessed(state.iterations() * 64 * 64);
}
BENCHMARK(BM_DensityMap)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

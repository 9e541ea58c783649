// Copyright 2026 The esd Authors
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

#include <cmath>

#include "esd/dynamics.hpp"
#include "esd/entanglement.hpp"

namespace {

void BM_EigenvaluesHermitian(benchmark::State& state) {
  const esd::DensityMatrix rho = esd::random_density(1);
  for (auto _ : state) benchmark::DoNotOptimize(esd::eigenvalues_hermitian(rho.matrix()));
}
BENCHMARK(BM_EigenvaluesHermitian);

void BM_Negativity(benchmark::State& state) {
  const esd::DensityMatrix rho = esd::random_density(2);
  for (auto _ : state) benchmark::DoNotOptimize(esd::negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_Rk4Step(benchmark::State& state) {
  const esd::Lindbladian l(esd::IndependentDecay{1, 1, 0.5});
  esd::Matrix4 m = esd::random_density(3).matrix();
  for (auto _ : state) {
    m = l.evolve(m, 1e-3, 1e-3);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_DeathTime(benchmark::State& state) {
  const esd::XState x = esd::make_x(0.7, 0, 0, 0.3, std::sqrt(0.21), 0);
  const esd::ChannelSpec ch = esd::IndependentDecay{1, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(esd::death_time(x, ch, 50.0));
}
BENCHMARK(BM_DeathTime)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

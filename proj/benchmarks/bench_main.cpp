// Copyright 2026 The setcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "setcoh/certify.hpp"
#include "setcoh/invariants.hpp"
#include "setcoh/loworder.hpp"
#include "setcoh/states.hpp"

using namespace setcoh;

static void BM_gamma(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density(d, 1);
  const DensityMatrix sigma = random_density(d, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma(rho, sigma));
  }
}
BENCHMARK(BM_gamma)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_gamma_spectral(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density(d, 3);
  const DensityMatrix sigma = random_density(d, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_spectral(rho, sigma));
  }
}
BENCHMARK(BM_gamma_spectral)->Arg(4)->Arg(8);

static void BM_commutator_oracle_pair(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const StateFamily fam({random_density(d, 5), random_density(d, 6)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator_oracle(fam));
  }
}
BENCHMARK(BM_commutator_oracle_pair)->Arg(4)->Arg(8);

static void BM_decide_family(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<DensityMatrix> states;
  for (int k = 0; k < n; ++k) states.push_back(random_density(4, 100 + k));
  const StateFamily fam(std::move(states));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_set_coherence(fam));
  }
}
BENCHMARK(BM_decide_family)->Arg(4)->Arg(8)->Arg(16);

static void BM_evaluate_w3(benchmark::State& state) {
  const Scenario sc = scenario_w3();
  const StateFamily fam({random_density(3, 7), random_density(3, 8)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(sc, fam));
  }
}
BENCHMARK(BM_evaluate_w3);

static void BM_qutrit_compatibility(benchmark::State& state) {
  const StateFamily fam = random_commuting_family(3, 2, 9);
  const QutritW3Tuple t = w3_tuple(fam);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qutrit_w3_incoherent_compatible(t));
  }
}
BENCHMARK(BM_qutrit_compatibility);

static void BM_random_density(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_density(d, seed++));
  }
}
BENCHMARK(BM_random_density)->Arg(4)->Arg(8);

BENCHMARK_MAIN();

// Copyright 2026 The mcoutage Authors
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

#include <vector>

#include "mcoutage/outage.hpp"
#include "mcoutage/special_functions.hpp"
#include "mcoutage/sweep.hpp"

namespace {

using namespace mcoutage;

void BM_CodingConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double r = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coding_constant(n, r));
    r = r < 20.0 ? r * 1.01 : 0.25;
  }
}
BENCHMARK(BM_CodingConstant)->Arg(2)->Arg(5)->Arg(16);

void BM_CodingConstantInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coding_constant_inverse(n, 1e6));
}
BENCHMARK(BM_CodingConstantInverse)->Arg(2)->Arg(5);

void BM_JdQuadrature(benchmark::State& state) {
  const std::vector<double> avg(static_cast<std::size_t>(state.range(0)), 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(outage_jd_quadrature(avg, 1.0).value);
}
BENCHMARK(BM_JdQuadrature)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const std::vector<double> avg(3, 10.0);
  const auto comb = static_cast<Combiner>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(outage_monte_carlo(comb, avg, 1.0, 100'000, 1).value);
  }
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_MonteCarlo)
    ->Arg(static_cast<int>(Combiner::kJD))
    ->Arg(static_cast<int>(Combiner::kMRC))
    ->Arg(static_cast<int>(Combiner::kSC))
    ->Unit(benchmark::kMillisecond);

void BM_ThroughputSweep(benchmark::State& state) {
  const auto spec = *sweep_preset("fig2b");
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, 1).rows.size());
}
BENCHMARK(BM_ThroughputSweep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

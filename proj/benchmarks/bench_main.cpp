// Copyright 2026 The covcode Authors
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

#include <memory>

#include <benchmark/benchmark.h>

#include "covcode/analytics.hpp"
#include "covcode/encoder.hpp"
#include "covcode/error_metrics.hpp"
#include "covcode/random.hpp"
#include "covcode/sectors.hpp"

namespace covcode {
namespace {

std::shared_ptr<const SectorDecomposition> sectors(int n) {
  return std::make_shared<const SectorDecomposition>(hamming_sectors(n));
}

void BM_BlockHaar(benchmark::State& state) {
  const auto dec = sectors(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_block_haar(dec, seed++));
}
BENCHMARK(BM_BlockHaar)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ChoiErrorUpper(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dec = sectors(n);
  const auto params = CodeParams::make(n, 1, n / 2, 1);
  const BlockUnitary u = sample_block_haar(dec, 1);
  for (auto _ : state) benchmark::DoNotOptimize(choi_error_upper(u, params));
}
BENCHMARK(BM_ChoiErrorUpper)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_WorstCaseUpper(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dec = sectors(n);
  const auto params = CodeParams::make(n, 1, n / 2, 1);
  const BlockUnitary u = sample_block_haar(dec, 1);
  const DensityOperator zeta = marginal_zeta(n, 1, 1, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(worst_case_error_upper(u, params, zeta));
}
BENCHMARK(BM_WorstCaseUpper)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ChoiFidelityClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(choi_fidelity_closed(n, 2, 2, n / 2));
}
BENCHMARK(BM_ChoiFidelityClosed)->RangeMultiplier(10)->Range(20, 20000);

void BM_Kappa(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kappa(n, 2, 4, n / 2));
}
BENCHMARK(BM_Kappa)->RangeMultiplier(10)->Range(20, 20000);

void BM_OptimalZeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpectrumTable spec = phi_avg_reduced(n, 2, 2, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_diagonal_zeta(spec, 4));
}
BENCHMARK(BM_OptimalZeta)->Arg(400);

}  // namespace
}  // namespace covcode

BENCHMARK_MAIN();

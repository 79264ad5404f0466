// Copyright 2026 The pmx Authors
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

// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "pmx/bound_optimizer.hpp"
#include "pmx/werner_scan.hpp"

namespace {

using namespace pmx;

void BM_ScanSerial(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan_werner_serial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScanSerial)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan_werner(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ScanParallel)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

OptimizerConfig bench_config(int restarts) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    return cfg;
}

void BM_OptimizeSerial(benchmark::State &state) {
    const ProcessMatrix w = make_ocb();
    const OptimizerConfig cfg = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_success_serial(w, cfg));
}
BENCHMARK(BM_OptimizeSerial)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OptimizeParallel(benchmark::State &state) {
    const ProcessMatrix w = make_ocb();
    const OptimizerConfig cfg = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(maximize_success(w, cfg));
}
BENCHMARK(BM_OptimizeParallel)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SuccessByTrace(benchmark::State &state) {
    const ProcessMatrix w = make_ocb();
    const StrategyPair s = ocb_optimal_strategies();
    for (auto _ : state) benchmark::DoNotOptimize(success_probability(w, s));
}
BENCHMARK(BM_SuccessByTrace);

void BM_SuccessAnalytic(benchmark::State &state) {
    const ProcessCoefficients c = ProcessCoefficients::from(make_ocb());
    const StrategyPair s = ocb_optimal_strategies();
    for (auto _ : state) benchmark::DoNotOptimize(analytic_probabilities(c, s));
}
BENCHMARK(BM_SuccessAnalytic);

}  // namespace

BENCHMARK_MAIN();

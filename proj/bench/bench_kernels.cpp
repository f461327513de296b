// Copyright 2026 The qeff Authors
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

// Serial reference versus OpenMP kernel for every parallel code path.
// Argument 0 selects the serial path, 1 the parallel one.

#include <benchmark/benchmark.h>

#include "qeff/maximize.hpp"
#include "qeff/oracles.hpp"
#include "qeff/sweep.hpp"
#include "qeff/verify.hpp"

using namespace qeff;

namespace {

Execution exec_of(const benchmark::State &state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_SweepFig4(benchmark::State &state) {
    auto specs = preset("fig4");
    for (auto _ : state) {
        for (const auto &spec : specs) {
            benchmark::DoNotOptimize(run_sweep(spec, exec_of(state)));
        }
    }
}
BENCHMARK(BM_SweepFig4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarloLinear(benchmark::State &state) {
    LinearDetectorConfig cfg{1.0, 0.0, 0.0, 0.0};
    QubitState rho(0.5, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_linear(cfg, rho, 1000000, 1, exec_of(state)));
    }
}
BENCHMARK(BM_MonteCarloLinear)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PropertySweep(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(property_sweep(1000, 100, 1, exec_of(state)));
    }
}
BENCHMARK(BM_PropertySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Maximize(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_linear({}, exec_of(state)));
    }
}
BENCHMARK(BM_Maximize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ContinuumBranch(benchmark::State &state) {
    ContinuumDiscretization disc;
    ContinuumOptions opt;
    opt.exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_continuum_branch(1.0, 1.0, disc, 1.0, opt));
    }
}
BENCHMARK(BM_ContinuumBranch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// SPDX-License-Identifier: Apache-2.0
//
// rxfront - receiver front-end termination and noise analysis
// Copyright (C) 2026 The rxfront authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include "rxfront/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace rxfront;

namespace
{
    sweep::Execution mode(const benchmark::State &state)
    {
        return state.range(0) == 0 ? sweep::Execution::serial : sweep::Execution::parallel;
    }

    void BM_LoadGrid(benchmark::State &state)
    {
        const link::SingleLink l(Impedance(20.0, 80.0), Impedance(3.0, -1.0), 1e-12);
        const link::AmplifierNoiseModel amp(10.0, 1e-16, 290.0);
        const std::size_t n = std::size_t(state.range(1));
        const link::GridSpec grid{500.0, 500.0, n, n, true};
        for (auto _ : state)
            benchmark::DoNotOptimize(sweep::optimize_load(l, amp, grid, mode(state)));
        state.SetItemsProcessed(state.iterations() * std::int64_t(grid.size()));
    }

    void BM_ArraySweep(benchmark::State &state)
    {
        const std::size_t k = std::size_t(state.range(1));
        const auto zms = array::synthetic_array({2, k, Impedance(60.0, 15.0), 8.0, 0.6, 2.0, 5},
                                                FrequencyGrid::logarithmic(1e6, 1e9, 256));
        Eigen::VectorXcd i_t(2);
        i_t << complex(1.0, 0.0), complex(0.0, 0.5);
        const array::ArrayModel model(zms, i_t);
        const auto strategy = array::TerminationStrategy::full_conjugate();
        for (auto _ : state)
            benchmark::DoNotOptimize(sweep::sweep_array(model, strategy, mode(state)));
        state.SetItemsProcessed(state.iterations() * std::int64_t(zms.size()));
    }
}

BENCHMARK(BM_LoadGrid)->ArgsProduct({{0, 1}, {64, 256}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArraySweep)->ArgsProduct({{0, 1}, {4, 16}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

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

#ifndef RXFRONT_SWEEP_HPP
#define RXFRONT_SWEEP_HPP

#include "rxfront/array.hpp"
#include "rxfront/link.hpp"

#include <cstddef>
#include <exception>
#include <vector>

// Sweep kernels. Every kernel has a serial reference path and an OpenMP
// path; both evaluate each point with the same code and write into a slot
// fixed by the point index, so their outputs are bit-identical and ordered
// by index regardless of scheduling.
namespace rxfront::sweep
{
    enum class Execution
    {
        serial,
        parallel
    };

    // Threads used by the parallel path (1 without OpenMP).
    int max_threads();
    void set_threads(int n);

    // out[i] = fn(i) for i in [0, n). If any point throws, the exception from
    // the lowest failing index is rethrown after the loop, in both modes.
    template <class R, class Fn>
    std::vector<R> map_indexed(std::size_t n, Execution exec, Fn &&fn)
    {
        std::vector<R> out(n);
        if (exec == Execution::serial)
        {
            for (std::size_t i = 0; i < n; ++i)
                out[i] = fn(i);
            return out;
        }
        std::vector<std::exception_ptr> errors(n);
        const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < count; ++i)
        {
            try
            {
                out[std::size_t(i)] = fn(std::size_t(i));
            }
            catch (...)
            {
                errors[std::size_t(i)] = std::current_exception();
            }
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
        return out;
    }

    // Output SNR at every point of a load grid (NaN where the load shorts the source).
    std::vector<double> evaluate_load_grid(const link::SingleLink &link, const link::AmplifierNoiseModel &amp,
                                           const link::GridSpec &grid, Execution exec);

    // optimize_load on top of evaluate_load_grid.
    link::LoadOptimum optimize_load(const link::SingleLink &link, const link::AmplifierNoiseModel &amp,
                                    const link::GridSpec &grid, Execution exec);

    // One termination result per frequency of the model.
    std::vector<array::TerminationResult> sweep_array(const array::ArrayModel &model,
                                                      const array::TerminationStrategy &strategy, Execution exec);
}

#endif

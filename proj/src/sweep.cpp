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

#include "rxfront/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rxfront::sweep
{
    int max_threads()
    {
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }

    void set_threads(int n)
    {
#ifdef _OPENMP
        if (n > 0)
            omp_set_num_threads(n);
#else
        (void)n;
#endif
    }

    std::vector<double> evaluate_load_grid(const link::SingleLink &link, const link::AmplifierNoiseModel &amp,
                                           const link::GridSpec &grid, Execution exec)
    {
        return map_indexed<double>(grid.size(), exec,
                                   [&](std::size_t i) { return link::output_snr_or_nan(link, amp, grid.at(i)); });
    }

    link::LoadOptimum optimize_load(const link::SingleLink &link, const link::AmplifierNoiseModel &amp,
                                    const link::GridSpec &grid, Execution exec)
    {
        if (grid.size() == 0)
            throw ValidationError("load search grid is empty");
        const auto snr = evaluate_load_grid(link, amp, grid, exec);
        return link::select_optimum(grid, snr.data());
    }

    std::vector<array::TerminationResult> sweep_array(const array::ArrayModel &model,
                                                      const array::TerminationStrategy &strategy, Execution exec)
    {
        return map_indexed<array::TerminationResult>(
            model.size(), exec, [&](std::size_t f) { return array::terminate(model, strategy, f); });
    }
}

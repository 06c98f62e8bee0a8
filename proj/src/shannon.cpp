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

#include "rxfront/shannon.hpp"
#include "rxfront/error.hpp"

#include <cmath>
#include <numbers>

namespace rxfront::shannon
{
    AwgnChannelSpec::AwgnChannelSpec(double p, double b, double n0)
        : power(p), bandwidth(b), noise_density(n0)
    {
        detail::require(std::isfinite(p) && std::isfinite(b) && std::isfinite(n0),
                        "channel parameters must be finite");
        detail::require(p >= 0.0, "power must be non-negative");
        detail::require(b > 0.0, "bandwidth must be positive");
        detail::require(n0 > 0.0, "noise density must be positive");
    }

    double capacity(const AwgnChannelSpec &spec)
    {
        // log1p keeps the wideband tail accurate when P/(B N0) is tiny.
        return spec.bandwidth * std::log1p(spec.snr()) / std::numbers::ln2;
    }

    double capacity_bound(double power, double noise_density)
    {
        detail::require(power >= 0.0, "power must be non-negative");
        detail::require(noise_density > 0.0, "noise density must be positive");
        return power / (noise_density * std::numbers::ln2);
    }

    double eb_n0(const AwgnChannelSpec &spec)
    {
        if (spec.power == 0.0)
            throw ValidationError("Eb/N0 is undefined at zero power");
        return (spec.power / capacity(spec)) / spec.noise_density;
    }
}

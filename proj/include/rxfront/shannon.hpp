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

#ifndef RXFRONT_SHANNON_HPP
#define RXFRONT_SHANNON_HPP

#include "rxfront/error.hpp"

namespace rxfront::shannon
{
    // Band-limited additive Gaussian noise channel. All three quantities are
    // dimensionless; none of them is a physical power or energy.
    struct AwgnChannelSpec
    {
        AwgnChannelSpec(double power, double bandwidth, double noise_density);

        double power;         // P >= 0
        double bandwidth;     // B > 0
        double noise_density; // N0 > 0

        // P / (N0 B)
        double snr() const { return power / (noise_density * bandwidth); }
    };

    // B log2(1 + P / (B N0)), bits per unit time.
    double capacity(const AwgnChannelSpec &spec);

    // Infinite-bandwidth limit P / (N0 ln 2); strict upper bound on capacity for P > 0.
    double capacity_bound(double power, double noise_density);

    // (P / C) / N0. Always above ln 2 and tends to it as B grows.
    // Throws ValidationError for P = 0, where the ratio is undefined.
    double eb_n0(const AwgnChannelSpec &spec);
}

#endif

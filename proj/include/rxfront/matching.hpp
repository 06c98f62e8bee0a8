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

#ifndef RXFRONT_MATCHING_HPP
#define RXFRONT_MATCHING_HPP

#include "rxfront/link.hpp"

// Ideal step-up transformer between the antenna and a resistive amplifier
// input, optionally preceded by a per-frequency tuner that cancels the
// antenna reactance. The transformer is lossless and noiseless.
namespace rxfront::matching
{
    struct TransformerMatch
    {
        explicit TransformerMatch(double turns_ratio, bool cancel_reactance = true);

        double turns_ratio; // N2 / N1
        bool cancel_reactance;
    };

    // sqrt(r_in / Re Z_R): the primary then presents Re Z_R to the antenna.
    double optimal_turns_ratio(double r_in, double re_z_r);

    // Secondary-side Thevenin equivalent: (n v_oc, n^2 z), with z reduced to
    // Re z first when the reactance is cancelled.
    TheveninSource reflected_source(const TheveninSource &source, const TransformerMatch &xf);

    // Output SNR with the transformer in place. The amplifier input resistance
    // is a Johnson noise source at the amplifier temperature; the antenna is
    // lossless and contributes no noise of its own. With N_na = 0 the SNR
    // falls as 1/n^2, so an interior optimum exists only through N_na.
    double snr_with_transformer(const link::SingleLink &link, double amp_input_resistance,
                                const link::AmplifierNoiseModel &amp, const TransformerMatch &xf);
}

#endif

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

#include "rxfront/matching.hpp"

#include <cmath>
#include <limits>

namespace rxfront::matching
{
    TransformerMatch::TransformerMatch(double n, bool cancel) : turns_ratio(n), cancel_reactance(cancel)
    {
        detail::require(std::isfinite(n) && n > 0.0, "turns ratio must be positive");
    }

    double optimal_turns_ratio(double r_in, double re_z_r)
    {
        detail::require(r_in > 0.0, "amplifier input resistance must be positive");
        detail::require(re_z_r > 0.0, "antenna resistance must be positive");
        return std::sqrt(r_in / re_z_r);
    }

    TheveninSource reflected_source(const TheveninSource &source, const TransformerMatch &xf)
    {
        const double n = xf.turns_ratio;
        const complex z = xf.cancel_reactance ? complex(source.z_series.re(), 0.0) : source.z_series.value();
        return TheveninSource(n * source.v_oc, Impedance(n * n * z));
    }

    double snr_with_transformer(const link::SingleLink &link, double amp_input_resistance,
                                const link::AmplifierNoiseModel &amp, const TransformerMatch &xf)
    {
        detail::require(amp_input_resistance > 0.0, "amplifier input resistance must be positive");
        // Unit open-circuit voltage; the signal density is applied as |Z_RT|^2 S_IT.
        const TheveninSource secondary = reflected_source(TheveninSource(1.0, link.z_r), xf);
        const complex z_src = secondary.z_series.value();
        const complex total = z_src + amp_input_resistance;
        if (total == complex(0.0, 0.0))
            throw SingularCircuitError("transformer secondary loop has zero impedance");

        const double g2 = amp.gain * amp.gain;
        const double sum2 = std::norm(total);
        const double signal_gain = std::norm(secondary.v_oc) * amp_input_resistance * amp_input_resistance / sum2;
        const double noise_divider = std::norm(z_src) / sum2;
        const double signal = g2 * signal_gain * std::norm(link.z_rt.value()) * link.s_it;
        const double noise = amp.n_na + g2 * noise_divider * amp.johnson_density(amp_input_resistance);
        if (noise > 0.0)
            return signal / noise;
        return signal > 0.0 ? std::numeric_limits<double>::infinity() : std::numeric_limits<double>::quiet_NaN();
    }
}

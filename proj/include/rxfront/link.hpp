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

#ifndef RXFRONT_LINK_HPP
#define RXFRONT_LINK_HPP

#include "rxfront/netcore.hpp"

#include <cstddef>

// Single transmit/receive antenna pair driven by a transmit current source.
//
// Noise conventions: every spectral density here is two-sided. A resistor R
// at temperature T contributes 2kT*R [V^2/Hz], not the one-sided 4kTR found
// in most textbooks. The transmit current density s_it is two-sided too.
//
// SNR values are per-frequency spectral ratios. A return of +inf means the
// noise density vanished with a non-zero signal; NaN means both vanished.
namespace rxfront::link
{
    struct SingleLink
    {
        SingleLink(Impedance z_r, Impedance z_rt, double s_it);

        Impedance z_r;  // receive self-impedance
        Impedance z_rt; // transfer impedance, transmit current -> receive open-circuit voltage
        double s_it;    // transmit current spectral density [A^2/Hz]
    };

    struct AmplifierNoiseModel
    {
        AmplifierNoiseModel(double gain, double n_na, double temperature_k);

        double gain;        // voltage gain g
        double n_na;        // output-referred amplifier noise density [V^2/Hz]
        double temperature; // [K]

        double johnson_density(double resistance) const { return 2.0 * boltzmann * temperature * resistance; }
    };

    // Average power delivered to z_in by the source [W].
    double extracted_power(const TheveninSource &source, Impedance z_in);

    // |v_oc|^2 / (8 Re z_series) [W]; requires a lossy source.
    double max_available_power(const TheveninSource &source);

    // v_oc z_in / (z_series + z_in); exactly v_oc for an open-circuit load.
    complex divided_voltage(const TheveninSource &source, const Load &z_in);

    // Output SNR for an arbitrary passive load or the open-circuit measurement.
    double output_snr(const SingleLink &link, const AmplifierNoiseModel &amp, const Load &z_l);

    // output_snr with loads that short the source mapped to NaN.
    double output_snr_or_nan(const SingleLink &link, const AmplifierNoiseModel &amp, const Load &z_l);

    // Conjugate-matched SNR, coded from its own closed form.
    double snr_matched(const SingleLink &link, const AmplifierNoiseModel &amp);

    // 4 |Re Z_R / Z_R|^2 + g^2 2kT Re Z_R / N_na, the open-circuit to matched SNR ratio.
    double snr_ratio_oc_over_match(const SingleLink &link, const AmplifierNoiseModel &amp);

    // Rectangular load grid Re in [0, r_max], Im in [-x_max, x_max], plus
    // optionally the open-circuit point.
    struct GridSpec
    {
        double r_max = 0.0;
        double x_max = 0.0;
        std::size_t re_points = 0;
        std::size_t im_points = 0;
        bool include_open = true;

        std::size_t size() const { return re_points * im_points + (include_open ? 1 : 0); }
        // Load at flat index i; the open circuit, when present, is the last index.
        Load at(std::size_t i) const;
    };

    struct LoadOptimum
    {
        Load load;
        double snr;
    };

    // Exhaustive search for the SNR-maximizing load. Ties go to the larger
    // |Z_L|, and the open circuit beats any finite load it ties with. Grid
    // points that short the source (Z_R + Z_L = 0) are skipped.
    LoadOptimum optimize_load(const SingleLink &link, const AmplifierNoiseModel &amp, const GridSpec &search);

    // Selects the optimum from precomputed per-point SNRs (index-aligned with
    // search.at). NaN entries are ignored. Shared by the serial and parallel kernels.
    LoadOptimum select_optimum(const GridSpec &search, const double *snr);
}

#endif

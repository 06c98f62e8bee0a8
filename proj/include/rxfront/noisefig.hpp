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

#ifndef RXFRONT_NOISEFIG_HPP
#define RXFRONT_NOISEFIG_HPP

#include "rxfront/netcore.hpp"

// Available-power (Friis) noise calculus for a resistive generator feeding an
// infinite-input-impedance voltage amplifier through an input load resistor.
//
//   generator:  V_s in series with R_s at temperature T
//   amplifier:  R_L across the input, ideal gain g, output resistance R_o,
//               output-referred noise density N_na (two-sided)
//
// An open R_L takes dedicated code paths that evaluate the limiting forms
// exactly rather than plugging a large resistance into the general formulas.
namespace rxfront::noisefig
{
    struct SignalGenerator
    {
        SignalGenerator(complex v_s, double r_s, double temperature_k);

        complex v_s;
        double r_s;
        double temperature;
    };

    struct VoltageAmplifierStage
    {
        VoltageAmplifierStage(double gain, double n_na, Load r_load_in, double r_out);

        double gain;
        double n_na;
        Load r_load_in; // real resistance or open
        double r_out;
    };

    // |V_s|^2 / (4 R_s) [W]
    double available_signal_power(const SignalGenerator &gen);

    // kT/2 [W/Hz], independent of R_s
    double available_noise_power(const SignalGenerator &gen);

    // |V_s|^2 / (2 k T R_s)
    double input_snr(const SignalGenerator &gen);

    // (g^2 R_s / R_o) (R_L / (R_s + R_L))^2; g^2 R_s / R_o for an open R_L.
    double friis_gain(const SignalGenerator &gen, const VoltageAmplifierStage &amp);

    // Output SNR; independent of R_o.
    double output_snr_friis(const SignalGenerator &gen, const VoltageAmplifierStage &amp);

    // F = SNR_i / SNR_o in closed form. F >= 1 and independent of R_o.
    double noise_factor(const SignalGenerator &gen, const VoltageAmplifierStage &amp);

    // Source resistance minimizing F for a finite R_L:
    //   R_s = R_L sqrt(N_na / (2kT R_L g^2 + N_na))
    double optimal_rs_for_noise_factor(const VoltageAmplifierStage &amp, double temperature_k);

    // The attained minimum, evaluated as noise_factor at the optimal R_s.
    double minimum_noise_factor(const VoltageAmplifierStage &amp, double temperature_k);

    // 10 log10(F)
    double noise_figure_db(double noise_factor);
}

#endif

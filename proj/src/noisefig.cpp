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

#include "rxfront/noisefig.hpp"

#include <cmath>

namespace rxfront::noisefig
{
    namespace
    {
        double load_resistance(const Load &r)
        {
            return r.impedance().re();
        }
    }

    SignalGenerator::SignalGenerator(complex v, double r, double t) : v_s(v), r_s(r), temperature(t)
    {
        detail::require(std::isfinite(v.real()) && std::isfinite(v.imag()), "source voltage must be finite");
        detail::require(std::isfinite(r) && r > 0.0, "source resistance must be positive");
        detail::require(std::isfinite(t) && t > 0.0, "temperature must be positive");
    }

    VoltageAmplifierStage::VoltageAmplifierStage(double g, double n, Load rl, double ro)
        : gain(g), n_na(n), r_load_in(rl), r_out(ro)
    {
        detail::require(std::isfinite(g) && g > 0.0, "amplifier gain must be positive");
        detail::require(std::isfinite(n) && n >= 0.0, "amplifier noise density must be non-negative");
        detail::require(std::isfinite(ro) && ro > 0.0, "output resistance must be positive");
        if (!rl.is_open())
            detail::require(rl.impedance().im() == 0.0 && rl.impedance().re() > 0.0,
                            "input load must be a positive resistance or open");
    }

    double available_signal_power(const SignalGenerator &gen)
    {
        return std::norm(gen.v_s) / (4.0 * gen.r_s);
    }

    double available_noise_power(const SignalGenerator &gen)
    {
        return boltzmann * gen.temperature / 2.0;
    }

    double input_snr(const SignalGenerator &gen)
    {
        return std::norm(gen.v_s) / (2.0 * boltzmann * gen.temperature * gen.r_s);
    }

    double friis_gain(const SignalGenerator &gen, const VoltageAmplifierStage &amp)
    {
        const double g2 = amp.gain * amp.gain;
        if (amp.r_load_in.is_open())
            return g2 * gen.r_s / amp.r_out;
        const double rl = load_resistance(amp.r_load_in);
        const double divider = rl / (gen.r_s + rl);
        return (g2 * gen.r_s / amp.r_out) * divider * divider;
    }

    double output_snr_friis(const SignalGenerator &gen, const VoltageAmplifierStage &amp)
    {
        // Signal and noise both reach the output through the same 1/(4 R_o)
        // power factor, which cancels.
        const double g2 = amp.gain * amp.gain;
        const double two_kt = 2.0 * boltzmann * gen.temperature;
        const double vs2 = std::norm(gen.v_s);
        if (amp.r_load_in.is_open())
            return g2 * vs2 / (two_kt * gen.r_s * g2 + amp.n_na);
        const double rl = load_resistance(amp.r_load_in);
        const double divider = rl / (gen.r_s + rl);
        const double parallel = gen.r_s * rl / (gen.r_s + rl);
        return g2 * vs2 * divider * divider / (two_kt * g2 * parallel + amp.n_na);
    }

    double noise_factor(const SignalGenerator &gen, const VoltageAmplifierStage &amp)
    {
        const double excess = amp.n_na / (2.0 * boltzmann * gen.temperature * amp.gain * amp.gain);
        if (amp.r_load_in.is_open())
            return 1.0 + excess / gen.r_s;
        const double rl = load_resistance(amp.r_load_in);
        const double sum = gen.r_s + rl;
        return (sum / rl) * (1.0 + excess * sum / (gen.r_s * rl));
    }

    double optimal_rs_for_noise_factor(const VoltageAmplifierStage &amp, double temperature_k)
    {
        detail::require(!amp.r_load_in.is_open(), "optimal source resistance needs a finite input load");
        detail::require(temperature_k > 0.0, "temperature must be positive");
        const double rl = load_resistance(amp.r_load_in);
        const double johnson = 2.0 * boltzmann * temperature_k * rl * amp.gain * amp.gain;
        return rl * std::sqrt(amp.n_na / (johnson + amp.n_na));
    }

    double minimum_noise_factor(const VoltageAmplifierStage &amp, double temperature_k)
    {
        const double rs = optimal_rs_for_noise_factor(amp, temperature_k);
        if (rs == 0.0)
            return 1.0; // noiseless amplifier: F -> 1 as R_s -> 0
        return noise_factor(SignalGenerator(complex(0.0, 0.0), rs, temperature_k), amp);
    }

    double noise_figure_db(double f)
    {
        return 10.0 * std::log10(f);
    }
}

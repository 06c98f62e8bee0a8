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

#include "rxfront/link.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace rxfront::link
{
    namespace
    {
        double snr_quotient(double signal, double noise)
        {
            if (noise > 0.0)
                return signal / noise;
            return signal > 0.0 ? std::numeric_limits<double>::infinity()
                                : std::numeric_limits<double>::quiet_NaN();
        }

        complex total_impedance(const Impedance &a, const Impedance &b)
        {
            const complex sum = a.value() + b.value();
            if (sum == complex(0.0, 0.0))
                throw SingularCircuitError("source and load impedances sum to zero");
            return sum;
        }

        double axis_value(double lo, double hi, std::size_t n, std::size_t i)
        {
            if (n == 1)
                return hi;
            return lo + (hi - lo) * double(i) / double(n - 1);
        }
    }

    SingleLink::SingleLink(Impedance z_r_, Impedance z_rt_, double s_it_)
        : z_r(z_r_), z_rt(z_rt_), s_it(s_it_)
    {
        detail::require(z_r.re() >= 0.0, "receive self-resistance must be non-negative");
        detail::require(std::isfinite(s_it) && s_it >= 0.0, "transmit current density must be non-negative");
    }

    AmplifierNoiseModel::AmplifierNoiseModel(double g, double n, double t)
        : gain(g), n_na(n), temperature(t)
    {
        detail::require(std::isfinite(g) && g > 0.0, "amplifier gain must be positive");
        detail::require(std::isfinite(n) && n >= 0.0, "amplifier noise density must be non-negative");
        detail::require(std::isfinite(t) && t > 0.0, "temperature must be positive");
    }

    double extracted_power(const TheveninSource &source, Impedance z_in)
    {
        detail::require(z_in.re() >= 0.0, "load resistance must be non-negative");
        total_impedance(source.z_series, z_in);
        const double re_sum = source.z_series.re() + z_in.re();
        const double im_sum = source.z_series.im() + z_in.im();
        return std::norm(source.v_oc) * z_in.re() / (2.0 * (re_sum * re_sum + im_sum * im_sum));
    }

    double max_available_power(const TheveninSource &source)
    {
        if (source.z_series.re() <= 0.0)
            throw ValidationError("lossless source has unbounded available power");
        return std::norm(source.v_oc) / (8.0 * source.z_series.re());
    }

    complex divided_voltage(const TheveninSource &source, const Load &z_in)
    {
        if (z_in.is_open())
            return source.v_oc;
        const complex sum = total_impedance(source.z_series, z_in.impedance());
        return source.v_oc * z_in.impedance().value() / sum;
    }

    double output_snr(const SingleLink &link, const AmplifierNoiseModel &amp, const Load &z_l)
    {
        const double g2 = amp.gain * amp.gain;
        if (z_l.is_open())
            return snr_quotient(g2 * std::norm(link.z_rt.value()) * link.s_it, amp.n_na);

        const Impedance &zl = z_l.impedance();
        detail::require(zl.re() >= 0.0, "load resistance must be non-negative");
        const double denom = std::norm(total_impedance(link.z_r, zl));
        const double signal_divider = std::norm(zl.value()) / denom;
        const double noise_divider = std::norm(link.z_r.value()) / denom;
        const double signal = g2 * signal_divider * std::norm(link.z_rt.value()) * link.s_it;
        const double noise = amp.n_na + g2 * noise_divider * amp.johnson_density(zl.re());
        return snr_quotient(signal, noise);
    }

    double output_snr_or_nan(const SingleLink &link, const AmplifierNoiseModel &amp, const Load &z_l)
    {
        try
        {
            return output_snr(link, amp, z_l);
        }
        catch (const SingularCircuitError &)
        {
            return std::numeric_limits<double>::quiet_NaN();
        }
    }

    double snr_matched(const SingleLink &link, const AmplifierNoiseModel &amp)
    {
        const double r = link.z_r.re();
        if (r <= 0.0)
            throw ValidationError("conjugate match is degenerate for a lossless receive antenna");
        const double g2 = amp.gain * amp.gain;
        const double two_r = 2.0 * r;
        // |Z_R / (2 Re Z_R)|^2
        const double divider = std::norm(link.z_r.value()) / (two_r * two_r);
        const double signal = g2 * divider * std::norm(link.z_rt.value()) * link.s_it;
        const double noise = amp.n_na + g2 * divider * amp.johnson_density(r);
        return snr_quotient(signal, noise);
    }

    double snr_ratio_oc_over_match(const SingleLink &link, const AmplifierNoiseModel &amp)
    {
        const double r = link.z_r.re();
        detail::require(r > 0.0, "ratio needs a lossy receive antenna");
        if (amp.n_na <= 0.0)
            throw ValidationError("open-circuit SNR is unbounded when amplifier noise vanishes");
        const double shape = r / std::abs(link.z_r.value());
        return 4.0 * shape * shape + amp.gain * amp.gain * amp.johnson_density(r) / amp.n_na;
    }

    Load GridSpec::at(std::size_t i) const
    {
        const std::size_t finite = re_points * im_points;
        if (i >= finite)
            return Load::open();
        const std::size_t ir = i / im_points, ix = i % im_points;
        const double re = axis_value(0.0, r_max, re_points, ir);
        const double im = im_points == 1 ? 0.0 : axis_value(-x_max, x_max, im_points, ix);
        return Load(Impedance(re, im));
    }

    LoadOptimum select_optimum(const GridSpec &search, const double *snr)
    {
        const std::size_t n = search.size();
        std::size_t best = n;
        double best_mag = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (std::isnan(snr[i]))
                continue;
            const Load candidate = search.at(i);
            const double mag = candidate.is_open() ? std::numeric_limits<double>::infinity()
                                                   : std::abs(candidate.impedance().value());
            if (best == n || snr[i] > snr[best] || (snr[i] == snr[best] && mag >= best_mag))
            {
                best = i;
                best_mag = mag;
            }
        }
        if (best == n)
            throw NumericalError("no grid point produced a defined SNR");
        return {search.at(best), snr[best]};
    }

    LoadOptimum optimize_load(const SingleLink &link, const AmplifierNoiseModel &amp, const GridSpec &search)
    {
        const std::size_t n = search.size();
        if (n == 0)
            throw ValidationError("load search grid is empty");
        detail::require(search.r_max >= 0.0 && search.x_max >= 0.0, "grid extents must be non-negative");
        std::vector<double> snr(n);
        for (std::size_t i = 0; i < n; ++i)
            snr[i] = output_snr_or_nan(link, amp, search.at(i));
        return select_optimum(search, snr.data());
    }
}

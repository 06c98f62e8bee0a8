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

#ifndef RXFRONT_NETCORE_HPP
#define RXFRONT_NETCORE_HPP

#include "rxfront/error.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace rxfront
{
    using complex = std::complex<double>;

    // Boltzmann constant, exact SI value [J/K].
    inline constexpr double boltzmann = 1.380649e-23;

    // Default relative tolerance for reciprocity and passivity checks.
    inline constexpr double default_validation_tol = 1e-9;

    // Complex impedance in ohms. Both parts are finite.
    class Impedance
    {
    public:
        Impedance() = default;
        Impedance(double re_ohms, double im_ohms = 0.0);
        explicit Impedance(complex z) : Impedance(z.real(), z.imag()) {}

        double re() const { return z_.real(); }
        double im() const { return z_.imag(); }
        complex value() const { return z_; }
        Impedance conj() const { return Impedance(std::conj(z_)); }

        bool operator==(const Impedance &) const = default;

    private:
        complex z_{0.0, 0.0};
    };

    // Marker for an infinite (open-circuit) impedance.
    struct OpenCircuit
    {
        bool operator==(const OpenCircuit &) const = default;
    };

    // A two-terminal termination: either a finite impedance or an open circuit.
    // The open case is a distinguished value, never a large number, so the
    // formulas that depend on it can take their exact limiting form.
    class Load
    {
    public:
        Load(Impedance z) : open_(false), z_(z) {}
        Load(OpenCircuit) : open_(true) {}

        static Load open() { return Load(OpenCircuit{}); }
        static Load resistor(double ohms) { return Load(Impedance(ohms, 0.0)); }

        bool is_open() const { return open_; }

        // Throws ValidationError when the load is open.
        const Impedance &impedance() const;

        // 1/Z, or exactly zero for an open circuit.
        complex admittance() const;

        bool operator==(const Load &) const = default;

    private:
        bool open_;
        Impedance z_{};
    };

    // Strictly increasing list of positive frequencies [Hz].
    class FrequencyGrid
    {
    public:
        explicit FrequencyGrid(std::vector<double> points_hz);

        static FrequencyGrid single(double hz) { return FrequencyGrid({hz}); }
        static FrequencyGrid linear(double start_hz, double stop_hz, std::size_t points);
        static FrequencyGrid logarithmic(double start_hz, double stop_hz, std::size_t points);

        std::size_t size() const { return points_.size(); }
        double operator[](std::size_t i) const { return points_[i]; }
        double omega(std::size_t i) const { return 2.0 * std::numbers::pi * points_[i]; }
        const std::vector<double> &points() const { return points_; }

        bool operator==(const FrequencyGrid &) const = default;

    private:
        std::vector<double> points_;
    };

    // One square impedance matrix per grid point, partitioned into
    // `transmit_ports` leading ports and `receive_ports` trailing ports.
    // Construction checks only structure; reciprocity and passivity are
    // reported by the validators below.
    class ImpedanceMatrixSeries
    {
    public:
        ImpedanceMatrixSeries(FrequencyGrid grid, std::vector<Eigen::MatrixXcd> matrices,
                              std::size_t transmit_ports, std::size_t receive_ports);

        const FrequencyGrid &grid() const { return grid_; }
        std::size_t size() const { return matrices_.size(); }
        std::size_t ports() const { return transmit_ports_ + receive_ports_; }
        std::size_t transmit_ports() const { return transmit_ports_; }
        std::size_t receive_ports() const { return receive_ports_; }
        const Eigen::MatrixXcd &operator[](std::size_t i) const { return matrices_[i]; }
        const std::vector<Eigen::MatrixXcd> &matrices() const { return matrices_; }

        // Partition blocks at frequency index i.
        Eigen::MatrixXcd z_t(std::size_t i) const;
        Eigen::MatrixXcd z_tr(std::size_t i) const;
        Eigen::MatrixXcd z_rt(std::size_t i) const;
        Eigen::MatrixXcd z_r(std::size_t i) const;

    private:
        FrequencyGrid grid_;
        std::vector<Eigen::MatrixXcd> matrices_;
        std::size_t transmit_ports_;
        std::size_t receive_ports_;
    };

    // Open-circuit voltage phasor behind a series impedance.
    struct TheveninSource
    {
        TheveninSource(complex v_oc_volts, Impedance z_series_ohms);

        complex v_oc;
        Impedance z_series;
    };

    struct FrequencyCheck
    {
        std::size_t index;
        double frequency_hz;
        double value; // reciprocity: relative deviation; passivity: min eigenvalue
        double scale; // reciprocity: max |entry|; passivity: max |eigenvalue|
        bool pass;
    };

    struct ValidationReport
    {
        bool pass = true;
        double tol = default_validation_tol;
        // Largest relative deviation (reciprocity) or smallest
        // min-eigenvalue / max-|eigenvalue| ratio (passivity).
        double worst = 0.0;
        std::vector<FrequencyCheck> checks;
    };

    // Per frequency: max |Z[i][j] - Z[j][i]| / max |Z[i][j]|.
    ValidationReport validate_reciprocity(const ImpedanceMatrixSeries &zms,
                                          double tol = default_validation_tol);

    // Per frequency: eigenvalues of (Re Z + Re Z^T)/2; passes iff
    // min eigenvalue >= -tol * max |eigenvalue|.
    ValidationReport validate_passivity(const ImpedanceMatrixSeries &zms,
                                        double tol = default_validation_tol);

    // Single-matrix form of the passivity check, shared with termination loads.
    // Returns {min eigenvalue, max |eigenvalue|}.
    std::pair<double, double> real_part_spectrum(const Eigen::MatrixXcd &z);
    bool is_passive(const Eigen::MatrixXcd &z, double tol = default_validation_tol);

    // v_oc = z_rt * i_t behind the receive self-impedance z_r.
    TheveninSource thevenin_from_link(Impedance z_rt, complex i_t, Impedance z_r);

    // Relative difference |a - b| / max(|a|, |b|), zero when both vanish.
    double relative_difference(complex a, complex b);
}

#endif

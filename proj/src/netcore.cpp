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

#include "rxfront/netcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rxfront
{
    Impedance::Impedance(double re_ohms, double im_ohms) : z_(re_ohms, im_ohms)
    {
        detail::require(std::isfinite(re_ohms) && std::isfinite(im_ohms),
                        "impedance parts must be finite");
    }

    const Impedance &Load::impedance() const
    {
        if (open_)
            throw ValidationError("open-circuit load has no finite impedance");
        return z_;
    }

    complex Load::admittance() const
    {
        if (open_)
            return {0.0, 0.0};
        return 1.0 / z_.value();
    }

    FrequencyGrid::FrequencyGrid(std::vector<double> points_hz) : points_(std::move(points_hz))
    {
        detail::require(!points_.empty(), "frequency grid must be non-empty");
        for (std::size_t i = 0; i < points_.size(); ++i)
        {
            detail::require(std::isfinite(points_[i]) && points_[i] > 0.0,
                            "frequencies must be finite and positive");
            if (i > 0)
                detail::require(points_[i] > points_[i - 1], "frequencies must be strictly increasing");
        }
    }

    FrequencyGrid FrequencyGrid::linear(double start_hz, double stop_hz, std::size_t points)
    {
        detail::require(points >= 1, "grid needs at least one point");
        if (points == 1)
            return single(start_hz);
        std::vector<double> f(points);
        const double step = (stop_hz - start_hz) / double(points - 1);
        for (std::size_t i = 0; i < points; ++i)
            f[i] = start_hz + step * double(i);
        f.back() = stop_hz;
        return FrequencyGrid(std::move(f));
    }

    FrequencyGrid FrequencyGrid::logarithmic(double start_hz, double stop_hz, std::size_t points)
    {
        detail::require(points >= 1, "grid needs at least one point");
        detail::require(start_hz > 0.0 && stop_hz > 0.0, "log grid bounds must be positive");
        if (points == 1)
            return single(start_hz);
        std::vector<double> f(points);
        const double a = std::log10(start_hz), b = std::log10(stop_hz);
        for (std::size_t i = 0; i < points; ++i)
            f[i] = std::pow(10.0, a + (b - a) * double(i) / double(points - 1));
        f.front() = start_hz;
        f.back() = stop_hz;
        return FrequencyGrid(std::move(f));
    }

    ImpedanceMatrixSeries::ImpedanceMatrixSeries(FrequencyGrid grid, std::vector<Eigen::MatrixXcd> matrices,
                                                 std::size_t transmit_ports, std::size_t receive_ports)
        : grid_(std::move(grid)), matrices_(std::move(matrices)),
          transmit_ports_(transmit_ports), receive_ports_(receive_ports)
    {
        const auto n = Eigen::Index(ports());
        if (n == 0)
            throw ValidationError("impedance matrix needs at least one port");
        if (matrices_.size() != grid_.size())
            throw ValidationError("impedance series has " + std::to_string(matrices_.size()) +
                                  " matrices for " + std::to_string(grid_.size()) + " frequencies");
        for (std::size_t i = 0; i < matrices_.size(); ++i)
        {
            const auto &z = matrices_[i];
            if (z.rows() != n || z.cols() != n)
                throw ValidationError("impedance matrix at frequency index " + std::to_string(i) +
                                      " is " + std::to_string(z.rows()) + "x" + std::to_string(z.cols()) +
                                      ", expected " + std::to_string(n) + "x" + std::to_string(n));
            if (!z.allFinite())
                throw ValidationError("impedance matrix at frequency index " + std::to_string(i) +
                                      " has non-finite entries");
        }
    }

    Eigen::MatrixXcd ImpedanceMatrixSeries::z_t(std::size_t i) const
    {
        const auto m = Eigen::Index(transmit_ports_);
        return matrices_[i].topLeftCorner(m, m);
    }

    Eigen::MatrixXcd ImpedanceMatrixSeries::z_tr(std::size_t i) const
    {
        const auto m = Eigen::Index(transmit_ports_), k = Eigen::Index(receive_ports_);
        return matrices_[i].topRightCorner(m, k);
    }

    Eigen::MatrixXcd ImpedanceMatrixSeries::z_rt(std::size_t i) const
    {
        const auto m = Eigen::Index(transmit_ports_), k = Eigen::Index(receive_ports_);
        return matrices_[i].bottomLeftCorner(k, m);
    }

    Eigen::MatrixXcd ImpedanceMatrixSeries::z_r(std::size_t i) const
    {
        const auto k = Eigen::Index(receive_ports_);
        return matrices_[i].bottomRightCorner(k, k);
    }

    TheveninSource::TheveninSource(complex v_oc_volts, Impedance z_series_ohms)
        : v_oc(v_oc_volts), z_series(z_series_ohms)
    {
        detail::require(std::isfinite(v_oc.real()) && std::isfinite(v_oc.imag()),
                        "open-circuit voltage must be finite");
        detail::require(z_series.re() >= 0.0, "source resistance must be non-negative");
    }

    ValidationReport validate_reciprocity(const ImpedanceMatrixSeries &zms, double tol)
    {
        detail::require(tol > 0.0, "tolerance must be positive");
        ValidationReport report;
        report.tol = tol;
        for (std::size_t f = 0; f < zms.size(); ++f)
        {
            const auto &z = zms[f];
            const double scale = z.cwiseAbs().maxCoeff();
            double dev = 0.0;
            for (Eigen::Index i = 0; i < z.rows(); ++i)
                for (Eigen::Index j = i + 1; j < z.cols(); ++j)
                    dev = std::max(dev, std::abs(z(i, j) - z(j, i)));
            const double rel = scale > 0.0 ? dev / scale : 0.0;
            const bool pass = rel <= tol;
            report.worst = std::max(report.worst, rel);
            report.pass = report.pass && pass;
            report.checks.push_back({f, zms.grid()[f], rel, scale, pass});
        }
        return report;
    }

    std::pair<double, double> real_part_spectrum(const Eigen::MatrixXcd &z)
    {
        const Eigen::MatrixXd re = z.real();
        const Eigen::MatrixXd sym = 0.5 * (re + re.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw NumericalError("eigenvalue solver did not converge");
        const auto &ev = es.eigenvalues();
        return {ev.minCoeff(), ev.cwiseAbs().maxCoeff()};
    }

    bool is_passive(const Eigen::MatrixXcd &z, double tol)
    {
        const auto [lo, hi] = real_part_spectrum(z);
        return lo >= -tol * hi;
    }

    ValidationReport validate_passivity(const ImpedanceMatrixSeries &zms, double tol)
    {
        detail::require(tol > 0.0, "tolerance must be positive");
        ValidationReport report;
        report.tol = tol;
        report.worst = 1.0;
        for (std::size_t f = 0; f < zms.size(); ++f)
        {
            std::pair<double, double> spec;
            try
            {
                spec = real_part_spectrum(zms[f]);
            }
            catch (const NumericalError &)
            {
                throw NumericalError("eigenvalue solver did not converge at frequency index " +
                                     std::to_string(f));
            }
            const bool pass = spec.first >= -tol * spec.second;
            if (spec.second > 0.0)
                report.worst = std::min(report.worst, spec.first / spec.second);
            report.pass = report.pass && pass;
            report.checks.push_back({f, zms.grid()[f], spec.first, spec.second, pass});
        }
        return report;
    }

    TheveninSource thevenin_from_link(Impedance z_rt, complex i_t, Impedance z_r)
    {
        return TheveninSource(z_rt.value() * i_t, z_r);
    }

    double relative_difference(complex a, complex b)
    {
        const double scale = std::max(std::abs(a), std::abs(b));
        if (scale == 0.0)
            return 0.0;
        return std::abs(a - b) / scale;
    }
}

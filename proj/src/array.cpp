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

#include "rxfront/array.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

namespace rxfront::array
{
    namespace
    {
        std::string at_index(std::size_t f)
        {
            return " at frequency index " + std::to_string(f);
        }

        double divider_coupling(const Eigen::MatrixXcd &divider)
        {
            double diag = 0.0, off = 0.0;
            for (Eigen::Index i = 0; i < divider.rows(); ++i)
                for (Eigen::Index j = 0; j < divider.cols(); ++j)
                    (i == j ? diag : off) += std::norm(divider(i, j));
            return diag > 0.0 ? off / diag : 0.0;
        }
    }

    ArrayModel::ArrayModel(ImpedanceMatrixSeries zms, std::vector<Eigen::VectorXcd> i_t, double tol)
        : zms_(std::move(zms)), i_t_(std::move(i_t))
    {
        detail::require(zms_.transmit_ports() > 0 && zms_.receive_ports() > 0,
                        "array model needs at least one transmit and one receive port");
        detail::require(i_t_.size() == zms_.size(), "transmit currents must be given at every frequency");
        for (std::size_t f = 0; f < i_t_.size(); ++f)
        {
            detail::require(i_t_[f].size() == Eigen::Index(zms_.transmit_ports()),
                            "transmit current vector has the wrong length" + at_index(f));
            detail::require(i_t_[f].allFinite(), "transmit currents must be finite" + at_index(f));
        }
        const auto rec = validate_reciprocity(zms_, tol);
        if (!rec.pass)
            throw ValidationError("impedance matrix is not reciprocal (worst relative deviation " +
                                  std::to_string(rec.worst) + ")");
        const auto pas = validate_passivity(zms_, tol);
        if (!pas.pass)
            throw ValidationError("impedance matrix is not passive (worst eigenvalue ratio " +
                                  std::to_string(pas.worst) + ")");
    }

    ArrayModel::ArrayModel(ImpedanceMatrixSeries zms, const Eigen::VectorXcd &i_t, double tol)
        : ArrayModel(zms, std::vector<Eigen::VectorXcd>(zms.size(), i_t), tol)
    {
    }

    std::string TerminationStrategy::label() const
    {
        switch (kind)
        {
        case TerminationKind::open_circuit:
            return "open_circuit";
        case TerminationKind::per_antenna_conjugate:
            return "per_antenna_conjugate";
        case TerminationKind::full_conjugate:
            return "full_conjugate";
        case TerminationKind::explicit_load:
            return "explicit";
        }
        return "unknown";
    }

    std::optional<Eigen::MatrixXcd> termination_matrix(const TerminationStrategy &strategy,
                                                       const Eigen::MatrixXcd &z_r)
    {
        detail::require(z_r.rows() == z_r.cols(), "receive impedance block must be square");
        switch (strategy.kind)
        {
        case TerminationKind::open_circuit:
            return std::nullopt;
        case TerminationKind::per_antenna_conjugate:
        {
            Eigen::MatrixXcd z_l = Eigen::MatrixXcd::Zero(z_r.rows(), z_r.cols());
            z_l.diagonal() = z_r.diagonal().conjugate();
            return z_l;
        }
        case TerminationKind::full_conjugate:
            return Eigen::MatrixXcd(z_r.conjugate());
        case TerminationKind::explicit_load:
            detail::require(strategy.load.rows() == z_r.rows() && strategy.load.cols() == z_r.cols(),
                            "explicit load must be " + std::to_string(z_r.rows()) + "x" + std::to_string(z_r.cols()));
            detail::require(strategy.load.allFinite(), "explicit load must be finite");
            if (!is_passive(strategy.load))
                throw ValidationError("explicit load has a non-PSD real part");
            return strategy.load;
        }
        return std::nullopt;
    }

    Eigen::VectorXcd open_circuit_voltages(const ArrayModel &model, std::size_t f)
    {
        return model.zms().z_rt(f) * model.i_t(f);
    }

    std::vector<Eigen::VectorXcd> open_circuit_voltages(const ArrayModel &model)
    {
        std::vector<Eigen::VectorXcd> out;
        out.reserve(model.size());
        for (std::size_t f = 0; f < model.size(); ++f)
            out.push_back(open_circuit_voltages(model, f));
        return out;
    }

    TerminationResult terminate(const ArrayModel &model, const TerminationStrategy &strategy, std::size_t f)
    {
        TerminationResult r;
        const Eigen::VectorXcd v_oc = open_circuit_voltages(model, f);
        const Eigen::MatrixXcd z_r = model.zms().z_r(f);
        const auto z_l = termination_matrix(strategy, z_r);
        if (!z_l)
        {
            r.voltages = v_oc;
            r.currents = Eigen::VectorXcd::Zero(v_oc.size());
            return r;
        }

        const Eigen::MatrixXcd total = z_r + *z_l;
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(total);
        if (!lu.isInvertible())
            throw SingularCircuitError("Z_R + Z_L is singular" + at_index(f));
        r.currents = lu.solve(v_oc);
        r.voltages = *z_l * r.currents;
        r.sum_power = 0.5 * (r.currents.adjoint() * *z_l * r.currents)(0, 0).real();
        const double rcond = lu.rcond();
        r.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
        r.coupling_ratio = divider_coupling(*z_l * lu.inverse());
        if (r.condition > condition_warning)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "ill-conditioned divider (cond %.3g)", r.condition);
            r.annotations.emplace_back(buf);
        }
        if (strategy.kind == TerminationKind::full_conjugate)
            r.annotations.emplace_back("conjugate termination is anti-causal over wide bands");
        return r;
    }

    std::vector<Eigen::VectorXcd> terminated_voltages(const ArrayModel &model, const TerminationStrategy &strategy)
    {
        std::vector<Eigen::VectorXcd> out;
        out.reserve(model.size());
        for (std::size_t f = 0; f < model.size(); ++f)
            out.push_back(terminate(model, strategy, f).voltages);
        return out;
    }

    std::vector<double> sum_extracted_power(const ArrayModel &model, const TerminationStrategy &strategy)
    {
        std::vector<double> out;
        out.reserve(model.size());
        for (std::size_t f = 0; f < model.size(); ++f)
            out.push_back(terminate(model, strategy, f).sum_power);
        return out;
    }

    Eigen::VectorXcd full_conjugate_voltages_closed_form(const ArrayModel &model, std::size_t f)
    {
        const Eigen::MatrixXcd z_r = model.zms().z_r(f);
        const Eigen::MatrixXcd re = z_r.real().cast<complex>();
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(re);
        if (!lu.isInvertible())
            throw SingularCircuitError("Re Z_R is singular" + at_index(f));
        return 0.5 * z_r.conjugate() * lu.solve(open_circuit_voltages(model, f));
    }

    double sum_power_for_load(const Eigen::MatrixXcd &z_r, const Eigen::MatrixXcd &z_l, const Eigen::VectorXcd &v_oc)
    {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(z_r + z_l);
        if (!lu.isInvertible())
            throw SingularCircuitError("Z_R + Z_L is singular");
        const Eigen::VectorXcd i = lu.solve(v_oc);
        return 0.5 * (i.adjoint() * z_l * i)(0, 0).real();
    }

    ImpedanceMatrixSeries synthetic_array(const SyntheticArraySpec &spec, const FrequencyGrid &grid)
    {
        const std::size_t m = spec.transmit_ports, k = spec.receive_ports;
        detail::require(m > 0 && k > 0, "synthetic array needs transmit and receive ports");
        detail::require(spec.self_impedance.re() > 0.0, "self resistance must be positive");
        detail::require(spec.coupling >= 0.0 && spec.decay >= 0.0 && spec.transfer >= 0.0,
                        "coupling, decay and transfer must be non-negative");
        constexpr int max_attempts = 1000;

        std::mt19937_64 rng(spec.seed);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        // Symmetric coupling block for ports [offset, offset + count).
        auto couple = [&](Eigen::MatrixXcd &z, Eigen::Index offset, Eigen::Index count) {
            for (Eigen::Index i = 0; i < count; ++i)
            {
                z(offset + i, offset + i) = spec.self_impedance.value();
                for (Eigen::Index j = i + 1; j < count; ++j)
                {
                    const double mag = spec.coupling * std::pow(spec.decay, double(j - i));
                    const complex c = std::polar(mag, phase(rng));
                    z(offset + i, offset + j) = c;
                    z(offset + j, offset + i) = c;
                }
            }
        };

        std::vector<Eigen::MatrixXcd> mats;
        const auto n = Eigen::Index(m + k);
        for (std::size_t f = 0; f < grid.size(); ++f)
        {
            bool ok = false;
            for (int attempt = 0; attempt < max_attempts && !ok; ++attempt)
            {
                Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, n);
                couple(z, 0, Eigen::Index(m));
                couple(z, Eigen::Index(m), Eigen::Index(k));
                for (Eigen::Index r = 0; r < Eigen::Index(k); ++r)
                    for (Eigen::Index c = 0; c < Eigen::Index(m); ++c)
                    {
                        const complex t = std::polar(spec.transfer * unit(rng), phase(rng));
                        z(Eigen::Index(m) + r, c) = t;
                        z(c, Eigen::Index(m) + r) = t;
                    }
                if (is_passive(z))
                {
                    mats.push_back(std::move(z));
                    ok = true;
                }
            }
            if (!ok)
                throw ValidationError("synthetic array: no passive draw in " + std::to_string(max_attempts) +
                                      " attempts" + at_index(f));
        }
        return ImpedanceMatrixSeries(grid, std::move(mats), m, k);
    }
}

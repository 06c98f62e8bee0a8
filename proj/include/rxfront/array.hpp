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

#ifndef RXFRONT_ARRAY_HPP
#define RXFRONT_ARRAY_HPP

#include "rxfront/netcore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Receiver-array termination for an M-transmitter, K-receiver link described
// by the partitioned impedance matrix [[Z_T, Z_TR], [Z_RT, Z_R]].
//
// All results are per frequency. Conjugate terminations are evaluated with no
// causality constraint: Z_R^*(w) is anti-causal as a system, which matters
// only over wide bands, and is reported as an annotation.
namespace rxfront::array
{
    // Divider solves above this condition number are flagged in the results.
    inline constexpr double condition_warning = 1e12;

    class ArrayModel
    {
    public:
        // Throws ValidationError unless zms passes reciprocity and passivity
        // at `tol`, and i_t holds one length-M vector per frequency.
        ArrayModel(ImpedanceMatrixSeries zms, std::vector<Eigen::VectorXcd> i_t,
                   double tol = default_validation_tol);

        // Same transmit current vector at every frequency.
        ArrayModel(ImpedanceMatrixSeries zms, const Eigen::VectorXcd &i_t, double tol = default_validation_tol);

        const ImpedanceMatrixSeries &zms() const { return zms_; }
        const FrequencyGrid &grid() const { return zms_.grid(); }
        const Eigen::VectorXcd &i_t(std::size_t f) const { return i_t_[f]; }
        std::size_t transmit_ports() const { return zms_.transmit_ports(); }
        std::size_t receive_ports() const { return zms_.receive_ports(); }
        std::size_t size() const { return zms_.size(); }

    private:
        ImpedanceMatrixSeries zms_;
        std::vector<Eigen::VectorXcd> i_t_;
    };

    enum class TerminationKind
    {
        open_circuit,
        per_antenna_conjugate,
        full_conjugate,
        explicit_load
    };

    struct TerminationStrategy
    {
        TerminationKind kind = TerminationKind::open_circuit;
        Eigen::MatrixXcd load; // explicit_load only, K x K

        static TerminationStrategy open_circuit() { return {TerminationKind::open_circuit, {}}; }
        static TerminationStrategy per_antenna_conjugate() { return {TerminationKind::per_antenna_conjugate, {}}; }
        static TerminationStrategy full_conjugate() { return {TerminationKind::full_conjugate, {}}; }
        static TerminationStrategy explicit_load(Eigen::MatrixXcd z_l) { return {TerminationKind::explicit_load, std::move(z_l)}; }

        std::string label() const;
    };

    // Load matrix for a strategy; std::nullopt stands for the open circuit.
    // Throws ValidationError for an explicit load of the wrong size or with a
    // non-PSD real part.
    std::optional<Eigen::MatrixXcd> termination_matrix(const TerminationStrategy &strategy,
                                                       const Eigen::MatrixXcd &z_r);

    // Z_RT I_T at frequency index f.
    Eigen::VectorXcd open_circuit_voltages(const ArrayModel &model, std::size_t f);
    std::vector<Eigen::VectorXcd> open_circuit_voltages(const ArrayModel &model);

    struct TerminationResult
    {
        Eigen::VectorXcd voltages;  // terminated receive voltages
        Eigen::VectorXcd currents;  // load currents (Z_R + Z_L)^-1 V_oc; zero when open
        double sum_power = 0.0;     // Re(I^H Z_L I) / 2 [W]
        double condition = 1.0;     // condition estimate of Z_R + Z_L
        double coupling_ratio = 0.0; // off-diagonal / diagonal energy of the divider matrix
        std::vector<std::string> annotations;
    };

    // Matrix voltage divider and sum power at frequency index f.
    // Throws SingularCircuitError (with the frequency index) when Z_R + Z_L is singular.
    TerminationResult terminate(const ArrayModel &model, const TerminationStrategy &strategy, std::size_t f);

    // Z_L (Z_R + Z_L)^-1 V_oc per frequency; V_oc exactly for the open circuit.
    std::vector<Eigen::VectorXcd> terminated_voltages(const ArrayModel &model, const TerminationStrategy &strategy);

    // Sum extracted power per frequency; exactly zero for the open circuit.
    std::vector<double> sum_extracted_power(const ArrayModel &model, const TerminationStrategy &strategy);

    // Closed form of the full conjugate termination, 1/2 Z_R^* (Re Z_R)^-1 V_oc,
    // kept separate from the general divider for cross-checking.
    Eigen::VectorXcd full_conjugate_voltages_closed_form(const ArrayModel &model, std::size_t f);

    // Load-side sum power for an arbitrary K x K load, used by optimality searches.
    double sum_power_for_load(const Eigen::MatrixXcd &z_r, const Eigen::MatrixXcd &z_l, const Eigen::VectorXcd &v_oc);

    // Synthetic coupled array for tests and demos:
    //   Z_R = diag(self) + coupling * C,   C_ij = decay^|i-j| (i != j)
    // with the transmit side built the same way and random transfer entries of
    // magnitude <= transfer. Draws that fail passivity are rejected and redrawn.
    struct SyntheticArraySpec
    {
        std::size_t transmit_ports = 1;
        std::size_t receive_ports = 2;
        Impedance self_impedance{50.0, 10.0};
        double coupling = 10.0;
        double decay = 0.5;
        double transfer = 1.0;
        std::uint64_t seed = 1;

        bool operator==(const SyntheticArraySpec &) const = default;
    };

    ImpedanceMatrixSeries synthetic_array(const SyntheticArraySpec &spec, const FrequencyGrid &grid);
}

#endif

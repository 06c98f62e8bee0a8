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

#ifndef RXFRONT_FRONTEND_HPP
#define RXFRONT_FRONTEND_HPP

#include "rxfront/mna.hpp"
#include "rxfront/netcore.hpp"

#include <cmath>
#include <string_view>

// Finite-gain phasor models of op-amp front ends that read an antenna's
// open-circuit voltage.
//
// Op-amp model: output = A (v+ - v-) behind r_out, a differential input
// impedance z_id between the inputs, and a common-mode impedance z_cm from
// each input to ground. Either input impedance may be open. A = +inf selects
// the ideal-gain limit, evaluated in closed form.
//
// Topologies (the Thevenin source is v_oc in series with z_series):
//
//   buffer            source from ground to v+; output tied to v-.
//   constant current  v+ grounded; v_c drives r_c into v-; the source sits
//                     between v- (its - terminal) and the output (its +
//                     terminal), so the feedback forces the source current
//                     toward v_c / r_c and v_out = v_oc - z_series * i.
//   inside-out        constant current with v_c = 0 and r_c open.
//
// Signs are chosen so v_out -> +v_oc in the ideal limit of every topology.
// i_source is the current leaving the source's + terminal, and p_extracted
// is the average power the source delivers at its terminals.
//
// The inside-out input impedance exceeds the buffer's by a factor of about A
// only when z_cm is finite: with open inputs both topologies draw no current.
namespace rxfront::frontend
{
    struct OpAmpModel
    {
        OpAmpModel(double open_loop_gain, Load z_id, Load z_cm, double r_out);

        // Infinite gain, open inputs, zero output resistance.
        static OpAmpModel ideal();

        double open_loop_gain;
        Load z_id;
        Load z_cm;
        double r_out;

        bool infinite_gain() const { return std::isinf(open_loop_gain); }
    };

    struct FrontEndSolution
    {
        complex v_out;
        complex i_source;
        Load z_effective; // v_oc / i_source; open when no current flows
        double p_extracted;
    };

    enum class Topology
    {
        buffer,
        constant_current,
        inside_out
    };

    std::string_view topology_name(Topology t);

    FrontEndSolution solve_buffer(const TheveninSource &source, const OpAmpModel &amp);

    // r_c may be open; v_c is then irrelevant.
    FrontEndSolution solve_constant_current(const TheveninSource &source, const OpAmpModel &amp,
                                            complex v_c, const Load &r_c);

    FrontEndSolution solve_inside_out(const TheveninSource &source, const OpAmpModel &amp);

    // The same three circuits as element netlists, for the MNA oracle.
    // Nodes: "s" source internal, "p" v+, "n" v-, "o" output, "x" ideal VCVS
    // output; the source current is the branch current of "VR".
    // Requires a finite gain.
    mna::LinearNetlist buffer_netlist(const TheveninSource &source, const OpAmpModel &amp);
    mna::LinearNetlist constant_current_netlist(const TheveninSource &source, const OpAmpModel &amp,
                                                complex v_c, const Load &r_c);
    mna::LinearNetlist inside_out_netlist(const TheveninSource &source, const OpAmpModel &amp);

    // Reads v_out, i_source, z_effective and p_extracted off an MNA solution
    // of one of the netlists above.
    FrontEndSolution solution_from_mna(const TheveninSource &source, const mna::MnaSolution &sol);
}

#endif

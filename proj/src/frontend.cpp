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

#include "rxfront/frontend.hpp"

#include <cmath>
#include <limits>

namespace rxfront::frontend
{
    namespace
    {
        void require_passive(const Load &z, const char *what)
        {
            if (!z.is_open())
                detail::require(z.impedance().re() > 0.0, std::string(what) + " must have positive resistance or be open");
        }

        FrontEndSolution finish(const TheveninSource &source, complex v_out, complex i)
        {
            const complex v_term = source.v_oc - source.z_series.value() * i;
            FrontEndSolution s{v_out, i, Load::open(), 0.5 * (v_term * std::conj(i)).real()};
            if (i != complex(0.0, 0.0))
                s.z_effective = Load(Impedance(source.v_oc / i));
            return s;
        }

        void add_load(mna::LinearNetlist &net, const char *name, const char *a, const char *b, const Load &z)
        {
            if (!z.is_open())
                net.add_impedance(name, a, b, z.impedance().value());
        }

        void require_finite_gain(const OpAmpModel &amp)
        {
            if (amp.infinite_gain())
                throw ValidationError("netlists need a finite open-loop gain");
        }
    }

    OpAmpModel::OpAmpModel(double a, Load id, Load cm, double ro)
        : open_loop_gain(a), z_id(id), z_cm(cm), r_out(ro)
    {
        detail::require(a > 0.0 && !std::isnan(a), "open-loop gain must be positive");
        require_passive(z_id, "differential input impedance");
        require_passive(z_cm, "common-mode input impedance");
        detail::require(std::isfinite(ro) && ro >= 0.0, "output resistance must be non-negative");
    }

    OpAmpModel OpAmpModel::ideal()
    {
        return OpAmpModel(std::numeric_limits<double>::infinity(), Load::open(), Load::open(), 0.0);
    }

    std::string_view topology_name(Topology t)
    {
        switch (t)
        {
        case Topology::buffer:
            return "buffer";
        case Topology::constant_current:
            return "constant_current";
        case Topology::inside_out:
            return "inside_out";
        }
        return "unknown";
    }

    FrontEndSolution solve_buffer(const TheveninSource &source, const OpAmpModel &amp)
    {
        const complex y_cm = amp.z_cm.admittance();
        const complex y_id = amp.z_id.admittance();
        // (v+ - v_out) / v+, from KCL at the output node
        complex beta = 0.0;
        if (!amp.infinite_gain())
            beta = (1.0 + amp.r_out * y_cm) / (1.0 + amp.open_loop_gain + amp.r_out * (y_id + y_cm));
        // admittance seen from the source into v+
        const complex y_in = y_cm + y_id * beta;
        const complex denom = 1.0 + source.z_series.value() * y_in;
        if (denom == complex(0.0, 0.0))
            throw SingularCircuitError("buffer input network is singular");
        const complex v_plus = source.v_oc / denom;
        return finish(source, v_plus * (1.0 - beta), v_plus * y_in);
    }

    FrontEndSolution solve_constant_current(const TheveninSource &source, const OpAmpModel &amp,
                                            complex v_c, const Load &r_c)
    {
        if (!r_c.is_open())
            detail::require(r_c.impedance().re() > 0.0 && r_c.impedance().im() == 0.0,
                            "control resistor must be a positive resistance or open");
        const complex g_c = r_c.admittance();
        const complex z_r = source.z_series.value();
        if (amp.infinite_gain())
        {
            // v- is held at ground, so the control branch alone sets the current.
            const complex i = g_c * v_c;
            return finish(source, source.v_oc - z_r * i, i);
        }
        const double loop = 1.0 + amp.open_loop_gain;
        // total admittance from v- to ground, excluding the source branch
        const complex s = g_c + amp.z_id.admittance() + amp.z_cm.admittance();
        const complex series = amp.r_out + z_r;
        const complex denom = s * series + loop;
        if (denom == complex(0.0, 0.0))
            throw SingularCircuitError("constant-current loop is singular");
        const complex i = (loop * g_c * v_c + s * source.v_oc) / denom;
        const complex v_minus = (series * i - source.v_oc) / loop;
        return finish(source, v_minus + source.v_oc - z_r * i, i);
    }

    FrontEndSolution solve_inside_out(const TheveninSource &source, const OpAmpModel &amp)
    {
        return solve_constant_current(source, amp, complex(0.0, 0.0), Load::open());
    }

    mna::LinearNetlist buffer_netlist(const TheveninSource &source, const OpAmpModel &amp)
    {
        require_finite_gain(amp);
        mna::LinearNetlist net;
        net.add_voltage_source("VR", "s", "0", source.v_oc);
        net.add_impedance("ZR", "s", "p", source.z_series.value());
        add_load(net, "ZID", "p", "o", amp.z_id);
        add_load(net, "ZCMP", "p", "0", amp.z_cm);
        add_load(net, "ZCMN", "o", "0", amp.z_cm);
        net.add_vcvs("EA", "x", "0", "p", "o", amp.open_loop_gain);
        net.add_impedance("ZO", "x", "o", amp.r_out);
        return net;
    }

    mna::LinearNetlist constant_current_netlist(const TheveninSource &source, const OpAmpModel &amp,
                                                complex v_c, const Load &r_c)
    {
        require_finite_gain(amp);
        mna::LinearNetlist net;
        // source: - terminal on v-, + terminal (behind z_series) on the output
        net.add_voltage_source("VR", "s", "n", source.v_oc);
        net.add_impedance("ZR", "s", "o", source.z_series.value());
        if (!r_c.is_open())
        {
            net.add_voltage_source("VC", "c", "0", v_c);
            net.add_impedance("RC", "c", "n", r_c.impedance().value());
        }
        add_load(net, "ZID", "n", "0", amp.z_id); // v+ is grounded
        add_load(net, "ZCMN", "n", "0", amp.z_cm);
        net.add_vcvs("EA", "x", "0", "0", "n", amp.open_loop_gain);
        net.add_impedance("ZO", "x", "o", amp.r_out);
        return net;
    }

    mna::LinearNetlist inside_out_netlist(const TheveninSource &source, const OpAmpModel &amp)
    {
        return constant_current_netlist(source, amp, complex(0.0, 0.0), Load::open());
    }

    FrontEndSolution solution_from_mna(const TheveninSource &source, const mna::MnaSolution &sol)
    {
        // The source current could be read off the VR branch, but that is
        // (V_s - V_p) / Z_R in disguise: two nearly equal node voltages once
        // the front end draws little current. KCL at the amplifier input
        // gives the same current from well-scaled node voltages instead.
        auto current = [&](const char *name) {
            for (const auto &e : sol.elements)
                if (e.name == name)
                    return e.current;
            return complex(0.0, 0.0);
        };
        complex i;
        if (sol.node_voltages.count("p"))
            i = current("ZID") + current("ZCMP"); // buffer: everything leaving v+
        else
            i = current("RC") - current("ZID") - current("ZCMN"); // v- node
        return finish(source, sol.voltage("o"), i);
    }
}

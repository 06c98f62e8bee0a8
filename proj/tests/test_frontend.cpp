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

#include "oracles.hpp"
#include "rxfront/frontend.hpp"

#include <gtest/gtest.h>

using namespace rxfront;
using namespace rxfront::frontend;

namespace
{
    const Load open = Load::open();

    Load ohms(double re, double im = 0.0) { return Load(Impedance(re, im)); }
}

TEST(Frontend, BufferHighGainOpenInputs)
{
    const TheveninSource src(complex(1e-3, 2e-4), Impedance(100.0, 30.0));
    const double a = 1e6;
    const auto s = solve_buffer(src, OpAmpModel(a, open, open, 0.0));
    EXPECT_EQ(s.i_source, complex(0.0));
    EXPECT_TRUE(s.z_effective.is_open());
    EXPECT_EQ(s.p_extracted, 0.0);
    EXPECT_LT(oracle::rel(s.v_out, src.v_oc * a / (1.0 + a)), 1e-15);
}

TEST(Frontend, IdealLimitsAreExact)
{
    const TheveninSource src(complex(0.3, -0.1), Impedance(75.0, -20.0));
    const auto b = solve_buffer(src, OpAmpModel::ideal());
    EXPECT_EQ(b.v_out, src.v_oc);
    EXPECT_EQ(b.i_source, complex(0.0));
    EXPECT_TRUE(b.z_effective.is_open());

    const auto io = solve_inside_out(src, OpAmpModel::ideal());
    EXPECT_EQ(io.v_out, src.v_oc);
    EXPECT_EQ(io.i_source, complex(0.0));
    EXPECT_TRUE(io.z_effective.is_open());
    EXPECT_EQ(io.p_extracted, 0.0);
}

TEST(Frontend, BufferCommonModeLeak)
{
    const TheveninSource src(1.0, Impedance(100.0, 0.0));
    const auto s = solve_buffer(src, OpAmpModel(1e6, open, ohms(1e12), 0.0));
    EXPECT_LT(oracle::rel(s.i_source, complex(1e-12)), 1e-9);
    EXPECT_LT(oracle::rel(s.p_extracted, 0.5e-12), 1e-9);
}

TEST(Frontend, ConstantCurrentIdeal)
{
    oracle::Rng rng(31);
    for (int i = 0; i < 10; ++i)
    {
        const TheveninSource src(rng.phasor(1e-6, 1.0), Impedance(rng.log_uniform(1, 1e4), rng.uniform(-1e3, 1e3)));
        const auto s = solve_constant_current(src, OpAmpModel::ideal(), 1.0, Load::resistor(1e3));
        EXPECT_LT(oracle::rel(s.i_source, complex(1e-3)), 1e-12);
        EXPECT_LT(oracle::rel(s.v_out, src.v_oc - src.z_series.value() * 1e-3), 1e-12);

        const auto z = solve_constant_current(src, OpAmpModel::ideal(), 0.0, Load::resistor(1e3));
        EXPECT_EQ(z.i_source, complex(0.0));
        EXPECT_EQ(z.v_out, src.v_oc);

        const auto f = solve_constant_current(src, OpAmpModel(1e5, open, open, 10.0), 1.0, Load::resistor(1e3));
        EXPECT_LT(oracle::rel(f.i_source, complex(1e-3)), 1e-4);
    }
}

TEST(Frontend, InsideOutEffectiveImpedance)
{
    oracle::Rng rng(32);
    for (int i = 0; i < 100; ++i)
    {
        const complex zr(rng.log_uniform(1, 1e4), rng.uniform(-1e3, 1e3));
        const complex zid(rng.log_uniform(1e3, 1e9), rng.uniform(-1e3, 1e3));
        const double a = rng.log_uniform(1, 1e6), ro = rng.uniform(0.0, 100.0);
        const TheveninSource src(rng.phasor(1e-6, 1.0), Impedance(zr));
        const auto s = solve_inside_out(src, OpAmpModel(a, ohms(zid.real(), zid.imag()), open, ro));
        const complex expect = zid * (1.0 + a) + zr + ro;
        EXPECT_LT(oracle::rel(s.z_effective.impedance().value(), expect), 1e-12);
        // ideal output resistance reproduces the bare form
        const auto s0 = solve_inside_out(src, OpAmpModel(a, ohms(zid.real(), zid.imag()), open, 0.0));
        EXPECT_LT(oracle::rel(s0.z_effective.impedance().value(), zid * (1.0 + a) + zr), 1e-12);
    }
}

TEST(Frontend, ExtractedPowerVanishesWithGain)
{
    const TheveninSource src(1.0, Impedance(50.0, 10.0));
    for (auto topo : {0, 1})
    {
        double prev = std::numeric_limits<double>::infinity();
        for (double a = 1.0; a <= 1e12; a *= 10.0)
        {
            const OpAmpModel amp(a, ohms(1e4), open, 10.0);
            const double p = topo == 0 ? solve_buffer(src, amp).p_extracted : solve_inside_out(src, amp).p_extracted;
            EXPECT_GE(p, 0.0);
            EXPECT_LT(p, prev);
            prev = p;
        }
        EXPECT_LT(prev, 1e-15);
    }
}

TEST(Frontend, ClosedFormMatchesMna)
{
    oracle::Rng rng(33);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i)
    {
        const TheveninSource src(rng.phasor(1e-6, 1.0), Impedance(rng.log_uniform(1, 1e4), rng.uniform(-1e3, 1e3)));
        const Load zid = i % 5 == 0 ? open : ohms(rng.log_uniform(1e3, 1e9), rng.uniform(-1e3, 1e3));
        const Load zcm = i % 3 == 0 ? open : ohms(rng.log_uniform(1e5, 1e10), rng.uniform(-1e3, 1e3));
        const OpAmpModel amp(rng.log_uniform(1, 1e6), zid, zcm, rng.uniform(0.0, 100.0));
        const complex vc = rng.phasor(1e-3, 1.0);
        const Load rc = Load::resistor(rng.log_uniform(10, 1e5));

        const auto check = [&](const FrontEndSolution &cf, const mna::LinearNetlist &net) {
            const auto m = solution_from_mna(src, mna::mna_solve(net));
            const double e_v = oracle::rel(cf.v_out, m.v_out);
            const double e_i = std::abs(cf.i_source - m.i_source) / std::max(std::abs(cf.i_source), 1e-300);
            worst = std::max({worst, e_v, cf.i_source == complex(0.0) ? std::abs(m.i_source) : e_i});
        };
        check(solve_buffer(src, amp), buffer_netlist(src, amp));
        check(solve_constant_current(src, amp, vc, rc), constant_current_netlist(src, amp, vc, rc));
        check(solve_inside_out(src, amp), inside_out_netlist(src, amp));
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(Frontend, PowerAccountingMatchesSource)
{
    // p_extracted is the power delivered out of the Thevenin terminals.
    const TheveninSource src(complex(0.5, 0.2), Impedance(60.0, 15.0));
    const OpAmpModel amp(100.0, ohms(1e3), ohms(1e5), 20.0);
    const auto s = solve_buffer(src, amp);
    const complex v_term = src.v_oc - src.z_series.value() * s.i_source;
    EXPECT_LT(oracle::rel(s.p_extracted, 0.5 * (v_term * std::conj(s.i_source)).real()), 1e-15);
    const auto z = s.z_effective.impedance().value();
    EXPECT_LT(oracle::rel(z, src.v_oc / s.i_source), 1e-15);
    EXPECT_LE(s.p_extracted, std::norm(src.v_oc) / (8.0 * src.z_series.re()));
}

TEST(Frontend, DomainChecks)
{
    EXPECT_THROW(OpAmpModel(0.0, open, open, 0.0), ValidationError);
    EXPECT_THROW(OpAmpModel(10.0, ohms(-1.0), open, 0.0), ValidationError);
    EXPECT_THROW(OpAmpModel(10.0, open, open, -1.0), ValidationError);
    EXPECT_THROW(buffer_netlist(TheveninSource(1.0, Impedance(50.0, 0.0)), OpAmpModel::ideal()), ValidationError);
    EXPECT_THROW(solve_constant_current(TheveninSource(1.0, Impedance(50.0, 0.0)), OpAmpModel::ideal(), 1.0,
                                        ohms(10.0, 1.0)),
                 ValidationError);
}

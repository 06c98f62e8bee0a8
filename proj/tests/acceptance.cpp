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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"
#include "rxfront/array.hpp"
#include "rxfront/cli/run.hpp"
#include "rxfront/frontend.hpp"
#include "rxfront/link.hpp"
#include "rxfront/matching.hpp"
#include "rxfront/noisefig.hpp"
#include "rxfront/shannon.hpp"
#include "rxfront/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

using namespace rxfront;
namespace fs = std::filesystem;

namespace
{
    const fs::path data = RXFRONT_TEST_DATA;

    struct Verdict
    {
        bool pass = true;
        std::string detail;

        void require(bool ok, const std::string &why)
        {
            if (!ok && pass)
            {
                pass = false;
                detail = why;
            }
        }
    };

    std::string fmt(const char *f, double a, double b = 0.0)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, f, a, b);
        return buf;
    }

    class Timer
    {
    public:
        double seconds() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    int cli(const std::vector<std::string> &args, std::string &out)
    {
        std::ostringstream o, e;
        const int code = cli::run(args, o, e);
        out = o.str();
        return code;
    }

    // value in column `col` of the first CSV row whose `key` column equals `want`
    double csv_lookup(const std::string &csv, const std::string &key, const std::string &want, const std::string &col)
    {
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        auto split = [](const std::string &l) {
            std::vector<std::string> v;
            std::stringstream ss(l);
            for (std::string c; std::getline(ss, c, ',');)
                v.push_back(c);
            return v;
        };
        const auto head = split(line);
        const auto ki = std::size_t(std::find(head.begin(), head.end(), key) - head.begin());
        const auto ci = std::size_t(std::find(head.begin(), head.end(), col) - head.begin());
        while (std::getline(in, line))
        {
            const auto row = split(line);
            if (ki < row.size() && ci < row.size() && row[ki] == want)
                return std::stod(row[ci]);
        }
        return std::numeric_limits<double>::quiet_NaN();
    }

    // ------------------------------------------------------------------

    Verdict snr_ratio_identity()
    {
        Verdict v;
        Timer t;
        oracle::Rng rng(101);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const Impedance zr(rng.log_uniform(1e-2, 1e4), rng.uniform(-1e4, 1e4));
            const link::SingleLink l(zr, Impedance(rng.phasor(1e-3, 1e3)), rng.log_uniform(1e-24, 1e-6));
            const link::AmplifierNoiseModel amp(rng.log_uniform(1e-1, 1e4), rng.log_uniform(1e-24, 1e-8),
                                                rng.uniform(1.0, 1000.0));
            const double closed = link::snr_ratio_oc_over_match(l, amp);
            const double direct = link::output_snr(l, amp, Load::open()) / link::snr_matched(l, amp);
            worst = std::max(worst, oracle::rel(closed, direct));
        }
        const double secs = t.seconds();
        v.require(worst <= 1e-12, fmt("worst relative deviation %.3g", worst));
        v.require(secs < 1.0, fmt("runtime %.3g s", secs));
        if (v.pass)
            v.detail = fmt("worst relative deviation %.3g, %.3g s", worst, secs);
        return v;
    }

    Verdict crossover_golden_reports()
    {
        Verdict v;
        const double n_na = 1e-12, temp = 290.0;
        for (const char *name : {"link_real", "link_reactive"})
        {
            std::string out;
            const int code = cli({"link", "--scenario", (data / (std::string(name) + ".json")).string()}, out);
            v.require(code == 0, std::string(name) + ": exit code " + std::to_string(code));
            v.require(out == slurp(data / "golden" / (std::string(name) + ".csv")),
                      std::string(name) + ": report differs from golden");

            // independent evaluation of both SNRs from the scenario parameters
            const bool real = std::string(name) == "link_real";
            const double rr = real ? 50.0 : 1.0, xr = real ? 0.0 : 99.99499987499375;
            const double oc = oracle::link_snr_open(1.0, 1e-10, 1.0, n_na);
            const double mt = oracle::link_snr(rr, xr, rr, -xr, 1.0, 1e-10, 1.0, temp, n_na);
            const double ratio = oc / mt;
            const double reported = csv_lookup(out, "strategy", "open_circuit", "snr_over_matched");
            v.require(oracle::rel(reported, ratio) < 1e-10, std::string(name) + ": reported ratio disagrees with oracle");
            if (real)
            {
                const double johnson = 2.0 * oracle::k_b * temp * rr / n_na;
                const double scaled = reported / (1.0 + johnson / 4.0);
                v.require(scaled > 3.99 && scaled < 4.01, fmt("real antenna ratio %.6g", reported));
                v.detail = fmt("real: %.9g", reported);
            }
            else
            {
                v.require(reported < 0.01, fmt("reactive antenna ratio %.6g", reported));
                if (v.pass)
                    v.detail += fmt(", reactive: %.6g", reported);
            }
        }
        return v;
    }

    Verdict friis_calculus()
    {
        using namespace noisefig;
        Verdict v;
        Timer t;
        oracle::Rng rng(103);
        double worst_id = 0.0;
        for (int i = 0; i < 1000; ++i)
        {
            const SignalGenerator gen(rng.log_uniform(1e-9, 1.0), rng.log_uniform(1e-2, 1e6), rng.uniform(1, 1000));
            const Load rl = i % 10 == 0 ? Load::open() : Load::resistor(rng.log_uniform(1e-2, 1e7));
            const double g = rng.log_uniform(0.1, 1e4), n = rng.log_uniform(1e-24, 1e-10);
            const VoltageAmplifierStage a(g, n, rl, 1.0), b(g, n, rl, 50.0), c(g, n, rl, 1e6);
            const double f = noise_factor(gen, a), s = output_snr_friis(gen, a);
            worst_id = std::max(worst_id, oracle::rel(f * s, input_snr(gen)));
            v.require(f == noise_factor(gen, b) && f == noise_factor(gen, c), "noise factor depends on R_o");
            v.require(s == output_snr_friis(gen, b) && s == output_snr_friis(gen, c), "output SNR depends on R_o");
        }
        v.require(worst_id <= 1e-12, fmt("F SNR_o vs SNR_i deviation %.3g", worst_id));

        double worst_opt = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const double temp = rng.uniform(10, 1000), rl = rng.log_uniform(1, 1e5), g = rng.log_uniform(1, 100);
            // amplifier noise spanning 1e-3 .. 1e3 of the R_L Johnson density at the output
            const double n = rng.log_uniform(1e-3, 1e3) * 2.0 * oracle::k_b * temp * rl * g * g;
            const VoltageAmplifierStage st(g, n, Load::resistor(rl), 50.0);
            const double closed = optimal_rs_for_noise_factor(st, temp);
            const double found = std::exp(oracle::golden_section(
                [&](double x) { return noise_factor(SignalGenerator(1.0, std::exp(x), temp), st); },
                std::log(closed) - 8.0, std::log(closed) + 6.0, 1e-14));
            worst_opt = std::max(worst_opt, oracle::rel(found, closed));
        }
        const double secs = t.seconds();
        v.require(worst_opt <= 1e-6, fmt("optimal R_s deviation %.3g", worst_opt));
        v.require(secs < 5.0, fmt("runtime %.3g s", secs));
        if (v.pass)
            v.detail = fmt("identity %.3g, optimum %.3g", worst_id, worst_opt) + fmt(", %.3g s", secs);
        return v;
    }

    Verdict optimality_limits()
    {
        using namespace noisefig;
        Verdict v;
        const double temp = 290.0, g = 10.0, n = 1e-17, ro = 50.0, vs = 1e-6;
        // ascending log grid, ratio q between neighbours
        std::vector<double> grid;
        for (double r = 1e-3; r <= 1e9; r *= 1.05)
            grid.push_back(r);
        const double step = 1.05;
        auto argmax = [&](auto fn) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < grid.size(); ++i)
                if (fn(grid[i]) > fn(grid[best]))
                    best = i;
            return best;
        };

        // gain over R_s at fixed R_L peaks at R_s = R_L
        const double rl = 300.0;
        const auto st = VoltageAmplifierStage(g, n, Load::resistor(rl), ro);
        const auto i22 = argmax([&](double rs) { return friis_gain(SignalGenerator(vs, rs, temp), st); });
        v.require(grid[i22] / rl < step && rl / grid[i22] < step, fmt("gain argmax %.6g vs %.6g", grid[i22], rl));
        v.require(oracle::rel(friis_gain(SignalGenerator(vs, rl, temp), st), g * g * rl / (4.0 * ro)) < 1e-12,
                  "matched gain value");

        // over R_L at fixed R_s: gain, output SNR and -F all peak at the top of the grid and
        // approach the open-load closed forms
        const double rs = 75.0;
        const SignalGenerator gen(vs, rs, temp);
        auto at = [&](double r) { return VoltageAmplifierStage(g, n, Load::resistor(r), ro); };
        const auto open = VoltageAmplifierStage(g, n, Load::open(), ro);
        const std::size_t last = grid.size() - 1;
        v.require(argmax([&](double r) { return friis_gain(gen, at(r)); }) == last, "gain argmax over R_L");
        v.require(argmax([&](double r) { return output_snr_friis(gen, at(r)); }) == last, "SNR argmax over R_L");
        v.require(argmax([&](double r) { return -noise_factor(gen, at(r)); }) == last, "F argmin over R_L");
        const double big = 1e15;
        v.require(oracle::rel(friis_gain(gen, at(big)), g * g * rs / ro) < 1e-9, "gain limit");
        v.require(oracle::rel(friis_gain(gen, open), g * g * rs / ro) < 1e-15, "open gain");
        const double snr25 = g * g * vs * vs / (2.0 * oracle::k_b * temp * rs * g * g + n);
        v.require(oracle::rel(output_snr_friis(gen, at(big)), snr25) < 1e-9, "SNR limit");
        v.require(oracle::rel(output_snr_friis(gen, open), snr25) < 1e-15, "open SNR");
        const double f27 = 1.0 + n / (2.0 * oracle::k_b * temp * rs * g * g);
        v.require(oracle::rel(noise_factor(gen, at(big)), f27) < 1e-9, "F limit");
        v.require(oracle::rel(noise_factor(gen, open), f27) < 1e-15, "open F");

        // output SNR over R_s at fixed R_L peaks at the bottom of the grid, tending to g^2|V|^2/N
        v.require(argmax([&](double r) { return output_snr_friis(SignalGenerator(vs, r, temp), st); }) == 0,
                  "SNR argmax over R_s");
        v.require(oracle::rel(output_snr_friis(SignalGenerator(vs, 1e-12, temp), st), g * g * vs * vs / n) < 1e-9,
                  "SNR limit R_s -> 0");
        if (v.pass)
            v.detail = fmt("gain argmax %.6g for R_L %.6g", grid[i22], rl);
        return v;
    }

    Verdict frontend_zero_power()
    {
        using namespace frontend;
        Verdict v;
        const TheveninSource src(complex(1e-3, 5e-4), Impedance(50.0, -30.0));
        const double p_max = link::max_available_power(src);
        double worst_frac = 0.0;
        for (int topo = 0; topo < 3; ++topo)
        {
            double prev = std::numeric_limits<double>::infinity();
            for (int k = 2; k <= 8; ++k)
            {
                const OpAmpModel amp(std::pow(10.0, k), Load::resistor(1e12), Load::open(), 50.0);
                double p = 0.0;
                if (topo == 0)
                    p = solve_buffer(src, amp).p_extracted;
                else if (topo == 1)
                    p = solve_constant_current(src, amp, 0.0, Load::resistor(1e9)).p_extracted;
                else
                    p = solve_inside_out(src, amp).p_extracted;
                v.require(p < prev, std::string(topology_name(Topology(topo))) + fmt(" not decreasing at k=%g", k));
                prev = p;
            }
            worst_frac = std::max(worst_frac, prev / p_max);
            v.require(prev < 1e-12 * p_max, std::string(topology_name(Topology(topo))) + fmt(" fraction %.3g", prev / p_max));
        }

        oracle::Rng rng(105);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const TheveninSource s(rng.phasor(1e-6, 1.0), Impedance(rng.log_uniform(1, 1e4), rng.uniform(-1e3, 1e3)));
            const Load zid = Load(Impedance(rng.log_uniform(1e3, 1e9), rng.uniform(-1e3, 1e3)));
            const Load zcm = i % 2 ? Load::open() : Load(Impedance(rng.log_uniform(1e5, 1e10), rng.uniform(-1e3, 1e3)));
            const OpAmpModel amp(rng.log_uniform(1, 1e6), zid, zcm, rng.uniform(0.0, 100.0));
            const complex vc = rng.phasor(1e-3, 1.0);
            const Load rc = Load::resistor(rng.log_uniform(10, 1e5));
            auto cmp = [&](const FrontEndSolution &a, const mna::LinearNetlist &net) {
                const auto b = solution_from_mna(s, mna::mna_solve(net));
                worst = std::max({worst, oracle::rel(a.v_out, b.v_out), oracle::rel(a.i_source, b.i_source)});
            };
            cmp(solve_buffer(s, amp), buffer_netlist(s, amp));
            cmp(solve_constant_current(s, amp, vc, rc), constant_current_netlist(s, amp, vc, rc));
            cmp(solve_inside_out(s, amp), inside_out_netlist(s, amp));
        }
        v.require(worst <= 1e-9, fmt("closed form vs nodal %.3g", worst));
        if (v.pass)
            v.detail = fmt("fraction at A=1e8 %.3g, nodal deviation %.3g", worst_frac, worst);
        return v;
    }

    Verdict inside_out_factor()
    {
        using namespace frontend;
        Verdict v;
        const TheveninSource src(1e-3, Impedance(50.0, -30.0));
        std::vector<double> lx, ly;
        for (double a : {1e2, 1e3, 1e4, 1e5})
        {
            const OpAmpModel amp(a, Load::resistor(1e12), Load::resistor(1e9), 50.0);
            const double io = std::abs(solve_inside_out(src, amp).z_effective.impedance().value());
            const double bu = std::abs(solve_buffer(src, amp).z_effective.impedance().value());
            lx.push_back(std::log10(a));
            ly.push_back(std::log10(io / bu));
        }
        // least-squares slope
        const double n = double(lx.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < lx.size(); ++i)
        {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        v.require(std::abs(slope - 1.0) <= 0.05, fmt("slope %.4f", slope));
        v.detail = fmt("log-log slope %.6f", slope);
        return v;
    }

    Verdict transformer()
    {
        Verdict v;
        const double n_opt = matching::optimal_turns_ratio(1e12, 100.0);
        v.require(n_opt == 1e5, fmt("turns ratio %.17g", n_opt));
        const link::SingleLink l(Impedance(100.0, 40.0), Impedance(1.0, 0.0), 1e-12);
        const link::AmplifierNoiseModel amp(1.0, 1e-6, 290.0);
        std::vector<double> snr;
        for (int i = 0; i < 51; ++i)
            snr.push_back(matching::snr_with_transformer(l, 1e12, amp,
                                                         matching::TransformerMatch(n_opt * std::pow(10.0, i / 25.0 - 1.0))));
        for (int i = 0; i < 25; ++i)
            v.require(snr[std::size_t(i)] < snr[std::size_t(i) + 1], fmt("not rising at %g", i));
        for (int i = 25; i < 50; ++i)
            v.require(snr[std::size_t(i)] > snr[std::size_t(i) + 1], fmt("not falling at %g", i));
        if (v.pass)
            v.detail = fmt("ratio %.0f, peak index 25 beats neighbours by %.3g", n_opt,
                           snr[25] / std::max(snr[24], snr[26]) - 1.0);
        return v;
    }

    Verdict array_reductions()
    {
        using namespace array;
        Verdict v;
        Timer t;
        oracle::Rng rng(108);
        double worst_scalar = 0.0;
        for (int i = 0; i < 200; ++i)
        {
            const Eigen::MatrixXcd z = oracle::passive_symmetric(rng, 2);
            Eigen::VectorXcd it(1);
            it << rng.phasor(1e-3, 1.0);
            const ArrayModel m(ImpedanceMatrixSeries(FrequencyGrid::single(1e6), {z}, 1, 1), it);
            const Impedance zr(z(1, 1));
            const TheveninSource src = thevenin_from_link(Impedance(z(1, 0)), it(0), zr);
            const Eigen::MatrixXcd zl = Eigen::MatrixXcd::Constant(1, 1, complex(rng.log_uniform(1, 1e3), rng.uniform(-1e3, 1e3)));
            const auto oc = terminate(m, TerminationStrategy::open_circuit(), 0);
            const auto fc = terminate(m, TerminationStrategy::full_conjugate(), 0);
            const auto ex = terminate(m, TerminationStrategy::explicit_load(zl), 0);
            worst_scalar = std::max({worst_scalar, oracle::rel(oc.voltages(0), src.v_oc),
                                     oracle::rel(fc.voltages(0), link::divided_voltage(src, Load(zr.conj()))),
                                     oracle::rel(fc.sum_power, link::max_available_power(src)),
                                     oracle::rel(ex.voltages(0), link::divided_voltage(src, Load(Impedance(zl(0, 0))))),
                                     oracle::rel(ex.sum_power, link::extracted_power(src, Impedance(zl(0, 0))))});
        }
        v.require(worst_scalar <= 1e-12, fmt("scalar reduction %.3g", worst_scalar));

        double worst_closed = 0.0;
        int accepted = 0, beaten = 0;
        for (Eigen::Index k : {2, 4, 8})
            for (int model = 0; model < 5; ++model)
            {
                const std::size_t mt = 1 + rng.index(2);
                const Eigen::MatrixXcd z = oracle::passive_symmetric(rng, Eigen::Index(mt) + k);
                Eigen::VectorXcd it(static_cast<Eigen::Index>(mt));
                for (auto &x : it)
                    x = rng.phasor(1e-3, 1.0);
                const ArrayModel m(ImpedanceMatrixSeries(FrequencyGrid::single(1e6), {z}, mt, std::size_t(k)), it);
                const auto fc = terminate(m, TerminationStrategy::full_conjugate(), 0);
                const Eigen::VectorXcd cf = full_conjugate_voltages_closed_form(m, 0);
                worst_closed = std::max(worst_closed, (fc.voltages - cf).norm() / cf.norm());

                const Eigen::MatrixXcd zr = m.zms().z_r(0);
                const Eigen::VectorXcd voc = open_circuit_voltages(m, 0);
                const Eigen::MatrixXcd base = zr.conjugate();
                int passive_draws = 0;
                for (int tries = 0; passive_draws < 500 && tries < 5000; ++tries)
                {
                    Eigen::MatrixXcd d(k, k);
                    for (Eigen::Index r = 0; r < k; ++r)
                        for (Eigen::Index c = r; c < k; ++c)
                            d(r, c) = d(c, r) = complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
                    const Eigen::MatrixXcd pert = base + 1e-3 * zr.norm() * d;
                    if (!is_passive(pert))
                        continue;
                    ++passive_draws;
                    if (sum_power_for_load(zr, pert, voc) > fc.sum_power * (1.0 + 1e-12))
                        ++beaten;
                }
                accepted += passive_draws;
                v.require(passive_draws == 500, "too few passive perturbations");
            }
        const double secs = t.seconds();
        v.require(worst_closed <= 1e-10, fmt("closed form deviation %.3g", worst_closed));
        v.require(beaten == 0, fmt("conjugate termination beaten %g times", beaten));
        v.require(secs < 10.0, fmt("runtime %.3g s", secs));
        if (v.pass)
            v.detail = fmt("scalar %.3g, closed form %.3g", worst_scalar, worst_closed) +
                       fmt(", %g perturbations unbeaten, %.3g s", accepted, secs);
        return v;
    }

    Verdict shannon_limits()
    {
        using namespace shannon;
        Verdict v;
        oracle::Rng rng(109);
        double min_margin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 1000; ++i)
        {
            const AwgnChannelSpec s(rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3), rng.log_uniform(1e-3, 1e3));
            min_margin = std::min(min_margin, eb_n0(s) - std::numbers::ln2);
        }
        v.require(min_margin > 0.0, fmt("Eb/N0 below ln 2 by %.3g", -min_margin));
        double prev = std::numeric_limits<double>::infinity();
        double last = 0.0;
        for (int i = 0; i <= 80; ++i)
        {
            const double b = std::pow(10.0, -2.0 + i / 10.0);
            last = eb_n0({1.0, b, 1.0});
            v.require(last < prev, fmt("not decreasing at B = %.3g", b));
            prev = last;
        }
        const double gap = (last - std::numbers::ln2) / std::numbers::ln2;
        v.require(gap < 1e-3, fmt("gap at B = 1e6 is %.3g of ln 2", gap));
        if (v.pass)
            v.detail = fmt("gap at B = 1e6 is %.3g of ln 2", gap);
        return v;
    }

    Verdict determinism()
    {
        Verdict v;
        const std::vector<std::pair<std::string, std::string>> cases{
            {"validate", "array.json"},     {"capacity", "capacity.json"},    {"link", "link_sweep.json"},
            {"noisefig", "noisefig.json"},  {"frontend", "frontend.json"},    {"frontend", "frontend_mna.json"},
            {"match", "match.json"},        {"array", "array_synthetic.json"}, {"array", "array.json"}};
        int compared = 0;
        for (const auto &[sub, file] : cases)
            for (const char *format : {"csv", "text"})
            {
                const std::string path = (data / file).string();
                std::string ref, again, par1, par4;
                const int c0 = cli({sub, "--scenario", path, "--format", format, "--execution", "serial"}, ref);
                cli({sub, "--scenario", path, "--format", format, "--execution", "serial"}, again);
                cli({sub, "--scenario", path, "--format", format, "--execution", "parallel", "--threads", "1"}, par1);
                cli({sub, "--scenario", path, "--format", format, "--execution", "parallel", "--threads", "4"}, par4);
                v.require(c0 == 0, sub + " " + file + ": exit code " + std::to_string(c0));
                v.require(!ref.empty() && ref == again && ref == par1 && ref == par4, sub + " " + file + " " + format + " differs");
                compared += 4;
            }
        if (v.pass)
            v.detail = std::to_string(compared) + " runs byte-identical across all subcommands";
        return v;
    }
}

int main()
{
    const std::vector<std::pair<const char *, Verdict (*)()>> criteria{
        {"open-circuit over matched SNR closed form", snr_ratio_identity},
        {"crossover regimes in link reports", crossover_golden_reports},
        {"Friis calculus", friis_calculus},
        {"optimality limits by sweep", optimality_limits},
        {"front-end zero-power limit and nodal cross-check", frontend_zero_power},
        {"inside-out impedance grows with gain", inside_out_factor},
        {"transformer turns ratio", transformer},
        {"array reductions and conjugate optimality", array_reductions},
        {"Shannon Eb/N0 bound", shannon_limits},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Verdict v;
        try
        {
            v = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
        failed += v.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}

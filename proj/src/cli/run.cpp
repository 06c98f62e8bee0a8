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

#include "rxfront/cli/run.hpp"
#include "rxfront/impedance_csv.hpp"
#include "rxfront/matching.hpp"
#include "rxfront/noisefig.hpp"
#include "rxfront/shannon.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>

namespace rxfront::cli
{
    namespace
    {
        using Row = std::vector<std::string>;
        using sweep::Execution;

        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        const std::string undefined = "undefined";

        std::string num(double v) { return format_number(v); }

        double phase_deg(complex v) { return std::arg(v) * 180.0 / std::numbers::pi; }

        std::string join(const std::vector<std::string> &notes)
        {
            std::string out;
            for (const auto &n : notes)
                out += (out.empty() ? "" : "; ") + n;
            return out;
        }

        template <class Fn>
        double or_nan(Fn &&fn)
        {
            try
            {
                return fn();
            }
            catch (const ValidationError &)
            {
                return nan;
            }
            catch (const SingularCircuitError &)
            {
                return nan;
            }
        }

        // Flattens per-point row groups in index order.
        std::vector<Row> flatten(std::vector<std::vector<Row>> groups)
        {
            std::vector<Row> out;
            for (auto &g : groups)
                for (auto &r : g)
                    out.push_back(std::move(r));
            return out;
        }

        link::AmplifierNoiseModel amplifier(const Scenario &s)
        {
            return {s.amplifier.gain, s.amplifier.n_na, s.amplifier.temperature};
        }

        // ---- validate ------------------------------------------------------

        Outcome run_validate(const Scenario &s)
        {
            Outcome o;
            ImpedanceMatrixSeries zms = [&] {
                if (s.array)
                {
                    const auto &a = *s.array;
                    if (a.impedance_csv)
                        return read_impedance_csv(*a.impedance_csv, a.transmit_ports, a.receive_ports);
                    return array::synthetic_array(*a.synthetic, scenario_grid(s));
                }
                if (s.link && s.link->impedance_csv)
                    return read_impedance_csv(*s.link->impedance_csv, 1, 1);
                if (s.link)
                {
                    // Constant link: the transmit self-impedance is not part of
                    // the model, so only the receive port is checked.
                    const auto grid = scenario_grid(s);
                    Eigen::MatrixXcd z(1, 1);
                    z(0, 0) = s.link->z_r.value();
                    return ImpedanceMatrixSeries(grid, std::vector<Eigen::MatrixXcd>(grid.size(), z), 0, 1);
                }
                throw ValidationError("validate needs a link or array section");
            }();
            const double tol = s.array ? s.array->tolerance : default_validation_tol;
            const auto rec = validate_reciprocity(zms, tol);
            const auto pas = validate_passivity(zms, tol);
            for (std::size_t f = 0; f < zms.size(); ++f)
            {
                const auto &r = rec.checks[f];
                const auto &p = pas.checks[f];
                const double ratio = p.scale > 0.0 ? p.value / p.scale : 0.0;
                o.report.rows.push_back({num(r.frequency_hz), num(r.value), r.pass ? "pass" : "fail", num(ratio),
                                         p.pass ? "pass" : "fail"});
            }
            o.pass = rec.pass && pas.pass;
            o.report.summary = std::string("reciprocity: ") + (rec.pass ? "pass" : "fail") +
                               ", passivity: " + (pas.pass ? "pass" : "fail");
            return o;
        }

        // ---- capacity ------------------------------------------------------

        Outcome run_capacity(const Scenario &s, Execution exec)
        {
            if (!s.capacity)
                throw ValidationError("capacity needs a capacity section");
            const auto &c = *s.capacity;
            Outcome o;
            o.report.rows = sweep::map_indexed<Row>(c.bandwidths.size(), exec, [&](std::size_t i) {
                const shannon::AwgnChannelSpec ch(c.power, c.bandwidths[i], c.noise_density);
                const double eb = or_nan([&] { return shannon::eb_n0(ch); });
                return Row{num(ch.bandwidth), num(ch.snr()), num(shannon::capacity(ch)),
                           num(shannon::capacity_bound(c.power, c.noise_density)), num(eb),
                           num(eb / std::numbers::ln2)};
            });
            return o;
        }

        // ---- link ----------------------------------------------------------

        Row link_row(double freq, const std::string &label, const link::SingleLink &lk,
                     const link::AmplifierNoiseModel &amp, const TheveninSource &src, const Load &load,
                     double matched, double closed_form, std::vector<std::string> notes)
        {
            const double power = load.is_open() ? 0.0 : or_nan([&] { return link::extracted_power(src, load.impedance()); });
            complex vd(nan, nan);
            double snr = nan;
            try
            {
                vd = link::divided_voltage(src, load);
                snr = link::output_snr(lk, amp, load);
            }
            catch (const SingularCircuitError &)
            {
                notes.emplace_back("load shorts the source");
            }
            const bool have_v = std::isfinite(vd.real());
            return Row{num(freq),
                       label,
                       load.is_open() ? "inf" : num(load.impedance().re()),
                       load.is_open() ? "inf" : num(load.impedance().im()),
                       num(power),
                       have_v ? num(std::abs(vd)) : undefined,
                       have_v ? num(phase_deg(vd)) : undefined,
                       num(snr),
                       num(snr / matched),
                       num(closed_form),
                       join(notes)};
        }

        Outcome run_link(const Scenario &s, Execution exec)
        {
            const auto links = scenario_links(s);
            const auto grid = scenario_grid(s);
            const auto amp = amplifier(s);
            Outcome o;
            // Parallel over frequencies; the load search inside stays serial.
            auto groups = sweep::map_indexed<std::vector<Row>>(grid.size(), exec, [&](std::size_t f) {
                const auto &lk = links[f];
                const TheveninSource src(lk.z_rt.value() * s.link->i_t, lk.z_r);
                const double matched = or_nan([&] { return link::snr_matched(lk, amp); });
                const double closed = or_nan([&] { return link::snr_ratio_oc_over_match(lk, amp); });
                std::vector<Row> rows;
                for (const auto &st : s.strategies)
                {
                    std::vector<std::string> notes;
                    Load load = Load::open();
                    switch (st.kind)
                    {
                    case array::TerminationKind::open_circuit:
                        break;
                    case array::TerminationKind::per_antenna_conjugate:
                    case array::TerminationKind::full_conjugate:
                        load = Load(lk.z_r.conj());
                        if (lk.z_r.re() == 0.0)
                            notes.emplace_back("lossless source has no conjugate match");
                        break;
                    case array::TerminationKind::explicit_load:
                        load = Load(Impedance(st.load(0, 0)));
                        detail::require(load.impedance().re() >= 0.0, "explicit load must be passive");
                        break;
                    }
                    rows.push_back(link_row(grid[f], st.label(), lk, amp, src, load, matched, closed, notes));
                }
                if (s.link->load_search)
                {
                    const auto best = sweep::optimize_load(lk, amp, *s.link->load_search, Execution::serial);
                    rows.push_back(link_row(grid[f], "optimum", lk, amp, src, best.load, matched, closed, {}));
                }
                return rows;
            });
            o.report.rows = flatten(std::move(groups));
            return o;
        }

        // ---- noisefig ------------------------------------------------------

        Outcome run_noisefig(const Scenario &s, Execution exec)
        {
            if (!s.noisefig)
                throw ValidationError("noisefig needs a noisefig section");
            const auto &n = *s.noisefig;
            const double temp = s.amplifier.temperature;
            const std::size_t nl = n.r_load.size();
            Outcome o;
            struct Point
            {
                Row row;
                double f;
            };
            auto points = sweep::map_indexed<Point>(n.r_s.size() * nl, exec, [&](std::size_t i) {
                const noisefig::SignalGenerator gen(n.v_s, n.r_s[i / nl], temp);
                const Load &rl = n.r_load[i % nl];
                const noisefig::VoltageAmplifierStage stage(s.amplifier.gain, s.amplifier.n_na, rl, n.r_out);
                const double f = noisefig::noise_factor(gen, stage);
                // With an open input load F falls toward 1 as R_s grows.
                const double rs_opt = rl.is_open() ? std::numeric_limits<double>::infinity()
                                                   : noisefig::optimal_rs_for_noise_factor(stage, temp);
                const double f_min = rl.is_open() ? 1.0 : noisefig::minimum_noise_factor(stage, temp);
                return Point{Row{num(gen.r_s), rl.is_open() ? "inf" : num(rl.impedance().re()),
                                 num(noisefig::friis_gain(gen, stage)), num(noisefig::input_snr(gen)),
                                 num(noisefig::output_snr_friis(gen, stage)), num(f), num(noisefig::noise_figure_db(f)),
                                 num(rs_opt), num(f_min), ""},
                             f};
            });
            for (std::size_t g = 0; g < n.r_s.size(); ++g)
            {
                std::size_t best = g * nl;
                for (std::size_t i = g * nl; i < (g + 1) * nl; ++i)
                    if (points[i].f < points[best].f)
                        best = i;
                points[best].row.back() = "minimum noise factor";
            }
            for (auto &p : points)
                o.report.rows.push_back(std::move(p.row));
            return o;
        }

        // ---- frontend ------------------------------------------------------

        Outcome run_frontend(const Scenario &s, Execution exec)
        {
            if (!s.frontend)
                throw ValidationError("frontend needs a frontend section");
            const auto &fe = *s.frontend;
            const auto links = scenario_links(s);
            const auto grid = scenario_grid(s);
            const std::size_t nt = fe.topologies.size(), ng = fe.open_loop_gains.size();
            Outcome o;
            o.report.rows = sweep::map_indexed<Row>(grid.size() * nt * ng, exec, [&](std::size_t i) {
                const std::size_t f = i / (nt * ng), t = (i / ng) % nt, g = i % ng;
                const auto &lk = links[f];
                const TheveninSource src(lk.z_rt.value() * s.link->i_t, lk.z_r);
                const frontend::OpAmpModel amp(fe.open_loop_gains[g], fe.z_id, fe.z_cm, fe.r_out);
                const auto topo = fe.topologies[t];
                const frontend::FrontEndSolution sol = [&] {
                    if (fe.use_mna)
                    {
                        const auto net = topo == frontend::Topology::buffer ? frontend::buffer_netlist(src, amp)
                                         : topo == frontend::Topology::constant_current
                                             ? frontend::constant_current_netlist(src, amp, fe.v_c, fe.r_c)
                                             : frontend::inside_out_netlist(src, amp);
                        return frontend::solution_from_mna(src, mna::mna_solve(net));
                    }
                    return topo == frontend::Topology::buffer ? frontend::solve_buffer(src, amp)
                           : topo == frontend::Topology::constant_current
                               ? frontend::solve_constant_current(src, amp, fe.v_c, fe.r_c)
                               : frontend::solve_inside_out(src, amp);
                }();
                const double p_max = or_nan([&] { return link::max_available_power(src); });
                const bool open = sol.z_effective.is_open();
                return Row{num(grid[f]),
                           std::string(frontend::topology_name(topo)),
                           num(fe.open_loop_gains[g]),
                           num(std::abs(sol.v_out)),
                           num(phase_deg(sol.v_out)),
                           num(std::abs(sol.i_source)),
                           open ? "inf" : num(sol.z_effective.impedance().re()),
                           open ? "inf" : num(sol.z_effective.impedance().im()),
                           num(sol.p_extracted),
                           num(sol.p_extracted / p_max),
                           fe.use_mna ? "mna" : "closed form"};
            });
            return o;
        }

        // ---- match ---------------------------------------------------------

        Outcome run_match(const Scenario &s, Execution exec)
        {
            if (!s.match)
                throw ValidationError("match needs a match section");
            const auto &m = *s.match;
            const auto links = scenario_links(s);
            const auto grid = scenario_grid(s);
            const auto amp = amplifier(s);
            Outcome o;
            auto groups = sweep::map_indexed<std::vector<Row>>(grid.size(), exec, [&](std::size_t f) {
                const auto &lk = links[f];
                const double n_opt = matching::optimal_turns_ratio(m.r_in, lk.z_r.re());
                std::vector<double> ratios = m.turns_ratios;
                if (ratios.empty())
                {
                    for (std::size_t i = 0; i < m.points; ++i)
                    {
                        const double x = m.points == 1 ? 0.0 : 2.0 * double(i) / double(m.points - 1) - 1.0;
                        ratios.push_back(n_opt * std::pow(10.0, m.decades * x));
                    }
                }
                std::vector<double> snr;
                for (double n : ratios)
                    snr.push_back(matching::snr_with_transformer(lk, m.r_in, amp,
                                                                 matching::TransformerMatch(n, m.cancel_reactance)));
                std::size_t peak = 0;
                for (std::size_t i = 1; i < snr.size(); ++i)
                    if (snr[i] > snr[peak])
                        peak = i;
                std::vector<Row> rows;
                for (std::size_t i = 0; i < ratios.size(); ++i)
                {
                    std::vector<std::string> notes;
                    if (ratios[i] == n_opt)
                        notes.emplace_back("optimal turns ratio");
                    if (i == peak)
                        notes.emplace_back("peak");
                    rows.push_back({num(grid[f]), num(ratios[i]), num(n_opt), num(snr[i]), join(notes)});
                }
                return rows;
            });
            o.report.rows = flatten(std::move(groups));
            return o;
        }

        // ---- array ---------------------------------------------------------

        Outcome run_array(const Scenario &s, Execution exec)
        {
            const auto model = scenario_array(s);
            std::vector<std::vector<array::TerminationResult>> per_strategy;
            for (const auto &st : s.strategies)
                per_strategy.push_back(sweep::sweep_array(model, st, exec));
            Outcome o;
            for (std::size_t f = 0; f < model.size(); ++f)
                for (std::size_t k = 0; k < s.strategies.size(); ++k)
                {
                    const auto &res = per_strategy[k][f];
                    const bool open = s.strategies[k].kind == array::TerminationKind::open_circuit;
                    for (Eigen::Index p = 0; p < res.voltages.size(); ++p)
                        o.report.rows.push_back({num(model.grid()[f]), s.strategies[k].label(), std::to_string(p),
                                                 num(std::abs(res.voltages(p))), num(phase_deg(res.voltages(p))),
                                                 num(res.sum_power), open ? undefined : num(res.condition),
                                                 num(res.coupling_ratio), join(res.annotations)});
                }
            return o;
        }

        int exit_code(ErrorKind k) { return static_cast<int>(k); }
    }

    const std::vector<std::string> &subcommands()
    {
        static const std::vector<std::string> names{"validate", "capacity", "link", "noisefig",
                                                    "frontend", "match",    "array"};
        return names;
    }

    const std::vector<std::string> &report_columns(const std::string &subcommand)
    {
        static const std::map<std::string, std::vector<std::string>> columns{
            {"validate",
             {"frequency_hz", "reciprocity_deviation", "reciprocity", "passivity_eigen_ratio", "passivity"}},
            {"capacity", {"bandwidth", "snr", "capacity", "capacity_bound", "eb_n0", "eb_n0_over_ln2"}},
            {"link",
             {"frequency_hz", "strategy", "load_re_ohms", "load_im_ohms", "extracted_power_w", "voltage_mag_v",
              "voltage_phase_deg", "snr", "snr_over_matched", "oc_over_matched_closed_form", "annotations"}},
            {"noisefig",
             {"r_s_ohms", "r_load_ohms", "friis_gain", "input_snr", "output_snr", "noise_factor", "noise_figure_db",
              "optimal_r_s_ohms", "min_noise_factor", "annotations"}},
            {"frontend",
             {"frequency_hz", "topology", "open_loop_gain", "v_out_mag_v", "v_out_phase_deg", "i_source_mag_a",
              "z_effective_re_ohms", "z_effective_im_ohms", "extracted_power_w", "fraction_of_available",
              "annotations"}},
            {"match", {"frequency_hz", "turns_ratio", "optimal_turns_ratio", "snr", "annotations"}},
            {"array",
             {"frequency_hz", "strategy", "port", "voltage_mag_v", "voltage_phase_deg", "sum_power_w", "condition",
              "coupling_ratio", "annotations"}},
        };
        const auto it = columns.find(subcommand);
        if (it == columns.end())
            throw ValidationError("unknown subcommand '" + subcommand + "'");
        return it->second;
    }

    Outcome build_report(const std::string &sub, const Scenario &s, Execution exec)
    {
        Outcome o;
        if (sub == "validate")
            o = run_validate(s);
        else if (sub == "capacity")
            o = run_capacity(s, exec);
        else if (sub == "link")
            o = run_link(s, exec);
        else if (sub == "noisefig")
            o = run_noisefig(s, exec);
        else if (sub == "frontend")
            o = run_frontend(s, exec);
        else if (sub == "match")
            o = run_match(s, exec);
        else if (sub == "array")
            o = run_array(s, exec);
        o.report.columns = report_columns(sub);
        o.report.subcommand = sub;
        o.report.scenario = s.name;
        return o;
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"rxfront: receiver front-end termination and noise analysis", "rxfront"};
        app.footer("Exit codes: 0 success, 1 validation failure, 2 parse error, "
                   "3 numerical or singular circuit, 4 I/O error.");
        app.require_subcommand(1, 1);

        std::string scenario_path, out_path, format = "csv", execution = "parallel";
        bool dump = false;
        int threads = 0;
        const std::map<std::string, std::string> help{
            {"validate", "check reciprocity and passivity of the impedance data"},
            {"capacity", "Shannon capacity and Eb/N0 over a bandwidth sweep"},
            {"link", "SNR and extracted power of a single link per termination"},
            {"noisefig", "Friis gain, noise factor and optimal source resistance"},
            {"frontend", "op-amp front ends at finite gain"},
            {"match", "SNR against transformer turns ratio"},
            {"array", "terminated voltages and sum power of a receive array"}};
        for (const auto &name : subcommands())
        {
            auto *sc = app.add_subcommand(name, help.at(name));
            sc->add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
            sc->add_option("--out", out_path, "report destination (default: standard output)");
            sc->add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "text"}));
            sc->add_flag("--dump-normalized", dump, "print the normalized scenario and exit");
            sc->add_option("--execution", execution, "sweep execution")->check(CLI::IsMember({"serial", "parallel"}));
            sc->add_option("--threads", threads, "threads for parallel sweeps (0: runtime default)")
                ->check(CLI::NonNegativeNumber);
        }

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(std::move(reversed));
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_code(ErrorKind::validation);
        }

        const std::string sub = app.get_subcommands().front()->get_name();
        try
        {
            if (threads > 0)
                sweep::set_threads(threads);
            const Scenario s = load_scenario(scenario_path);
            std::string text;
            bool pass = true;
            if (dump)
                text = dump_scenario(s);
            else
            {
                const auto exec = execution == "serial" ? Execution::serial : Execution::parallel;
                const Outcome o = build_report(sub, s, exec);
                text = render_report(o.report, format == "text" ? Format::text : Format::csv);
                pass = o.pass;
            }
            if (out_path.empty())
                out << text;
            else
                write_text_file(out_path, text);
            if (!pass)
            {
                err << "error: " << sub << ": scenario data failed validation\n";
                return exit_code(ErrorKind::validation);
            }
            return 0;
        }
        catch (const Error &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_code(e.kind());
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_code(ErrorKind::numerical);
        }
    }
}

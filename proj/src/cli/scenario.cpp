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

#include "rxfront/cli/scenario.hpp"
#include "rxfront/impedance_csv.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace rxfront::cli
{
    using json = nlohmann::json;
    namespace fs = std::filesystem;

    namespace
    {
        constexpr double inf = std::numeric_limits<double>::infinity();

        [[noreturn]] void fail(const std::string &path, const std::string &what)
        {
            throw ParseError(path + ": " + what);
        }

        // Object reader that rejects keys nobody asked for.
        class Obj
        {
        public:
            Obj(const json &j, std::string path) : j_(j), path_(std::move(path))
            {
                if (!j_.is_object())
                    fail(path_, "expected an object");
            }

            const std::string &path() const { return path_; }
            std::string sub(const std::string &key) const { return path_ + "." + key; }

            const json *find(const std::string &key)
            {
                used_.insert(key);
                auto it = j_.find(key);
                return it == j_.end() ? nullptr : &*it;
            }

            const json &get(const std::string &key)
            {
                const json *v = find(key);
                if (!v)
                    fail(path_, "missing key '" + key + "'");
                return *v;
            }

            void finish() const
            {
                for (auto it = j_.begin(); it != j_.end(); ++it)
                    if (!used_.count(it.key()))
                        fail(path_, "unknown key '" + it.key() + "'");
            }

        private:
            const json &j_;
            std::string path_;
            std::set<std::string> used_;
        };

        double number(const json &j, const std::string &path)
        {
            if (!j.is_number())
                fail(path, "expected a number");
            return j.get<double>();
        }

        // A number or the token "inf".
        double extended(const json &j, const std::string &path)
        {
            if (j.is_string())
            {
                if (j.get<std::string>() == "inf")
                    return inf;
                fail(path, "expected a number or \"inf\"");
            }
            return number(j, path);
        }

        std::size_t count(const json &j, const std::string &path)
        {
            if (!j.is_number_unsigned())
                fail(path, "expected a non-negative integer");
            return j.get<std::size_t>();
        }

        std::string text(const json &j, const std::string &path)
        {
            if (!j.is_string())
                fail(path, "expected a string");
            return j.get<std::string>();
        }

        bool boolean(const json &j, const std::string &path)
        {
            if (!j.is_boolean())
                fail(path, "expected true or false");
            return j.get<bool>();
        }

        const json &list(const json &j, const std::string &path)
        {
            if (!j.is_array())
                fail(path, "expected a list");
            return j;
        }

        complex phasor(const json &j, const std::string &path, const std::string &unit)
        {
            Obj o(j, path);
            const double re = number(o.get("re_" + unit), o.sub("re_" + unit));
            const json *im = o.find("im_" + unit);
            const double v = im ? number(*im, o.sub("im_" + unit)) : 0.0;
            o.finish();
            return {re, v};
        }

        Impedance impedance(const json &j, const std::string &path)
        {
            if (j.is_number())
                return Impedance(j.get<double>(), 0.0);
            const complex z = phasor(j, path, "ohms");
            return Impedance(z);
        }

        Load load(const json &j, const std::string &path)
        {
            if (j.is_string())
            {
                if (j.get<std::string>() == "inf")
                    return Load::open();
                fail(path, "expected an impedance or \"inf\"");
            }
            return Load(impedance(j, path));
        }

        std::vector<double> number_list(const json &j, const std::string &path, bool allow_inf)
        {
            std::vector<double> out;
            const json &l = list(j, path);
            for (std::size_t i = 0; i < l.size(); ++i)
            {
                const std::string p = path + "[" + std::to_string(i) + "]";
                out.push_back(allow_inf ? extended(l[i], p) : number(l[i], p));
            }
            return out;
        }

        // {"start":..,"stop":..,"points":..,"spacing":"linear"|"log"} with the
        // given unit suffix on start/stop.
        std::vector<double> range(const json &j, const std::string &path, const std::string &suffix)
        {
            Obj o(j, path);
            const double start = number(o.get("start" + suffix), o.sub("start" + suffix));
            const double stop = number(o.get("stop" + suffix), o.sub("stop" + suffix));
            const std::size_t n = count(o.get("points"), o.sub("points"));
            const json *sp = o.find("spacing");
            const std::string spacing = sp ? text(*sp, o.sub("spacing")) : "linear";
            o.finish();
            if (spacing == "linear")
                return FrequencyGrid::linear(start, stop, n).points();
            if (spacing == "log")
                return FrequencyGrid::logarithmic(start, stop, n).points();
            fail(o.sub("spacing"), "expected \"linear\" or \"log\"");
        }

        FrequencyGrid grid(const json &j, const std::string &path)
        {
            if (j.is_object() && j.contains("points_hz"))
            {
                Obj o(j, path);
                auto pts = number_list(o.get("points_hz"), o.sub("points_hz"), false);
                o.finish();
                return FrequencyGrid(std::move(pts));
            }
            return FrequencyGrid(range(j, path, "_hz"));
        }

        fs::path resolve(const json &j, const std::string &path, const fs::path &base)
        {
            fs::path p = text(j, path);
            if (p.is_relative())
                p = base / p;
            p = fs::absolute(p).lexically_normal();
            if (!fs::exists(p))
                throw IoError(path + ": file not found: " + p.string());
            return p;
        }

        link::GridSpec grid_spec(const json &j, const std::string &path)
        {
            Obj o(j, path);
            link::GridSpec g;
            g.r_max = number(o.get("r_max_ohms"), o.sub("r_max_ohms"));
            g.x_max = number(o.get("x_max_ohms"), o.sub("x_max_ohms"));
            g.re_points = count(o.get("re_points"), o.sub("re_points"));
            g.im_points = count(o.get("im_points"), o.sub("im_points"));
            if (const json *v = o.find("include_open"))
                g.include_open = boolean(*v, o.sub("include_open"));
            o.finish();
            detail::require(std::isfinite(g.r_max) && g.r_max >= 0.0 && std::isfinite(g.x_max) && g.x_max >= 0.0,
                            path + ": search extents must be finite and non-negative");
            detail::require(g.size() > 0, path + ": load search grid is empty");
            return g;
        }

        LinkSection parse_link(const json &j, const fs::path &base)
        {
            Obj o(j, "link");
            LinkSection s;
            if (const json *v = o.find("impedance_csv"))
            {
                s.impedance_csv = resolve(*v, o.sub("impedance_csv"), base);
                if (o.find("z_r") || o.find("z_rt"))
                    throw ValidationError("link: give either impedance_csv or z_r/z_rt, not both");
            }
            else
            {
                s.z_r = impedance(o.get("z_r"), o.sub("z_r"));
                s.z_rt = impedance(o.get("z_rt"), o.sub("z_rt"));
            }
            if (const json *v = o.find("s_it_a2_per_hz"))
                s.s_it = number(*v, o.sub("s_it_a2_per_hz"));
            if (const json *v = o.find("i_t"))
                s.i_t = phasor(*v, o.sub("i_t"), "amps");
            if (const json *v = o.find("load_search"))
                s.load_search = grid_spec(*v, o.sub("load_search"));
            o.finish();
            detail::require(std::isfinite(s.s_it) && s.s_it >= 0.0, "link.s_it_a2_per_hz must be non-negative");
            return s;
        }

        array::SyntheticArraySpec parse_synthetic(const json &j, const std::string &path)
        {
            Obj o(j, path);
            array::SyntheticArraySpec s;
            if (const json *v = o.find("self_impedance"))
                s.self_impedance = impedance(*v, o.sub("self_impedance"));
            if (const json *v = o.find("coupling_ohms"))
                s.coupling = number(*v, o.sub("coupling_ohms"));
            if (const json *v = o.find("decay"))
                s.decay = number(*v, o.sub("decay"));
            if (const json *v = o.find("transfer_ohms"))
                s.transfer = number(*v, o.sub("transfer_ohms"));
            if (const json *v = o.find("seed"))
                s.seed = count(*v, o.sub("seed"));
            o.finish();
            return s;
        }

        ArraySection parse_array(const json &j, const fs::path &base)
        {
            Obj o(j, "array");
            ArraySection s;
            s.transmit_ports = count(o.get("transmit_ports"), o.sub("transmit_ports"));
            s.receive_ports = count(o.get("receive_ports"), o.sub("receive_ports"));
            detail::require(s.transmit_ports > 0 && s.receive_ports > 0, "array: port counts must be positive");
            const json *csv = o.find("impedance_csv");
            const json *syn = o.find("synthetic");
            if (bool(csv) == bool(syn))
                throw ValidationError("array: give exactly one of impedance_csv and synthetic");
            if (csv)
                s.impedance_csv = resolve(*csv, o.sub("impedance_csv"), base);
            else
            {
                s.synthetic = parse_synthetic(*syn, o.sub("synthetic"));
                s.synthetic->transmit_ports = s.transmit_ports;
                s.synthetic->receive_ports = s.receive_ports;
            }
            if (const json *v = o.find("i_t"))
            {
                const json &l = list(*v, o.sub("i_t"));
                for (std::size_t i = 0; i < l.size(); ++i)
                    s.i_t.push_back(phasor(l[i], o.sub("i_t") + "[" + std::to_string(i) + "]", "amps"));
            }
            else
                s.i_t.assign(s.transmit_ports, complex(1.0, 0.0));
            detail::require(s.i_t.size() == s.transmit_ports, "array.i_t must have one entry per transmit port");
            if (const json *v = o.find("tolerance"))
                s.tolerance = number(*v, o.sub("tolerance"));
            detail::require(s.tolerance > 0.0, "array.tolerance must be positive");
            o.finish();
            return s;
        }

        AmplifierSection parse_amplifier(const json &j)
        {
            Obj o(j, "amplifier");
            AmplifierSection a;
            if (const json *v = o.find("gain"))
                a.gain = number(*v, o.sub("gain"));
            if (const json *v = o.find("n_na_v2_per_hz"))
                a.n_na = number(*v, o.sub("n_na_v2_per_hz"));
            if (const json *v = o.find("temp_kelvin"))
                a.temperature = number(*v, o.sub("temp_kelvin"));
            o.finish();
            link::AmplifierNoiseModel(a.gain, a.n_na, a.temperature); // domain checks
            return a;
        }

        array::TerminationStrategy parse_strategy(const json &j, const std::string &path)
        {
            if (j.is_string())
            {
                const std::string s = j.get<std::string>();
                if (s == "open_circuit")
                    return array::TerminationStrategy::open_circuit();
                if (s == "per_antenna_conjugate")
                    return array::TerminationStrategy::per_antenna_conjugate();
                if (s == "full_conjugate")
                    return array::TerminationStrategy::full_conjugate();
                fail(path, "unknown strategy '" + s + "'");
            }
            Obj o(j, path);
            const json &rows = list(o.get("explicit"), o.sub("explicit"));
            o.finish();
            const auto k = Eigen::Index(rows.size());
            Eigen::MatrixXcd z(k, k);
            for (Eigen::Index r = 0; r < k; ++r)
            {
                const std::string rp = o.sub("explicit") + "[" + std::to_string(r) + "]";
                const json &row = list(rows[std::size_t(r)], rp);
                if (Eigen::Index(row.size()) != k)
                    throw ValidationError(rp + ": explicit load must be square");
                for (Eigen::Index c = 0; c < k; ++c)
                    z(r, c) = impedance(row[std::size_t(c)], rp + "[" + std::to_string(c) + "]").value();
            }
            return array::TerminationStrategy::explicit_load(std::move(z));
        }

        CapacitySection parse_capacity(const json &j)
        {
            Obj o(j, "capacity");
            CapacitySection c;
            c.power = number(o.get("power"), o.sub("power"));
            c.noise_density = number(o.get("noise_density"), o.sub("noise_density"));
            const json &b = o.get("bandwidths");
            c.bandwidths = b.is_array() ? number_list(b, o.sub("bandwidths"), false) : range(b, o.sub("bandwidths"), "");
            o.finish();
            detail::require(!c.bandwidths.empty(), "capacity.bandwidths is empty");
            for (double bw : c.bandwidths)
                detail::require(std::isfinite(bw) && bw > 0.0, "capacity.bandwidths must be positive");
            detail::require(std::isfinite(c.power) && c.power >= 0.0, "capacity.power must be non-negative");
            detail::require(std::isfinite(c.noise_density) && c.noise_density > 0.0,
                            "capacity.noise_density must be positive");
            return c;
        }

        NoisefigSection parse_noisefig(const json &j)
        {
            Obj o(j, "noisefig");
            NoisefigSection n;
            if (const json *v = o.find("v_s"))
                n.v_s = phasor(*v, o.sub("v_s"), "volts");
            const json &rs = o.get("r_s_ohms");
            n.r_s = rs.is_array() ? number_list(rs, o.sub("r_s_ohms"), false) : std::vector<double>{number(rs, o.sub("r_s_ohms"))};
            const json &rl = list(o.get("r_load_ohms"), o.sub("r_load_ohms"));
            for (std::size_t i = 0; i < rl.size(); ++i)
                n.r_load.push_back(load(rl[i], o.sub("r_load_ohms") + "[" + std::to_string(i) + "]"));
            if (const json *v = o.find("r_out_ohms"))
                n.r_out = number(*v, o.sub("r_out_ohms"));
            o.finish();
            detail::require(!n.r_s.empty() && !n.r_load.empty(), "noisefig: r_s_ohms and r_load_ohms must be non-empty");
            return n;
        }

        frontend::Topology topology(const json &j, const std::string &path)
        {
            const std::string s = text(j, path);
            for (auto t : {frontend::Topology::buffer, frontend::Topology::constant_current, frontend::Topology::inside_out})
                if (s == frontend::topology_name(t))
                    return t;
            fail(path, "unknown topology '" + s + "'");
        }

        FrontendSection parse_frontend(const json &j)
        {
            Obj o(j, "frontend");
            FrontendSection f;
            if (const json *v = o.find("topologies"))
            {
                const json &l = list(*v, o.sub("topologies"));
                for (std::size_t i = 0; i < l.size(); ++i)
                    f.topologies.push_back(topology(l[i], o.sub("topologies") + "[" + std::to_string(i) + "]"));
            }
            else
                f.topologies = {frontend::Topology::buffer, frontend::Topology::constant_current,
                                frontend::Topology::inside_out};
            if (const json *v = o.find("open_loop_gains"))
                f.open_loop_gains = number_list(*v, o.sub("open_loop_gains"), true);
            else
                f.open_loop_gains = {1e5};
            if (const json *v = o.find("z_id"))
                f.z_id = load(*v, o.sub("z_id"));
            if (const json *v = o.find("z_cm"))
                f.z_cm = load(*v, o.sub("z_cm"));
            if (const json *v = o.find("r_out_ohms"))
                f.r_out = number(*v, o.sub("r_out_ohms"));
            if (const json *v = o.find("v_c"))
                f.v_c = phasor(*v, o.sub("v_c"), "volts");
            if (const json *v = o.find("r_c"))
                f.r_c = load(*v, o.sub("r_c"));
            if (const json *v = o.find("solver"))
            {
                const std::string s = text(*v, o.sub("solver"));
                if (s != "closed_form" && s != "mna")
                    fail(o.sub("solver"), "expected \"closed_form\" or \"mna\"");
                f.use_mna = s == "mna";
            }
            o.finish();
            detail::require(!f.topologies.empty() && !f.open_loop_gains.empty(),
                            "frontend: topologies and open_loop_gains must be non-empty");
            for (double a : f.open_loop_gains)
            {
                frontend::OpAmpModel(a, f.z_id, f.z_cm, f.r_out); // domain checks
                detail::require(!(f.use_mna && std::isinf(a)), "frontend: the mna solver needs finite gains");
            }
            return f;
        }

        MatchSection parse_match(const json &j)
        {
            Obj o(j, "match");
            MatchSection m;
            m.r_in = number(o.get("r_in_ohms"), o.sub("r_in_ohms"));
            if (const json *v = o.find("cancel_reactance"))
                m.cancel_reactance = boolean(*v, o.sub("cancel_reactance"));
            const json *ratios = o.find("turns_ratios");
            const json *sweep = o.find("sweep");
            if (ratios && sweep)
                throw ValidationError("match: give either turns_ratios or sweep, not both");
            if (ratios)
                m.turns_ratios = number_list(*ratios, o.sub("turns_ratios"), false);
            if (sweep)
            {
                Obj s(*sweep, o.sub("sweep"));
                if (const json *v = s.find("decades"))
                    m.decades = number(*v, s.sub("decades"));
                if (const json *v = s.find("points"))
                    m.points = count(*v, s.sub("points"));
                s.finish();
            }
            o.finish();
            detail::require(std::isfinite(m.r_in) && m.r_in > 0.0, "match.r_in_ohms must be positive");
            for (double n : m.turns_ratios)
                detail::require(std::isfinite(n) && n > 0.0, "match.turns_ratios must be positive");
            detail::require(std::isfinite(m.decades) && m.decades > 0.0 && m.points >= 1,
                            "match.sweep needs positive decades and at least one point");
            return m;
        }

        json dump_number(double v)
        {
            if (std::isinf(v) && v > 0.0)
                return "inf";
            return v;
        }

        json dump_impedance(const Impedance &z)
        {
            return json{{"re_ohms", z.re()}, {"im_ohms", z.im()}};
        }

        json dump_load(const Load &l)
        {
            return l.is_open() ? json("inf") : dump_impedance(l.impedance());
        }

        json dump_phasor(complex v, const std::string &unit)
        {
            return json{{"re_" + unit, v.real()}, {"im_" + unit, v.imag()}};
        }

        json dump_strategy(const array::TerminationStrategy &s)
        {
            if (s.kind != array::TerminationKind::explicit_load)
                return s.label();
            json rows = json::array();
            for (Eigen::Index r = 0; r < s.load.rows(); ++r)
            {
                json row = json::array();
                for (Eigen::Index c = 0; c < s.load.cols(); ++c)
                    row.push_back(dump_impedance(Impedance(s.load(r, c))));
                rows.push_back(row);
            }
            return json{{"explicit", rows}};
        }
    }

    bool same_strategy(const array::TerminationStrategy &a, const array::TerminationStrategy &b)
    {
        if (a.kind != b.kind)
            return false;
        if (a.load.rows() != b.load.rows() || a.load.cols() != b.load.cols())
            return false;
        return a.load.size() == 0 || a.load == b.load;
    }

    bool same_grid_spec(const link::GridSpec &a, const link::GridSpec &b)
    {
        return a.r_max == b.r_max && a.x_max == b.x_max && a.re_points == b.re_points &&
               a.im_points == b.im_points && a.include_open == b.include_open;
    }

    bool LinkSection::operator==(const LinkSection &o) const
    {
        if (load_search.has_value() != o.load_search.has_value())
            return false;
        if (load_search && !same_grid_spec(*load_search, *o.load_search))
            return false;
        return impedance_csv == o.impedance_csv && z_r == o.z_r && z_rt == o.z_rt && s_it == o.s_it &&
               i_t == o.i_t;
    }

    bool Scenario::operator==(const Scenario &o) const
    {
        if (strategies.size() != o.strategies.size())
            return false;
        for (std::size_t i = 0; i < strategies.size(); ++i)
            if (!same_strategy(strategies[i], o.strategies[i]))
                return false;
        return name == o.name && grid == o.grid && link == o.link && array == o.array &&
               amplifier == o.amplifier && capacity == o.capacity && noisefig == o.noisefig &&
               frontend == o.frontend && match == o.match;
    }

    Scenario parse_scenario(const std::string &scenario_text, const fs::path &base_dir)
    {
        json j;
        try
        {
            j = json::parse(scenario_text);
        }
        catch (const json::parse_error &e)
        {
            throw ParseError(std::string("scenario: ") + e.what());
        }

        Obj o(j, "scenario");
        Scenario s;
        if (const json *v = o.find("name"))
            s.name = text(*v, o.sub("name"));
        if (const json *v = o.find("grid"))
            s.grid = grid(*v, o.sub("grid"));
        if (const json *v = o.find("link"))
            s.link = parse_link(*v, base_dir);
        if (const json *v = o.find("array"))
            s.array = parse_array(*v, base_dir);
        if (const json *v = o.find("amplifier"))
            s.amplifier = parse_amplifier(*v);
        if (const json *v = o.find("capacity"))
            s.capacity = parse_capacity(*v);
        if (const json *v = o.find("noisefig"))
            s.noisefig = parse_noisefig(*v);
        if (const json *v = o.find("frontend"))
            s.frontend = parse_frontend(*v);
        if (const json *v = o.find("match"))
            s.match = parse_match(*v);
        const json *strategies = o.find("strategies");
        if (strategies)
        {
            const json &l = list(*strategies, o.sub("strategies"));
            for (std::size_t i = 0; i < l.size(); ++i)
                s.strategies.push_back(parse_strategy(l[i], o.sub("strategies") + "[" + std::to_string(i) + "]"));
        }
        o.finish();

        if (s.link && s.array)
            throw ValidationError("scenario: link and array sections are mutually exclusive");

        // The impedance file, when there is one, fixes the grid.
        std::optional<FrequencyGrid> file_grid;
        if (s.link && s.link->impedance_csv)
            file_grid = read_impedance_csv(*s.link->impedance_csv, 1, 1).grid();
        if (s.array && s.array->impedance_csv)
            file_grid = read_impedance_csv(*s.array->impedance_csv, s.array->transmit_ports, s.array->receive_ports).grid();
        if (file_grid)
        {
            if (s.grid && !(*s.grid == *file_grid))
                throw ValidationError("scenario: grid differs from the impedance file frequencies");
            s.grid = file_grid;
        }
        if ((s.link || s.array) && !s.grid)
            throw ValidationError("scenario: a grid is required unless an impedance file supplies one");

        if (!strategies)
        {
            s.strategies = {array::TerminationStrategy::open_circuit(),
                            array::TerminationStrategy::per_antenna_conjugate()};
            if (s.array)
                s.strategies.push_back(array::TerminationStrategy::full_conjugate());
        }
        const std::size_t k = s.array ? s.array->receive_ports : 1;
        for (const auto &st : s.strategies)
            if (st.kind == array::TerminationKind::explicit_load)
                detail::require(st.load.rows() == Eigen::Index(k),
                                "scenario: explicit load must be " + std::to_string(k) + "x" + std::to_string(k));
        return s;
    }

    Scenario load_scenario(const fs::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open scenario file " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str(), fs::absolute(path).parent_path());
    }

    std::string dump_scenario(const Scenario &s)
    {
        json j = json::object();
        j["name"] = s.name;
        if (s.grid)
            j["grid"] = json{{"points_hz", s.grid->points()}};
        j["amplifier"] = json{{"gain", s.amplifier.gain},
                              {"n_na_v2_per_hz", s.amplifier.n_na},
                              {"temp_kelvin", s.amplifier.temperature}};
        if (s.link)
        {
            json l = json::object();
            if (s.link->impedance_csv)
                l["impedance_csv"] = s.link->impedance_csv->string();
            else
            {
                l["z_r"] = dump_impedance(s.link->z_r);
                l["z_rt"] = dump_impedance(s.link->z_rt);
            }
            l["s_it_a2_per_hz"] = s.link->s_it;
            l["i_t"] = dump_phasor(s.link->i_t, "amps");
            if (const auto &g = s.link->load_search)
                l["load_search"] = json{{"r_max_ohms", g->r_max},     {"x_max_ohms", g->x_max},
                                        {"re_points", g->re_points},  {"im_points", g->im_points},
                                        {"include_open", g->include_open}};
            j["link"] = l;
        }
        if (s.array)
        {
            const auto &a = *s.array;
            json o{{"transmit_ports", a.transmit_ports}, {"receive_ports", a.receive_ports}, {"tolerance", a.tolerance}};
            if (a.impedance_csv)
                o["impedance_csv"] = a.impedance_csv->string();
            else
                o["synthetic"] = json{{"self_impedance", dump_impedance(a.synthetic->self_impedance)},
                                      {"coupling_ohms", a.synthetic->coupling},
                                      {"decay", a.synthetic->decay},
                                      {"transfer_ohms", a.synthetic->transfer},
                                      {"seed", a.synthetic->seed}};
            json it = json::array();
            for (complex c : a.i_t)
                it.push_back(dump_phasor(c, "amps"));
            o["i_t"] = it;
            j["array"] = o;
        }
        json st = json::array();
        for (const auto &x : s.strategies)
            st.push_back(dump_strategy(x));
        j["strategies"] = st;
        if (s.capacity)
            j["capacity"] = json{{"power", s.capacity->power},
                                 {"noise_density", s.capacity->noise_density},
                                 {"bandwidths", s.capacity->bandwidths}};
        if (s.noisefig)
        {
            json rl = json::array();
            for (const auto &l : s.noisefig->r_load)
                rl.push_back(dump_load(l));
            j["noisefig"] = json{{"v_s", dump_phasor(s.noisefig->v_s, "volts")},
                                 {"r_s_ohms", s.noisefig->r_s},
                                 {"r_load_ohms", rl},
                                 {"r_out_ohms", s.noisefig->r_out}};
        }
        if (s.frontend)
        {
            const auto &f = *s.frontend;
            json tops = json::array(), gains = json::array();
            for (auto t : f.topologies)
                tops.push_back(std::string(frontend::topology_name(t)));
            for (double a : f.open_loop_gains)
                gains.push_back(dump_number(a));
            j["frontend"] = json{{"topologies", tops},
                                 {"open_loop_gains", gains},
                                 {"z_id", dump_load(f.z_id)},
                                 {"z_cm", dump_load(f.z_cm)},
                                 {"r_out_ohms", f.r_out},
                                 {"v_c", dump_phasor(f.v_c, "volts")},
                                 {"r_c", dump_load(f.r_c)},
                                 {"solver", f.use_mna ? "mna" : "closed_form"}};
        }
        if (s.match)
        {
            const auto &m = *s.match;
            json o{{"r_in_ohms", m.r_in}, {"cancel_reactance", m.cancel_reactance}};
            if (!m.turns_ratios.empty())
                o["turns_ratios"] = m.turns_ratios;
            else
                o["sweep"] = json{{"decades", m.decades}, {"points", m.points}};
            j["match"] = o;
        }
        return j.dump(2) + "\n";
    }

    FrequencyGrid scenario_grid(const Scenario &s)
    {
        if (!s.grid)
            throw ValidationError("scenario has no frequency grid");
        return *s.grid;
    }

    std::vector<link::SingleLink> scenario_links(const Scenario &s)
    {
        if (!s.link)
            throw ValidationError("scenario has no link section");
        std::vector<link::SingleLink> out;
        if (s.link->impedance_csv)
        {
            const auto zms = read_impedance_csv(*s.link->impedance_csv, 1, 1);
            for (std::size_t f = 0; f < zms.size(); ++f)
                out.emplace_back(Impedance(zms.z_r(f)(0, 0)), Impedance(zms.z_rt(f)(0, 0)), s.link->s_it);
            return out;
        }
        out.assign(scenario_grid(s).size(), link::SingleLink(s.link->z_r, s.link->z_rt, s.link->s_it));
        return out;
    }

    array::ArrayModel scenario_array(const Scenario &s)
    {
        if (!s.array)
            throw ValidationError("scenario has no array section");
        const auto &a = *s.array;
        Eigen::VectorXcd i_t(Eigen::Index(a.i_t.size()));
        for (std::size_t i = 0; i < a.i_t.size(); ++i)
            i_t(Eigen::Index(i)) = a.i_t[i];
        if (a.impedance_csv)
            return array::ArrayModel(read_impedance_csv(*a.impedance_csv, a.transmit_ports, a.receive_ports), i_t,
                                     a.tolerance);
        return array::ArrayModel(array::synthetic_array(*a.synthetic, scenario_grid(s)), i_t, a.tolerance);
    }
}

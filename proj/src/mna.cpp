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

#include "rxfront/mna.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

namespace rxfront::mna
{
    namespace
    {
        constexpr double residual_limit = 1e-10;
        const std::string ground = "0";

        double parse_number(const std::string &tok, std::size_t line_no)
        {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError("netlist line " + std::to_string(line_no) + ": bad number '" + tok + "'");
            return v;
        }

        bool is_inf_token(const std::string &tok)
        {
            std::string t = tok;
            std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
            return t == "inf";
        }
    }

    void LinearNetlist::add(Element e)
    {
        detail::require(!e.name.empty(), "element needs a name");
        detail::require(!e.pos.empty() && !e.neg.empty(), "element " + e.name + " needs two nodes");
        for (const auto &other : elements_)
            detail::require(other.name != e.name, "duplicate element name " + e.name);
        detail::require(std::isfinite(e.value.real()) && std::isfinite(e.value.imag()),
                        "element " + e.name + " has a non-finite value");
        elements_.push_back(std::move(e));
    }

    void LinearNetlist::add_impedance(std::string name, std::string pos, std::string neg, complex ohms)
    {
        add({ElementKind::impedance, std::move(name), std::move(pos), std::move(neg), {}, {}, ohms});
    }

    void LinearNetlist::add_voltage_source(std::string name, std::string pos, std::string neg, complex volts)
    {
        add({ElementKind::voltage_source, std::move(name), std::move(pos), std::move(neg), {}, {}, volts});
    }

    void LinearNetlist::add_current_source(std::string name, std::string pos, std::string neg, complex amps)
    {
        add({ElementKind::current_source, std::move(name), std::move(pos), std::move(neg), {}, {}, amps});
    }

    void LinearNetlist::add_vcvs(std::string name, std::string pos, std::string neg, std::string ctrl_pos,
                                 std::string ctrl_neg, double gain)
    {
        detail::require(!ctrl_pos.empty() && !ctrl_neg.empty(), "controlled source " + name + " needs control nodes");
        add({ElementKind::vcvs, std::move(name), std::move(pos), std::move(neg), std::move(ctrl_pos),
             std::move(ctrl_neg), complex(gain, 0.0)});
    }

    LinearNetlist LinearNetlist::parse(std::istream &in)
    {
        LinearNetlist net;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            std::istringstream ss(line);
            std::vector<std::string> tok;
            for (std::string t; ss >> t;)
                tok.push_back(t);
            if (tok.empty() || tok[0][0] == '*' || tok[0][0] == '#')
                continue;

            const char kind = char(std::toupper(static_cast<unsigned char>(tok[0][0])));
            const auto where = "netlist line " + std::to_string(line_no);
            try
            {
                if (kind == 'E')
                {
                    if (tok.size() != 6)
                        throw ParseError(where + ": controlled source needs <n+> <n-> <c+> <c-> <gain>");
                    net.add_vcvs(tok[0], tok[1], tok[2], tok[3], tok[4], parse_number(tok[5], line_no));
                    continue;
                }
                if (kind != 'Z' && kind != 'V' && kind != 'I')
                    throw ParseError(where + ": unknown element kind '" + tok[0] + "'");
                if (tok.size() != 4 && tok.size() != 5)
                    throw ParseError(where + ": expected <name> <n+> <n-> <re> [im]");
                if (kind == 'Z' && is_inf_token(tok[3]))
                    continue;
                const complex v(parse_number(tok[3], line_no), tok.size() == 5 ? parse_number(tok[4], line_no) : 0.0);
                if (kind == 'Z')
                    net.add_impedance(tok[0], tok[1], tok[2], v);
                else if (kind == 'V')
                    net.add_voltage_source(tok[0], tok[1], tok[2], v);
                else
                    net.add_current_source(tok[0], tok[1], tok[2], v);
            }
            catch (const ValidationError &e)
            {
                throw ParseError(where + ": " + e.what());
            }
        }
        return net;
    }

    LinearNetlist LinearNetlist::parse(const std::string &text)
    {
        std::istringstream in(text);
        return parse(in);
    }

    complex MnaSolution::voltage(const std::string &node) const
    {
        const auto it = node_voltages.find(node);
        if (it == node_voltages.end())
            throw ValidationError("no node named " + node);
        return it->second;
    }

    const ElementResult &MnaSolution::element(const std::string &name) const
    {
        for (const auto &e : elements)
            if (e.name == name)
                return e;
        throw ValidationError("no element named " + name);
    }

    double MnaSolution::power_imbalance() const
    {
        double sum = 0.0, scale = 0.0;
        for (const auto &e : elements)
        {
            sum += e.absorbed_power;
            scale += std::abs(e.absorbed_power);
        }
        return scale > 0.0 ? std::abs(sum) / scale : 0.0;
    }

    MnaSolution mna_solve(const LinearNetlist &netlist)
    {
        const auto &elems = netlist.elements();
        detail::require(!elems.empty(), "netlist is empty");

        // Unknowns: non-ground node voltages in order of appearance, then one
        // branch current per voltage-defined element (sources, VCVS, shorts).
        std::map<std::string, Eigen::Index> node_index;
        std::vector<std::string> unknown_names;
        auto touch = [&](const std::string &n) {
            if (n == ground || node_index.count(n))
                return;
            node_index[n] = Eigen::Index(unknown_names.size());
            unknown_names.push_back("node " + n);
        };
        for (const auto &e : elems)
        {
            touch(e.pos);
            touch(e.neg);
            if (e.kind == ElementKind::vcvs)
            {
                touch(e.ctrl_pos);
                touch(e.ctrl_neg);
            }
        }
        detail::require(!node_index.empty(), "netlist has no non-ground nodes");

        auto has_branch = [](const Element &e) {
            return e.kind == ElementKind::voltage_source || e.kind == ElementKind::vcvs ||
                   (e.kind == ElementKind::impedance && e.value == complex(0.0, 0.0));
        };
        std::vector<Eigen::Index> branch_of(elems.size(), -1);
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (has_branch(elems[i]))
            {
                branch_of[i] = Eigen::Index(unknown_names.size());
                unknown_names.push_back("branch " + elems[i].name);
            }

        const auto n = Eigen::Index(unknown_names.size());
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
        auto idx = [&](const std::string &node) -> Eigen::Index {
            return node == ground ? -1 : node_index.at(node);
        };
        auto add = [&](Eigen::Index r, Eigen::Index c, complex v) {
            if (r >= 0 && c >= 0)
                a(r, c) += v;
        };

        for (std::size_t i = 0; i < elems.size(); ++i)
        {
            const auto &e = elems[i];
            const Eigen::Index p = idx(e.pos), q = idx(e.neg);
            if (branch_of[i] >= 0)
            {
                // KCL: branch current leaves pos, enters neg.
                const Eigen::Index k = branch_of[i];
                add(p, k, 1.0);
                add(q, k, -1.0);
                add(k, p, 1.0);
                add(k, q, -1.0);
                if (e.kind == ElementKind::voltage_source)
                    b(k) = e.value;
                else if (e.kind == ElementKind::vcvs)
                {
                    add(k, idx(e.ctrl_pos), -e.value);
                    add(k, idx(e.ctrl_neg), e.value);
                }
                continue;
            }
            if (e.kind == ElementKind::impedance)
            {
                const complex y = 1.0 / e.value;
                add(p, p, y);
                add(q, q, y);
                add(p, q, -y);
                add(q, p, -y);
            }
            else // current source
            {
                if (p >= 0)
                    b(p) -= e.value;
                if (q >= 0)
                    b(q) += e.value;
            }
        }

        // Equilibrate rows then columns so admittances of 1e-12 S and gains of
        // 1e8 sit on a common scale before the rank decision.
        Eigen::VectorXd row_scale(n), col_scale(n);
        for (Eigen::Index r = 0; r < n; ++r)
        {
            const double m = a.row(r).cwiseAbs().maxCoeff();
            row_scale(r) = m > 0.0 ? 1.0 / m : 1.0;
        }
        Eigen::MatrixXcd scaled = row_scale.asDiagonal() * a;
        for (Eigen::Index c = 0; c < n; ++c)
        {
            const double m = scaled.col(c).cwiseAbs().maxCoeff();
            col_scale(c) = m > 0.0 ? 1.0 / m : 1.0;
        }
        scaled = scaled * col_scale.asDiagonal();

        Eigen::FullPivLU<Eigen::MatrixXcd> lu(scaled);
        if (!lu.isInvertible())
        {
            const Eigen::MatrixXcd kernel = lu.kernel();
            Eigen::Index worst = 0;
            kernel.col(0).cwiseAbs().maxCoeff(&worst);
            throw SingularCircuitError("singular circuit matrix; check " + unknown_names[std::size_t(worst)]);
        }
        const Eigen::VectorXcd y = lu.solve(row_scale.asDiagonal() * b);
        const Eigen::VectorXcd x = col_scale.asDiagonal() * y;
        if (!x.allFinite())
            throw SingularCircuitError("circuit solution is not finite");

        MnaSolution sol;
        const Eigen::VectorXcd residual = row_scale.asDiagonal() * (a * x - b);
        const double denom = (scaled * y).cwiseAbs().maxCoeff() + (row_scale.asDiagonal() * b).cwiseAbs().maxCoeff();
        sol.relative_residual = denom > 0.0 ? residual.cwiseAbs().maxCoeff() / denom : 0.0;
        if (sol.relative_residual > residual_limit)
            throw NumericalError("circuit residual " + std::to_string(sol.relative_residual) + " exceeds limit");

        sol.node_voltages[ground] = 0.0;
        for (const auto &[name, i] : node_index)
            sol.node_voltages[name] = x(i);

        auto v_of = [&](const std::string &node) { return sol.node_voltages.at(node); };
        for (std::size_t i = 0; i < elems.size(); ++i)
        {
            const auto &e = elems[i];
            ElementResult r;
            r.name = e.name;
            r.voltage = v_of(e.pos) - v_of(e.neg);
            if (branch_of[i] >= 0)
                r.current = x(branch_of[i]);
            else if (e.kind == ElementKind::impedance)
                r.current = r.voltage / e.value;
            else
                r.current = e.value;
            r.absorbed_power = 0.5 * (r.voltage * std::conj(r.current)).real();
            sol.elements.push_back(r);
        }
        return sol;
    }
}

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

#include "rxfront/impedance_csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace rxfront
{
    namespace
    {
        constexpr double mirror_tol = 1e-12;

        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        double parse_double(const std::string &field, std::size_t line_no)
        {
            const std::string t = trim(field);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
                throw ParseError("line " + std::to_string(line_no) + ": bad number '" + t + "'");
            return v;
        }

        std::size_t parse_index(const std::string &field, std::size_t line_no)
        {
            const std::string t = trim(field);
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
                throw ParseError("line " + std::to_string(line_no) + ": bad port index '" + t + "'");
            return v;
        }

        struct Entry
        {
            complex value;
            std::size_t line;
        };
    }

    ImpedanceMatrixSeries read_impedance_csv(std::istream &in, std::size_t transmit_ports,
                                             std::size_t receive_ports)
    {
        const std::size_t n = transmit_ports + receive_ports;
        if (n == 0)
            throw ValidationError("impedance matrix needs at least one port");

        // frequency -> (row, col) -> entry, exactly as listed
        std::map<double, std::map<std::pair<std::size_t, std::size_t>, Entry>> raw;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            const std::string t = trim(line);
            if (t.empty() || t[0] == '#' || t.rfind("freq_hz", 0) == 0)
                continue;

            std::vector<std::string> fields;
            std::stringstream ss(t);
            std::string field;
            while (std::getline(ss, field, ','))
                fields.push_back(field);
            if (fields.size() != 5)
                throw ParseError("line " + std::to_string(line_no) + ": expected 5 columns, got " +
                                 std::to_string(fields.size()));

            const double f = parse_double(fields[0], line_no);
            const std::size_t r = parse_index(fields[1], line_no);
            const std::size_t c = parse_index(fields[2], line_no);
            const complex z(parse_double(fields[3], line_no), parse_double(fields[4], line_no));
            if (r >= n || c >= n)
                throw ParseError("line " + std::to_string(line_no) + ": port index out of range for " +
                                 std::to_string(n) + " ports");
            auto &slot = raw[f];
            if (slot.count({r, c}))
                throw ParseError("line " + std::to_string(line_no) + ": duplicate entry (" +
                                 std::to_string(r) + "," + std::to_string(c) + ")");
            slot[{r, c}] = {z, line_no};
        }
        if (raw.empty())
            throw ParseError("impedance file has no entries");

        std::vector<double> freqs;
        std::vector<Eigen::MatrixXcd> mats;
        for (const auto &[f, entries] : raw)
        {
            Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(Eigen::Index(n), Eigen::Index(n));
            for (const auto &[rc, e] : entries)
            {
                const auto [r, c] = rc;
                z(Eigen::Index(r), Eigen::Index(c)) = e.value;
                if (r == c)
                    continue;
                const auto twin = entries.find({c, r});
                if (twin == entries.end())
                {
                    z(Eigen::Index(c), Eigen::Index(r)) = e.value;
                }
                else if (relative_difference(e.value, twin->second.value) > mirror_tol)
                {
                    throw ParseError("line " + std::to_string(std::max(e.line, twin->second.line)) +
                                     ": entries (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") and (" + std::to_string(c) + "," + std::to_string(r) +
                                     ") disagree");
                }
            }
            freqs.push_back(f);
            mats.push_back(std::move(z));
        }
        return ImpedanceMatrixSeries(FrequencyGrid(std::move(freqs)), std::move(mats),
                                     transmit_ports, receive_ports);
    }

    ImpedanceMatrixSeries read_impedance_csv(const std::filesystem::path &path,
                                             std::size_t transmit_ports, std::size_t receive_ports)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open impedance file " + path.string());
        try
        {
            return read_impedance_csv(in, transmit_ports, receive_ports);
        }
        catch (const ParseError &e)
        {
            throw ParseError(path.string() + ": " + e.what());
        }
    }

    void write_impedance_csv(std::ostream &out, const ImpedanceMatrixSeries &zms)
    {
        out << "freq_hz,row,col,re_ohms,im_ohms\n";
        char buf[160];
        for (std::size_t f = 0; f < zms.size(); ++f)
        {
            const auto &z = zms[f];
            for (Eigen::Index r = 0; r < z.rows(); ++r)
                for (Eigen::Index c = r; c < z.cols(); ++c)
                {
                    if (z(r, c) == complex(0.0, 0.0))
                        continue;
                    std::snprintf(buf, sizeof buf, "%.17g,%ld,%ld,%.17g,%.17g\n", zms.grid()[f],
                                  long(r), long(c), z(r, c).real(), z(r, c).imag());
                    out << buf;
                }
        }
    }
}

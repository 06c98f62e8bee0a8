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

#include "rxfront/cli/report.hpp"
#include "rxfront/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace rxfront::cli
{
    namespace
    {
        std::string csv_field(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }
    }

    std::string format_number(double v)
    {
        if (std::isnan(v))
            return "undefined";
        if (std::isinf(v))
            return v > 0.0 ? "inf" : "-inf";
        if (v == 0.0)
            return "0";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    std::string render_report(const Report &r, Format format)
    {
        if (r.rows.empty())
            throw ValidationError("report for '" + r.subcommand + "' has no rows");
        std::string out;
        if (format == Format::csv)
        {
            for (std::size_t c = 0; c < r.columns.size(); ++c)
                out += (c ? "," : "") + csv_field(r.columns[c]);
            out += '\n';
            for (const auto &row : r.rows)
            {
                for (std::size_t c = 0; c < row.size(); ++c)
                    out += (c ? "," : "") + csv_field(row[c]);
                out += '\n';
            }
            return out;
        }
        out += "report: " + r.subcommand + "\n";
        out += "scenario: " + r.scenario + "\n";
        if (!r.summary.empty())
            out += "summary: " + r.summary + "\n";
        out += "rows:\n";
        for (const auto &row : r.rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                out += std::string(c ? "    " : "  - ") + r.columns[c] + ": " + row[c] + "\n";
        return out;
    }

    void write_text_file(const std::filesystem::path &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot open " + path.string() + " for writing");
        out << content;
        out.flush();
        if (!out)
            throw IoError("write to " + path.string() + " failed");
    }
}

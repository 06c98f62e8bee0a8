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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rxfront;
using namespace rxfront::cli;
namespace fs = std::filesystem;

namespace
{
    const fs::path data = RXFRONT_TEST_DATA;

    struct Result
    {
        int code;
        std::string out, err;
    };

    Result call(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return {code, out.str(), err.str()};
    }

    Result call(const std::string &sub, const std::string &file, std::vector<std::string> extra = {})
    {
        std::vector<std::string> args{sub, "--scenario", (data / file).string()};
        args.insert(args.end(), extra.begin(), extra.end());
        return call(args);
    }

    std::vector<std::string> split(const std::string &line)
    {
        std::vector<std::string> out;
        std::string cell;
        bool quoted = false;
        for (char c : line)
        {
            if (c == '"')
                quoted = !quoted;
            else if (c == ',' && !quoted)
            {
                out.push_back(cell);
                cell.clear();
            }
            else
                cell += c;
        }
        out.push_back(cell);
        return out;
    }

    std::vector<std::vector<std::string>> csv_rows(const std::string &text)
    {
        std::vector<std::vector<std::string>> rows;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            rows.push_back(split(line));
        return rows;
    }

    fs::path temp_dir()
    {
        const auto p = fs::temp_directory_path() / "rxfront_test_cli";
        fs::create_directories(p);
        return p;
    }

    std::string write_temp(const std::string &name, const std::string &text)
    {
        const auto p = temp_dir() / name;
        std::ofstream(p) << text;
        return p.string();
    }
}

TEST(Cli, ValidatePasses)
{
    const auto r = call("validate", "array.json", {"--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("reciprocity: pass, passivity: pass"), std::string::npos) << r.out;
}

TEST(Cli, ValidateFailureExitsOne)
{
    const auto r = call("validate", "nonpassive.json");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("fail"), std::string::npos) << r.out;
    EXPECT_FALSE(r.err.empty());

    // the array model refuses the same data
    EXPECT_EQ(call("array", "nonpassive.json").code, 1);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(call("link", "does_not_exist.json").code, 4);
    EXPECT_EQ(call({"link", "--scenario", write_temp("bad.json", "{ not json")}).code, 2);
    EXPECT_EQ(call({"link", "--scenario", write_temp("unknown_key.json", R"({"name": "x", "bogus": 1})")}).code, 2);
    EXPECT_EQ(call({"capacity", "--scenario",
                    write_temp("neg.json", R"({"name": "x", "capacity": {"power": -1, "noise_density": 1,
                                                 "bandwidths": [1]}})")})
                  .code,
              1);
    // a purely reactive load tuning out a lossless receive port
    const auto csv = write_temp("lossless.csv", "1e6,0,0,50,0\n1e6,0,1,0,1\n1e6,1,1,0,20\n");
    EXPECT_EQ(call({"array", "--scenario",
                    write_temp("short.json", R"({"name": "x", "array": {"transmit_ports": 1, "receive_ports": 1,
                        "impedance_csv": ")" + csv + R"("},
                        "strategies": [{"explicit": [[{"re_ohms": 0, "im_ohms": -20}]]}]})")})
                  .code,
              3);
    EXPECT_EQ(call({"frobnicate"}).code, 1);
    EXPECT_EQ(call({"link"}).code, 1);
    EXPECT_EQ(call("link", "link_real.json", {"--format", "xml"}).code, 1);
    EXPECT_EQ(call("link", "link_real.json", {"--out", "/nonexistent/dir/report.csv"}).code, 4);
    EXPECT_EQ(call("capacity", "link_real.json").code, 1);
}

TEST(Cli, HelpDocumentsExitCodes)
{
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Exit codes"), std::string::npos);
    for (const auto &s : subcommands())
        EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(Cli, CsvHeadersAreFixed)
{
    const std::vector<std::pair<std::string, std::string>> cases{
        {"validate", "array.json"}, {"capacity", "capacity.json"}, {"link", "link_sweep.json"},
        {"noisefig", "noisefig.json"}, {"frontend", "frontend.json"}, {"match", "match.json"},
        {"array", "array.json"}};
    for (const auto &[sub, file] : cases)
    {
        const auto r = call(sub, file);
        ASSERT_EQ(r.code, 0) << sub << ": " << r.err;
        const auto rows = csv_rows(r.out);
        ASSERT_GE(rows.size(), 2u) << sub;
        EXPECT_EQ(rows[0], report_columns(sub)) << sub;
        for (const auto &row : rows)
            EXPECT_EQ(row.size(), rows[0].size()) << sub;
    }
}

TEST(Cli, OpenCircuitPowerIsLiteralZero)
{
    const auto rows = csv_rows(call("link", "link_real.json").out);
    ASSERT_GE(rows.size(), 3u);
    const auto &h = rows[0];
    const auto col = std::size_t(std::find(h.begin(), h.end(), "extracted_power_w") - h.begin());
    const auto strat = std::size_t(std::find(h.begin(), h.end(), "strategy") - h.begin());
    bool seen = false;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i][strat] == "open_circuit")
        {
            EXPECT_EQ(rows[i][col], "0");
            seen = true;
        }
    EXPECT_TRUE(seen);

    const auto arr = csv_rows(call("array", "array.json").out);
    const auto pc = std::size_t(std::find(arr[0].begin(), arr[0].end(), "sum_power_w") - arr[0].begin());
    const auto sc = std::size_t(std::find(arr[0].begin(), arr[0].end(), "strategy") - arr[0].begin());
    for (std::size_t i = 1; i < arr.size(); ++i)
        if (arr[i][sc] == "open_circuit")
            EXPECT_EQ(arr[i][pc], "0");
}

TEST(Cli, NoiseFactorMinimizedAtInfiniteLoad)
{
    const auto rows = csv_rows(call("noisefig", "noisefig.json").out);
    const auto &h = rows[0];
    const auto rs = std::size_t(std::find(h.begin(), h.end(), "r_s_ohms") - h.begin());
    const auto rl = std::size_t(std::find(h.begin(), h.end(), "r_load_ohms") - h.begin());
    const auto f = std::size_t(std::find(h.begin(), h.end(), "noise_factor") - h.begin());
    std::map<std::string, std::pair<double, std::string>> best;
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        const double v = std::stod(rows[i][f]);
        auto it = best.find(rows[i][rs]);
        if (it == best.end() || v < it->second.first)
            best[rows[i][rs]] = {v, rows[i][rl]};
    }
    ASSERT_EQ(best.size(), 2u);
    for (const auto &[k, v] : best)
        EXPECT_EQ(v.second, "inf") << "r_s " << k;
}

TEST(Cli, LinkRatioNearFourForRealAntenna)
{
    const auto rows = csv_rows(call("link", "link_real.json").out);
    const auto &h = rows[0];
    const auto c = std::size_t(std::find(h.begin(), h.end(), "oc_over_matched_closed_form") - h.begin());
    const double ratio = std::stod(rows[1][c]);
    EXPECT_GT(ratio, 3.99);
    EXPECT_LT(ratio, 4.01);
}

TEST(Cli, DumpNormalizedRoundTrips)
{
    for (const char *file : {"array.json", "array_synthetic.json", "link_sweep.json", "capacity.json", "noisefig.json",
                             "frontend.json", "match.json"})
    {
        const auto r = call("link", file, {"--dump-normalized"});
        ASSERT_EQ(r.code, 0) << file << ": " << r.err;
        const Scenario original = load_scenario(data / file);
        const Scenario back = parse_scenario(r.out);
        EXPECT_TRUE(back == original) << file;
        EXPECT_EQ(dump_scenario(back), r.out) << file;
    }
}

TEST(Cli, DeterministicAcrossRunsAndThreads)
{
    const std::vector<std::pair<std::string, std::string>> cases{
        {"link", "link_sweep.json"}, {"array", "array_synthetic.json"}, {"frontend", "frontend_mna.json"}};
    for (const auto &[sub, file] : cases)
    {
        const auto a = call(sub, file, {"--execution", "serial"});
        const auto b = call(sub, file, {"--execution", "parallel", "--threads", "4"});
        const auto c = call(sub, file, {"--execution", "parallel", "--threads", "2", "--format", "csv"});
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out) << sub;
        EXPECT_EQ(a.out, c.out) << sub;
    }
}

TEST(Cli, OutFileMatchesStdout)
{
    const auto path = (temp_dir() / "report.txt").string();
    const auto a = call("array", "array.json", {"--format", "text", "--out", path});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_TRUE(a.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), call("array", "array.json", {"--format", "text"}).out);
}

TEST(Cli, ReportRendering)
{
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
    EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "undefined");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");

    Report r{"link", "x", "", {"a", "b"}, {{"1", "p, q"}}};
    EXPECT_EQ(render_report(r, Format::csv), "a,b\n1,\"p, q\"\n");
    r.rows.clear();
    EXPECT_THROW(render_report(r, Format::csv), ValidationError);
}

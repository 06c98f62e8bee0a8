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

#ifndef RXFRONT_CLI_RUN_HPP
#define RXFRONT_CLI_RUN_HPP

#include "rxfront/cli/report.hpp"
#include "rxfront/cli/scenario.hpp"
#include "rxfront/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rxfront::cli
{
    // Subcommand names in help order.
    const std::vector<std::string> &subcommands();

    // CSV column sets, one per subcommand.
    const std::vector<std::string> &report_columns(const std::string &subcommand);

    struct Outcome
    {
        Report report;
        bool pass = true; // false when `validate` found a failing check
    };

    // Evaluates one subcommand. Rows are ordered by frequency (or the
    // subcommand's primary sweep axis), then by strategy in declared order.
    Outcome build_report(const std::string &subcommand, const Scenario &scenario, sweep::Execution exec);

    // Full command line without the program name, e.g.
    // {"link", "--scenario", "a.json", "--format", "csv"}.
    // Returns the process exit code: 0 success, 1 validation, 2 parse,
    // 3 numerical or singular circuit, 4 I/O.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif

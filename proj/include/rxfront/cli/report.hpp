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

#ifndef RXFRONT_CLI_REPORT_HPP
#define RXFRONT_CLI_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace rxfront::cli
{
    enum class Format
    {
        csv,
        text
    };

    // Cells are stored already rendered, so every output format prints the
    // same tokens.
    struct Report
    {
        std::string subcommand;
        std::string scenario;
        std::string summary; // text format only
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;
    };

    // 12 significant digits; "inf" / "-inf" for infinities, "undefined" for
    // NaN, and a plain "0" for either signed zero.
    std::string format_number(double v);

    // CSV: header line plus one line per row; fields holding a comma or quote
    // are quoted. Text: a YAML-like listing with the same fields.
    // Throws ValidationError for a report without rows.
    std::string render_report(const Report &r, Format format);

    // Writes to `path`; IoError when it cannot be written.
    void write_text_file(const std::filesystem::path &path, const std::string &content);
}

#endif

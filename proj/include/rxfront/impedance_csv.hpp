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

#ifndef RXFRONT_IMPEDANCE_CSV_HPP
#define RXFRONT_IMPEDANCE_CSV_HPP

#include "rxfront/netcore.hpp"

#include <filesystem>
#include <iosfwd>

namespace rxfront
{
    // Impedance-matrix CSV: one line per entry per frequency,
    //
    //     freq_hz,row,col,re_ohms,im_ohms
    //
    // with 0-based row/col. A header line, blank lines and lines starting
    // with '#' are skipped. Missing entries are zero. An off-diagonal entry
    // listed once is mirrored; listed in both orientations the two values
    // must agree to 1e-12 relative or the load fails with ParseError.
    ImpedanceMatrixSeries read_impedance_csv(std::istream &in, std::size_t transmit_ports,
                                             std::size_t receive_ports);
    ImpedanceMatrixSeries read_impedance_csv(const std::filesystem::path &path,
                                             std::size_t transmit_ports, std::size_t receive_ports);

    // Writes the upper triangle (including the diagonal) of every matrix.
    // Entries are printed with 17 significant digits so the file re-reads exactly.
    void write_impedance_csv(std::ostream &out, const ImpedanceMatrixSeries &zms);
}

#endif

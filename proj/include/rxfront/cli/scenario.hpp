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

#ifndef RXFRONT_CLI_SCENARIO_HPP
#define RXFRONT_CLI_SCENARIO_HPP

#include "rxfront/array.hpp"
#include "rxfront/frontend.hpp"
#include "rxfront/link.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

// Scenario files are JSON with the unit spelled in every key name
// (re_ohms, temp_kelvin, ...). An infinite impedance is the string "inf".
// See README.md for the full key list.
namespace rxfront::cli
{
    // Single antenna pair. The impedances either come from a 2-port
    // impedance-matrix CSV (transmit port 0, receive port 1) or are constant
    // over the grid.
    struct LinkSection
    {
        std::optional<std::filesystem::path> impedance_csv;
        Impedance z_r{50.0, 0.0};
        Impedance z_rt{1.0, 0.0};
        double s_it = 1.0;          // [A^2/Hz]
        complex i_t{1.0, 0.0};      // transmit current phasor for voltages and powers [A]
        std::optional<link::GridSpec> load_search;

        bool operator==(const LinkSection &o) const;
    };

    struct ArraySection
    {
        std::size_t transmit_ports = 1;
        std::size_t receive_ports = 1;
        std::optional<std::filesystem::path> impedance_csv;
        std::optional<array::SyntheticArraySpec> synthetic;
        std::vector<complex> i_t; // length transmit_ports, same at every frequency
        double tolerance = default_validation_tol;

        bool operator==(const ArraySection &) const = default;
    };

    struct AmplifierSection
    {
        double gain = 1.0;
        double n_na = 0.0; // [V^2/Hz]
        double temperature = 290.0;

        bool operator==(const AmplifierSection &) const = default;
    };

    struct CapacitySection
    {
        double power = 1.0;
        double noise_density = 1.0;
        std::vector<double> bandwidths;

        bool operator==(const CapacitySection &) const = default;
    };

    struct NoisefigSection
    {
        complex v_s{1.0, 0.0};
        std::vector<double> r_s;
        std::vector<Load> r_load;
        double r_out = 50.0;

        bool operator==(const NoisefigSection &) const = default;
    };

    struct FrontendSection
    {
        std::vector<frontend::Topology> topologies;
        std::vector<double> open_loop_gains; // +inf allowed
        Load z_id = Load::open();
        Load z_cm = Load::open();
        double r_out = 0.0;
        complex v_c{0.0, 0.0};
        Load r_c = Load::open();
        bool use_mna = false;

        bool operator==(const FrontendSection &) const = default;
    };

    struct MatchSection
    {
        double r_in = 1e6;
        bool cancel_reactance = true;
        // Either explicit turns ratios, or a log sweep of `points` ratios
        // spanning +-`decades` around the optimum at each frequency.
        std::vector<double> turns_ratios;
        double decades = 1.0;
        std::size_t points = 51;

        bool operator==(const MatchSection &) const = default;
    };

    struct Scenario
    {
        std::string name;
        std::optional<FrequencyGrid> grid;
        std::optional<LinkSection> link;
        std::optional<ArraySection> array;
        AmplifierSection amplifier;
        std::vector<array::TerminationStrategy> strategies;
        std::optional<CapacitySection> capacity;
        std::optional<NoisefigSection> noisefig;
        std::optional<FrontendSection> frontend;
        std::optional<MatchSection> match;

        bool operator==(const Scenario &o) const;
    };

    bool same_strategy(const array::TerminationStrategy &a, const array::TerminationStrategy &b);
    bool same_grid_spec(const link::GridSpec &a, const link::GridSpec &b);

    // Parses and normalizes scenario text. Relative file references are
    // resolved against base_dir. Malformed text, wrong types or unknown keys
    // raise ParseError; out-of-domain values raise ValidationError.
    Scenario parse_scenario(const std::string &text, const std::filesystem::path &base_dir = {});

    // Reads a scenario file; IoError when it cannot be opened.
    Scenario load_scenario(const std::filesystem::path &path);

    // Normalized form: every default spelled out, the grid as explicit points,
    // paths absolute. Re-parses to an equal Scenario.
    std::string dump_scenario(const Scenario &s);

    // Per-frequency data resolved from the link or array section.
    // Throws ValidationError when the section is missing.
    FrequencyGrid scenario_grid(const Scenario &s);
    std::vector<link::SingleLink> scenario_links(const Scenario &s);
    array::ArrayModel scenario_array(const Scenario &s);
}

#endif

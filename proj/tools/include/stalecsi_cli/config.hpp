// SPDX-License-Identifier: Apache-2.0
//
// stalecsi: net degrees of freedom of the MISO broadcast channel with delayed limited feedback
// Copyright (C) 2026 The stalecsi authors
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

#pragma once

#include "stalecsi/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stalecsi::cli {

// Bad flags or flag values. Maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum class ExitCode : int { ok = 0, usage = 2, numerical = 3, verification = 4 };

enum class Command { net_dof, simulate, regimes, design_table, verify };
enum class OutputFormat { csv, json };
enum class SimScheme { mat, zf };

// Raw option text as given on the command line or in a config file. Ranges and lists
// stay strings until validate() resolves them.
struct RawOptions {
    std::size_t k = 2;
    std::string n;            // single N
    std::string n_range;      // first:last[:step], integers
    std::string nfd;          // N_fd; empty = command default
    std::string alpha = "1";
    std::string alpha_range;  // first:last:step, rationals
    std::string snr_grid_db = "60:180:20";
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;          // empty = stdout
    std::size_t workers = 0;  // 0 = available parallelism
    std::vector<std::string> checks;
    std::string scheme = "mat";
    unsigned fixed_bits = 0;  // 0 = derive from alpha
    double fc = 2.1e9;
    std::string ts = "1/168000";
    std::string k_list = "2,4,16";
};

struct ExperimentConfig {
    Command command = Command::net_dof;
    std::size_t K = 2;
    std::vector<Rational> Ns;
    Rational N_fd = 0;
    std::vector<Rational> alphas;
    std::vector<double> snr_grid_db;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::csv;
    std::string output_path;
    std::size_t workers = 0;
    std::vector<std::string> checks;
    SimScheme scheme = SimScheme::mat;
    std::optional<unsigned> fixed_bits;
    double carrier_hz = 2.1e9;
    Rational symbol_time_s;
    std::vector<std::size_t> Ks;
    bool trials_given = false;

    nlohmann::ordered_json to_json() const;
};

// Resolves and checks every option the command uses. Throws UsageError.
ExperimentConfig resolve(Command command, const RawOptions& raw, bool trials_given = true);

std::string command_name(Command c);

// "a:b" or "a:b:step" over integers, inclusive.
std::vector<Rational> parse_int_range(const std::string& text);
// "a:b:step" over exact rationals, inclusive; or a single value.
std::vector<Rational> parse_rational_range(const std::string& text);
// "a:b:step" or "x,y,z".
std::vector<double> parse_db_grid(const std::string& text);
// "2,4,16"
std::vector<std::size_t> parse_count_list(const std::string& text);

} // namespace stalecsi::cli

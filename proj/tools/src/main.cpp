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

#include "stalecsi/errors.hpp"
#include "stalecsi_cli/commands.hpp"
#include "stalecsi_cli/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace stalecsi;

namespace {

void add_shared_options(CLI::App& app, cli::RawOptions& o) {
    app.add_option("--k", o.k, "Number of users K (= transmit antennas)")->capture_default_str();
    app.add_option("--n", o.n, "Coherence length N in symbols (integer or p/q)");
    app.add_option("--n-range", o.n_range, "Integer sweep first:last[:step] for N");
    app.add_option("--nfd", o.nfd, "Feedback delay N_fd in symbols (default 0; 1680 for design-table)");
    app.add_option("--alpha", o.alpha, "Feedback scaling exponent alpha (integer, decimal or p/q)")
        ->capture_default_str();
    app.add_option("--alpha-range", o.alpha_range, "Rational sweep first:last:step for alpha");
    app.add_option("--snr-grid-db", o.snr_grid_db, "Transmit SNR grid in dB: first:last:step or a,b,c")
        ->capture_default_str();
    app.add_option("--trials", o.trials, "Monte Carlo trials per SNR point (verify: per check)")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", o.out, "Write output to this file instead of stdout");
    app.add_option("--workers", o.workers, "Worker threads (0 = available parallelism)")->capture_default_str();
    app.add_option("--check", o.checks, "Verification check to run (repeatable; default all)");
    app.add_option("--scheme", o.scheme, "simulate: mat or zf")->capture_default_str();
    app.add_option("--fixed-bits", o.fixed_bits, "simulate: fixed feedback bits per user (0 = from alpha)")
        ->capture_default_str();
    app.add_option("--fc", o.fc, "design-table: carrier frequency in Hz")->capture_default_str();
    app.add_option("--ts", o.ts, "design-table: symbol time in seconds (decimal or p/q)")->capture_default_str();
    app.add_option("--k-list", o.k_list, "design-table: comma-separated user counts")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Net degrees of freedom of the MISO broadcast channel with delayed limited feedback"};
    app.set_version_flag("--version", "stalecsi 0.1.0");
    app.set_config("--config", "", "Read options from a TOML/INI file (command-line flags take precedence)");
    bool show_config = false;
    app.add_flag("--show-config", show_config, "Print the effective options and exit");
    app.require_subcommand(0, 1);

    cli::RawOptions raw;
    add_shared_options(app, raw);

    const std::vector<std::pair<cli::Command, std::string>> commands{
        {cli::Command::net_dof, "Exact net DoF of MAT, ZF and SISO over N and alpha"},
        {cli::Command::simulate, "Monte Carlo sum rate over an SNR grid and the fitted DoF slope"},
        {cli::Command::regimes, "SISO/MAT/ZF regime boundaries, optionally with a per-N winner sweep"},
        {cli::Command::design_table, "Coherence-time and speed ranges where MAT is preferable"},
        {cli::Command::verify, "Run the numerical check suite"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [cmd, help] : commands)
        subs.push_back(app.add_subcommand(cli::command_name(cmd), help)->fallthrough());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(cli::ExitCode::usage);
    }

    if (show_config) {
        std::cout << app.config_to_str(true, true);
        return 0;
    }

    std::optional<cli::Command> chosen;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed())
            chosen = commands[i].first;
    if (!chosen) {
        std::cerr << app.help();
        return static_cast<int>(cli::ExitCode::usage);
    }

    try {
        const auto cfg = cli::resolve(*chosen, raw, app.count("--trials") > 0);
        const auto result = cli::run_command(cfg);
        if (cfg.output_path.empty()) {
            cli::emit(cfg, result, std::cout);
        } else {
            std::ofstream file(cfg.output_path, std::ios::binary);
            if (!file)
                throw cli::UsageError("--out: cannot open '" + cfg.output_path + "' for writing");
            cli::emit(cfg, result, file);
        }
        return static_cast<int>(result.status);
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return static_cast<int>(cli::ExitCode::numerical);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return static_cast<int>(cli::ExitCode::usage);
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return static_cast<int>(cli::ExitCode::usage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(cli::ExitCode::numerical);
    }
}

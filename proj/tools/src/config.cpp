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

#include "stalecsi_cli/config.hpp"

#include "stalecsi/verify.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <sstream>

namespace stalecsi::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
}

Rational rational_arg(const std::string& text, const char* what) {
    try {
        return parse_rational(trim(text));
    } catch (const std::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

double double_arg(const std::string& text, const char* what) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        throw UsageError(std::string(what) + ": not a finite number: '" + text + "'");
    return v;
}

std::vector<Rational> rational_sweep(const Rational& first, const Rational& last, const Rational& step,
                                     const char* what) {
    if (!(step > 0))
        throw UsageError(std::string(what) + ": step must be positive");
    if (last < first)
        throw UsageError(std::string(what) + ": range end precedes its start");
    std::vector<Rational> out;
    for (Rational x = first; x <= last; x += step) {
        out.push_back(x);
        if (out.size() > 1000000)
            throw UsageError(std::string(what) + ": more than 10^6 points");
    }
    return out;
}

// Integers as JSON numbers when they fit, everything else as "p/q" text.
nlohmann::ordered_json exact_json(const Rational& x) {
    if (denominator(x) == 1 && abs(numerator(x)) <= BigInt(std::numeric_limits<long long>::max()))
        return numerator(x).convert_to<long long>();
    return to_fraction_string(x);
}

} // namespace

std::vector<Rational> parse_int_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3)
        throw UsageError("--n-range: expected first:last or first:last:step, got '" + text + "'");
    const Rational first = rational_arg(parts[0], "--n-range");
    const Rational last = rational_arg(parts[1], "--n-range");
    const Rational step = parts.size() == 3 ? rational_arg(parts[2], "--n-range") : Rational(1);
    for (const auto* v : {&first, &last, &step})
        if (denominator(*v) != 1)
            throw UsageError("--n-range: values must be integers");
    return rational_sweep(first, last, step, "--n-range");
}

std::vector<Rational> parse_rational_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1)
        return {rational_arg(parts[0], "--alpha-range")};
    if (parts.size() != 3)
        throw UsageError("--alpha-range: expected first:last:step, got '" + text + "'");
    return rational_sweep(rational_arg(parts[0], "--alpha-range"), rational_arg(parts[1], "--alpha-range"),
                          rational_arg(parts[2], "--alpha-range"), "--alpha-range");
}

std::vector<double> parse_db_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw UsageError("--snr-grid-db: expected first:last:step, got '" + text + "'");
        const double first = double_arg(parts[0], "--snr-grid-db");
        const double last = double_arg(parts[1], "--snr-grid-db");
        const double step = double_arg(parts[2], "--snr-grid-db");
        if (!(step > 0.0) || last < first)
            throw UsageError("--snr-grid-db: need step > 0 and last >= first");
        const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(first + static_cast<double>(i) * step);
    } else {
        for (const auto& p : split(text, ','))
            if (!trim(p).empty())
                out.push_back(double_arg(p, "--snr-grid-db"));
    }
    if (out.empty())
        throw UsageError("--snr-grid-db: empty grid");
    return out;
}

std::vector<std::size_t> parse_count_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& p : split(text, ',')) {
        const std::string t = trim(p);
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
            throw UsageError("--k-list: not a count: '" + p + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError("--k-list: empty list");
    return out;
}

std::string command_name(Command c) {
    switch (c) {
    case Command::net_dof:
        return "net-dof";
    case Command::simulate:
        return "simulate";
    case Command::regimes:
        return "regimes";
    case Command::design_table:
        return "design-table";
    case Command::verify:
        return "verify";
    }
    return "?";
}

ExperimentConfig resolve(Command command, const RawOptions& raw, bool trials_given) {
    ExperimentConfig cfg;
    cfg.command = command;
    cfg.K = raw.k;
    cfg.trials = raw.trials;
    cfg.trials_given = trials_given;
    cfg.seed = raw.seed;
    cfg.output_path = raw.out;
    cfg.workers = raw.workers;

    if (raw.format == "csv")
        cfg.format = OutputFormat::csv;
    else if (raw.format == "json")
        cfg.format = OutputFormat::json;
    else
        throw UsageError("--format: expected csv or json, got '" + raw.format + "'");

    const bool needs_k = command != Command::design_table && command != Command::verify;
    if (needs_k && cfg.K < 2)
        throw UsageError("--k: need at least two users");
    if (cfg.K > 64)
        throw UsageError("--k: at most 64 users supported");

    const Rational default_nfd = command == Command::design_table ? Rational(1680) : Rational(0);
    cfg.N_fd = raw.nfd.empty() ? default_nfd : rational_arg(raw.nfd, "--nfd");
    if (cfg.N_fd < 0)
        throw UsageError("--nfd: must be nonnegative");

    if (!raw.n.empty() && !raw.n_range.empty())
        throw UsageError("--n and --n-range are mutually exclusive");
    if (!raw.n.empty())
        cfg.Ns = {rational_arg(raw.n, "--n")};
    else if (!raw.n_range.empty())
        cfg.Ns = parse_int_range(raw.n_range);
    for (const auto& n : cfg.Ns)
        if (n < 1)
            throw UsageError("--n: coherence length must be at least 1");

    cfg.alphas = raw.alpha_range.empty() ? std::vector<Rational>{rational_arg(raw.alpha, "--alpha")}
                                         : parse_rational_range(raw.alpha_range);
    for (const auto& a : cfg.alphas)
        if (a < 0)
            throw UsageError("--alpha: must be nonnegative");

    switch (command) {
    case Command::net_dof:
        if (cfg.Ns.empty())
            throw UsageError("net-dof: give --n or --n-range");
        break;
    case Command::simulate:
        if (raw.scheme == "mat")
            cfg.scheme = SimScheme::mat;
        else if (raw.scheme == "zf")
            cfg.scheme = SimScheme::zf;
        else
            throw UsageError("--scheme: expected mat or zf, got '" + raw.scheme + "'");
        if (cfg.trials < 1)
            throw UsageError("--trials: need at least one trial");
        cfg.snr_grid_db = parse_db_grid(raw.snr_grid_db);
        if (cfg.alphas.size() != 1)
            throw UsageError("simulate: --alpha-range is not supported; run one alpha per invocation");
        if (raw.fixed_bits > 0)
            cfg.fixed_bits = raw.fixed_bits;
        if (cfg.Ns.size() > 1)
            throw UsageError("simulate: give a single --n");
        if (cfg.scheme == SimScheme::zf) {
            if (cfg.Ns.empty()) {
                if (cfg.N_fd > 0)
                    throw UsageError("simulate --scheme zf: --n is required when --nfd > 0");
                cfg.Ns = {Rational(1)};
            }
            if (!(cfg.N_fd < cfg.Ns.front()))
                throw UsageError("simulate --scheme zf: need N_fd < N");
        }
        for (double db : cfg.snr_grid_db)
            if (!(db > 0.0))
                throw UsageError("--snr-grid-db: powers must exceed 0 dB");
        break;
    case Command::regimes:
        break;
    case Command::design_table:
        cfg.carrier_hz = raw.fc;
        if (!(cfg.carrier_hz > 0.0) || !std::isfinite(cfg.carrier_hz))
            throw UsageError("--fc: carrier frequency must be positive");
        cfg.symbol_time_s = rational_arg(raw.ts, "--ts");
        if (!(cfg.symbol_time_s > 0))
            throw UsageError("--ts: symbol time must be positive");
        cfg.Ks = parse_count_list(raw.k_list);
        for (auto k : cfg.Ks)
            if (k < 2 || k > 64)
                throw UsageError("--k-list: each K must lie in [2, 64]");
        break;
    case Command::verify: {
        const auto& known = verify::check_names();
        for (const auto& c : raw.checks)
            if (std::find(known.begin(), known.end(), c) == known.end())
                throw UsageError("--check: unknown check '" + c + "'");
        cfg.checks = raw.checks;
        if (trials_given && cfg.trials < 1)
            throw UsageError("--trials: need at least one trial");
        break;
    }
    }
    return cfg;
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_name(command);
    switch (command) {
    case Command::net_dof:
    case Command::regimes:
        j["K"] = K;
        j["N_fd"] = exact_json(N_fd);
        if (!Ns.empty()) {
            j["N_first"] = exact_json(Ns.front());
            j["N_last"] = exact_json(Ns.back());
            j["N_count"] = Ns.size();
        }
        if (command == Command::net_dof) {
            auto a = nlohmann::ordered_json::array();
            for (const auto& x : alphas)
                a.push_back(exact_json(x));
            j["alpha"] = a;
        }
        break;
    case Command::simulate:
        j["scheme"] = scheme == SimScheme::mat ? "mat" : "zf";
        j["K"] = K;
        j["alpha"] = exact_json(alphas.front());
        if (fixed_bits)
            j["fixed_bits"] = *fixed_bits;
        if (scheme == SimScheme::zf) {
            j["N"] = exact_json(Ns.front());
            j["N_fd"] = exact_json(N_fd);
        }
        j["snr_grid_db"] = snr_grid_db;
        j["trials"] = trials;
        j["seed"] = seed;
        break;
    case Command::design_table: {
        j["carrier_hz"] = carrier_hz;
        j["symbol_time_s"] = exact_json(symbol_time_s);
        j["N_fd"] = exact_json(N_fd);
        j["K_list"] = Ks;
        break;
    }
    case Command::verify: {
        j["checks"] = checks;
        if (trials_given)
            j["trials"] = trials;
        j["seed"] = seed;
        break;
    }
    }
    return j;
}

} // namespace stalecsi::cli

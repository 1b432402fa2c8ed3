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

#include "stalecsi_cli/commands.hpp"

#include "stalecsi/analysis.hpp"
#include "stalecsi/baselines.hpp"
#include "stalecsi/mat_scheme.hpp"
#include "stalecsi/planner.hpp"
#include "stalecsi/verify.hpp"

#include <optional>

namespace stalecsi::cli {

namespace {

constexpr long long kMaxRangeScan = 200000;

Decimal decimal(const Rational& x) {
    return {to_decimal_string(x), to_double(x)};
}

// Integers print bare, everything else as p/q.
std::string compact(const Rational& x) {
    if (denominator(x) == 1)
        return numerator(x).str();
    return to_fraction_string(x);
}

std::optional<long long> as_integer(const Rational& x) {
    if (denominator(x) != 1 || x > Rational(kMaxRangeScan * 1000) || x < 0)
        return std::nullopt;
    return numerator(x).convert_to<long long>();
}

void add_runs(std::vector<std::pair<long long, long long>>& runs, long long n) {
    if (!runs.empty() && runs.back().second == n - 1)
        runs.back().second = n;
    else
        runs.emplace_back(n, n);
}

// Winner among the values present; ties go to the earlier entry.
struct Pick {
    const char* name;
    bool tied;
};

Pick pick(const std::vector<std::pair<const char*, std::optional<Rational>>>& values) {
    const Rational* best = nullptr;
    const char* name = "";
    for (const auto& [n, v] : values)
        if (v && (!best || *v > *best)) {
            best = &*v;
            name = n;
        }
    int at_best = 0;
    for (const auto& [n, v] : values)
        at_best += v && best && *v == *best;
    return {name, at_best > 1};
}

std::vector<double> powers_of(const std::vector<double>& db) {
    std::vector<double> out;
    out.reserve(db.size());
    for (double d : db)
        out.push_back(analysis::db_to_linear(d));
    return out;
}

McOptions mc_options(const ExperimentConfig& cfg) {
    McOptions o;
    o.trials = cfg.trials;
    o.seed = cfg.seed;
    o.workers = cfg.workers;
    return o;
}

} // namespace

std::string format_runs(const std::vector<std::pair<long long, long long>>& runs) {
    if (runs.empty())
        return "none";
    std::string out;
    for (const auto& [a, b] : runs) {
        if (!out.empty())
            out += ',';
        out += a == b ? std::to_string(a) : std::to_string(a) + "-" + std::to_string(b);
    }
    return out;
}

CommandResult run_net_dof(const ExperimentConfig& cfg) {
    CommandResult res;
    auto& t = res.table;
    t.columns = {"K",           "N",           "N_fd",         "alpha",  "mat_net_dof", "mat_net_dof_exact",
                 "zf_net_dof", "zf_net_dof_exact", "siso_net_dof", "winner", "tied"};
    std::vector<std::pair<long long, long long>> strict_runs;
    std::vector<std::pair<long long, long long>> weak_runs;
    const bool single_alpha = cfg.alphas.size() == 1;

    for (const auto& N : cfg.Ns) {
        for (const auto& alpha : cfg.alphas) {
            const Rational mat = analysis::mat_net_dof(cfg.K, alpha, N);
            std::optional<Rational> zf;
            if (alpha > 0) {
                baselines::ZfConfig z;
                z.K = cfg.K;
                z.N = N;
                z.N_fd = cfg.N_fd;
                z.alpha = alpha;
                zf = baselines::zf_net_dof(z);
            }
            const Rational siso = baselines::siso_net_dof();
            const Pick p = pick({{"SISO", siso}, {"MAT", mat}, {"ZF", zf}});

            std::vector<Cell> row{static_cast<long long>(cfg.K), compact(N), compact(cfg.N_fd), compact(alpha),
                                  decimal(mat), to_fraction_string(mat)};
            if (zf) {
                row.emplace_back(decimal(*zf));
                row.emplace_back(to_fraction_string(*zf));
            } else {
                row.emplace_back(std::monostate{});
                row.emplace_back(std::monostate{});
            }
            row.emplace_back(decimal(siso));
            row.emplace_back(std::string(p.name));
            row.emplace_back(p.tied);
            t.rows.push_back(std::move(row));

            if (single_alpha) {
                if (const auto n = as_integer(N)) {
                    const bool beats_siso = mat > siso;
                    const bool beats_zf = !zf || mat > *zf;
                    if (beats_siso && beats_zf)
                        add_runs(strict_runs, *n);
                    if (mat >= siso && (!zf || mat >= *zf))
                        add_runs(weak_runs, *n);
                }
            }
        }
    }
    if (single_alpha) {
        t.summary["mat_strict_best_N"] = format_runs(strict_runs);
        t.summary["mat_weak_best_N"] = format_runs(weak_runs);
    }
    return res;
}

CommandResult run_simulate(const ExperimentConfig& cfg) {
    CommandResult res;
    auto& t = res.table;
    t.columns = {"scheme", "K", "alpha", "bits", "P_db", "rate", "stderr", "trials"};
    const auto powers = powers_of(cfg.snr_grid_db);
    const Rational alpha = cfg.alphas.front();
    const auto opts = mc_options(cfg);

    std::vector<analysis::RateSample> samples;
    std::vector<unsigned> bits;
    Rational predicted;
    std::string scheme;
    if (cfg.scheme == SimScheme::mat) {
        scheme = "MAT";
        mat::MatRateConfig m;
        m.K = cfg.K;
        m.alpha = to_double(alpha);
        m.fixed_bits = cfg.fixed_bits;
        samples = mat::mat_rate_curve(m, powers, opts);
        for (double P : powers)
            bits.push_back(mat::mat_feedback_bits(m, P));
        predicted = analysis::mat_dof(cfg.K, cfg.fixed_bits ? Rational(0) : alpha);
    } else {
        scheme = "ZF";
        baselines::ZfConfig z;
        z.K = cfg.K;
        z.N = cfg.Ns.front();
        z.N_fd = cfg.N_fd;
        z.alpha = alpha;
        samples = baselines::zf_rate_curve(z, powers, opts);
        for (double P : powers)
            bits.push_back(quantizer::bits_for_alpha(to_double(alpha), cfg.K, P));
        predicted = baselines::zf_dof(z);
    }

    for (std::size_t i = 0; i < samples.size(); ++i)
        t.rows.push_back({scheme, static_cast<long long>(cfg.K), compact(alpha), static_cast<long long>(bits[i]),
                          cfg.snr_grid_db[i], samples[i].rate, samples[i].std_error,
                          static_cast<long long>(samples[i].trials)});

    if (samples.size() >= 2) {
        const auto est = analysis::estimate_dof_slope(samples, 4);
        t.summary["slope"] = est.slope;
        t.summary["stderr"] = est.std_error;
        t.summary["points_used"] = est.points_used;
    }
    t.summary["predicted_dof"] = to_decimal_string(predicted);
    t.summary["predicted_dof_exact"] = to_fraction_string(predicted);
    t.summary["resampled_draws"] = samples.front().resampled;
    return res;
}

CommandResult run_regimes(const ExperimentConfig& cfg) {
    CommandResult res;
    auto& t = res.table;
    const auto report = planner::regime_boundaries(cfg.K, cfg.N_fd);
    if (cfg.Ns.empty()) {
        t.columns = {"K", "N_fd", "n_low", "n_low_exact", "n_high", "n_high_exact", "mat_regime"};
        t.rows.push_back({static_cast<long long>(cfg.K), compact(cfg.N_fd), decimal(report.n_low),
                          to_fraction_string(report.n_low), decimal(report.n_high), to_fraction_string(report.n_high),
                          report.mat_regime_exists()});
    } else {
        t.columns = {"K", "N", "N_fd", "winner", "tied", "siso_net_dof", "mat_net_dof", "zf_net_dof"};
        for (const auto& N : cfg.Ns) {
            const auto d = report.decide(N);
            t.rows.push_back({static_cast<long long>(cfg.K), compact(N), compact(cfg.N_fd),
                              std::string(planner::choice_name(d.winner)), d.tied, decimal(d.siso), decimal(d.mat),
                              decimal(d.zf)});
        }
    }
    t.summary["n_low"] = to_decimal_string(report.n_low);
    t.summary["n_low_exact"] = to_fraction_string(report.n_low);
    t.summary["n_high"] = to_decimal_string(report.n_high);
    t.summary["n_high_exact"] = to_fraction_string(report.n_high);
    const BigInt scan_end = floor(report.n_high) + 2;
    if (scan_end <= kMaxRangeScan) {
        const long long last = scan_end.convert_to<long long>();
        t.summary["mat_strict_best_N"] =
            format_runs(planner::strict_win_ranges(cfg.K, cfg.N_fd, planner::Choice::MAT, 1, last));
        t.summary["mat_weak_best_N"] =
            format_runs(planner::weak_win_ranges(cfg.K, cfg.N_fd, planner::Choice::MAT, 1, last));
    }
    return res;
}

CommandResult run_design_table(const ExperimentConfig& cfg) {
    CommandResult res;
    auto& t = res.table;
    t.columns = {"K",         "n_low",     "n_low_exact", "n_high",   "n_high_exact",
                 "tc_low_ms", "tc_high_ms", "v_low_kmh",  "v_high_kmh"};
    const auto rows = planner::design_table(cfg.carrier_hz, to_double(cfg.symbol_time_s), cfg.N_fd, cfg.Ks);
    for (const auto& r : rows)
        t.rows.push_back({static_cast<long long>(r.K), decimal(r.n_range.first), to_fraction_string(r.n_range.first),
                          decimal(r.n_range.second), to_fraction_string(r.n_range.second), r.coherence_time_ms.first,
                          r.coherence_time_ms.second, r.velocity_kmh.first, r.velocity_kmh.second});
    return res;
}

CommandResult run_verify(const ExperimentConfig& cfg) {
    CommandResult res;
    auto& t = res.table;
    t.columns = {"check", "trials", "failures", "skipped", "worst_violation", "tolerance", "status", "detail"};
    verify::SuiteOptions opts;
    opts.trials = cfg.trials_given ? cfg.trials : 0;
    opts.seed = cfg.seed;
    opts.workers = cfg.workers;
    const auto reports = verify::run_checks(cfg.checks, opts);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        failed += r.passed() ? 0 : 1;
        t.rows.push_back({r.name, static_cast<long long>(r.trials), static_cast<long long>(r.failures),
                          static_cast<long long>(r.skipped), r.worst_violation, r.tolerance,
                          std::string(r.passed() ? "pass" : "FAIL"), r.detail});
    }
    t.summary["checks"] = reports.size();
    t.summary["failed"] = failed;
    if (failed > 0)
        res.status = ExitCode::verification;
    return res;
}

CommandResult run_command(const ExperimentConfig& cfg) {
    switch (cfg.command) {
    case Command::net_dof:
        return run_net_dof(cfg);
    case Command::simulate:
        return run_simulate(cfg);
    case Command::regimes:
        return run_regimes(cfg);
    case Command::design_table:
        return run_design_table(cfg);
    case Command::verify:
        return run_verify(cfg);
    }
    throw UsageError("unknown command");
}

void emit(const ExperimentConfig& cfg, const CommandResult& result, std::ostream& os) {
    if (cfg.format == OutputFormat::json)
        write_json(os, result.table, cfg.to_json());
    else
        write_csv(os, result.table);
}

} // namespace stalecsi::cli

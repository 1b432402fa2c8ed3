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

#include "stalecsi/baselines.hpp"

#include "stalecsi/channel.hpp"
#include "stalecsi/errors.hpp"
#include "stalecsi/quantizer.hpp"
#include "stalecsi/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace stalecsi::baselines {

void ZfConfig::validate() const {
    if (K < 1)
        throw std::invalid_argument("ZfConfig: K must be at least 1");
    if (N < 1)
        throw std::invalid_argument("ZfConfig: N must be at least 1");
    if (N_fd < 0)
        throw std::invalid_argument("ZfConfig: N_fd must be nonnegative");
    if (alpha < 0)
        throw std::invalid_argument("ZfConfig: alpha must be nonnegative");
}

std::vector<std::vector<Complex>> zf_beamformers(std::span<const std::vector<Complex>> directions) {
    const std::size_t K = directions.size();
    if (K == 0)
        throw std::invalid_argument("zf_beamformers: no directions");
    ComplexMatrix e(K, K);
    for (std::size_t k = 0; k < K; ++k) {
        if (directions[k].size() != K)
            throw std::invalid_argument("zf_beamformers: need K directions of length K");
        for (std::size_t m = 0; m < K; ++m)
            e(k, m) = std::conj(directions[k][m]);
    }
    const ComplexMatrix inv = inverse(e);
    std::vector<std::vector<Complex>> out;
    out.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        const auto col = inv.col(k);
        if (!(norm(col) > 0.0))
            throw DegenerateDraw("zf_beamformers: zero beamformer");
        out.push_back(normalized(col));
    }
    return out;
}

std::vector<double> zf_sinr(const ComplexMatrix& h, std::span<const std::vector<Complex>> beamformers, double p) {
    const std::size_t K = h.cols();
    if (beamformers.size() != K)
        throw std::invalid_argument("zf_sinr: one beamformer per user required");
    std::vector<double> out(K);
    for (std::size_t k = 0; k < K; ++k) {
        const auto hk = h.col(k);
        double interference = 0.0;
        double desired = 0.0;
        for (std::size_t j = 0; j < K; ++j) {
            const double g = p * std::norm(inner(hk, beamformers[j]));
            if (j == k)
                desired = g;
            else
                interference += g;
        }
        out[k] = desired / (1.0 + interference);
    }
    return out;
}

namespace {

void validate_mc(const ZfConfig& cfg, std::span<const double> powers, const McOptions& opts) {
    cfg.validate();
    if (cfg.K < 2)
        throw std::invalid_argument("zf_rate_mc: K must be at least 2");
    if (!(cfg.N_fd < cfg.N))
        throw std::invalid_argument("zf_rate_mc: need N_fd < N for any service time");
    if (opts.trials < 1)
        throw std::invalid_argument("zf_rate_mc: need at least one trial");
    if (powers.empty())
        throw std::invalid_argument("zf_rate_mc: empty power grid");
    for (double p : powers)
        if (!(p > 1.0) || !std::isfinite(p))
            throw std::invalid_argument("zf_rate_mc: powers must be finite and greater than 1");
}

std::size_t zf_trial(const ZfConfig& cfg, double alpha, double service, std::span<const double> powers,
                     std::uint64_t seed, std::uint64_t trial, std::span<double> out) {
    const std::size_t K = cfg.K;
    for (std::uint64_t attempt = 0;; ++attempt) {
        channel::ChannelConfig ccfg;
        ccfg.num_users = K;
        ccfg.num_tx_antennas = K;
        ccfg.master_seed = attempt == 0 ? seed : Stream::derive(seed, "zf-resample", trial, attempt).key();
        const auto block = channel::sample_block(ccfg, trial);
        try {
            for (std::size_t p = 0; p < powers.size(); ++p) {
                const unsigned Q = quantizer::bits_for_alpha(alpha, K, powers[p]);
                auto qs = Stream::derive(seed, "zf-quant", trial, attempt);
                std::vector<std::vector<Complex>> dirs;
                dirs.reserve(K);
                for (std::size_t k = 0; k < K; ++k)
                    dirs.push_back(quantizer::synthesize_quantized_direction(block.user(k), Q, qs).direction);
                const auto w = zf_beamformers(dirs);
                double rate = 0.0;
                for (double s : zf_sinr(block.h, w, powers[p] / static_cast<double>(K)))
                    rate += std::log2(1.0 + s);
                out[p] = service * rate;
            }
            return attempt;
        } catch (const DegenerateDraw&) {
            if (attempt >= 64)
                throw;
        }
    }
}

} // namespace

std::vector<analysis::RateSample> zf_rate_curve(const ZfConfig& cfg, std::span<const double> powers,
                                                const McOptions& opts) {
    validate_mc(cfg, powers, opts);
    const double alpha = to_double(cfg.alpha);
    const double service = to_double(1 - cfg.N_fd / cfg.N);
    const std::size_t np = powers.size();
    std::vector<double> rates(opts.trials * np);
    std::vector<std::size_t> resampled(opts.trials, 0);

    run_indexed(opts.trials, opts.workers, [&](std::size_t t) {
        resampled[t] = zf_trial(cfg, alpha, service, powers, opts.seed, t,
                                std::span<double>(rates.data() + t * np, np));
    });

    std::size_t total_resampled = 0;
    for (auto r : resampled)
        total_resampled += r;
    const double n = static_cast<double>(opts.trials);
    std::vector<analysis::RateSample> out(np);
    for (std::size_t p = 0; p < np; ++p) {
        double sum = 0.0;
        for (std::size_t t = 0; t < opts.trials; ++t)
            sum += rates[t * np + p];
        const double mean = sum / n;
        double ss = 0.0;
        for (std::size_t t = 0; t < opts.trials; ++t) {
            const double d = rates[t * np + p] - mean;
            ss += d * d;
        }
        out[p] = {powers[p], mean, opts.trials > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0, opts.trials,
                  total_resampled};
        if (!std::isfinite(mean))
            throw NumericalFailure("zf_rate_mc: non-finite average rate");
    }
    return out;
}

analysis::RateSample zf_rate_mc(const ZfConfig& cfg, double P, const McOptions& opts) {
    const double powers[] = {P};
    return zf_rate_curve(cfg, powers, opts).front();
}

Rational zf_dof(const ZfConfig& cfg) {
    cfg.validate();
    const Rational k(static_cast<long long>(cfg.K));
    return (1 - cfg.N_fd / cfg.N) * min(cfg.alpha, Rational(1)) * k;
}

Rational zf_overhead(const ZfConfig& cfg) {
    cfg.validate();
    const Rational k(static_cast<long long>(cfg.K));
    return cfg.alpha * k * (k - 1) / cfg.N;
}

Rational zf_net_dof(const ZfConfig& cfg) {
    if (cfg.N < 1)
        throw std::domain_error("zf_net_dof: N must be at least 1");
    cfg.validate();
    if (!(cfg.alpha > 0))
        throw std::domain_error("zf_net_dof: alpha must be positive");
    const Rational k(static_cast<long long>(cfg.K));
    return k * (1 - (min(cfg.alpha, Rational(1)) * cfg.N_fd + (k - 1) * cfg.alpha) / cfg.N);
}

Rational zf_max_net_dof(std::size_t K, const Rational& N, const Rational& N_fd) {
    ZfConfig cfg;
    cfg.K = K;
    cfg.N = N;
    cfg.N_fd = N_fd;
    cfg.alpha = 1;
    return zf_net_dof(cfg);
}

analysis::NetDofReport zf_report(const ZfConfig& cfg) {
    analysis::NetDofReport r;
    r.scheme = analysis::Scheme::ZF;
    r.alpha = cfg.alpha;
    r.dof = zf_dof(cfg);
    r.overhead = zf_overhead(cfg);
    r.net = r.dof - r.overhead;
    return r;
}

analysis::NetDofReport siso_report() {
    analysis::NetDofReport r;
    r.scheme = analysis::Scheme::SISO;
    r.dof = 1;
    r.overhead = 0;
    r.net = 1;
    r.alpha = 0;
    return r;
}

} // namespace stalecsi::baselines

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

#include "stalecsi/verify.hpp"

#include "stalecsi/channel.hpp"
#include "stalecsi/errors.hpp"
#include "stalecsi/mat_scheme.hpp"
#include "stalecsi/numerics.hpp"
#include "stalecsi/parallel.hpp"
#include "stalecsi/quantizer.hpp"
#include "stalecsi/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace stalecsi::verify {

namespace {

void record(CheckReport& r, double violation) {
    r.worst_violation = std::max(r.worst_violation, violation);
    if (!(violation <= r.tolerance))
        ++r.failures;
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Stream& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.complex_normal();
    return m;
}

std::size_t uniform_index(Stream& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next_u64() % (hi - lo + 1));
}

// sin^2(t/2) from sin^2 t for t in [0, pi/2], without cancellation.
double half_angle_sin2(double sin2) {
    const double cos_t = std::sqrt(1.0 - sin2);
    return sin2 / (2.0 * (1.0 + cos_t));
}

} // namespace

CheckReport check_sigma2_closed_form(std::size_t trials, std::uint64_t seed) {
    CheckReport r{"sigma2", trials, 0, 0, 0.0, 1e-10, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = Stream::derive(seed, "verify-sigma2", i);
        const auto h = channel::gaussian_vector(2, rng);
        const double theta = rng.uniform() * std::numbers::pi / 2.0;
        const auto unit = normalized(h);
        const auto perp = quantizer::orthogonal_direction(h, rng);
        const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        std::vector<Complex> e(2);
        for (std::size_t k = 0; k < 2; ++k)
            e[k] = phase * (std::cos(theta) * unit[k] + std::sin(theta) * perp[k]);

        ComplexMatrix m(2, 2);
        for (std::size_t k = 0; k < 2; ++k) {
            m(0, k) = std::conj(unit[k]);
            m(1, k) = std::conj(e[k]);
        }
        const double sigma2 = singular_values(m)[1];
        record(r, std::abs(sigma2 - std::sqrt(2.0) * std::sin(theta / 2.0)));
    }
    return r;
}

CheckReport check_weyl(std::size_t trials, std::uint64_t seed) {
    CheckReport r{"weyl", trials, 0, 0, 0.0, 1e-12, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = Stream::derive(seed, "verify-weyl", i);
        ComplexMatrix clean;
        ComplexMatrix noisy;
        if (i % 4 == 3) {
            const std::size_t rank = mat::structural_dims(3).T - mat::structural_dims(3).D;
            std::vector<double> sin2(rank);
            for (auto& s : sin2)
                s = quantizer::sample_min_beta_sin2(3, static_cast<unsigned>(uniform_index(rng, 2, 30)), rng);
            const auto sys = mat::synth_system_general(3, sin2, rng);
            clean = sys.error_free_interference;
            noisy = sys.interference;
        } else {
            const std::size_t rows = uniform_index(rng, 1, 8);
            const std::size_t cols = uniform_index(rng, 1, 8);
            const std::size_t rank = uniform_index(rng, 1, std::min(rows, cols));
            clean = gaussian_matrix(rows, rank, rng) * gaussian_matrix(rank, cols, rng);
            const double scale = std::exp2(-static_cast<double>(uniform_index(rng, 0, 40)));
            noisy = clean + Complex(scale) * gaussian_matrix(rows, cols, rng);
        }
        const double e_norm = frobenius_norm(noisy - clean);
        const auto s_clean = singular_values(clean);
        const auto s_noisy = singular_values(noisy);
        const double slack = std::max(1.0, frobenius_norm(clean));
        double excess = 0.0;
        for (std::size_t k = 0; k < s_clean.size(); ++k)
            excess = std::max(excess, (std::abs(s_noisy[k] - s_clean[k]) - e_norm) / slack);
        record(r, std::max(excess, 0.0));
    }
    return r;
}

CheckReport check_neg_second_moment(std::size_t trials, std::size_t n_max, std::uint64_t seed) {
    if (n_max < 2)
        throw std::invalid_argument("check_neg_second_moment: n_max must be at least 2");
    CheckReport r{"neg-second-moment", trials, 0, 0, 0.0, 1e-8, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = Stream::derive(seed, "verify-nsm", i);
        const std::size_t n = uniform_index(rng, 2, n_max);
        const ComplexMatrix a = gaussian_matrix(n, n, rng);
        const auto s = singular_values(a);
        if (!(s.back() > 0.0) || s.front() / s.back() > 1e8) {
            ++r.skipped;
            continue;
        }
        double lhs = 0.0;
        for (double v : s)
            lhs += 1.0 / (v * v);
        double rhs = 0.0;
        for (std::size_t row = 0; row < n; ++row) {
            const double d = row_subspace_distance(a, row);
            rhs += 1.0 / (d * d);
        }
        record(r, std::abs(lhs - rhs) / lhs);
    }
    if (r.skipped > 0)
        r.detail = std::to_string(r.skipped) + " ill-conditioned draws skipped";
    return r;
}

CheckReport check_interference_power(std::size_t trials, const std::vector<double>& powers, std::uint64_t seed) {
    if (powers.empty())
        throw std::invalid_argument("check_interference_power: empty power grid");
    CheckReport r{"interference-power", trials, 0, 0, 0.0, 1e-9, {}};
    channel::ChannelConfig ccfg;
    ccfg.num_users = 2;
    ccfg.num_tx_antennas = 2;
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = Stream::derive(seed, "verify-ipower", i);
        ccfg.master_seed = Stream::derive(seed, "verify-ipower-blocks", i).key();
        std::array<channel::ChannelBlock, 3> blocks{channel::sample_block(ccfg, 0), channel::sample_block(ccfg, 1),
                                                    channel::sample_block(ccfg, 2)};
        const unsigned Q = static_cast<unsigned>(uniform_index(rng, 2, 20));
        auto fb_B = quantizer::synthesize_quantized_direction(blocks[0].user(1), Q, rng);
        auto fb_A = quantizer::synthesize_quantized_direction(blocks[1].user(0), Q, rng);
        const double half_A = half_angle_sin2(fb_A.sin2_theta);
        const double half_B = half_angle_sin2(fb_B.sin2_theta);
        const auto round = mat::make_mat2_round(blocks, std::move(fb_B), std::move(fb_A));
        for (auto rx : {mat::Receiver::A, mat::Receiver::B}) {
            mat::LinearSystem sys;
            try {
                sys = mat::assemble_system_2user(round, rx);
            } catch (const DegenerateDraw&) {
                ++r.skipped;
                continue;
            }
            const ComplexMatrix ui = mat::zf_combiner(sys).adjoint() * sys.interference;
            const double half = rx == mat::Receiver::A ? half_A : half_B;
            for (double P : powers) {
                const double through_combiner = logdet_ipaa(P / 2.0, ui);
                const double closed_form = std::log2(1.0 + P * half);
                record(r, std::abs(std::expm1((through_combiner - closed_form) * std::numbers::ln2)));
            }
        }
    }
    return r;
}

CheckReport check_quantization_bounds(const std::vector<std::size_t>& Ms, const std::vector<unsigned>& Qs,
                                      std::size_t trials, std::uint64_t seed) {
    if (Ms.empty() || Qs.size() < 2)
        throw std::invalid_argument("check_quantization_bounds: need at least one M and two Q values");
    CheckReport r{"quantization-bounds", trials, 0, 0, 0.0, 0.0, {}};
    constexpr std::size_t kRefresh = 50;
    const double inflation = 1.0 + 3.0 / std::sqrt(static_cast<double>(trials));
    std::ostringstream detail;
    double worst_bound = 0.0;
    double worst_slope = 0.0;
    for (std::size_t M : Ms) {
        std::vector<double> xs;
        std::vector<double> ys;
        for (unsigned Q : Qs) {
            double sum = 0.0;
            quantizer::Codebook cb;
            for (std::size_t t = 0; t < trials; ++t) {
                if (t % kRefresh == 0) {
                    auto cb_rng = Stream::derive(seed, "verify-rvq-codebook", M * 1000 + Q, t / kRefresh);
                    cb = quantizer::build_random_codebook(M, Q, cb_rng);
                }
                auto rng = Stream::derive(seed, "verify-rvq-channel", M * 1000 + Q, t);
                sum += quantizer::quantize(channel::gaussian_vector(M, rng), cb).sin2_theta;
            }
            const double mean = sum / static_cast<double>(trials);
            const double upper = quantizer::optimal_error_bounds(M, Q).second * inflation;
            const double excess = std::max(0.0, mean / upper - 1.0);
            worst_bound = std::max(worst_bound, excess);
            if (excess > 0.0)
                ++r.failures;
            xs.push_back(static_cast<double>(Q));
            ys.push_back(std::log2(mean));
        }
        const double n = static_cast<double>(xs.size());
        double mx = 0.0;
        double my = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            mx += xs[k] / n;
            my += ys[k] / n;
        }
        double sxx = 0.0;
        double sxy = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            sxx += (xs[k] - mx) * (xs[k] - mx);
            sxy += (xs[k] - mx) * (ys[k] - my);
        }
        const double slope = sxy / sxx;
        const double expected = -1.0 / static_cast<double>(M - 1);
        const double rel = std::abs(slope / expected - 1.0);
        worst_slope = std::max(worst_slope, rel);
        if (rel > 0.15)
            ++r.failures;
        detail << "M=" << M << " slope=" << slope << " expected=" << expected << "; ";
    }
    r.worst_violation = std::max(worst_bound, worst_slope);
    r.tolerance = 0.15;
    r.detail = detail.str() + "worst bound excess=" + std::to_string(worst_bound);
    return r;
}

CheckReport check_sigma_sandwich(const std::vector<std::size_t>& Ks, std::size_t trials, std::uint64_t seed) {
    if (Ks.empty())
        throw std::invalid_argument("check_sigma_sandwich: need at least one K");
    CheckReport r{"sigma-sandwich", trials, 0, 0, 0.0, 1e-12, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = Stream::derive(seed, "verify-sandwich", i);
        const std::size_t K = Ks[i % Ks.size()];
        const auto dims = mat::structural_dims(K);
        const std::size_t T = dims.T;
        const std::size_t D = dims.D;
        const std::size_t lifted = (K - 1) * D / K;
        const double m = static_cast<double>(T - D / K);
        std::vector<double> sin2(T - D);
        for (auto& s : sin2)
            s = quantizer::sample_min_beta_sin2(K, static_cast<unsigned>(uniform_index(rng, 4, 40)), rng);
        const auto sys = mat::synth_system_general(K, sin2, rng);
        const auto s = singular_values(sys.interference);

        double max_half = 0.0;
        double min_sin2 = 1.0;
        for (std::size_t j = 0; j < lifted; ++j) {
            max_half = std::max(max_half, half_angle_sin2(sin2[j]));
            min_sin2 = std::min(min_sin2, sin2[j]);
        }
        const double upper = 4.0 * m * max_half;
        const double lower = 4.0 * min_sin2 / m;
        double violation = 0.0;
        for (std::size_t k = T - D; k < T - D + lifted; ++k)
            violation = std::max(violation, (s[k] * s[k] - upper) / upper);
        const double last = s[T - D + lifted - 1];
        violation = std::max(violation, (lower - last * last) / lower);
        record(r, std::max(violation, 0.0));
    }
    return r;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"sigma2",           "weyl", "neg-second-moment", "interference-power",
                                                "quantization-bounds", "sigma-sandwich"};
    return names;
}

std::size_t default_trials(std::string_view name) {
    if (name == "sigma2" || name == "weyl")
        return 10000;
    if (name == "neg-second-moment" || name == "interference-power" || name == "quantization-bounds")
        return 2000;
    if (name == "sigma-sandwich")
        return 10000;
    throw std::invalid_argument("unknown check: " + std::string(name));
}

CheckReport run_check(std::string_view name, const SuiteOptions& opts) {
    const std::size_t trials = opts.trials > 0 ? opts.trials : default_trials(name);
    if (name == "sigma2")
        return check_sigma2_closed_form(trials, opts.seed);
    if (name == "weyl")
        return check_weyl(trials, opts.seed);
    if (name == "neg-second-moment")
        return check_neg_second_moment(trials, 12, opts.seed);
    if (name == "interference-power")
        return check_interference_power(trials, {1e2, 1e5, 1e8}, opts.seed);
    if (name == "quantization-bounds")
        return check_quantization_bounds({2, 4}, {4, 6, 8, 10, 12, 14}, trials, opts.seed);
    if (name == "sigma-sandwich")
        return check_sigma_sandwich({3, 4}, trials, opts.seed);
    throw std::invalid_argument("unknown check: " + std::string(name));
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const SuiteOptions& opts) {
    const auto& selected = names.empty() ? check_names() : names;
    for (const auto& n : selected)
        (void)default_trials(n);
    std::vector<CheckReport> out(selected.size());
    run_indexed(selected.size(), opts.workers, [&](std::size_t i) { out[i] = run_check(selected[i], opts); });
    return out;
}

} // namespace stalecsi::verify

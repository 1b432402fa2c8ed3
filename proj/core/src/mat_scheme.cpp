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

#include "stalecsi/mat_scheme.hpp"

#include "stalecsi/errors.hpp"

#include <boost/integer/common_factor.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace stalecsi::mat {

namespace {

constexpr double kDegenerateGain = 1e-12;

std::size_t to_count(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<std::uint32_t>::max()))
        throw CapacityError("MAT dimensions exceed 32 bits");
    return v.convert_to<std::size_t>();
}

void require_unit(const quantizer::QuantizedCsi& q, const char* what) {
    if (q.direction.size() != 2)
        throw std::invalid_argument(std::string("make_mat2_round: ") + what + " must have 2 entries");
    if (std::abs(norm(q.direction) - 1.0) > 1e-9)
        throw std::invalid_argument(std::string("make_mat2_round: ") + what + " is not unit norm");
}

std::vector<Complex> conj_scaled(std::span<const Complex> v, Complex scale) {
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = scale * std::conj(v[i]);
    return out;
}

// h^H x for length-2 vectors.
Complex apply_row(std::span<const Complex> h, const std::array<Complex, 2>& x) {
    return std::conj(h[0]) * x[0] + std::conj(h[1]) * x[1];
}

struct ReceiverView {
    std::size_t user;      // column in each block
    std::size_t own_block; // block carrying the receiver's own symbols
    std::size_t other_block;
};

ReceiverView view_of(Receiver r) {
    return r == Receiver::A ? ReceiverView{0, 0, 1} : ReceiverView{1, 1, 0};
}

Complex block2_phase(const MatRound2User& round, std::size_t user) {
    const Complex h1 = round.blocks[2].h(0, user);
    const double mag = std::abs(h1);
    if (!(mag >= kDegenerateGain))
        throw DegenerateDraw("assemble_system_2user: vanishing gain on antenna 1 in block 3");
    return std::conj(h1) / mag;
}

} // namespace

MatDims mat_dims(std::size_t K) {
    if (K < 2)
        throw std::domain_error("mat_dims: K must be at least 2");
    MatDims d;
    d.K = K;
    d.harmonic = harmonic(K);
    d.T = to_count(numerator(d.harmonic));
    d.D = to_count(denominator(d.harmonic));
    return d;
}

MatDims structural_dims(std::size_t K) {
    MatDims d = mat_dims(K);
    const std::size_t scale = K / boost::integer::gcd(K, d.D);
    d.T *= scale;
    d.D *= scale;
    return d;
}

MatRound2User make_mat2_round(std::array<channel::ChannelBlock, 3> blocks, quantizer::QuantizedCsi fb_B,
                              quantizer::QuantizedCsi fb_A) {
    for (const auto& b : blocks)
        if (b.h.rows() != 2 || b.h.cols() != 2)
            throw std::invalid_argument("make_mat2_round: blocks must be 2 x 2");
    require_unit(fb_B, "fb_B");
    require_unit(fb_A, "fb_A");
    return {std::move(blocks), std::move(fb_B), std::move(fb_A)};
}

LinearSystem assemble_system_2user(const MatRound2User& round, Receiver receiver) {
    const auto v = view_of(receiver);
    const Complex phi = block2_phase(round, v.user);
    const auto& own_fb = receiver == Receiver::A ? round.fb_A : round.fb_B;
    const auto& other_fb = receiver == Receiver::A ? round.fb_B : round.fb_A;

    const auto h_own = round.blocks[v.own_block].user(v.user);
    const auto h_other = round.blocks[v.other_block].user(v.user);
    const double g_other = norm(h_other);
    if (!(g_other > 0.0))
        throw DegenerateDraw("assemble_system_2user: zero channel vector");

    LinearSystem s;
    s.T = 3;
    s.D = 2;
    s.K = 2;
    s.signal = ComplexMatrix(3, 2);
    s.interference = ComplexMatrix(3, 2);
    s.signal.set_row(v.own_block, conj_scaled(h_own, 1.0));
    s.signal.set_row(2, conj_scaled(other_fb.direction, phi));
    s.interference.set_row(v.other_block, conj_scaled(h_other, 1.0 / g_other));
    s.interference.set_row(2, conj_scaled(own_fb.direction, phi));

    s.error_free_interference = s.interference;
    s.error_free_interference.set_row(2, conj_scaled(normalized(h_other), phi));
    return s;
}

Mat2Symbols draw_mat2_symbols(double P, Stream& rng) {
    if (!(P > 0.0))
        throw std::invalid_argument("draw_mat2_symbols: power must be positive");
    const double amp = std::sqrt(P / 2.0);
    Mat2Symbols s;
    for (auto& z : s.a)
        z = amp * rng.complex_normal();
    for (auto& z : s.b)
        z = amp * rng.complex_normal();
    return s;
}

Mat2Received run_mat2_round(const MatRound2User& round, const Mat2Symbols& symbols, Stream& rng,
                            double noise_variance) {
    if (!(noise_variance >= 0.0))
        throw std::invalid_argument("run_mat2_round: noise variance must be nonnegative");
    const double sigma = std::sqrt(noise_variance);
    const Complex combo = apply_row(round.fb_B.direction, symbols.a) + apply_row(round.fb_A.direction, symbols.b);
    const std::array<std::array<Complex, 2>, 3> x{symbols.a, symbols.b, std::array<Complex, 2>{combo, 0.0}};

    Mat2Received out;
    for (std::size_t t = 0; t < 3; ++t) {
        const auto h_a = round.blocks[t].user(0);
        const auto h_b = round.blocks[t].user(1);
        out.y_a[t] = apply_row(h_a, x[t]);
        out.y_b[t] = apply_row(h_b, x[t]);
    }
    if (sigma > 0.0) {
        for (auto& y : out.y_a)
            y += sigma * channel::noise_sample(rng);
        for (auto& y : out.y_b)
            y += sigma * channel::noise_sample(rng);
    }
    return out;
}

std::array<Complex, 3> normalize_received(const MatRound2User& round, Receiver receiver,
                                          const std::array<Complex, 3>& y) {
    const auto v = view_of(receiver);
    const double g_other = norm(round.blocks[v.other_block].user(v.user));
    const double g3 = std::abs(round.blocks[2].h(0, v.user));
    if (!(g_other > 0.0) || !(g3 >= kDegenerateGain))
        throw DegenerateDraw("normalize_received: vanishing channel gain");
    auto out = y;
    out[v.other_block] /= g_other;
    out[2] /= g3;
    return out;
}

LinearSystem synth_system_general(std::size_t K, std::span<const double> sin2, Stream& rng) {
    const MatDims dims = structural_dims(K);
    const std::size_t T = dims.T;
    const std::size_t D = dims.D;
    const std::size_t rank = T - D;
    const std::size_t zero_rows = D / K;
    const std::size_t error_rows = (K - 1) * D / K;
    const std::size_t width = (K - 1) * D;
    if (sin2.size() != rank)
        throw std::invalid_argument("synth_system_general: expected T - D = " + std::to_string(rank) +
                                    " sin^2 values, got " + std::to_string(sin2.size()));
    for (double s : sin2)
        if (!(s >= 0.0 && s <= 1.0))
            throw std::invalid_argument("synth_system_general: sin^2 values must lie in [0, 1]");

    const ComplexMatrix frame = channel::random_orthonormal_frame(width, rank + error_rows, rng);

    LinearSystem sys;
    sys.T = T;
    sys.D = D;
    sys.K = K;
    sys.error_free_interference = ComplexMatrix(T, width);
    for (std::size_t j = 0; j < rank; ++j)
        sys.error_free_interference.set_row(zero_rows + j, frame.col(j));
    sys.interference = sys.error_free_interference;
    for (std::size_t j = 0; j < error_rows; ++j) {
        const std::size_t row = zero_rows + rank + j;
        const double s = std::sqrt(sin2[j]);
        const double c = std::sqrt(1.0 - sin2[j]);
        std::vector<Complex> exact(width);
        std::vector<Complex> perturbed(width);
        for (std::size_t i = 0; i < width; ++i) {
            exact[i] = frame(i, j);
            perturbed[i] = c * frame(i, j) + s * frame(i, rank + j);
        }
        sys.error_free_interference.set_row(row, exact);
        sys.interference.set_row(row, perturbed);
    }

    sys.signal = ComplexMatrix(T, D);
    for (std::size_t r = 0; r < T; ++r)
        for (std::size_t c = 0; c < D; ++c)
            sys.signal(r, c) = rng.complex_normal();
    return sys;
}

ComplexMatrix zf_combiner(const LinearSystem& system) {
    const auto& I = system.interference;
    if (I.rows() != system.T || system.D == 0 || system.D > system.T)
        throw std::invalid_argument("zf_combiner: inconsistent system dimensions");
    const RightBasis basis = right_singular_basis(I.adjoint());
    return basis.vectors.columns(system.T - system.D, system.D);
}

double user_rate(const LinearSystem& system, double P) {
    if (!(P > 0.0))
        throw std::invalid_argument("user_rate: power must be positive");
    const ComplexMatrix u = zf_combiner(system).adjoint();
    const ComplexMatrix us = u * system.signal;
    const ComplexMatrix ui = u * system.interference;
    const double scale = P / static_cast<double>(system.K);
    const double total = logdet_ipaa(scale, hstack(us, ui));
    const double interference = logdet_ipaa(scale, ui);
    return (total - interference) / static_cast<double>(system.T);
}

unsigned mat_feedback_bits(const MatRateConfig& cfg, double P) {
    if (cfg.fixed_bits) {
        if (*cfg.fixed_bits < 1)
            throw std::invalid_argument("mat_feedback_bits: fixed bit count must be at least 1");
        return *cfg.fixed_bits;
    }
    return quantizer::bits_for_alpha(cfg.alpha, cfg.K, P);
}

namespace {

void validate(const MatRateConfig& cfg, std::span<const double> powers, const McOptions& opts) {
    if (cfg.K < 2)
        throw std::invalid_argument("mat_rate_mc: K must be at least 2");
    if (!(cfg.alpha >= 0.0))
        throw std::invalid_argument("mat_rate_mc: alpha must be nonnegative");
    if (!(cfg.error_scale >= 0.0))
        throw std::invalid_argument("mat_rate_mc: error_scale must be nonnegative");
    if (opts.trials < 1)
        throw std::invalid_argument("mat_rate_mc: need at least one trial");
    if (powers.empty())
        throw std::invalid_argument("mat_rate_mc: empty power grid");
    for (double p : powers)
        if (!(p > 1.0) || !std::isfinite(p))
            throw std::invalid_argument("mat_rate_mc: powers must be finite and greater than 1");
}

// Sum rate of one two-user trial at every power; returns the number of resamples.
std::size_t trial_2user(const MatRateConfig& cfg, std::span<const double> powers, std::uint64_t seed,
                        std::uint64_t trial, std::span<double> out) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        channel::ChannelConfig ccfg;
        ccfg.num_users = 2;
        ccfg.num_tx_antennas = 2;
        ccfg.master_seed = attempt == 0 ? seed : Stream::derive(seed, "mat2-resample", trial, attempt).key();
        std::array<channel::ChannelBlock, 3> blocks{channel::sample_block(ccfg, 3 * trial),
                                                    channel::sample_block(ccfg, 3 * trial + 1),
                                                    channel::sample_block(ccfg, 3 * trial + 2)};
        try {
            for (std::size_t p = 0; p < powers.size(); ++p) {
                const unsigned Q = mat_feedback_bits(cfg, powers[p]);
                auto qs = Stream::derive(seed, "mat2-quant", trial, attempt);
                auto fb_B = quantizer::synthesize_quantized_direction(blocks[0].user(1), Q, qs, cfg.error_scale);
                auto fb_A = quantizer::synthesize_quantized_direction(blocks[1].user(0), Q, qs, cfg.error_scale);
                const auto round = make_mat2_round(blocks, std::move(fb_B), std::move(fb_A));
                out[p] = user_rate(assemble_system_2user(round, Receiver::A), powers[p]) +
                         user_rate(assemble_system_2user(round, Receiver::B), powers[p]);
            }
            return attempt;
        } catch (const DegenerateDraw&) {
            if (attempt >= 64)
                throw;
        }
    }
}

void trial_general(const MatRateConfig& cfg, std::span<const double> powers, std::uint64_t seed,
                   std::uint64_t trial, std::span<double> out) {
    const MatDims dims = structural_dims(cfg.K);
    const std::size_t rank = dims.T - dims.D;
    std::vector<double> sin2(rank);
    for (std::size_t p = 0; p < powers.size(); ++p)
        out[p] = 0.0;
    for (std::size_t k = 0; k < cfg.K; ++k) {
        const auto frame_key = Stream::derive(seed, "matK-user", trial, k).key();
        const auto quant_key = Stream::derive(seed, "matK-quant", trial, k).key();
        for (std::size_t p = 0; p < powers.size(); ++p) {
            const unsigned Q = mat_feedback_bits(cfg, powers[p]);
            Stream qs(quant_key);
            for (auto& s : sin2)
                s = std::min(1.0, cfg.error_scale * quantizer::sample_min_beta_sin2(cfg.K, Q, qs));
            Stream fs(frame_key);
            out[p] += user_rate(synth_system_general(cfg.K, sin2, fs), powers[p]);
        }
    }
}

} // namespace

std::vector<analysis::RateSample> mat_rate_curve(const MatRateConfig& cfg, std::span<const double> powers,
                                                 const McOptions& opts) {
    validate(cfg, powers, opts);
    const std::size_t np = powers.size();
    std::vector<double> rates(opts.trials * np);
    std::vector<std::size_t> resampled(opts.trials, 0);

    run_indexed(opts.trials, opts.workers, [&](std::size_t t) {
        std::span<double> slot(rates.data() + t * np, np);
        if (cfg.K == 2)
            resampled[t] = trial_2user(cfg, powers, opts.seed, t, slot);
        else
            trial_general(cfg, powers, opts.seed, t, slot);
    });

    std::size_t total_resampled = 0;
    for (auto r : resampled)
        total_resampled += r;

    std::vector<analysis::RateSample> out(np);
    const double n = static_cast<double>(opts.trials);
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
        auto& s = out[p];
        s.power = powers[p];
        s.rate = mean;
        s.std_error = opts.trials > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
        s.trials = opts.trials;
        s.resampled = total_resampled;
        if (!std::isfinite(s.rate))
            throw NumericalFailure("mat_rate_mc: non-finite average rate");
    }
    return out;
}

analysis::RateSample mat_rate_mc(const MatRateConfig& cfg, double P, const McOptions& opts) {
    const double powers[] = {P};
    return mat_rate_curve(cfg, powers, opts).front();
}

} // namespace stalecsi::mat

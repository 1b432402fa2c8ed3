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

#include "stalecsi/quantizer.hpp"

#include "stalecsi/channel.hpp"
#include "stalecsi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stalecsi::quantizer {

Codebook build_random_codebook(std::size_t M, unsigned Q, Stream& rng) {
    if (M < 1)
        throw std::invalid_argument("build_random_codebook: dimension must be positive");
    if (Q > kMaxExplicitBits)
        throw CapacityError("build_random_codebook: " + std::to_string(Q) +
                            " bits exceeds the explicit cap of " + std::to_string(kMaxExplicitBits) +
                            "; use synthesize_quantized_direction for large codebooks");
    Codebook cb{M, Q, {}};
    const std::size_t size = std::size_t{1} << Q;
    cb.vectors.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        auto g = channel::gaussian_vector(M, rng);
        while (!(norm(g) > 0.0))
            g = channel::gaussian_vector(M, rng);
        cb.vectors.push_back(normalized(g));
    }
    return cb;
}

QuantizedCsi quantize(std::span<const Complex> h, const Codebook& cb) {
    if (h.size() != cb.dimension)
        throw std::invalid_argument("quantize: channel and codebook dimensions differ");
    if (cb.vectors.empty())
        throw std::invalid_argument("quantize: empty codebook");
    const auto unit = normalized(h);

    std::size_t best = 0;
    double best_gain = -1.0;
    for (std::size_t i = 0; i < cb.vectors.size(); ++i) {
        const double gain = std::norm(inner(unit, cb.vectors[i]));
        if (gain > best_gain) {
            best_gain = gain;
            best = i;
        }
    }

    const auto& w = cb.vectors[best];
    const Complex proj = inner(unit, w);
    // sin^2 from the residual w - <unit, w> unit keeps precision at small angles.
    double sin2 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        sin2 += std::norm(w[i] - proj * unit[i]);
    sin2 = std::clamp(sin2, 0.0, 1.0);

    QuantizedCsi out;
    out.direction = w;
    if (std::abs(proj) > 0.0) {
        const Complex unphase = std::conj(proj) / std::abs(proj);
        for (auto& z : out.direction)
            z *= unphase;
    }
    out.sin2_theta = sin2;
    out.bits = cb.bits;
    out.source = CsiSource::explicit_codebook;
    out.index = best;
    return out;
}

QuantizedCsi exact_direction(std::span<const Complex> h) {
    QuantizedCsi out;
    out.direction = normalized(h);
    out.source = CsiSource::statistical_model;
    return out;
}

double sample_min_beta_sin2(std::size_t M, unsigned Q, Stream& rng) {
    if (M < 2)
        throw std::domain_error("sample_min_beta_sin2: direction quantization needs M >= 2");
    const double u = rng.uniform_open();
    const double tail = -std::expm1(std::ldexp(std::log(u), -static_cast<int>(Q)));
    if (M == 2)
        return tail;
    return std::pow(tail, 1.0 / static_cast<double>(M - 1));
}

std::vector<Complex> orthogonal_direction(std::span<const Complex> h, Stream& rng) {
    if (h.size() < 2)
        throw std::domain_error("orthogonal_direction: complement is empty for M < 2");
    const auto unit = normalized(h);
    for (;;) {
        auto g = channel::gaussian_vector(h.size(), rng);
        for (int pass = 0; pass < 2; ++pass) {
            const Complex proj = inner(unit, g);
            for (std::size_t i = 0; i < g.size(); ++i)
                g[i] -= proj * unit[i];
        }
        if (norm(g) > 1e-8)
            return normalized(g);
    }
}

QuantizedCsi synthesize_quantized_direction(std::span<const Complex> h, unsigned Q, Stream& rng,
                                            double error_scale) {
    if (Q < 1)
        throw std::invalid_argument("synthesize_quantized_direction: need at least one bit");
    if (!(error_scale >= 0.0))
        throw std::invalid_argument("synthesize_quantized_direction: error_scale must be nonnegative");
    const auto unit = normalized(h);
    const double sin2 = std::min(1.0, error_scale * sample_min_beta_sin2(h.size(), Q, rng));
    const auto perp = orthogonal_direction(h, rng);
    const double s = std::sqrt(sin2);
    const double c = std::sqrt(1.0 - sin2);

    QuantizedCsi out;
    out.direction.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        out.direction[i] = c * unit[i] + s * perp[i];
    out.sin2_theta = sin2;
    out.bits = Q;
    out.source = CsiSource::statistical_model;
    return out;
}

std::pair<double, double> optimal_error_bounds(std::size_t M, unsigned Q) {
    if (M < 2)
        throw std::domain_error("optimal_error_bounds: quantizing a scalar direction is degenerate (M < 2)");
    const double m = static_cast<double>(M);
    const double upper = std::exp2(-static_cast<double>(Q) / (m - 1.0));
    return {(m - 1.0) / m * upper, upper};
}

unsigned bits_for_alpha(double alpha, std::size_t K, double P) {
    if (!(alpha >= 0.0))
        throw std::domain_error("bits_for_alpha: alpha must be nonnegative");
    if (!(P > 0.0))
        throw std::invalid_argument("bits_for_alpha: power must be positive");
    const double q = std::round(alpha * static_cast<double>(K > 0 ? K - 1 : 0) * std::log2(P));
    return q < 1.0 ? 1u : static_cast<unsigned>(q);
}

} // namespace stalecsi::quantizer

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

#include "stalecsi/numerics.hpp"
#include "stalecsi/rng.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace stalecsi::quantizer {

// Largest codebook we are willing to enumerate (2^20 codewords).
inline constexpr unsigned kMaxExplicitBits = 20;

struct Codebook {
    std::size_t dimension = 0;
    unsigned bits = 0;
    std::vector<std::vector<Complex>> vectors; // 2^bits unit-norm codewords
};

enum class CsiSource { explicit_codebook, statistical_model };

// Quantized channel direction. The phase of `direction` is chosen so that
// <h, direction> is real and nonnegative.
struct QuantizedCsi {
    std::vector<Complex> direction;
    double sin2_theta = 0.0;
    unsigned bits = 0;
    double alpha = 0.0; // feedback scaling exponent that produced `bits`, when known
    CsiSource source = CsiSource::statistical_model;
    std::size_t index = 0; // codeword index for explicit codebooks
};

// 2^Q i.i.d. directions uniform on the unit sphere of C^M (random vector quantization).
// Throws CapacityError above kMaxExplicitBits.
Codebook build_random_codebook(std::size_t M, unsigned Q, Stream& rng);

// Nearest codeword in the sin^2-of-angle sense; ties go to the lowest index.
QuantizedCsi quantize(std::span<const Complex> h, const Codebook& cb);

// Draws the quantization error of a 2^Q-word random codebook without enumerating it:
// sin^2(theta) is the minimum of 2^Q i.i.d. Beta(M-1, 1) variables and the error
// direction is uniform in the orthogonal complement of h. The sampled sin^2 is multiplied by
// `error_scale` (clamped to 1) before use, which lets callers inflate the error while
// consuming the same random numbers.
QuantizedCsi synthesize_quantized_direction(std::span<const Complex> h, unsigned Q, Stream& rng,
                                            double error_scale = 1.0);

// Error-free feedback: the unit direction of h, sin^2 = 0.
QuantizedCsi exact_direction(std::span<const Complex> h);

// Minimum of 2^Q i.i.d. Beta(M-1, 1) samples, by inverting its CDF
// 1 - (1 - x^(M-1))^(2^Q). Stable for any Q (uses expm1 and ldexp).
double sample_min_beta_sin2(std::size_t M, unsigned Q, Stream& rng);

// Unit vector uniform on the unit sphere of the orthogonal complement of h.
std::vector<Complex> orthogonal_direction(std::span<const Complex> h, Stream& rng);

// Closed-form bounds on E[sin^2 theta] for the best Q-bit codebook in C^M:
// ((M-1)/M * 2^(-Q/(M-1)), 2^(-Q/(M-1))). Throws std::domain_error for M < 2.
std::pair<double, double> optimal_error_bounds(std::size_t M, unsigned Q);

// Q = round(alpha (K-1) log2 P), at least 1. Throws std::domain_error for alpha < 0.
unsigned bits_for_alpha(double alpha, std::size_t K, double P);

} // namespace stalecsi::quantizer

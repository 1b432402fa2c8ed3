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

#include "stalecsi/analysis.hpp"
#include "stalecsi/channel.hpp"
#include "stalecsi/numerics.hpp"
#include "stalecsi/parallel.hpp"
#include "stalecsi/quantizer.hpp"
#include "stalecsi/rational.hpp"
#include "stalecsi/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stalecsi::mat {

// Symbol-time and stream counts of one K-user MAT round: K D / T = K / H_K.
struct MatDims {
    std::size_t K = 0;
    std::size_t T = 0; // symbol times
    std::size_t D = 0; // symbols per user
    Rational harmonic;
};

// T and D read off H_K = T / D in lowest terms. Throws std::domain_error for K < 2.
MatDims mat_dims(std::size_t K);

// Smallest multiple of mat_dims(K) with K | D, so D / K zero rows are a whole number.
// Equal to mat_dims(K) for K = 2..5; K = 6 gives T = 147, D = 60.
MatDims structural_dims(std::size_t K);

// Two-user round over three blocks. Receiver A is user 0, B is user 1.
// Block 0 feeds A, block 1 feeds B, block 2 carries the overheard combinations.
struct MatRound2User {
    std::array<channel::ChannelBlock, 3> blocks;
    quantizer::QuantizedCsi fb_B; // h_B in block 0
    quantizer::QuantizedCsi fb_A; // h_A in block 1
};

enum class Receiver { A, B };

// y = signal * own symbols + interference * other symbols (+ noise).
struct LinearSystem {
    ComplexMatrix signal;                  // T x D
    ComplexMatrix interference;            // T x (K-1) D
    ComplexMatrix error_free_interference; // same layout with exact feedback
    std::size_t T = 0;
    std::size_t D = 0;
    std::size_t K = 0;
};

// Throws std::invalid_argument if the feedback vectors are not unit norm or the blocks
// are not 2 x 2.
MatRound2User make_mat2_round(std::array<channel::ChannelBlock, 3> blocks, quantizer::QuantizedCsi fb_B,
                              quantizer::QuantizedCsi fb_A);

// Normalized 3 x 2 system seen by one receiver. The pure-interference row is
// divided by the norm of that channel vector and row 3 by |h_{r,1}| of block 2, leaving
// the phase of h_{r,1}. Throws DegenerateDraw if |h_{r,1}| < 1e-12.
LinearSystem assemble_system_2user(const MatRound2User& round, Receiver receiver);

struct Mat2Symbols {
    std::array<Complex, 2> a; // (u_A, v_A)
    std::array<Complex, 2> b; // (u_B, v_B)
};

struct Mat2Received {
    std::array<Complex, 3> y_a;
    std::array<Complex, 3> y_b;
};

// i.i.d. CN(0, P/2) symbols.
Mat2Symbols draw_mat2_symbols(double P, Stream& rng);

// Three transmissions: (u_A, v_A), (u_B, v_B), then the sum of the two quantized
// projections on antenna 1. Noise is CN(0, noise_variance); pass 0 for noiseless.
Mat2Received run_mat2_round(const MatRound2User& round, const Mat2Symbols& symbols, Stream& rng,
                            double noise_variance = 1.0);

// Applies the row scaling of assemble_system_2user to one receiver's observations.
std::array<Complex, 3> normalize_received(const MatRound2User& round, Receiver receiver,
                                          const std::array<Complex, 3>& y);

// Structural K-user system. Row layout: D/K zero rows, T-D rows of an orthonormal frame
// (rank T-D), then (K-1)D/K rows that repeat frame vectors j = 0, 1, ... with error
// cos(t_j) b_j + sin(t_j) b'_j - b_j, where b'_j is a fresh frame direction outside the
// span. Each error row has norm 2 sin(t_j / 2). sin2 holds T-D values in [0, 1]; the
// first (K-1)D/K are used. Uses structural_dims(K).
LinearSystem synth_system_general(std::size_t K, std::span<const double> sin2, Stream& rng);

// Last D left singular vectors of the interference matrix (T x D, orthonormal columns).
ComplexMatrix zf_combiner(const LinearSystem& system);

// (1/T) [log2 det(I + P/K C) - log2 det(I + P/K C_int)] with C the combined signal plus
// interference covariance and C_int the interference part, both after zf_combiner.
double user_rate(const LinearSystem& system, double P);

struct MatRateConfig {
    std::size_t K = 2;
    double alpha = 1.0;
    std::optional<unsigned> fixed_bits; // overrides alpha when set
    double error_scale = 1.0;           // multiplies every sampled sin^2
};

// Monte Carlo sum rate over all K users (bits per symbol) at each power in `powers`.
// All powers share the same channel and quantizer draws.
std::vector<analysis::RateSample> mat_rate_curve(const MatRateConfig& cfg, std::span<const double> powers,
                                                 const McOptions& opts);

analysis::RateSample mat_rate_mc(const MatRateConfig& cfg, double P, const McOptions& opts);

// Feedback bits per user for a given power.
unsigned mat_feedback_bits(const MatRateConfig& cfg, double P);

} // namespace stalecsi::mat

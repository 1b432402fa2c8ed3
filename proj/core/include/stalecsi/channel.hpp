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

#include <cstdint>
#include <vector>

namespace stalecsi::channel {

// K single-antenna users, M = K transmit antennas, block fading with coherence
// length N symbols and feedback delay N_fd symbols.
struct ChannelConfig {
    std::size_t num_users = 2;
    std::size_t num_tx_antennas = 2;
    std::size_t coherence_len = 1;
    std::size_t feedback_delay = 0;
    std::uint64_t master_seed = 0;

    // Throws std::invalid_argument unless K >= 1, M == K, N >= 1.
    void validate() const;
};

// One coherence block. Column r of `h` is receiver r's channel vector h_r, so
// receiver r observes y_r = h_r^H x + z_r.
struct ChannelBlock {
    std::uint64_t block_index = 0;
    ComplexMatrix h; // M x K

    std::vector<Complex> user(std::size_t r) const { return h.col(r); }
};

// Deterministic in (master_seed, block_index). Entries are i.i.d. CN(0,1), drawn
// column by column from Stream::derive(seed, "block", block_index).
ChannelBlock sample_block(const ChannelConfig& cfg, std::uint64_t block_index);

// Length-M vector of i.i.d. CN(0,1) entries.
std::vector<Complex> gaussian_vector(std::size_t m, Stream& rng);

// n x r matrix with orthonormal columns spanning a uniformly random r-dimensional
// subspace of C^n (Gaussian draw, Gram-Schmidt applied twice). Requires r <= n.
ComplexMatrix random_orthonormal_frame(std::size_t n, std::size_t r, Stream& rng);

// CN(0,1) noise sample.
inline Complex noise_sample(Stream& rng) { return rng.complex_normal(); }

} // namespace stalecsi::channel

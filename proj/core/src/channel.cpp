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

#include "stalecsi/channel.hpp"

#include <stdexcept>

namespace stalecsi::channel {

void ChannelConfig::validate() const {
    if (num_users < 1)
        throw std::invalid_argument("ChannelConfig: need at least one user");
    if (num_tx_antennas != num_users)
        throw std::invalid_argument("ChannelConfig: number of transmit antennas must equal number of users");
    if (coherence_len < 1)
        throw std::invalid_argument("ChannelConfig: coherence length must be at least one symbol");
}

ChannelBlock sample_block(const ChannelConfig& cfg, std::uint64_t block_index) {
    cfg.validate();
    auto rng = Stream::derive(cfg.master_seed, "block", block_index);
    ChannelBlock block{block_index, ComplexMatrix(cfg.num_tx_antennas, cfg.num_users)};
    for (std::size_t r = 0; r < cfg.num_users; ++r)
        for (std::size_t m = 0; m < cfg.num_tx_antennas; ++m)
            block.h(m, r) = rng.complex_normal();
    return block;
}

std::vector<Complex> gaussian_vector(std::size_t m, Stream& rng) {
    std::vector<Complex> out(m);
    for (auto& z : out)
        z = rng.complex_normal();
    return out;
}

ComplexMatrix random_orthonormal_frame(std::size_t n, std::size_t r, Stream& rng) {
    if (r < 1 || r > n)
        throw std::invalid_argument("random_orthonormal_frame: need 1 <= r <= n");
    std::vector<std::vector<Complex>> cols;
    cols.reserve(r);
    while (cols.size() < r) {
        auto g = gaussian_vector(n, rng);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : cols) {
                const Complex proj = inner(q, g);
                for (std::size_t i = 0; i < n; ++i)
                    g[i] -= proj * q[i];
            }
        if (norm(g) > 1e-6)
            cols.push_back(normalized(g));
    }
    return ComplexMatrix::from_columns(cols);
}

} // namespace stalecsi::channel

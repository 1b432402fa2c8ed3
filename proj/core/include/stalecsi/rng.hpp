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

#include <cstdint>
#include <string_view>

namespace stalecsi {

// Counter-based random stream.
//
// A stream is identified by a 64-bit key derived from (master seed, tag, index, sub-index);
// draw i of the stream is splitmix64_finalize(key + (i + 1) * 0x9E3779B97F4A7C15).
// Streams with different (tag, index, sub) are statistically independent, so parallel
// trials never share state and results do not depend on scheduling.
//
// Uniforms use the top 53 bits. Gaussians use Box-Muller on two consecutive uniforms;
// a CN(0,1) draw is sqrt(-ln u1) * exp(i 2 pi u2) with u1 in (0,1], u2 in [0,1).
// Integer outputs are bit-exact everywhere; Gaussian outputs are bit-exact wherever
// std::log / std::cos / std::sin agree (glibc on x86-64 in practice).
class Stream {
public:
    explicit Stream(std::uint64_t key) noexcept : key_(key) {}

    static Stream derive(std::uint64_t seed, std::string_view tag, std::uint64_t index,
                         std::uint64_t sub = 0) noexcept;

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t position() const noexcept { return counter_; }

    std::uint64_t next_u64() noexcept;
    double uniform() noexcept;      // [0, 1)
    double uniform_open() noexcept; // (0, 1]
    double normal() noexcept;       // N(0, 1)
    Complex complex_normal() noexcept; // CN(0, 1): real and imaginary parts each N(0, 1/2)

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept;

} // namespace stalecsi

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

#include "stalecsi/rng.hpp"

#include <cmath>
#include <numbers>

namespace stalecsi {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace

std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Stream Stream::derive(std::uint64_t seed, std::string_view tag, std::uint64_t index,
                      std::uint64_t sub) noexcept {
    std::uint64_t k = splitmix64_finalize(seed + kGolden);
    k = splitmix64_finalize(k ^ fnv1a(tag));
    k = splitmix64_finalize(k + (index + 1) * kGolden);
    k = splitmix64_finalize(k ^ ((sub + 1) * 0xD1B54A32D192ED03ULL));
    return Stream(k);
}

std::uint64_t Stream::next_u64() noexcept {
    ++counter_;
    return splitmix64_finalize(key_ + counter_ * kGolden);
}

double Stream::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::uniform_open() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Stream::normal() noexcept {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Stream::complex_normal() noexcept {
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phase = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
}

} // namespace stalecsi

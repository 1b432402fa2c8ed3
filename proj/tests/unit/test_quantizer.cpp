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
#include "stalecsi/errors.hpp"
#include "stalecsi/quantizer.hpp"
#include "stalecsi/rng.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace stalecsi;
using namespace stalecsi::quantizer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// E[min of n i.i.d. Beta(M-1, 1)] = B(1/(M-1), n+1) / (M-1).
double expected_min_beta(std::size_t M, double n) {
    const double a = 1.0 / static_cast<double>(M - 1);
    return std::exp(std::lgamma(a) + std::lgamma(n + 1.0) - std::lgamma(a + n + 1.0)) * a;
}

// Brute-force scan computing sin^2 directly from |<h, w>|^2 / (|h|^2 |w|^2).
std::pair<std::size_t, double> brute_force(const std::vector<Complex>& h, const Codebook& cb) {
    double hh = 0.0;
    for (auto z : h)
        hh += std::norm(z);
    std::size_t best = 0;
    double best_cos2 = -1.0;
    for (std::size_t i = 0; i < cb.vectors.size(); ++i) {
        Complex ip{};
        double ww = 0.0;
        for (std::size_t k = 0; k < h.size(); ++k) {
            ip += std::conj(h[k]) * cb.vectors[i][k];
            ww += std::norm(cb.vectors[i][k]);
        }
        const double c2 = std::norm(ip) / (hh * ww);
        if (c2 > best_cos2) {
            best_cos2 = c2;
            best = i;
        }
    }
    return {best, 1.0 - best_cos2};
}

} // namespace

TEST_CASE("quantize agrees with a brute-force codebook scan", "[quantizer]") {
    for (std::size_t M : {2, 3, 4}) {
        for (unsigned Q : {1u, 3u, 6u}) {
            auto rng = Stream::derive(21, "cb", M * 100 + Q);
            const auto cb = build_random_codebook(M, Q, rng);
            REQUIRE(cb.vectors.size() == (std::size_t{1} << Q));
            for (int t = 0; t < 50; ++t) {
                const auto h = channel::gaussian_vector(M, rng);
                const auto q = quantize(h, cb);
                const auto [idx, sin2] = brute_force(h, cb);
                CHECK(q.index == idx);
                CHECK_THAT(q.sin2_theta, WithinAbs(sin2, 1e-12));
                CHECK_THAT(norm(q.direction), WithinAbs(1.0, 1e-12));
                const Complex ip = inner(h, q.direction);
                CHECK(ip.real() >= 0.0);
                CHECK_THAT(ip.imag(), WithinAbs(0.0, 1e-12));
                CHECK(q.source == CsiSource::explicit_codebook);
            }
        }
    }
}

TEST_CASE("ties go to the lowest codeword index", "[quantizer]") {
    Codebook cb{2, 2, {{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {Complex(0, 1), 0.0}}};
    const std::vector<Complex> h{2.0, 0.0};
    CHECK(quantize(h, cb).index == 0);
    const std::vector<Complex> g{0.0, 1.0};
    CHECK(quantize(g, cb).index == 1);
}

TEST_CASE("explicit codebooks stop at the capacity cap", "[quantizer]") {
    auto rng = Stream::derive(22, "cap", 0);
    CHECK_THROWS_AS(build_random_codebook(2, kMaxExplicitBits + 1, rng), CapacityError);
    Codebook cb{3, 1, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
    CHECK_THROWS_AS(quantize(std::vector<Complex>{1.0, 0.0}, cb), std::invalid_argument);
}

TEST_CASE("statistical model matches the exact order-statistic mean", "[quantizer]") {
    SECTION("M = 2, Q = 1: minimum of two uniforms has mean 1/3") {
        CHECK_THAT(expected_min_beta(2, 2.0), WithinRel(1.0 / 3.0, 1e-12));
        auto rng = Stream::derive(23, "minbeta", 0);
        constexpr int n = 100000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += sample_min_beta_sin2(2, 1, rng);
        // Var(min of two uniforms) = 1/18.
        CHECK_THAT(sum / n, WithinAbs(1.0 / 3.0, 5 * std::sqrt(1.0 / 18 / n)));
    }
    SECTION("several (M, Q)") {
        for (std::size_t M : {2, 3, 4, 8}) {
            for (unsigned Q : {2u, 8u, 30u}) {
                auto rng = Stream::derive(23, "minbeta", M * 1000 + Q);
                constexpr int n = 40000;
                double sum = 0.0;
                double sum2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double x = sample_min_beta_sin2(M, Q, rng);
                    REQUIRE(x >= 0.0);
                    REQUIRE(x <= 1.0);
                    sum += x;
                    sum2 += x * x;
                }
                const double mean = sum / n;
                const double se = std::sqrt((sum2 / n - mean * mean) / n);
                CHECK_THAT(mean, WithinAbs(expected_min_beta(M, std::ldexp(1.0, static_cast<int>(Q))), 5 * se));
            }
        }
    }
    SECTION("explicit random codebooks follow the same law") {
        constexpr int n = 3000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            auto rng = Stream::derive(24, "rvq", i);
            const auto cb = build_random_codebook(3, 4, rng);
            sum += quantize(channel::gaussian_vector(3, rng), cb).sin2_theta;
        }
        const double expected = expected_min_beta(3, 16.0);
        CHECK_THAT(sum / n, WithinRel(expected, 0.06));
    }
    auto rng = Stream::derive(25, "err", 0);
    CHECK_THROWS_AS(sample_min_beta_sin2(1, 4, rng), std::domain_error);
}

TEST_CASE("synthesized directions have the sampled angle", "[quantizer]") {
    auto rng = Stream::derive(26, "synth", 0);
    for (int t = 0; t < 200; ++t) {
        const auto h = channel::gaussian_vector(4, rng);
        const auto q = synthesize_quantized_direction(h, 1 + t % 40, rng);
        CHECK_THAT(norm(q.direction), WithinAbs(1.0, 1e-12));
        const double c2 = std::norm(inner(normalized(h), q.direction));
        CHECK_THAT(1.0 - c2, WithinAbs(q.sin2_theta, 1e-12));
        CHECK(q.source == CsiSource::statistical_model);
        CHECK(q.bits == static_cast<unsigned>(1 + t % 40));
    }
    const std::vector<Complex> h{1.0, 2.0};
    auto a = Stream::derive(27, "scale", 0);
    auto b = Stream::derive(27, "scale", 0);
    const auto base = synthesize_quantized_direction(h, 6, a);
    const auto scaled = synthesize_quantized_direction(h, 6, b, 4.0);
    CHECK_THAT(scaled.sin2_theta, WithinRel(std::min(1.0, 4.0 * base.sin2_theta), 1e-14));
    CHECK_THROWS_AS(synthesize_quantized_direction(h, 0, a), std::invalid_argument);

    const auto exact = exact_direction(h);
    CHECK(exact.sin2_theta == 0.0);
    CHECK_THAT(norm(exact.direction), WithinAbs(1.0, 1e-15));
}

TEST_CASE("orthogonal_direction lies in the complement", "[quantizer]") {
    auto rng = Stream::derive(28, "perp", 0);
    for (int t = 0; t < 50; ++t) {
        const auto h = channel::gaussian_vector(3, rng);
        const auto p = orthogonal_direction(h, rng);
        CHECK(std::abs(inner(h, p)) < 1e-13);
        CHECK_THAT(norm(p), WithinAbs(1.0, 1e-13));
    }
}

TEST_CASE("error bounds and bit allocation", "[quantizer]") {
    const auto [lo, hi] = optimal_error_bounds(2, 1);
    CHECK_THAT(lo, WithinAbs(0.25, 1e-15));
    CHECK_THAT(hi, WithinAbs(0.5, 1e-15));
    const auto [lo4, hi4] = optimal_error_bounds(4, 6);
    CHECK_THAT(hi4, WithinAbs(0.25, 1e-15));
    CHECK_THAT(lo4, WithinAbs(0.1875, 1e-15));
    CHECK_THROWS_AS(optimal_error_bounds(1, 3), std::domain_error);

    CHECK(bits_for_alpha(1.0, 2, std::exp2(40.0)) == 40);
    CHECK(bits_for_alpha(0.5, 3, std::exp2(40.0)) == 40);
    CHECK(bits_for_alpha(1.0, 4, 1e6) == 60);
    CHECK(bits_for_alpha(0.0, 2, 1e6) == 1);
    CHECK_THROWS_AS(bits_for_alpha(-0.1, 2, 10.0), std::domain_error);
}

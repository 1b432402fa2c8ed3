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

#include "stalecsi/analysis.hpp"
#include "stalecsi/errors.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace stalecsi;
using namespace stalecsi::analysis;
using Catch::Matchers::WithinAbs;

namespace {

Rational R(long long p, long long q = 1) {
    return Rational(p, q);
}

std::vector<Rational> alpha_grid() {
    std::vector<Rational> out;
    for (long long i = 0; i <= 24; ++i)
        out.push_back(R(i, 8));
    return out;
}

} // namespace

TEST_CASE("dof_star", "[analysis]") {
    CHECK(dof_star(1) == 1);
    CHECK(dof_star(2) == R(4, 3));
    CHECK(dof_star(3) == R(18, 11));
    CHECK(dof_star(4) == R(48, 25));
    CHECK_THROWS_AS(dof_star(0), std::domain_error);
}

TEST_CASE("mat_dof", "[analysis]") {
    CHECK(mat_dof(2, 1) == R(4, 3));
    CHECK(mat_dof(3, R(1, 4)) == R(9, 11));
    CHECK(mat_dof(3, 1) == R(18, 11));
    for (std::size_t K = 2; K <= 8; ++K)
        CHECK(mat_dof(K, 0) == 1 / harmonic(K));
    // K = 2 and K = 3 closed forms: 2(1+a)/3 ^ 4/3 and 6(1+2a)/11 ^ 18/11.
    for (const auto& a : alpha_grid()) {
        CHECK(mat_dof(2, a) == min(2 * (1 + a) / 3, R(4, 3)));
        CHECK(mat_dof(3, a) == min(6 * (1 + 2 * a) / 11, R(18, 11)));
    }
    CHECK_THROWS_AS(mat_dof(2, R(-1, 10)), std::domain_error);
}

TEST_CASE("mat_dof is nondecreasing, piecewise linear and capped", "[analysis][property]") {
    const auto grid = alpha_grid();
    for (std::size_t K = 2; K <= 16; ++K) {
        for (std::size_t i = 1; i < grid.size(); ++i) {
            CHECK(mat_dof(K, grid[i]) >= mat_dof(K, grid[i - 1]));
            CHECK(mat_dof(K, grid[i]) <= dof_star(K));
        }
        CHECK(mat_dof(K, 1) == dof_star(K));
        CHECK(mat_dof(K, 3) == dof_star(K));
        // Linear below the kink: equal second differences.
        const Rational d1 = mat_dof(K, R(2, 8)) - mat_dof(K, R(1, 8));
        const Rational d2 = mat_dof(K, R(3, 8)) - mat_dof(K, R(2, 8));
        CHECK(d1 == d2);
    }
}

TEST_CASE("alpha threshold: printed value and consistent solve", "[analysis]") {
    const auto k2 = mat_alpha_star(2);
    CHECK(k2.printed == R(1, 3));
    CHECK(mat_dof(2, k2.printed) == R(8, 9));
    CHECK(k2.consistent == R(1, 2));
    CHECK(mat_dof(2, k2.consistent) == 1);

    CHECK(mat_alpha_star(3).printed == R(5, 22));
    for (std::size_t K = 2; K <= 8; ++K) {
        const auto a = mat_alpha_star(K);
        CHECK(mat_dof(K, a.consistent) == 1);
        CHECK(mat_dof(K, a.printed) != 1);
        CHECK(mat_dof(K, a.printed) < 1);
    }
    CHECK_THROWS_AS(mat_alpha_star(1), std::domain_error);
}

TEST_CASE("mat_overhead", "[analysis]") {
    CHECK(mat_overhead(2, 1, 10) == R(1, 15));
    CHECK(mat_overhead(3, 1, 11) == R(30, 121));
    CHECK(mat_overhead(4, 1, 10) == R(78, 125));
    CHECK(mat_overhead(5, 0, 10) == 0);
    CHECK_THROWS_AS(mat_overhead(2, 1, 0), std::domain_error);
    CHECK_THROWS_AS(mat_overhead(2, 1, R(1, 2)), std::domain_error);
}

TEST_CASE("general overhead specializes to the two- and three-user forms", "[analysis][property]") {
    for (long long N = 1; N <= 200; N += 7) {
        for (const auto& a : alpha_grid()) {
            CHECK(mat_overhead(2, a, N) == R(2, 3) / N * a);
            CHECK(mat_overhead(3, a, N) == R(30, 11) / N * a);
        }
    }
}

TEST_CASE("mat_net_dof", "[analysis]") {
    CHECK(mat_net_dof(2, 1, 10) == R(19, 15));
    CHECK(mat_net_dof(3, 1, 11) == R(168, 121));
    CHECK(mat_max_net_dof(2, 10) == R(19, 15));
    CHECK(mat_max_net_dof(3, 11) == R(168, 121));
    // K = 2 form: (2/3) min(1 + (N-1) a / N, 2 - a / N).
    for (long long N : {2, 5, 10, 302, 1000}) {
        for (const auto& a : alpha_grid()) {
            const Rational n(N);
            CHECK(mat_net_dof(2, a, n) == R(2, 3) * min(1 + (n - 1) / n * a, 2 - a / n));
        }
    }
    // Large N approaches dof_star.
    CHECK(abs(mat_net_dof(2, 1, 1000000) - R(4, 3)) < R(1, 100000));
}

// The alpha = 1 peak needs the first branch to grow with alpha, i.e. N >= K (H_K - 1).
TEST_CASE("net DoF equals DoF minus overhead and peaks at alpha = 1", "[analysis][property]") {
    for (std::size_t K = 2; K <= 16; ++K) {
        for (long long N : {static_cast<long long>(K), 20LL, 137LL, 1000LL, 10000LL}) {
            const Rational n(N);
            const auto [b1, b2] = mat_net_dof_branches(K, 1, n);
            CHECK(b1 == b2);
            const auto rep = mat_report(K, 1, n);
            CHECK(rep.net == rep.dof - rep.overhead);
            CHECK(rep.net == mat_max_net_dof(K, n));
            for (const auto& a : alpha_grid()) {
                CHECK(mat_net_dof(K, a, n) == mat_dof(K, a) - mat_overhead(K, a, n));
                if (n >= R(static_cast<long long>(K)) * (harmonic(K) - 1))
                    CHECK(mat_net_dof(K, a, n) <= mat_max_net_dof(K, n));
            }
        }
    }
}

TEST_CASE("analog feedback", "[analysis]") {
    CHECK(analog_net_dof(AnalogScheme::MAT, 2, 30, 0) == R(6, 5));
    CHECK(analog_net_dof(AnalogScheme::ZF, 2, 30, 10) == R(6, 5));
    const auto rep = analog_report(AnalogScheme::MAT, 3, 50, 0);
    CHECK(rep.overhead == R(9, 50));
    CHECK(rep.net == rep.dof - rep.overhead);
    CHECK(rep.dof == dof_star(3));
    CHECK(abs(analog_net_dof(AnalogScheme::MAT, 4, 10000000, 0) - dof_star(4)) < R(1, 100000));
    CHECK_THROWS_AS(analog_net_dof(AnalogScheme::ZF, 2, 0, 0), std::domain_error);
}

TEST_CASE("digital net DoF at alpha = 1 stays within K^2/N of analog", "[analysis][property]") {
    for (std::size_t K = 2; K <= 16; ++K) {
        for (long long N : {static_cast<long long>(K), 25LL, 100LL, 999LL, 5000LL, 100000LL}) {
            const Rational n(N);
            const Rational gap = mat_net_dof(K, 1, n) - analog_net_dof(AnalogScheme::MAT, K, n, 0);
            const Rational k(static_cast<long long>(K));
            CHECK(gap >= 0);
            CHECK(gap <= k * k / n);
            CHECK(gap == k * (harmonic(K) + k - 1) / (harmonic(K) * n));
        }
    }
}

TEST_CASE("slope estimator", "[analysis]") {
    std::vector<RateSample> exact;
    std::vector<RateSample> flat;
    std::vector<RateSample> curved;
    for (int e = 60; e <= 180; e += 20) {
        const double P = std::ldexp(1.0, e);
        exact.push_back({P, 4.0 / 3.0 * e + 7.0, 0.0, 1, 0});
        flat.push_back({P, 3.5, 0.0, 1, 0});
        curved.push_back({P, 2.0 * e - std::log2(static_cast<double>(e)), 0.0, 1, 0});
    }
    const auto a = estimate_dof_slope(exact, 4);
    CHECK_THAT(a.slope, WithinAbs(4.0 / 3.0, 1e-12));
    CHECK(a.points_used == 4);
    CHECK_THAT(a.std_error, WithinAbs(0.0, 1e-12));
    CHECK_THAT(estimate_dof_slope(flat, 4).slope, WithinAbs(0.0, 1e-12));
    // Least squares over exponents 120..180 of 2e - log2 e, evaluated independently.
    const auto c = estimate_dof_slope(curved, 4);
    CHECK_THAT(c.slope, WithinAbs(1.9902623370994705, 1e-12));
    CHECK(std::abs(c.slope - 2.0) < 0.05);
    CHECK(c.std_error > 0.0);

    // Order of the input does not matter.
    std::vector<RateSample> shuffled(exact.rbegin(), exact.rend());
    CHECK_THAT(estimate_dof_slope(shuffled, 4).slope, WithinAbs(4.0 / 3.0, 1e-12));
    // All points when top_points exceeds the sample count.
    CHECK(estimate_dof_slope(exact, 100).points_used == exact.size());

    const std::vector<RateSample> one{{10.0, 1.0, 0.0, 1, 0}};
    CHECK_THROWS_AS(estimate_dof_slope(one, 4), InsufficientData);
    const std::vector<RateSample> dup{{10.0, 1.0, 0.0, 1, 0}, {10.0, 2.0, 0.0, 1, 0}};
    CHECK_THROWS_AS(estimate_dof_slope(dup, 4), std::invalid_argument);
}

TEST_CASE("SNR grid helpers", "[analysis]") {
    const auto g = default_snr_grid_db();
    REQUIRE(g.size() == 7);
    CHECK(g.front() == 60.0);
    CHECK(g.back() == 180.0);
    CHECK_THAT(db_to_linear(30.0), WithinAbs(1000.0, 1e-9));
    CHECK(snr_grid_db(0, 10, 5).size() == 3);
    CHECK_THROWS_AS(snr_grid_db(10, 0, 5), std::invalid_argument);
    CHECK(scheme_name(Scheme::MAT_analog) == "MAT_analog");
}

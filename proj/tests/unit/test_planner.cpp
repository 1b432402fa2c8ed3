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
#include "stalecsi/baselines.hpp"
#include "stalecsi/planner.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace stalecsi;
using namespace stalecsi::planner;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("regime boundaries", "[planner]") {
    for (long long nfd : {0, 1, 100, 1680}) {
        const auto r2 = regime_boundaries(2, nfd);
        CHECK(r2.n_low == 2);
        CHECK(r2.n_high == 3 * nfd + 2);
        const auto r3 = regime_boundaries(3, nfd);
        CHECK(r3.n_low == Rational(30, 7));
        CHECK(r3.n_high == Rational(11 * nfd + 12, 5));
    }
    CHECK(regime_boundaries(3, 100).n_high == Rational(1112, 5));
    CHECK_THROWS_AS(regime_boundaries(1, 0), std::domain_error);
    CHECK_THROWS_AS(regime_boundaries(2, -1), std::domain_error);
}

TEST_CASE("boundaries are where the net DoF curves cross", "[planner][property]") {
    for (std::size_t K = 2; K <= 12; ++K) {
        for (long long nfd : {0, 10, 100, 1680}) {
            const auto r = regime_boundaries(K, nfd);
            CHECK(analysis::mat_max_net_dof(K, r.n_low) == 1);
            CHECK(analysis::mat_max_net_dof(K, r.n_high) == baselines::zf_max_net_dof(K, r.n_high, nfd));
            if (nfd >= 100)
                CHECK(r.mat_regime_exists());
        }
    }
}

TEST_CASE("winner examples", "[planner]") {
    CHECK(winner(2, 150, 100).winner == Choice::MAT);
    CHECK(winner(2, 400, 100).winner == Choice::ZF);
    CHECK(winner(3, 3, 100).winner == Choice::SISO);
    CHECK(winner(3, 100, 100).winner == Choice::MAT);

    const auto tie_low = winner(2, 2, 100);
    CHECK(tie_low.tied);
    CHECK(tie_low.winner == Choice::SISO);
    const auto tie_high = winner(2, 302, 100);
    CHECK(tie_high.tied);
    CHECK(tie_high.winner == Choice::MAT);
    CHECK(tie_high.zf == Rational(201, 151));

    CHECK(choice_name(Choice::SISO) == "SISO");
    CHECK(choice_name(Choice::MAT) == "MAT");
    CHECK(choice_name(Choice::ZF) == "ZF");
}

TEST_CASE("winning ranges", "[planner]") {
    using Runs = std::vector<std::pair<long long, long long>>;
    CHECK(strict_win_ranges(2, 100, Choice::MAT, 1, 1000) == Runs{{3, 301}});
    CHECK(weak_win_ranges(2, 100, Choice::MAT, 1, 1000) == Runs{{2, 302}});
    CHECK(strict_win_ranges(3, 100, Choice::MAT, 1, 1000) == Runs{{5, 222}});
    CHECK(strict_win_ranges(2, 100, Choice::ZF, 1, 400) == Runs{{303, 400}});
    CHECK(strict_win_ranges(2, 100, Choice::SISO, 1, 400) == Runs{{1, 1}});
    CHECK(strict_win_ranges(2, 100, Choice::MAT, 400, 500).empty());
}

TEST_CASE("the three regimes partition N", "[planner][property]") {
    for (std::size_t K = 2; K <= 8; ++K) {
        const Rational nfd = 40;
        const auto r = regime_boundaries(K, nfd);
        for (long long N = 1; N <= 1200; ++N) {
            const auto d = winner(K, N, nfd);
            const Rational n = N;
            if (n < r.n_low)
                CHECK(d.winner == Choice::SISO);
            else if (n > r.n_low && n < r.n_high)
                CHECK(d.winner == Choice::MAT);
            else if (n > r.n_high)
                CHECK(d.winner == Choice::ZF);
            CHECK(d.tied == (n == r.n_low || n == r.n_high));
        }
    }
}

TEST_CASE("boundary growth for large K", "[planner][property]") {
    const double nfd = 1680.0;
    for (std::size_t K = 8; K <= 64; K *= 2) {
        const auto r = regime_boundaries(K, 1680);
        const double lnK = std::log(static_cast<double>(K));
        const double low = to_double(r.n_low) / (K * lnK);
        const double high = to_double(r.n_high) / ((nfd + K / lnK) / (1.0 - 1.0 / lnK));
        CHECK(low >= 0.8);
        CHECK(low <= 1.25);
        CHECK(high >= 0.8);
        CHECK(high <= 1.25);
    }
}

TEST_CASE("design table", "[planner]") {
    const double fc = 2.1e9;
    const double ts = 1.0 / 168000.0;
    const auto rows = design_table(fc, ts, 1680, {2, 4, 16});
    REQUIRE(rows.size() == 3);

    // Reference planning rows for a 2.1 GHz carrier with 1680-symbol feedback delay.
    CHECK_THAT(to_double(rows[0].n_range.first), WithinRel(2.0, 0.15));
    CHECK_THAT(to_double(rows[0].n_range.second), WithinRel(5000.0, 0.15));
    CHECK_THAT(rows[0].coherence_time_ms.second, WithinRel(30.0, 0.15));
    CHECK_THAT(rows[0].velocity_kmh.first, WithinRel(17.0, 0.15));

    CHECK_THAT(to_double(rows[1].n_range.first), WithinRel(7.0, 0.15));
    CHECK_THAT(to_double(rows[1].n_range.second), WithinRel(3200.0, 0.15));
    CHECK_THAT(rows[1].coherence_time_ms.first, WithinRel(0.04, 0.15));
    CHECK_THAT(rows[1].coherence_time_ms.second, WithinRel(20.0, 0.15));
    CHECK_THAT(rows[1].velocity_kmh.first, WithinRel(27.0, 0.15));
    CHECK_THAT(rows[1].velocity_kmh.second, WithinRel(12000.0, 0.15));

    CHECK_THAT(to_double(rows[2].n_range.first), WithinRel(46.0, 0.15));
    CHECK_THAT(to_double(rows[2].n_range.second), WithinRel(2400.0, 0.15));
    CHECK_THAT(rows[2].coherence_time_ms.first, WithinRel(0.3, 0.15));
    CHECK_THAT(rows[2].coherence_time_ms.second, WithinRel(14.0, 0.15));
    CHECK_THAT(rows[2].velocity_kmh.first, WithinRel(36.0, 0.15));
    CHECK_THAT(rows[2].velocity_kmh.second, WithinRel(1900.0, 0.15));

    const double constant = kSpeedOfLight / (fc * ts) * 3.6;
    for (const auto& row : rows) {
        CHECK(row.n_range.first < row.n_range.second);
        CHECK_THAT(row.velocity_kmh.first * to_double(row.n_range.second), WithinRel(constant, 1e-12));
        CHECK_THAT(row.velocity_kmh.second * to_double(row.n_range.first), WithinRel(constant, 1e-12));
        CHECK_THAT(row.coherence_time_ms.first, WithinRel(to_double(row.n_range.first) * ts * 1e3, 1e-12));
    }
    CHECK_THAT(velocity_kmh(fc, ts, 100.0), WithinRel(constant / 100.0, 1e-15));
    CHECK_THROWS_AS(design_table(0.0, ts, 1680, {2}), std::invalid_argument);
    CHECK_THROWS_AS(design_table(fc, -1.0, 1680, {2}), std::invalid_argument);
}

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

#include "stalecsi/numerics.hpp"
#include "stalecsi/verify.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace stalecsi;
using namespace stalecsi::verify;
using Catch::Matchers::WithinRel;

namespace {

double neg_second_moment(const ComplexMatrix& m) {
    double a = 0.0;
    for (double s : singular_values(m))
        a += 1.0 / (s * s);
    return a;
}

double inverse_row_distances(const ComplexMatrix& m) {
    double b = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        b += 1.0 / std::pow(row_subspace_distance(m, i), 2);
    return b;
}

} // namespace

TEST_CASE("negative second moment identity on small examples", "[verify]") {
    const auto eye = ComplexMatrix::identity(4);
    CHECK_THAT(neg_second_moment(eye), WithinRel(4.0, 1e-14));
    CHECK_THAT(inverse_row_distances(eye), WithinRel(4.0, 1e-14));

    const ComplexMatrix d{{1.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, {0.0, 0.0, 3.0}};
    const double expected = 1.0 + 1.0 / 4.0 + 1.0 / 9.0;
    CHECK_THAT(neg_second_moment(d), WithinRel(expected, 1e-14));
    CHECK_THAT(inverse_row_distances(d), WithinRel(expected, 1e-14));

    const ComplexMatrix g{{1.0, Complex(0.0, 1.0)}, {0.5, 2.0}};
    CHECK_THAT(neg_second_moment(g), WithinRel(inverse_row_distances(g), 1e-12));
}

TEST_CASE("every check passes on a small run", "[verify]") {
    SuiteOptions opts;
    opts.trials = 200;
    opts.seed = 3;
    for (const auto& name : check_names()) {
        const auto r = run_check(name, opts);
        INFO(name << ": " << r.detail);
        CHECK(r.name == name);
        CHECK(r.trials == 200);
        CHECK(r.passed());
        CHECK(r.worst_violation <= r.tolerance);
        CHECK(r.skipped < r.trials);
    }
}

TEST_CASE("suite bookkeeping", "[verify]") {
    CHECK(check_names().size() == 6);
    CHECK(default_trials("sigma2") == 10000);
    CHECK(default_trials("quantization-bounds") == 2000);
    CHECK_THROWS_AS(default_trials("nope"), std::invalid_argument);
    CHECK_THROWS_AS(run_check("nope", SuiteOptions{}), std::invalid_argument);
    CHECK_THROWS_AS(run_checks({"sigma2", "nope"}, SuiteOptions{}), std::invalid_argument);

    SuiteOptions opts;
    opts.trials = 50;
    const auto one = run_checks({"weyl", "sigma2"}, opts);
    REQUIRE(one.size() == 2);
    CHECK(one[0].name == "weyl");
    CHECK(one[1].name == "sigma2");

    opts.workers = 2;
    const auto two = run_checks({"weyl", "sigma2"}, opts);
    CHECK(two[0].worst_violation == one[0].worst_violation);
    CHECK(two[1].worst_violation == one[1].worst_violation);

    CHECK_THROWS_AS(check_sigma_sandwich({}, 10, 1), std::invalid_argument);
}

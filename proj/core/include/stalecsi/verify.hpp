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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stalecsi::verify {

struct CheckReport {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;       // draws excluded by a documented precondition
    double worst_violation = 0.0;  // largest observed error (same units as tolerance)
    double tolerance = 0.0;
    std::string detail;            // free-form summary line
    bool passed() const { return failures == 0; }
};

// 2 x 2 matrix with rows h^H/|h| and e^H at random angle t in (0, pi/2):
// the smaller singular value equals sqrt(2) sin(t/2). Absolute tolerance 1e-10.
CheckReport check_sigma2_closed_form(std::size_t trials, std::uint64_t seed);

// |s_i(A + E) - s_i(A)| <= |E|_F on random low-rank A with dense E, and on structural
// K = 3 systems (A = error-free interference). Tolerance 1e-12 relative to |A|_F.
CheckReport check_weyl(std::size_t trials, std::uint64_t seed);

// sum_i s_i^-2 = sum_i dist(row_i, span of other rows)^-2 on square n x n matrices,
// 2 <= n <= n_max. Draws with condition number above 1e8 are skipped. Relative tolerance 1e-8.
CheckReport check_neg_second_moment(std::size_t trials, std::size_t n_max, std::uint64_t seed);

// For two-user rounds with Q in [2, 20]: log2 det(I + P/2 (U^H I)(U^H I)^H) through the
// combiner equals log2(1 + P sin^2(t/2)) with sin^2 t the quantizer's error. Compared as a
// relative determinant error, tolerance 1e-9.
CheckReport check_interference_power(std::size_t trials, const std::vector<double>& powers, std::uint64_t seed);

// Random codebooks in C^M: the mean of sin^2 t stays below 2^(-Q/(M-1)) (1 + 3/sqrt(trials)),
// and the least-squares slope of log2 mean against Q is within 15% of -1/(M-1).
CheckReport check_quantization_bounds(const std::vector<std::size_t>& Ms, const std::vector<unsigned>& Qs,
                                      std::size_t trials, std::uint64_t seed);

// Structural K-user systems: the lifted singular values i = T-D+1 .. T-D/K satisfy
// s_i^2 <= 4 (T - D/K) max sin^2(t/2) and s_{T-D/K}^2 >= 4 sin^2(t_min) / (T - D/K).
CheckReport check_sigma_sandwich(const std::vector<std::size_t>& Ks, std::size_t trials, std::uint64_t seed);

struct SuiteOptions {
    std::size_t trials = 0; // 0 = each check's default
    std::uint64_t seed = 1;
    std::size_t workers = 1;
};

// sigma2, weyl, neg-second-moment, interference-power, quantization-bounds, sigma-sandwich
const std::vector<std::string>& check_names();

std::size_t default_trials(std::string_view name);

// Throws std::invalid_argument for an unknown name.
CheckReport run_check(std::string_view name, const SuiteOptions& opts);

// Runs the named checks (all when empty) and returns reports in the order requested.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const SuiteOptions& opts);

} // namespace stalecsi::verify

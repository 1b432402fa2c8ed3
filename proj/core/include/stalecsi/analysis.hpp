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

#include "stalecsi/rational.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace stalecsi::analysis {

// Average sum throughput at one transmit power.
struct RateSample {
    double power = 0.0;  // linear P
    double rate = 0.0;   // bits per symbol, summed over users
    double std_error = 0.0; // standard error of the Monte Carlo mean
    std::size_t trials = 0;
    std::size_t resampled = 0; // degenerate draws replaced
};

// Prelog estimate: least-squares slope of rate against log2 P.
struct DofEstimate {
    double slope = 0.0;
    double std_error = 0.0;
    std::size_t points_used = 0;
};

enum class Scheme { MAT, ZF, SISO, MAT_analog, ZF_analog };
std::string_view scheme_name(Scheme s);

struct NetDofReport {
    Scheme scheme = Scheme::SISO;
    Rational dof;
    Rational overhead;
    Rational net; // always dof - overhead
    Rational alpha;
};

// K / H_K, the multiplexing gain with completely outdated but exact CSIT.
Rational dof_star(std::size_t K);

// Multiplexing gain of MAT when each receiver feeds back Q = alpha (K-1) log2 P bits:
// min((1 + (K-1) alpha) / K, 1) * K / H_K.
Rational mat_dof(std::size_t K, const Rational& alpha);

// Two candidate thresholds below which MAT falls under one degree of freedom.
// `printed` is (H_K - 1) / (H_K (K - 1)); `consistent` solves mat_dof(K, alpha) = 1,
// i.e. (H_K - 1) / (K - 1). They differ for every K >= 2.
struct AlphaStar {
    Rational printed;
    Rational consistent;
};
AlphaStar mat_alpha_star(std::size_t K);

// Feedback prelog of MAT: K (K-1) (H_K - 1) / (H_K N) * alpha.
Rational mat_overhead(std::size_t K, const Rational& alpha, const Rational& N);

// The two branches of the net-DoF minimum, in the closed form
// (N + alpha (K-1) (N - K (H_K - 1))) / (H_K N) and K (N - alpha (K-1) (H_K - 1)) / (H_K N).
std::pair<Rational, Rational> mat_net_dof_branches(std::size_t K, const Rational& alpha, const Rational& N);

// min of the two branches (equals mat_dof - mat_overhead).
Rational mat_net_dof(std::size_t K, const Rational& alpha, const Rational& N);

// Net DoF at alpha = 1: K (N - (K-1)(H_K - 1)) / (H_K N).
Rational mat_max_net_dof(std::size_t K, const Rational& N);

NetDofReport mat_report(std::size_t K, const Rational& alpha, const Rational& N);

enum class AnalogScheme { MAT, ZF };

// Net DoF with unquantized analog feedback (overhead K^2 / N):
// MAT: K (N - K H_K) / (H_K N);  ZF: K (1 - (N_fd + K) / N).
Rational analog_net_dof(AnalogScheme scheme, std::size_t K, const Rational& N, const Rational& N_fd);
NetDofReport analog_report(AnalogScheme scheme, std::size_t K, const Rational& N, const Rational& N_fd);

// Least-squares slope over the `top_points` largest-P samples (all if fewer).
// Throws InsufficientData with fewer than two usable distinct powers.
DofEstimate estimate_dof_slope(std::span<const RateSample> samples, std::size_t top_points = 4);

// 10^(db/10)
double db_to_linear(double db);

// Inclusive dB grid first, first+step, ..., last.
std::vector<double> snr_grid_db(double first_db, double last_db, double step_db);

// 60, 80, ..., 180 dB.
std::vector<double> default_snr_grid_db();

} // namespace stalecsi::analysis

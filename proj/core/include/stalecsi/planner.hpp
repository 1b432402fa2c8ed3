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
#include <string_view>
#include <utility>
#include <vector>

namespace stalecsi::planner {

enum class Choice { SISO, MAT, ZF };
std::string_view choice_name(Choice c);

struct Decision {
    Choice winner = Choice::SISO;
    bool tied = false;     // the winner shares the maximum with another scheme
    Rational siso;         // 1
    Rational mat;          // MAT net DoF at alpha = 1
    Rational zf;           // ZF net DoF at alpha = 1
};

// Argmax of the three alpha = 1 net DoF values. Ties go to the simpler scheme in the
// order SISO, MAT, ZF and set `tied`.
Decision winner(std::size_t K, const Rational& N, const Rational& N_fd);

struct RegimeReport {
    std::size_t K = 0;
    Rational N_fd;
    // SISO/MAT boundary: K (K-1) (H_K - 1) / (K - H_K). MAT at alpha = 1 reaches one
    // degree of freedom exactly here.
    Rational n_low;
    // MAT/ZF boundary: (H_K N_fd + K - 1) / (H_K - 1). The two alpha = 1 net DoF values
    // are equal here.
    Rational n_high;
    bool mat_regime_exists() const { return n_low < n_high; }
    Decision decide(const Rational& N) const { return winner(K, N, N_fd); }
};

// Throws std::domain_error unless K >= 2 and N_fd >= 0.
RegimeReport regime_boundaries(std::size_t K, const Rational& N_fd);

// Integers N in [first, last] for which `scheme` strictly beats both others, as a list of
// maximal contiguous runs.
std::vector<std::pair<long long, long long>> strict_win_ranges(std::size_t K, const Rational& N_fd, Choice scheme,
                                                               long long first, long long last);

// Same, but counting ties as wins.
std::vector<std::pair<long long, long long>> weak_win_ranges(std::size_t K, const Rational& N_fd, Choice scheme,
                                                             long long first, long long last);

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

struct DesignRow {
    std::size_t K = 0;
    std::pair<Rational, Rational> n_range;               // symbols
    std::pair<double, double> coherence_time_ms;         // N T_s
    std::pair<double, double> velocity_kmh;              // c / (f_c N T_s), low then high
};

// One row per K with the MAT regime mapped to coherence time and terminal speed.
// Throws std::invalid_argument for nonpositive f_c or T_s.
std::vector<DesignRow> design_table(double carrier_hz, double symbol_time_s, const Rational& N_fd,
                                    const std::vector<std::size_t>& Ks);

// c / (f_c N T_s), in km/h.
double velocity_kmh(double carrier_hz, double symbol_time_s, double N);

} // namespace stalecsi::planner

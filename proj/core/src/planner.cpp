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

#include "stalecsi/planner.hpp"

#include "stalecsi/analysis.hpp"
#include "stalecsi/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace stalecsi::planner {

std::string_view choice_name(Choice c) {
    switch (c) {
    case Choice::SISO:
        return "SISO";
    case Choice::MAT:
        return "MAT";
    case Choice::ZF:
        return "ZF";
    }
    return "?";
}

Decision winner(std::size_t K, const Rational& N, const Rational& N_fd) {
    Decision d;
    d.siso = baselines::siso_net_dof();
    d.mat = analysis::mat_max_net_dof(K, N);
    d.zf = baselines::zf_max_net_dof(K, N, N_fd);
    const Rational best = max(d.siso, max(d.mat, d.zf));
    int at_best = 0;
    at_best += d.siso == best;
    at_best += d.mat == best;
    at_best += d.zf == best;
    d.tied = at_best > 1;
    if (d.siso == best)
        d.winner = Choice::SISO;
    else if (d.mat == best)
        d.winner = Choice::MAT;
    else
        d.winner = Choice::ZF;
    return d;
}

RegimeReport regime_boundaries(std::size_t K, const Rational& N_fd) {
    if (K < 2)
        throw std::domain_error("regime_boundaries: K must be at least 2");
    if (N_fd < 0)
        throw std::domain_error("regime_boundaries: N_fd must be nonnegative");
    const Rational h = harmonic(K);
    const Rational k(static_cast<long long>(K));
    RegimeReport r;
    r.K = K;
    r.N_fd = N_fd;
    r.n_low = k * (k - 1) * (h - 1) / (k - h);
    r.n_high = (h * N_fd + k - 1) / (h - 1);
    return r;
}

namespace {

template <class Pred>
std::vector<std::pair<long long, long long>> runs(long long first, long long last, Pred pred) {
    if (first < 1 || last < first)
        throw std::invalid_argument("win ranges: need 1 <= first <= last");
    std::vector<std::pair<long long, long long>> out;
    for (long long n = first; n <= last; ++n) {
        if (!pred(n))
            continue;
        if (!out.empty() && out.back().second == n - 1)
            out.back().second = n;
        else
            out.emplace_back(n, n);
    }
    return out;
}

const Rational& value_of(const Decision& d, Choice c) {
    return c == Choice::SISO ? d.siso : (c == Choice::MAT ? d.mat : d.zf);
}

} // namespace

std::vector<std::pair<long long, long long>> strict_win_ranges(std::size_t K, const Rational& N_fd, Choice scheme,
                                                               long long first, long long last) {
    return runs(first, last, [&](long long n) {
        const Decision d = winner(K, Rational(n), N_fd);
        const Rational& v = value_of(d, scheme);
        for (Choice other : {Choice::SISO, Choice::MAT, Choice::ZF})
            if (other != scheme && !(v > value_of(d, other)))
                return false;
        return true;
    });
}

std::vector<std::pair<long long, long long>> weak_win_ranges(std::size_t K, const Rational& N_fd, Choice scheme,
                                                             long long first, long long last) {
    return runs(first, last, [&](long long n) {
        const Decision d = winner(K, Rational(n), N_fd);
        const Rational& v = value_of(d, scheme);
        for (Choice other : {Choice::SISO, Choice::MAT, Choice::ZF})
            if (v < value_of(d, other))
                return false;
        return true;
    });
}

double velocity_kmh(double carrier_hz, double symbol_time_s, double N) {
    if (!(carrier_hz > 0.0) || !(symbol_time_s > 0.0))
        throw std::invalid_argument("velocity_kmh: carrier and symbol time must be positive");
    if (!(N > 0.0))
        throw std::invalid_argument("velocity_kmh: N must be positive");
    return kSpeedOfLight / (carrier_hz * N * symbol_time_s) * 3.6;
}

std::vector<DesignRow> design_table(double carrier_hz, double symbol_time_s, const Rational& N_fd,
                                    const std::vector<std::size_t>& Ks) {
    if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
        throw std::invalid_argument("design_table: carrier frequency must be positive");
    if (!(symbol_time_s > 0.0) || !std::isfinite(symbol_time_s))
        throw std::invalid_argument("design_table: symbol time must be positive");
    std::vector<DesignRow> rows;
    rows.reserve(Ks.size());
    for (std::size_t K : Ks) {
        const RegimeReport r = regime_boundaries(K, N_fd);
        DesignRow row;
        row.K = K;
        row.n_range = {r.n_low, r.n_high};
        const double lo = to_double(r.n_low);
        const double hi = to_double(r.n_high);
        row.coherence_time_ms = {lo * symbol_time_s * 1e3, hi * symbol_time_s * 1e3};
        row.velocity_kmh = {velocity_kmh(carrier_hz, symbol_time_s, hi),
                            velocity_kmh(carrier_hz, symbol_time_s, lo)};
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace stalecsi::planner

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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stalecsi::analysis {

namespace {

Rational as_rational(std::size_t n) {
    return Rational(static_cast<long long>(n));
}

void require_positive_N(const Rational& N) {
    if (N < 1)
        throw std::domain_error("coherence length N must be at least 1");
}

} // namespace

std::string_view scheme_name(Scheme s) {
    switch (s) {
    case Scheme::MAT:
        return "MAT";
    case Scheme::ZF:
        return "ZF";
    case Scheme::SISO:
        return "SISO";
    case Scheme::MAT_analog:
        return "MAT_analog";
    case Scheme::ZF_analog:
        return "ZF_analog";
    }
    return "?";
}

Rational dof_star(std::size_t K) {
    if (K < 1)
        throw std::domain_error("dof_star: K must be at least 1");
    return as_rational(K) / harmonic(K);
}

Rational mat_dof(std::size_t K, const Rational& alpha) {
    if (K < 1)
        throw std::domain_error("mat_dof: K must be at least 1");
    if (alpha < 0)
        throw std::domain_error("mat_dof: alpha must be nonnegative");
    const Rational k = as_rational(K);
    const Rational fraction = (1 + (k - 1) * alpha) / k;
    return min(fraction, Rational(1)) * dof_star(K);
}

AlphaStar mat_alpha_star(std::size_t K) {
    if (K < 2)
        throw std::domain_error("mat_alpha_star: K must be at least 2");
    const Rational h = harmonic(K);
    const Rational k = as_rational(K);
    return {(h - 1) / (h * (k - 1)), (h - 1) / (k - 1)};
}

Rational mat_overhead(std::size_t K, const Rational& alpha, const Rational& N) {
    if (K < 1)
        throw std::domain_error("mat_overhead: K must be at least 1");
    if (alpha < 0)
        throw std::domain_error("mat_overhead: alpha must be nonnegative");
    require_positive_N(N);
    const Rational h = harmonic(K);
    const Rational k = as_rational(K);
    return k * (k - 1) * (h - 1) / (h * N) * alpha;
}

std::pair<Rational, Rational> mat_net_dof_branches(std::size_t K, const Rational& alpha, const Rational& N) {
    if (K < 1)
        throw std::domain_error("mat_net_dof: K must be at least 1");
    if (alpha < 0)
        throw std::domain_error("mat_net_dof: alpha must be nonnegative");
    require_positive_N(N);
    const Rational h = harmonic(K);
    const Rational k = as_rational(K);
    Rational low = (N + alpha * (k - 1) * (N - k * (h - 1))) / (h * N);
    Rational high = k * (N - alpha * (k - 1) * (h - 1)) / (h * N);
    return {std::move(low), std::move(high)};
}

Rational mat_net_dof(std::size_t K, const Rational& alpha, const Rational& N) {
    const auto [a, b] = mat_net_dof_branches(K, alpha, N);
    return min(a, b);
}

Rational mat_max_net_dof(std::size_t K, const Rational& N) {
    require_positive_N(N);
    const Rational h = harmonic(K);
    const Rational k = as_rational(K);
    return k * (N - (k - 1) * (h - 1)) / (h * N);
}

NetDofReport mat_report(std::size_t K, const Rational& alpha, const Rational& N) {
    NetDofReport r;
    r.scheme = Scheme::MAT;
    r.alpha = alpha;
    r.dof = mat_dof(K, alpha);
    r.overhead = mat_overhead(K, alpha, N);
    r.net = r.dof - r.overhead;
    return r;
}

Rational analog_net_dof(AnalogScheme scheme, std::size_t K, const Rational& N, const Rational& N_fd) {
    if (K < 1)
        throw std::domain_error("analog_net_dof: K must be at least 1");
    require_positive_N(N);
    const Rational k = as_rational(K);
    if (scheme == AnalogScheme::MAT) {
        const Rational h = harmonic(K);
        return k * (N - k * h) / (h * N);
    }
    return k * (1 - (N_fd + k) / N);
}

NetDofReport analog_report(AnalogScheme scheme, std::size_t K, const Rational& N, const Rational& N_fd) {
    NetDofReport r;
    const Rational k = as_rational(K);
    r.scheme = scheme == AnalogScheme::MAT ? Scheme::MAT_analog : Scheme::ZF_analog;
    r.alpha = 0;
    r.net = analog_net_dof(scheme, K, N, N_fd);
    r.overhead = k * k / N;
    r.dof = r.net + r.overhead;
    return r;
}

DofEstimate estimate_dof_slope(std::span<const RateSample> samples, std::size_t top_points) {
    std::vector<RateSample> usable;
    for (const auto& s : samples)
        if (s.power > 0.0 && std::isfinite(s.rate))
            usable.push_back(s);
    std::stable_sort(usable.begin(), usable.end(),
                     [](const RateSample& a, const RateSample& b) { return a.power < b.power; });
    for (std::size_t i = 1; i < usable.size(); ++i)
        if (usable[i].power == usable[i - 1].power)
            throw std::invalid_argument("estimate_dof_slope: duplicate power in samples");

    const std::size_t take = std::min(top_points, usable.size());
    if (take < 2)
        throw InsufficientData("estimate_dof_slope: need at least two samples with distinct power");
    const std::span<const RateSample> top(usable.data() + (usable.size() - take), take);

    double mx = 0.0;
    double my = 0.0;
    for (const auto& s : top) {
        mx += std::log2(s.power);
        my += s.rate;
    }
    mx /= static_cast<double>(take);
    my /= static_cast<double>(take);
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& s : top) {
        const double dx = std::log2(s.power) - mx;
        sxx += dx * dx;
        sxy += dx * (s.rate - my);
    }
    DofEstimate est;
    est.slope = sxy / sxx;
    est.points_used = take;
    if (take > 2) {
        double ssr = 0.0;
        for (const auto& s : top) {
            const double fit = my + est.slope * (std::log2(s.power) - mx);
            ssr += (s.rate - fit) * (s.rate - fit);
        }
        est.std_error = std::sqrt(ssr / static_cast<double>(take - 2) / sxx);
    }
    return est;
}

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

std::vector<double> snr_grid_db(double first_db, double last_db, double step_db) {
    if (!(step_db > 0.0) || last_db < first_db)
        throw std::invalid_argument("snr_grid_db: need step > 0 and last >= first");
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((last_db - first_db) / step_db + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(first_db + static_cast<double>(i) * step_db);
    return out;
}

std::vector<double> default_snr_grid_db() {
    return snr_grid_db(60.0, 180.0, 20.0);
}

} // namespace stalecsi::analysis

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

#include "stalecsi/analysis.hpp"
#include "stalecsi/numerics.hpp"
#include "stalecsi/parallel.hpp"
#include "stalecsi/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace stalecsi::baselines {

// Zero-forcing on delayed quantized directions. The first N_fd symbols of every block
// carry no data; the remaining N - N_fd are served with the beamformers.
struct ZfConfig {
    std::size_t K = 2;
    Rational N = 1;
    Rational N_fd = 0;
    Rational alpha = 1;
    // Throws std::invalid_argument unless K >= 1, N >= 1, N_fd >= 0, alpha >= 0. The Monte
    // Carlo evaluators additionally need N_fd < N.
    void validate() const;
};

// Unit beamformers w_k orthogonal to every direction j != k: normalized columns of the
// inverse of the matrix whose rows are the conjugated directions. Throws DegenerateDraw
// when the directions are rank deficient.
std::vector<std::vector<Complex>> zf_beamformers(std::span<const std::vector<Complex>> directions);

// Sum rate (1 - N_fd/N) sum_k log2(1 + SINR_k) with power P/K per user, feedback
// Q = alpha (K-1) log2 P bits per user from the statistical quantizer model, averaged
// over `opts.trials` blocks. All powers share the same channel and quantizer draws.
std::vector<analysis::RateSample> zf_rate_curve(const ZfConfig& cfg, std::span<const double> powers,
                                                const McOptions& opts);

analysis::RateSample zf_rate_mc(const ZfConfig& cfg, double P, const McOptions& opts);

// Per-user SINR with given beamformers against true channels (columns of h, M x K) at
// per-user power p.
std::vector<double> zf_sinr(const ComplexMatrix& h, std::span<const std::vector<Complex>> beamformers, double p);

// (1 - N_fd/N) min(alpha, 1) K
Rational zf_dof(const ZfConfig& cfg);

// alpha K (K-1) / N
Rational zf_overhead(const ZfConfig& cfg);

// K (1 - (min(alpha, 1) N_fd + (K-1) alpha) / N). Requires alpha > 0 (std::domain_error
// otherwise; at alpha = 0 the expression would report K while the scheme has no DoF).
Rational zf_net_dof(const ZfConfig& cfg);

// Net DoF at alpha = 1: K (1 - (N_fd + K - 1) / N).
Rational zf_max_net_dof(std::size_t K, const Rational& N, const Rational& N_fd);

analysis::NetDofReport zf_report(const ZfConfig& cfg);

inline Rational siso_net_dof() {
    return 1;
}

analysis::NetDofReport siso_report();

} // namespace stalecsi::baselines

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

#include "stalecsi/mat_scheme.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_Mat2RateTrials(benchmark::State& state) {
    const stalecsi::mat::MatRateConfig cfg;
    const std::vector<double> powers{1e6, 1e12, 1e18};
    const stalecsi::McOptions opts{static_cast<std::size_t>(state.range(0)), 1, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(stalecsi::mat::mat_rate_curve(cfg, powers, opts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Mat2RateTrials)->Arg(100);

void BM_StructuralSystemK3(benchmark::State& state) {
    auto rng = stalecsi::Stream::derive(3, "bench-synth", 0);
    const std::vector<double> sin2(5, 1e-4);
    for (auto _ : state) {
        const auto sys = stalecsi::mat::synth_system_general(3, sin2, rng);
        benchmark::DoNotOptimize(stalecsi::mat::user_rate(sys, 1e9));
    }
}
BENCHMARK(BM_StructuralSystemK3);

} // namespace

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
#include "stalecsi/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

stalecsi::ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    auto rng = stalecsi::Stream::derive(seed, "bench-matrix", rows * 1000 + cols);
    stalecsi::ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rng.complex_normal();
    return m;
}

void BM_SingularValues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(n, 2 * n, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(stalecsi::singular_values(m));
}
BENCHMARK(BM_SingularValues)->Arg(3)->Arg(11)->Arg(25);

void BM_FullSvd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(n, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(stalecsi::svd(m));
}
BENCHMARK(BM_FullSvd)->Arg(4)->Arg(12)->Arg(36);

} // namespace

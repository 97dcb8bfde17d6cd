// Copyright 2026 The QSS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qss/oracle.hpp"

namespace {

void BM_MinDistance(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qss::LinearCode code = qss::build_poly_code(n, n / 2, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qss::min_distance(code));
    }
}
BENCHMARK(BM_MinDistance)->Arg(4)->Arg(5)->Arg(6);

void BM_PauliMul(benchmark::State& state) {
    qss::PauliWord a(5, 8, 2, {1, 2, 3, 4, 0, 1, 2, 3}, {4, 3, 2, 1, 0, 4, 3, 2});
    qss::PauliWord b(5, 8, 1, {0, 1, 0, 1, 0, 1, 0, 1}, {1, 1, 2, 2, 3, 3, 4, 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qss::pauli_mul(a, b));
    }
}
BENCHMARK(BM_PauliMul);

void BM_EncodeThreshold(benchmark::State& state) {
    qss::Scheme scheme = qss::build_threshold(static_cast<int>(state.range(0)),
                                              2 * static_cast<int>(state.range(0)) - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qss::encode_basis(scheme, 1));
    }
}
BENCHMARK(BM_EncodeThreshold)->Arg(2)->Arg(3)->Arg(4);

void BM_AccessMapThreshold(benchmark::State& state) {
    qss::Scheme scheme = qss::build_threshold(2, 3);
    qss::EncoderView view = qss::make_encoder_view(scheme);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qss::access_map(view));
    }
}
BENCHMARK(BM_AccessMapThreshold);

void BM_HybridEncode(benchmark::State& state) {
    qss::HybridScheme h = qss::build_hybrid(3, 4, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qss::encode_classical(h, 2, 3));
    }
}
BENCHMARK(BM_HybridEncode);

void BM_HybridReadout(benchmark::State& state) {
    qss::HybridScheme h = qss::build_hybrid(3, 4, 5);
    qss::DensityMatrix rho = qss::encode_classical(h, 2, 3);
    qss::DensityMatrix rho_t = qss::partial_trace(rho, {0, 1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qss::reconstruct_classical(h, {0, 1, 2}, rho_t));
    }
}
BENCHMARK(BM_HybridReadout);

}  // namespace

BENCHMARK_MAIN();

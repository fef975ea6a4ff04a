// Copyright 2026 The RBNL Authors
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

// Throughput of the setting sweeps and the per-setting cost of the two
// evaluation paths (the reference path built from full dephasing maps, and
// the block-diagonal kernel the sweeps run on).

#include <cmath>

#include <benchmark/benchmark.h>

#include "rbnl/optimizer.hpp"
#include "rbnl/realism.hpp"
#include "rbnl/settings.hpp"
#include "rbnl/states.hpp"
#include "sweep_kernel.hpp"

namespace {

// Full tripartite grid sweep, one cut of a symmetric state. Reported items
// are evaluated settings.
void BM_TripartiteGridSweep(benchmark::State &state) {
    const rbnl::DensityMatrix rho =
        rbnl::noisy_state({rbnl::PureFamily::Ghz, 0.3});
    const double increment = M_PI / static_cast<double>(state.range(0));
    long long settings = 0;
    for (auto _ : state) {
        const auto result =
            rbnl::n3(rho, rbnl::GridStrategy{increment}, /*symmetric=*/true);
        benchmark::DoNotOptimize(result.value);
        settings += result.evaluations;
    }
    state.SetItemsProcessed(settings);
}
BENCHMARK(BM_TripartiteGridSweep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

// Same sweep over all three cuts (no symmetry shortcut).
void BM_TripartiteFullSweep(benchmark::State &state) {
    const rbnl::DensityMatrix rho = rbnl::noisy_state({rbnl::PureFamily::W, 0.3});
    const double increment = M_PI / static_cast<double>(state.range(0));
    long long settings = 0;
    for (auto _ : state) {
        const auto result = rbnl::n3(rho, rbnl::GridStrategy{increment});
        benchmark::DoNotOptimize(result.value);
        settings += result.evaluations;
    }
    state.SetItemsProcessed(settings);
}
BENCHMARK(BM_TripartiteFullSweep)->Arg(4)->Unit(benchmark::kMillisecond);

// Seeded random sampling of one cut.
void BM_RandomSweep(benchmark::State &state) {
    const rbnl::DensityMatrix rho = rbnl::ghz_state();
    long long settings = 0;
    for (auto _ : state) {
        const auto result = rbnl::n3(rho, rbnl::RandomStrategy{state.range(0), 1},
                                     /*symmetric=*/true);
        benchmark::DoNotOptimize(result.value);
        settings += result.evaluations;
    }
    state.SetItemsProcessed(settings);
}
BENCHMARK(BM_RandomSweep)->Arg(10000)->Unit(benchmark::kMillisecond);

// Two-site sweep over the fine grid.
void BM_BipartiteGridSweep(benchmark::State &state) {
    const rbnl::DensityMatrix rho = rbnl::ghz_state().reduced({0, 1});
    long long settings = 0;
    for (auto _ : state) {
        const auto result = rbnl::n2(rho, rbnl::GridStrategy{M_PI / 8.0});
        benchmark::DoNotOptimize(result.value);
        settings += result.evaluations;
    }
    state.SetItemsProcessed(settings);
}
BENCHMARK(BM_BipartiteGridSweep)->Unit(benchmark::kMillisecond);

// Per-setting cost of the kernel: all three cuts of one setting.
void BM_KernelEvaluate(benchmark::State &state) {
    const rbnl::DensityMatrix rho = rbnl::noisy_state({rbnl::PureFamily::W, 0.2});
    const rbnl::detail::TripartiteKernel kernel(rho.matrix());
    const auto a = rbnl::detail::basis_for({0.3, 0.4});
    const auto b = rbnl::detail::basis_for({1.1, 2.7});
    const auto c = rbnl::detail::basis_for({2.0, 5.2});
    for (auto _ : state) {
        const auto entropies = kernel.evaluate(a, b, c, 0b111);
        benchmark::DoNotOptimize(entropies.s_all);
    }
    state.SetItemsProcessed(static_cast<long long>(state.iterations()));
}
BENCHMARK(BM_KernelEvaluate);

// Per-setting cost of the reference path the kernel is checked against:
// three dephasing maps and four eight-dimensional entropies per target.
void BM_ReferenceEvaluate(benchmark::State &state) {
    const rbnl::DensityMatrix rho = rbnl::noisy_state({rbnl::PureFamily::W, 0.2});
    const rbnl::Setting setting =
        rbnl::setting_from_directions({{0.3, 0.4}, {1.1, 2.7}, {2.0, 5.2}});
    for (auto _ : state) {
        for (int target = 0; target < 3; ++target) {
            benchmark::DoNotOptimize(rbnl::contextual_nl_3(rho, target, setting));
        }
    }
    state.SetItemsProcessed(static_cast<long long>(state.iterations()));
}
BENCHMARK(BM_ReferenceEvaluate);

}  // namespace

BENCHMARK_MAIN();

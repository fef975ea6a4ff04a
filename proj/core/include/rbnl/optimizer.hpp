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

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rbnl/realism.hpp"
#include "rbnl/settings.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

// Exhaustive angular grid (the full enumeration by default; dedupe collapses
// physically duplicated directions).
struct GridStrategy {
    double increment = M_PI / 8.0;
    bool dedupe = false;
};

// Seeded uniform sampling on the sphere.
struct RandomStrategy {
    long long count = 1000000;
    std::uint64_t seed = 1;
};

using OptimizationStrategy = std::variant<GridStrategy, RandomStrategy>;

// One-site-versus-rest cut of a three-site state, named by the single site.
enum class Bipartition { AvsBC = 0, BvsAC = 1, CvsAB = 2 };

struct SweepOptions {
    // 0 means one worker per hardware thread.
    int workers = 0;
};

struct NonlocalityResult {
    double value = 0.0;  // nats, clamped nonnegative
    Setting argmax;      // first setting in enumeration order achieving value
    long long evaluations = 0;
    OptimizationStrategy strategy;
};

// Maximum contextual nonlocality of a two-site state over the strategy's
// settings. Ties break to the first setting in enumeration order.
NonlocalityResult n2(const DensityMatrix &rho, const OptimizationStrategy &strategy,
                     const SweepOptions &options = {});

// Maximum contextual nonlocality of a three-site state with the cut's single
// site as target.
NonlocalityResult n_bipartition(const DensityMatrix &rho, Bipartition cut,
                                const OptimizationStrategy &strategy,
                                const SweepOptions &options = {});

struct TripartiteResult {
    double value = 0.0;  // min over cuts
    Bipartition min_cut = Bipartition::AvsBC;
    // One entry per computed cut, in cut order; a single entry when the
    // symmetric shortcut is used.
    std::vector<NonlocalityResult> per_cut;
    bool symmetric_shortcut_used = false;
    long long evaluations = 0;
};

// Genuine nonlocality: minimum over the three cuts of the per-cut maximum.
// symmetric=true computes one cut and reuses it, which is valid only for
// subsystem-permutation-symmetric states; the claim is spot-checked on 100
// random settings (comparing cuts under the matching site permutation of the
// observable tuple) and a violation raises ConsistencyError.
TripartiteResult n3(const DensityMatrix &rho, const OptimizationStrategy &strategy,
                    bool symmetric = false, const SweepOptions &options = {});

// Genuine entanglement of a pure three-site state: minimum over cuts of the
// reduced single-site entropy. Requires tr(rho^2) >= 1 - 1e-8.
double e3(const DensityMatrix &rho);

// The three optimized ingredients of the monogamy witness. The reduced-state
// maxima reuse the given strategy at two sites (same increment and dedupe
// flag, or same count and seed).
struct MonogamyComponents {
    double n3 = 0.0;
    double n2_ab = 0.0;
    double n2_ac = 0.0;
};

MonogamyComponents monogamy_components(const DensityMatrix &rho,
                                       const OptimizationStrategy &strategy, bool symmetric,
                                       const SweepOptions &options = {});

// n3^alpha - n2_ab^alpha - n2_ac^alpha. The power is applied to the optimized
// values: x -> x^alpha is strictly increasing on x >= 0, so maximizing first
// and powering after gives the same number.
double monogamy_witness(const MonogamyComponents &components, double alpha);

double monogamy_witness(const DensityMatrix &rho, double alpha,
                        const OptimizationStrategy &strategy, bool symmetric = false,
                        const SweepOptions &options = {});

}  // namespace rbnl

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

#include "rbnl/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rbnl/errors.hpp"
#include "sweep_kernel.hpp"

namespace rbnl {

namespace {

// Seed of the internal spot check guarding the symmetric shortcut. Fixed so
// the check, like everything else, is reproducible.
constexpr std::uint64_t kSymmetryCheckSeed = 0x5e77a9c3u;
constexpr int kSymmetryCheckSettings = 100;
constexpr double kSymmetryAtol = 1e-9;

void check_qubits(const DensityMatrix &rho, int sites) {
    if (rho.sites() != sites) {
        throw InvalidDimensions("expected a " + std::to_string(sites) + "-site state, got " +
                                std::to_string(rho.sites()) + " sites");
    }
    for (int d : rho.dims()) {
        if (d != 2) {
            throw InvalidDimensions("optimization sweeps support qubit sites only");
        }
    }
}

std::vector<BlochDirection> grid_setting_directions(const SettingGrid &grid, long long index) {
    int idx[3] = {0, 0, 0};
    grid.direction_indices(index, idx);
    std::vector<BlochDirection> dirs;
    dirs.reserve(static_cast<std::size_t>(grid.sites()));
    for (int s = 0; s < grid.sites(); ++s) {
        dirs.push_back(grid.directions()[static_cast<std::size_t>(idx[s])]);
    }
    return dirs;
}

std::vector<BlochDirection> random_setting_directions(const RandomStrategy &strategy, int sites,
                                                      long long index) {
    RandomSettingStream stream(index + 1, strategy.seed, sites);
    std::vector<BlochDirection> dirs;
    for (long long i = 0; i <= index; ++i) {
        stream.next(dirs);
    }
    return dirs;
}

NonlocalityResult finish_result(const detail::CutSweepOutcome &outcome,
                                const OptimizationStrategy &strategy, int sites,
                                long long evaluations) {
    if (outcome.best_index < 0) {
        throw std::invalid_argument("optimization strategy produced no settings");
    }
    if (outcome.min_eta < kPsdFloor) {
        throw ConsistencyError("contextual nonlocality evaluated to " +
                               std::to_string(outcome.min_eta) +
                               ", beyond the rounding tolerance");
    }
    NonlocalityResult result;
    result.value = clamp_nonnegative(outcome.best_eta, "contextual nonlocality");
    result.evaluations = evaluations;
    result.strategy = strategy;
    if (const auto *grid_strategy = std::get_if<GridStrategy>(&strategy)) {
        const SettingGrid grid(grid_strategy->increment, sites, grid_strategy->dedupe);
        result.argmax = setting_from_directions(grid_setting_directions(grid, outcome.best_index));
    } else {
        const auto &random_strategy = std::get<RandomStrategy>(strategy);
        result.argmax = setting_from_directions(
            random_setting_directions(random_strategy, sites, outcome.best_index));
    }
    return result;
}

}  // namespace

NonlocalityResult n2(const DensityMatrix &rho, const OptimizationStrategy &strategy,
                     const SweepOptions &options) {
    (void)options;  // two-site sweeps run serially
    check_qubits(rho, 2);
    const double s_rho = von_neumann_entropy(rho.matrix());
    detail::CutSweepOutcome outcome;
    long long evaluations = 0;
    if (const auto *grid_strategy = std::get_if<GridStrategy>(&strategy)) {
        const SettingGrid grid(grid_strategy->increment, 2, grid_strategy->dedupe);
        outcome = detail::sweep_grid_bipartite(rho.matrix(), s_rho, grid.directions());
        evaluations = grid.setting_count();
    } else {
        const auto &random_strategy = std::get<RandomStrategy>(strategy);
        outcome = detail::sweep_random_bipartite(rho.matrix(), s_rho, random_strategy.count,
                                                 random_strategy.seed);
        evaluations = random_strategy.count;
    }
    return finish_result(outcome, strategy, 2, evaluations);
}

namespace {

struct TripartiteSweep {
    std::array<detail::CutSweepOutcome, 3> outcomes;
    long long settings = 0;
};

TripartiteSweep sweep_tripartite(const DensityMatrix &rho, double s_rho,
                                 const OptimizationStrategy &strategy, unsigned cuts_mask,
                                 const SweepOptions &options) {
    TripartiteSweep sweep;
    if (const auto *grid_strategy = std::get_if<GridStrategy>(&strategy)) {
        const SettingGrid grid(grid_strategy->increment, 3, grid_strategy->dedupe);
        sweep.outcomes = detail::sweep_grid_tripartite(rho.matrix(), s_rho, grid.directions(),
                                                       cuts_mask, options.workers);
        sweep.settings = grid.setting_count();
    } else {
        const auto &random_strategy = std::get<RandomStrategy>(strategy);
        sweep.outcomes =
            detail::sweep_random_tripartite(rho.matrix(), s_rho, random_strategy.count,
                                            random_strategy.seed, cuts_mask, options.workers);
        sweep.settings = random_strategy.count;
    }
    return sweep;
}

// The shortcut claims every cut has the same maximum because the state is
// invariant under site permutations. Cuts agree setting-by-setting only after
// permuting the observable tuple the same way as the sites, so that is what
// gets compared: eta(A|BC; a,b,c), eta(B|AC; b,a,c), eta(C|AB; c,b,a).
void check_permutation_symmetry(const DensityMatrix &rho) {
    Sampler sampler(kSymmetryCheckSeed);
    const double s_rho = von_neumann_entropy(rho.matrix());
    for (int trial = 0; trial < kSymmetryCheckSettings; ++trial) {
        const BlochDirection a = sampler.direction();
        const BlochDirection b = sampler.direction();
        const BlochDirection c = sampler.direction();
        const double eta_a = contextual_nl_3(rho, 0, setting_from_directions({a, b, c}), s_rho);
        const double eta_b = contextual_nl_3(rho, 1, setting_from_directions({b, a, c}), s_rho);
        const double eta_c = contextual_nl_3(rho, 2, setting_from_directions({c, b, a}), s_rho);
        if (std::abs(eta_a - eta_b) > kSymmetryAtol || std::abs(eta_a - eta_c) > kSymmetryAtol) {
            throw ConsistencyError(
                "symmetric shortcut requested for a state without subsystem-permutation "
                "symmetry (cut maxima would differ)");
        }
    }
}

}  // namespace

NonlocalityResult n_bipartition(const DensityMatrix &rho, Bipartition cut,
                                const OptimizationStrategy &strategy,
                                const SweepOptions &options) {
    check_qubits(rho, 3);
    const double s_rho = von_neumann_entropy(rho.matrix());
    const int t = static_cast<int>(cut);
    const TripartiteSweep sweep =
        sweep_tripartite(rho, s_rho, strategy, 1u << static_cast<unsigned>(t), options);
    return finish_result(sweep.outcomes[static_cast<std::size_t>(t)], strategy, 3,
                         sweep.settings);
}

TripartiteResult n3(const DensityMatrix &rho, const OptimizationStrategy &strategy,
                    bool symmetric, const SweepOptions &options) {
    check_qubits(rho, 3);
    const double s_rho = von_neumann_entropy(rho.matrix());

    TripartiteResult result;
    if (symmetric) {
        check_permutation_symmetry(rho);
        const TripartiteSweep sweep = sweep_tripartite(rho, s_rho, strategy, 0b001u, options);
        result.per_cut.push_back(finish_result(sweep.outcomes[0], strategy, 3, sweep.settings));
        result.value = result.per_cut[0].value;
        result.min_cut = Bipartition::AvsBC;
        result.symmetric_shortcut_used = true;
        result.evaluations = sweep.settings;
        return result;
    }

    const TripartiteSweep sweep = sweep_tripartite(rho, s_rho, strategy, 0b111u, options);
    for (int t = 0; t < 3; ++t) {
        result.per_cut.push_back(
            finish_result(sweep.outcomes[static_cast<std::size_t>(t)], strategy, 3,
                          sweep.settings));
    }
    result.value = result.per_cut[0].value;
    result.min_cut = Bipartition::AvsBC;
    for (int t = 1; t < 3; ++t) {
        if (result.per_cut[static_cast<std::size_t>(t)].value < result.value) {
            result.value = result.per_cut[static_cast<std::size_t>(t)].value;
            result.min_cut = static_cast<Bipartition>(t);
        }
    }
    result.evaluations = 3 * sweep.settings;
    return result;
}

double e3(const DensityMatrix &rho) {
    check_qubits(rho, 3);
    if (rho.purity() < 1.0 - 1e-8) {
        throw NotPure("genuine tripartite entanglement is defined here for pure states only");
    }
    double value = von_neumann_entropy(rho.reduced({0}).matrix());
    for (int s = 1; s < 3; ++s) {
        value = std::min(value, von_neumann_entropy(rho.reduced({s}).matrix()));
    }
    return value;
}

MonogamyComponents monogamy_components(const DensityMatrix &rho,
                                       const OptimizationStrategy &strategy, bool symmetric,
                                       const SweepOptions &options) {
    check_qubits(rho, 3);
    MonogamyComponents components;
    components.n3 = n3(rho, strategy, symmetric, options).value;
    components.n2_ab = n2(rho.reduced({0, 1}), strategy, options).value;
    components.n2_ac = n2(rho.reduced({0, 2}), strategy, options).value;
    return components;
}

double monogamy_witness(const MonogamyComponents &components, double alpha) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("monogamy exponent must be positive");
    }
    return std::pow(components.n3, alpha) - std::pow(components.n2_ab, alpha) -
           std::pow(components.n2_ac, alpha);
}

double monogamy_witness(const DensityMatrix &rho, double alpha,
                        const OptimizationStrategy &strategy, bool symmetric,
                        const SweepOptions &options) {
    return monogamy_witness(monogamy_components(rho, strategy, symmetric, options), alpha);
}

}  // namespace rbnl

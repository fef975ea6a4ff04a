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

// Internal sweep engine. Contextual nonlocality at one setting needs four
// entropies; three of them depend on only part of the direction tuple, and in
// the measurement product basis every dephased state is block-diagonal:
//
//   dephase all three sites  -> diagonal: 8 probabilities,
//   dephase a pair of sites  -> four 2x2 blocks: closed-form eigenvalues,
//   dephase a single site    -> two 4x4 blocks: small Hermitian eigensolve.
//
// Grid sweeps therefore tabulate the single-site and pair entropies (O(D) and
// O(D^2) work) and spend the O(D^3) loop on the eight probabilities alone,
// obtained by contracting one site at a time. All cuts share that loop.
//
// Reductions are chunked by the leading direction index and merged in chunk
// order with strict ">" improvement, so the maximum and its argmax are
// bit-identical for any worker count and ties go to the first setting in
// enumeration order.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rbnl/linalg.hpp"
#include "rbnl/states.hpp"

namespace rbnl::detail {

using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<Complex, 8, 8, Eigen::RowMajor>;

// Orthonormal eigenbasis of the spin observable along one direction.
struct SiteBasis {
    Vec2 v[2];
};

SiteBasis basis_for(const BlochDirection &dir);

// Entropy of a Hermitian 2x2 block via the closed-form eigenvalue pair.
double entropy_2x2(const Mat2 &b);

// Entropy of a Hermitian 4x4 block via an eigenvalue-only solve.
double entropy_4x4(const Mat4 &m);

// Partial contractions <u|_site M |u>_site, indexed by the site's stride in
// the row-major product layout (3-site strides: 4, 2, 1).
Mat4 contract_site0(const Mat8 &rho, const Vec2 &u);
Mat4 contract_site1(const Mat8 &rho, const Vec2 &u);
Mat4 contract_site2(const Mat8 &rho, const Vec2 &u);
Mat2 contract_pos0(const Mat4 &m, const Vec2 &u);  // stride-2 factor
Mat2 contract_pos1(const Mat4 &m, const Vec2 &u);  // stride-1 factor
double quad_form(const Mat2 &m, const Vec2 &u);

// Per-setting entropies of a 3-site state. s_single[t] dephases site t only;
// s_pair[t] dephases the complementary pair; s_all dephases everything.
struct TripartiteEntropies {
    std::array<double, 3> s_single{};
    std::array<double, 3> s_pair{};
    double s_all = 0.0;
};

// Bit t of cuts_mask requests s_single[t] and s_pair[t]; s_all always comes.
class TripartiteKernel {
  public:
    explicit TripartiteKernel(const CMat &rho);

    TripartiteEntropies evaluate(const SiteBasis &a, const SiteBasis &b, const SiteBasis &c,
                                 unsigned cuts_mask) const;

    const Mat8 &rho() const { return rho_; }

  private:
    Mat8 rho_;
};

// Running maximum of a sweep plus the minimum raw value, which the caller
// checks against the rounding floor.
struct CutSweepOutcome {
    double best_eta = 0.0;
    long long best_index = -1;
    double min_eta = 0.0;
};

// Sweep of the full direction grid of a 3-site state; one outcome per
// requested cut (unrequested entries keep best_index = -1).
std::array<CutSweepOutcome, 3> sweep_grid_tripartite(const CMat &rho, double s_rho,
                                                     const std::vector<BlochDirection> &dirs,
                                                     unsigned cuts_mask, int workers);

// Sweep of `count` seeded random settings of a 3-site state.
std::array<CutSweepOutcome, 3> sweep_random_tripartite(const CMat &rho, double s_rho,
                                                       long long count, std::uint64_t seed,
                                                       unsigned cuts_mask, int workers);

// Two-site sweeps (grid and random); the setting space is small enough that
// these run serially.
CutSweepOutcome sweep_grid_bipartite(const CMat &rho, double s_rho,
                                     const std::vector<BlochDirection> &dirs);

CutSweepOutcome sweep_random_bipartite(const CMat &rho, double s_rho, long long count,
                                       std::uint64_t seed);

// Effective worker count: `requested` capped to the chunk count, with zero or
// negative meaning the hardware concurrency.
int resolve_workers(int requested, long long chunks);

}  // namespace rbnl::detail

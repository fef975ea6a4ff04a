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

#include "sweep_kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include <Eigen/Eigenvalues>

#include "rbnl/errors.hpp"
#include "rbnl/settings.hpp"

namespace rbnl::detail {

SiteBasis basis_for(const BlochDirection &dir) {
    const double c = std::cos(dir.theta / 2.0);
    const double s = std::sin(dir.theta / 2.0);
    const Complex phase(std::cos(dir.phi), std::sin(dir.phi));
    SiteBasis b;
    b.v[0] << Complex(c, 0.0), phase * s;
    b.v[1] << -std::conj(phase) * s, Complex(c, 0.0);
    return b;
}

namespace {

inline double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

}  // namespace

double entropy_2x2(const Mat2 &b) {
    const double b00 = b(0, 0).real();
    const double b11 = b(1, 1).real();
    const double d = b00 - b11;
    const double disc = std::sqrt(d * d + 4.0 * std::norm(b(0, 1)));
    const double lo = 0.5 * (b00 + b11 - disc);
    const double hi = 0.5 * (b00 + b11 + disc);
    return entropy_term(lo) + entropy_term(hi);
}

double entropy_4x4(const Mat4 &m) {
    Eigen::SelfAdjointEigenSolver<Mat4> solver(m, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        s += entropy_term(solver.eigenvalues()(i));
    }
    return s;
}

Mat4 contract_site0(const Mat8 &rho, const Vec2 &u) {
    Mat4 q = Mat4::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int a2 = 0; a2 < 2; ++a2) {
            q += (std::conj(u(a)) * u(a2)) * rho.block<4, 4>(4 * a, 4 * a2);
        }
    }
    return q;
}

Mat4 contract_site1(const Mat8 &rho, const Vec2 &u) {
    Mat4 t = Mat4::Zero();
    for (int b = 0; b < 2; ++b) {
        for (int b2 = 0; b2 < 2; ++b2) {
            const Complex w = std::conj(u(b)) * u(b2);
            for (int a = 0; a < 2; ++a) {
                for (int c = 0; c < 2; ++c) {
                    for (int a2 = 0; a2 < 2; ++a2) {
                        for (int c2 = 0; c2 < 2; ++c2) {
                            t(2 * a + c, 2 * a2 + c2) +=
                                w * rho(4 * a + 2 * b + c, 4 * a2 + 2 * b2 + c2);
                        }
                    }
                }
            }
        }
    }
    return t;
}

Mat4 contract_site2(const Mat8 &rho, const Vec2 &u) {
    Mat4 t = Mat4::Zero();
    for (int c = 0; c < 2; ++c) {
        for (int c2 = 0; c2 < 2; ++c2) {
            const Complex w = std::conj(u(c)) * u(c2);
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    for (int a2 = 0; a2 < 2; ++a2) {
                        for (int b2 = 0; b2 < 2; ++b2) {
                            t(2 * a + b, 2 * a2 + b2) +=
                                w * rho(4 * a + 2 * b + c, 4 * a2 + 2 * b2 + c2);
                        }
                    }
                }
            }
        }
    }
    return t;
}

Mat2 contract_pos0(const Mat4 &m, const Vec2 &u) {
    Mat2 r = Mat2::Zero();
    for (int j = 0; j < 2; ++j) {
        for (int j2 = 0; j2 < 2; ++j2) {
            r += (std::conj(u(j)) * u(j2)) * m.block<2, 2>(2 * j, 2 * j2);
        }
    }
    return r;
}

Mat2 contract_pos1(const Mat4 &m, const Vec2 &u) {
    Mat2 r;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            r(x, y) = std::conj(u(0)) * (m(2 * x, 2 * y) * u(0) + m(2 * x, 2 * y + 1) * u(1)) +
                      std::conj(u(1)) *
                          (m(2 * x + 1, 2 * y) * u(0) + m(2 * x + 1, 2 * y + 1) * u(1));
        }
    }
    return r;
}

double quad_form(const Mat2 &m, const Vec2 &u) {
    const Complex value =
        std::conj(u(0)) * (m(0, 0) * u(0) + m(0, 1) * u(1)) +
        std::conj(u(1)) * (m(1, 0) * u(0) + m(1, 1) * u(1));
    return value.real();
}

TripartiteKernel::TripartiteKernel(const CMat &rho) {
    if (rho.rows() != 8 || rho.cols() != 8) {
        throw InvalidDimensions("tripartite kernel needs an 8x8 matrix");
    }
    rho_ = rho;
}

TripartiteEntropies TripartiteKernel::evaluate(const SiteBasis &a, const SiteBasis &b,
                                               const SiteBasis &c, unsigned cuts_mask) const {
    TripartiteEntropies out;

    Mat4 q[2];
    for (int i = 0; i < 2; ++i) {
        q[i] = contract_site0(rho_, a.v[i]);
    }
    Mat2 r[2][2];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = contract_pos0(q[i], b.v[j]);
        }
    }

    double s_all = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                s_all += entropy_term(std::max(quad_form(r[i][j], c.v[k]), 0.0));
            }
        }
    }
    out.s_all = s_all;

    Mat4 t[2];
    if (cuts_mask & 0b011u) {
        for (int j = 0; j < 2; ++j) {
            t[j] = contract_site1(rho_, b.v[j]);
        }
    }

    if (cuts_mask & 0b001u) {
        out.s_single[0] = entropy_4x4(q[0]) + entropy_4x4(q[1]);
        double s = 0.0;
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                s += entropy_2x2(contract_pos1(t[j], c.v[k]));
            }
        }
        out.s_pair[0] = s;
    }
    if (cuts_mask & 0b010u) {
        out.s_single[1] = entropy_4x4(t[0]) + entropy_4x4(t[1]);
        double s = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 2; ++k) {
                s += entropy_2x2(contract_pos1(q[i], c.v[k]));
            }
        }
        out.s_pair[1] = s;
    }
    if (cuts_mask & 0b100u) {
        double s = 0.0;
        for (int k = 0; k < 2; ++k) {
            s += entropy_4x4(contract_site2(rho_, c.v[k]));
        }
        out.s_single[2] = s;
        s = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                s += entropy_2x2(r[i][j]);
            }
        }
        out.s_pair[2] = s;
    }
    return out;
}

int resolve_workers(int requested, long long chunks) {
    int n = requested;
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) {
            n = 1;
        }
    }
    if (static_cast<long long>(n) > chunks) {
        n = static_cast<int>(std::max<long long>(chunks, 1));
    }
    return n;
}

namespace {

struct ChunkBest {
    double best_eta = 0.0;
    long long best_index = -1;
    double min_eta = 0.0;
};

// Per-cut, per-chunk partial results, merged in chunk order afterwards.
using ChunkResults = std::vector<std::array<ChunkBest, 3>>;

void merge_chunks(const ChunkResults &chunks, unsigned cuts_mask,
                  std::array<CutSweepOutcome, 3> &out) {
    std::array<bool, 3> seen{false, false, false};
    for (const auto &chunk : chunks) {
        for (int t = 0; t < 3; ++t) {
            if (!(cuts_mask & (1u << t)) || chunk[t].best_index < 0) {
                continue;
            }
            CutSweepOutcome &o = out[t];
            if (!seen[t]) {
                o.best_eta = chunk[t].best_eta;
                o.best_index = chunk[t].best_index;
                o.min_eta = chunk[t].min_eta;
                seen[t] = true;
            } else {
                if (chunk[t].best_eta > o.best_eta) {
                    o.best_eta = chunk[t].best_eta;
                    o.best_index = chunk[t].best_index;
                }
                o.min_eta = std::min(o.min_eta, chunk[t].min_eta);
            }
        }
    }
}

void run_workers(int workers, long long chunk_count, const std::function<void(long long)> &body) {
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            const long long chunk = next.fetch_add(1);
            if (chunk >= chunk_count) {
                return;
            }
            body(chunk);
        }
    };
    if (workers <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) {
        pool.emplace_back(worker);
    }
    for (std::thread &th : pool) {
        th.join();
    }
}

}  // namespace

std::array<CutSweepOutcome, 3> sweep_grid_tripartite(const CMat &rho, double s_rho,
                                                     const std::vector<BlochDirection> &dirs,
                                                     unsigned cuts_mask, int workers) {
    const TripartiteKernel kernel(rho);
    const int d = static_cast<int>(dirs.size());
    const long long d2 = static_cast<long long>(d) * d;

    std::vector<SiteBasis> bases;
    bases.reserve(dirs.size());
    for (const BlochDirection &dir : dirs) {
        bases.push_back(basis_for(dir));
    }

    // Single-site tables: spectrum of the two 4x4 blocks per direction.
    std::array<std::vector<double>, 3> s_single;
    for (int t = 0; t < 3; ++t) {
        if (!(cuts_mask & (1u << t))) {
            continue;
        }
        s_single[t].resize(dirs.size());
        for (int i = 0; i < d; ++i) {
            const auto contract = t == 0   ? &contract_site0
                                  : t == 1 ? &contract_site1
                                           : &contract_site2;
            s_single[t][static_cast<std::size_t>(i)] =
                entropy_4x4(contract(kernel.rho(), bases[static_cast<std::size_t>(i)].v[0])) +
                entropy_4x4(contract(kernel.rho(), bases[static_cast<std::size_t>(i)].v[1]));
        }
    }

    // Pair tables: four closed-form 2x2 blocks per direction pair. The pair
    // complementary to site 0 is (1,2); to site 1 is (0,2); to site 2 is
    // (0,1). The first contraction uses the smaller site, the second lands on
    // position hi-1 of the reduced matrix.
    std::array<std::vector<double>, 3> s_pair;
    if (cuts_mask & 0b001u) {
        s_pair[0].resize(static_cast<std::size_t>(d2));
        for (int d1 = 0; d1 < d; ++d1) {
            Mat4 t[2];
            for (int j = 0; j < 2; ++j) {
                t[j] = contract_site1(kernel.rho(), bases[static_cast<std::size_t>(d1)].v[j]);
            }
            for (int dc = 0; dc < d; ++dc) {
                double s = 0.0;
                for (int j = 0; j < 2; ++j) {
                    for (int k = 0; k < 2; ++k) {
                        s += entropy_2x2(
                            contract_pos1(t[j], bases[static_cast<std::size_t>(dc)].v[k]));
                    }
                }
                s_pair[0][static_cast<std::size_t>(d1) * static_cast<std::size_t>(d) +
                          static_cast<std::size_t>(dc)] = s;
            }
        }
    }
    if (cuts_mask & 0b110u) {
        if (cuts_mask & 0b010u) {
            s_pair[1].resize(static_cast<std::size_t>(d2));
        }
        if (cuts_mask & 0b100u) {
            s_pair[2].resize(static_cast<std::size_t>(d2));
        }
        for (int d0 = 0; d0 < d; ++d0) {
            Mat4 q[2];
            for (int i = 0; i < 2; ++i) {
                q[i] = contract_site0(kernel.rho(), bases[static_cast<std::size_t>(d0)].v[i]);
            }
            for (int dr = 0; dr < d; ++dr) {
                const SiteBasis &rb = bases[static_cast<std::size_t>(dr)];
                const std::size_t at = static_cast<std::size_t>(d0) * static_cast<std::size_t>(d) +
                                       static_cast<std::size_t>(dr);
                if (cuts_mask & 0b010u) {
                    double s = 0.0;
                    for (int i = 0; i < 2; ++i) {
                        for (int k = 0; k < 2; ++k) {
                            s += entropy_2x2(contract_pos1(q[i], rb.v[k]));
                        }
                    }
                    s_pair[1][at] = s;
                }
                if (cuts_mask & 0b100u) {
                    double s = 0.0;
                    for (int i = 0; i < 2; ++i) {
                        for (int j = 0; j < 2; ++j) {
                            s += entropy_2x2(contract_pos0(q[i], rb.v[j]));
                        }
                    }
                    s_pair[2][at] = s;
                }
            }
        }
    }

    // Main loop: one chunk per leading direction index.
    ChunkResults chunks(dirs.size());
    const int worker_count = resolve_workers(workers, d);

    auto chunk_body = [&](long long chunk) {
        const int i0 = static_cast<int>(chunk);
        std::array<ChunkBest, 3> local;
        bool first = true;

        Mat4 q[2];
        for (int i = 0; i < 2; ++i) {
            q[i] = contract_site0(kernel.rho(), bases[static_cast<std::size_t>(i0)].v[i]);
        }
        Mat2 r[2][2];
        for (int i1 = 0; i1 < d; ++i1) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    r[i][j] = contract_pos0(q[i], bases[static_cast<std::size_t>(i1)].v[j]);
                }
            }
            const long long base_index =
                (static_cast<long long>(i0) * d + i1) * static_cast<long long>(d);
            for (int i2 = 0; i2 < d; ++i2) {
                const SiteBasis &cb = bases[static_cast<std::size_t>(i2)];
                double s_all = 0.0;
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        for (int k = 0; k < 2; ++k) {
                            s_all += entropy_term(std::max(quad_form(r[i][j], cb.v[k]), 0.0));
                        }
                    }
                }

                const double common = -s_all - s_rho;
                double eta[3] = {0.0, 0.0, 0.0};
                if (cuts_mask & 0b001u) {
                    eta[0] = s_single[0][static_cast<std::size_t>(i0)] +
                             s_pair[0][static_cast<std::size_t>(i1) * static_cast<std::size_t>(d) +
                                       static_cast<std::size_t>(i2)] +
                             common;
                }
                if (cuts_mask & 0b010u) {
                    eta[1] = s_single[1][static_cast<std::size_t>(i1)] +
                             s_pair[1][static_cast<std::size_t>(i0) * static_cast<std::size_t>(d) +
                                       static_cast<std::size_t>(i2)] +
                             common;
                }
                if (cuts_mask & 0b100u) {
                    eta[2] = s_single[2][static_cast<std::size_t>(i2)] +
                             s_pair[2][static_cast<std::size_t>(i0) * static_cast<std::size_t>(d) +
                                       static_cast<std::size_t>(i1)] +
                             common;
                }

                const long long index = base_index + i2;
                for (int t = 0; t < 3; ++t) {
                    if (!(cuts_mask & (1u << t))) {
                        continue;
                    }
                    ChunkBest &lb = local[t];
                    if (first) {
                        lb.best_eta = eta[t];
                        lb.best_index = index;
                        lb.min_eta = eta[t];
                    } else {
                        if (eta[t] > lb.best_eta) {
                            lb.best_eta = eta[t];
                            lb.best_index = index;
                        }
                        if (eta[t] < lb.min_eta) {
                            lb.min_eta = eta[t];
                        }
                    }
                }
                first = false;
            }
        }
        chunks[static_cast<std::size_t>(chunk)] = local;
    };

    run_workers(worker_count, d, chunk_body);

    std::array<CutSweepOutcome, 3> out;
    merge_chunks(chunks, cuts_mask, out);
    return out;
}

std::array<CutSweepOutcome, 3> sweep_random_tripartite(const CMat &rho, double s_rho,
                                                       long long count, std::uint64_t seed,
                                                       unsigned cuts_mask, int workers) {
    const TripartiteKernel kernel(rho);

    // The stream is sequential; materialize it once so chunks can be
    // evaluated in parallel without replaying the generator.
    std::vector<BlochDirection> dirs(static_cast<std::size_t>(count) * 3);
    {
        RandomSettingStream stream(count, seed, 3);
        std::vector<BlochDirection> one;
        for (long long i = 0; i < count; ++i) {
            stream.next(one);
            for (int s = 0; s < 3; ++s) {
                dirs[static_cast<std::size_t>(i) * 3 + static_cast<std::size_t>(s)] =
                    one[static_cast<std::size_t>(s)];
            }
        }
    }

    constexpr long long kChunk = 8192;
    const long long chunk_count = count == 0 ? 0 : (count + kChunk - 1) / kChunk;
    ChunkResults chunks(static_cast<std::size_t>(chunk_count));
    const int worker_count = resolve_workers(workers, chunk_count);

    auto chunk_body = [&](long long chunk) {
        const long long begin = chunk * kChunk;
        const long long end = std::min(begin + kChunk, count);
        std::array<ChunkBest, 3> local;
        bool first = true;
        for (long long i = begin; i < end; ++i) {
            const SiteBasis a = basis_for(dirs[static_cast<std::size_t>(i) * 3]);
            const SiteBasis b = basis_for(dirs[static_cast<std::size_t>(i) * 3 + 1]);
            const SiteBasis c = basis_for(dirs[static_cast<std::size_t>(i) * 3 + 2]);
            const TripartiteEntropies e = kernel.evaluate(a, b, c, cuts_mask);
            for (int t = 0; t < 3; ++t) {
                if (!(cuts_mask & (1u << t))) {
                    continue;
                }
                const double eta = e.s_single[static_cast<std::size_t>(t)] +
                                   e.s_pair[static_cast<std::size_t>(t)] - e.s_all - s_rho;
                ChunkBest &lb = local[t];
                if (first) {
                    lb.best_eta = eta;
                    lb.best_index = i;
                    lb.min_eta = eta;
                } else {
                    if (eta > lb.best_eta) {
                        lb.best_eta = eta;
                        lb.best_index = i;
                    }
                    if (eta < lb.min_eta) {
                        lb.min_eta = eta;
                    }
                }
            }
            first = false;
        }
        chunks[static_cast<std::size_t>(chunk)] = local;
    };

    run_workers(worker_count, chunk_count, chunk_body);

    std::array<CutSweepOutcome, 3> out;
    merge_chunks(chunks, cuts_mask, out);
    return out;
}

namespace {

struct BipartiteTables {
    std::vector<double> s_a;
    std::vector<double> s_b;
};

Mat4 to_mat4(const CMat &rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw InvalidDimensions("bipartite kernel needs a 4x4 matrix");
    }
    Mat4 m;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = rho(i, j);
        }
    }
    return m;
}

void track(CutSweepOutcome &o, double eta, long long index) {
    if (o.best_index < 0) {
        o.best_eta = eta;
        o.best_index = index;
        o.min_eta = eta;
        return;
    }
    if (eta > o.best_eta) {
        o.best_eta = eta;
        o.best_index = index;
    }
    if (eta < o.min_eta) {
        o.min_eta = eta;
    }
}

}  // namespace

CutSweepOutcome sweep_grid_bipartite(const CMat &rho, double s_rho,
                                     const std::vector<BlochDirection> &dirs) {
    const Mat4 m = to_mat4(rho);
    const int d = static_cast<int>(dirs.size());

    std::vector<SiteBasis> bases;
    bases.reserve(dirs.size());
    for (const BlochDirection &dir : dirs) {
        bases.push_back(basis_for(dir));
    }

    BipartiteTables tables;
    tables.s_a.resize(dirs.size());
    tables.s_b.resize(dirs.size());
    for (int i = 0; i < d; ++i) {
        const SiteBasis &sb = bases[static_cast<std::size_t>(i)];
        tables.s_a[static_cast<std::size_t>(i)] =
            entropy_2x2(contract_pos0(m, sb.v[0])) + entropy_2x2(contract_pos0(m, sb.v[1]));
        tables.s_b[static_cast<std::size_t>(i)] =
            entropy_2x2(contract_pos1(m, sb.v[0])) + entropy_2x2(contract_pos1(m, sb.v[1]));
    }

    CutSweepOutcome out;
    for (int i0 = 0; i0 < d; ++i0) {
        Mat2 ra[2];
        for (int i = 0; i < 2; ++i) {
            ra[i] = contract_pos0(m, bases[static_cast<std::size_t>(i0)].v[i]);
        }
        for (int i1 = 0; i1 < d; ++i1) {
            const SiteBasis &bb = bases[static_cast<std::size_t>(i1)];
            double s_all = 0.0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    s_all += entropy_term(std::max(quad_form(ra[i], bb.v[j]), 0.0));
                }
            }
            const double eta = tables.s_a[static_cast<std::size_t>(i0)] +
                               tables.s_b[static_cast<std::size_t>(i1)] - s_all - s_rho;
            track(out, eta, static_cast<long long>(i0) * d + i1);
        }
    }
    return out;
}

CutSweepOutcome sweep_random_bipartite(const CMat &rho, double s_rho, long long count,
                                       std::uint64_t seed) {
    const Mat4 m = to_mat4(rho);
    RandomSettingStream stream(count, seed, 2);
    std::vector<BlochDirection> one;
    CutSweepOutcome out;
    for (long long i = 0; i < count; ++i) {
        stream.next(one);
        const SiteBasis a = basis_for(one[0]);
        const SiteBasis b = basis_for(one[1]);
        Mat2 ra[2];
        double s_a = 0.0;
        for (int x = 0; x < 2; ++x) {
            ra[x] = contract_pos0(m, a.v[x]);
            s_a += entropy_2x2(ra[x]);
        }
        const double s_b =
            entropy_2x2(contract_pos1(m, b.v[0])) + entropy_2x2(contract_pos1(m, b.v[1]));
        double s_all = 0.0;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                s_all += entropy_term(std::max(quad_form(ra[x], b.v[y]), 0.0));
            }
        }
        track(out, s_a + s_b - s_all - s_rho, i);
    }
    return out;
}

}  // namespace rbnl::detail

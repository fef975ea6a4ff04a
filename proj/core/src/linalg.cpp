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

#include "rbnl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "rbnl/errors.hpp"

namespace rbnl {

bool approx_equal(const CMat &a, const CMat &b, double atol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return ((a - b).cwiseAbs().maxCoeff() <= atol);
}

bool is_hermitian(const CMat &m, double atol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return approx_equal(m, m.adjoint(), atol);
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) {
        throw InvalidDimensions("probability vector must be nonempty");
    }
    double sum = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0)) {
            throw NotPositiveSemidefinite("probability entry " + std::to_string(x) +
                                          " is negative");
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbAtol) {
        throw ConsistencyError("probabilities sum to " + std::to_string(sum) + ", expected 1");
    }
}

ProbabilityVector::ProbabilityVector(std::initializer_list<double> p)
    : ProbabilityVector(std::vector<double>(p)) {}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMat identity(int dim) {
    if (dim <= 0) {
        throw InvalidDimensions("identity dimension must be positive");
    }
    return CMat::Identity(dim, dim);
}

CMat partial_trace(const CMat &m, const std::vector<int> &dims, const std::vector<int> &keep) {
    if (m.rows() != m.cols()) {
        throw InvalidDimensions("partial trace requires a square matrix");
    }
    if (dims.empty()) {
        throw InvalidDimensions("subsystem dimension list must be nonempty");
    }
    long total = 1;
    for (int d : dims) {
        if (d <= 0) {
            throw InvalidDimensions("subsystem dimensions must be positive");
        }
        total *= d;
    }
    if (total != m.rows()) {
        throw InvalidDimensions("subsystem dimensions multiply to " + std::to_string(total) +
                                ", matrix dimension is " + std::to_string(m.rows()));
    }
    const int n = static_cast<int>(dims.size());
    if (keep.empty() || keep.size() >= dims.size()) {
        throw InvalidDimensions("keep list must be a nonempty proper subset of sites");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n) {
            throw InvalidDimensions("keep index " + std::to_string(keep[i]) + " out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw InvalidDimensions("keep list must be strictly increasing");
        }
    }

    // Row-major strides of each site in the full index.
    std::vector<long> stride(n, 1);
    for (int s = n - 2; s >= 0; --s) {
        stride[s] = stride[s + 1] * dims[s + 1];
    }

    std::vector<int> traced;
    for (int s = 0; s < n; ++s) {
        if (!std::binary_search(keep.begin(), keep.end(), s)) {
            traced.push_back(s);
        }
    }

    long kept_dim = 1;
    for (int s : keep) {
        kept_dim *= dims[s];
    }
    long traced_dim = 1;
    for (int s : traced) {
        traced_dim *= dims[s];
    }

    // Expand a composite kept (resp. traced) index into a full-space offset.
    auto offset_of = [&](const std::vector<int> &sites, long composite) {
        long off = 0;
        for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
            const long d = dims[*it];
            off += (composite % d) * stride[*it];
            composite /= d;
        }
        return off;
    };

    std::vector<long> kept_off(kept_dim);
    for (long i = 0; i < kept_dim; ++i) {
        kept_off[i] = offset_of(keep, i);
    }
    std::vector<long> traced_off(traced_dim);
    for (long t = 0; t < traced_dim; ++t) {
        traced_off[t] = offset_of(traced, t);
    }

    CMat out = CMat::Zero(kept_dim, kept_dim);
    for (long i = 0; i < kept_dim; ++i) {
        for (long j = 0; j < kept_dim; ++j) {
            Complex acc = 0.0;
            for (long t = 0; t < traced_dim; ++t) {
                acc += m(kept_off[i] + traced_off[t], kept_off[j] + traced_off[t]);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

HermitianSpectrum hermitian_eigenvalues(const CMat &m) {
    if (!is_hermitian(m)) {
        throw InvalidOperator("matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<CMat> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConsistencyError("eigenvalue computation failed to converge");
    }
    // Eigen returns ascending order.
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::reverse(ev.begin(), ev.end());
    return HermitianSpectrum{std::move(ev)};
}

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

}  // namespace

double von_neumann_entropy(const CMat &rho) {
    HermitianSpectrum spec = hermitian_eigenvalues(rho);
    double s = 0.0;
    for (double lambda : spec.eigenvalues) {
        if (lambda < kPsdFloor) {
            throw NotPositiveSemidefinite("eigenvalue " + std::to_string(lambda) +
                                          " below PSD tolerance");
        }
        lambda = std::clamp(lambda, 0.0, 1.0);
        s += entropy_term(lambda);
    }
    return s;
}

double shannon_entropy(const ProbabilityVector &p) {
    double s = 0.0;
    for (double x : p.values()) {
        s += entropy_term(x);
    }
    return s;
}

}  // namespace rbnl

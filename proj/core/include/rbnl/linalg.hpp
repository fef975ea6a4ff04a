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

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace rbnl {

using Complex = std::complex<double>;

// All operators use a fixed row-major layout; the left factor of a tensor
// product is the slow index.
using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::VectorXcd;

// Absolute entrywise tolerance for operator comparisons.
inline constexpr double kMatAtol = 1e-10;
// Probability vectors must be normalized within this tolerance.
inline constexpr double kProbAtol = 1e-12;
// Eigenvalues in [kPsdFloor, 0) are rounding noise and get clamped to zero;
// anything below kPsdFloor is an error.
inline constexpr double kPsdFloor = -1e-10;

bool approx_equal(const CMat &a, const CMat &b, double atol = kMatAtol);
bool is_hermitian(const CMat &m, double atol = kMatAtol);

// Real eigenvalues of a Hermitian matrix, descending.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
};

// Nonnegative reals summing to one (within kProbAtol).
class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<double> p);
    ProbabilityVector(std::initializer_list<double> p);

    const std::vector<double> &values() const { return p_; }
    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

  private:
    std::vector<double> p_;
};

// Kronecker product with the left factor as the slow index.
CMat kron(const CMat &a, const CMat &b);

// Identity matrix of the given dimension.
CMat identity(int dim);

// Trace out every site not listed in `keep`. `dims` lists the subsystem
// dimensions (product must equal the matrix dimension); `keep` must be a
// nonempty proper subset of site indices in strictly increasing order.
// Site order is preserved in the result.
CMat partial_trace(const CMat &m, const std::vector<int> &dims, const std::vector<int> &keep);

// Eigenvalues of a Hermitian matrix, descending. Throws InvalidOperator if
// the input is not Hermitian within kMatAtol.
HermitianSpectrum hermitian_eigenvalues(const CMat &m);

// Von Neumann entropy -sum(lambda ln lambda) in nats, with 0 ln 0 := 0.
// Eigenvalues are clamped into [0, 1]; anything below kPsdFloor throws
// NotPositiveSemidefinite.
double von_neumann_entropy(const CMat &rho);

// Shannon entropy -sum(p ln p) in nats, with 0 ln 0 := 0.
double shannon_entropy(const ProbabilityVector &p);

}  // namespace rbnl

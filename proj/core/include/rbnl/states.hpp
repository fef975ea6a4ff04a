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

#include <vector>

#include "rbnl/linalg.hpp"

namespace rbnl {

// Trace-one positive semidefinite operator over a list of subsystems.
class DensityMatrix {
  public:
    // Validates Hermiticity, unit trace, and positivity (within kMatAtol /
    // kPsdFloor). The single-argument form infers an all-qubit dims list from
    // the matrix dimension.
    explicit DensityMatrix(CMat rho);
    DensityMatrix(CMat rho, std::vector<int> dims);

    // Wraps a matrix that is valid by construction, skipping validation.
    static DensityMatrix trusted(CMat rho);
    static DensityMatrix trusted(CMat rho, std::vector<int> dims);

    const CMat &matrix() const { return rho_; }
    const std::vector<int> &dims() const { return dims_; }
    int sites() const { return static_cast<int>(dims_.size()); }
    int dim() const { return static_cast<int>(rho_.rows()); }

    // Reduced state on the listed sites (strictly increasing).
    DensityMatrix reduced(const std::vector<int> &keep) const;

    double purity() const;

  private:
    DensityMatrix(CMat rho, std::vector<int> dims, bool validate);

    CMat rho_;
    std::vector<int> dims_;
};

// Unit vector on the Bloch sphere, by polar and azimuthal angle.
struct BlochDirection {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

// Complete set of mutually orthogonal projectors on one subsystem (a rank-1
// pair for qubits).
struct ProjectiveObservable {
    std::vector<CMat> projectors;
    int site_dim = 2;
};

// Throws InvalidOperator unless every projector is Hermitian and idempotent,
// distinct projectors are mutually orthogonal, and the set sums to identity
// (all within kMatAtol).
void validate_observable(const ProjectiveObservable &obs);

// Spin observable along a Bloch direction, as the projector pair
// P_{+-} = (1 +- n.sigma)/2. The eigenbasis is
//   |+n> = (cos(theta/2), e^{i phi} sin(theta/2)),
//   |-n> = (-e^{-i phi} sin(theta/2), cos(theta/2)),
// so theta = 0 reproduces the computational basis exactly.
ProjectiveObservable bloch_observable(const BlochDirection &dir);

// Pauli shorthands: x = (pi/2, 0), y = (pi/2, pi/2), z = (0, 0).
ProjectiveObservable pauli_x_observable();
ProjectiveObservable pauli_y_observable();
ProjectiveObservable pauli_z_observable();

// (|000> + |111>)/sqrt(2) as a density matrix.
DensityMatrix ghz_state();

// (|001> + |010> + |100>)/sqrt(3) as a density matrix.
DensityMatrix w_state();

enum class PureFamily { Ghz, W };

// White-noise admixture: noise * I/8 + (1 - noise) * |psi><psi|.
struct NoiseFamilySpec {
    PureFamily family = PureFamily::Ghz;
    double noise = 0.0;  // [0, 1]
};

DensityMatrix noisy_state(const NoiseFamilySpec &spec);

// Two-site classically correlated state
//   sum_k p_k A_k (x) B_k
// built from the projectors of the given observables; p may be shorter than
// the projector lists but not longer.
DensityMatrix cc_state(const ProbabilityVector &p, const ProjectiveObservable &basis_a,
                       const ProjectiveObservable &basis_b);

// Three-site classically correlated state sum_k p_k A_k (x) B_k (x) C_k.
DensityMatrix ccc_state(const ProbabilityVector &p, const ProjectiveObservable &basis_a,
                        const ProjectiveObservable &basis_b, const ProjectiveObservable &basis_c);

// Three-qubit pure state sum_i sqrt(xi_i) |iii> in the computational basis.
struct SchmidtSpec {
    ProbabilityVector xi;
};

DensityMatrix schmidt_pure_state(const SchmidtSpec &spec);

}  // namespace rbnl

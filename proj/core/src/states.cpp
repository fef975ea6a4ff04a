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

#include "rbnl/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "rbnl/errors.hpp"

namespace rbnl {

namespace {

std::vector<int> qubit_dims_for(Eigen::Index dim) {
    std::vector<int> dims;
    Eigen::Index d = dim;
    while (d > 1) {
        if (d % 2 != 0) {
            throw InvalidDimensions("matrix dimension " + std::to_string(dim) +
                                    " is not a power of two; pass an explicit dims list");
        }
        d /= 2;
        dims.push_back(2);
    }
    if (dims.empty()) {
        throw InvalidDimensions("density matrix must cover at least one site");
    }
    return dims;
}

}  // namespace

DensityMatrix::DensityMatrix(CMat rho)
    : DensityMatrix(std::move(rho), std::vector<int>(), true) {}

DensityMatrix::DensityMatrix(CMat rho, std::vector<int> dims)
    : DensityMatrix(std::move(rho), std::move(dims), true) {}

DensityMatrix::DensityMatrix(CMat rho, std::vector<int> dims, bool validate)
    : rho_(std::move(rho)), dims_(std::move(dims)) {
    if (rho_.rows() != rho_.cols()) {
        throw InvalidDimensions("density matrix must be square");
    }
    if (dims_.empty()) {
        dims_ = qubit_dims_for(rho_.rows());
    } else {
        long product = 1;
        for (int d : dims_) {
            if (d <= 0) {
                throw InvalidDimensions("subsystem dimensions must be positive");
            }
            product *= d;
        }
        if (product != rho_.rows()) {
            throw InvalidDimensions("subsystem dimensions multiply to " + std::to_string(product) +
                                    ", matrix dimension is " + std::to_string(rho_.rows()));
        }
    }
    if (!validate) {
        return;
    }
    if (!is_hermitian(rho_)) {
        throw InvalidOperator("density matrix is not Hermitian within tolerance");
    }
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > kMatAtol) {
        throw InvalidOperator("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    for (double lambda : hermitian_eigenvalues(rho_).eigenvalues) {
        if (lambda < kPsdFloor) {
            throw NotPositiveSemidefinite("density matrix eigenvalue " + std::to_string(lambda) +
                                          " below PSD tolerance");
        }
    }
}

DensityMatrix DensityMatrix::trusted(CMat rho) {
    return DensityMatrix(std::move(rho), std::vector<int>(), false);
}

DensityMatrix DensityMatrix::trusted(CMat rho, std::vector<int> dims) {
    return DensityMatrix(std::move(rho), std::move(dims), false);
}

DensityMatrix DensityMatrix::reduced(const std::vector<int> &keep) const {
    std::vector<int> kept_dims;
    for (int s : keep) {
        if (s >= 0 && s < sites()) {
            kept_dims.push_back(dims_[static_cast<std::size_t>(s)]);
        }
    }
    return DensityMatrix::trusted(partial_trace(rho_, dims_, keep), std::move(kept_dims));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

void validate_observable(const ProjectiveObservable &obs) {
    if (obs.projectors.empty()) {
        throw InvalidOperator("observable has no projectors");
    }
    const int d = obs.site_dim;
    CMat sum = CMat::Zero(d, d);
    for (std::size_t i = 0; i < obs.projectors.size(); ++i) {
        const CMat &p = obs.projectors[i];
        if (p.rows() != d || p.cols() != d) {
            throw InvalidOperator("projector dimension does not match site_dim");
        }
        if (!is_hermitian(p)) {
            throw InvalidOperator("projector " + std::to_string(i) + " is not Hermitian");
        }
        if (!approx_equal(p * p, p)) {
            throw InvalidOperator("projector " + std::to_string(i) + " is not idempotent");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if ((p * obs.projectors[j]).cwiseAbs().maxCoeff() > kMatAtol) {
                throw InvalidOperator("projectors " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are not orthogonal");
            }
        }
        sum += p;
    }
    if (!approx_equal(sum, CMat::Identity(d, d))) {
        throw InvalidOperator("projectors do not sum to identity");
    }
}

ProjectiveObservable bloch_observable(const BlochDirection &dir) {
    const double c = std::cos(dir.theta / 2.0);
    const double s = std::sin(dir.theta / 2.0);
    const Complex phase(std::cos(dir.phi), std::sin(dir.phi));

    CVec plus(2);
    plus << Complex(c, 0.0), phase * s;
    CVec minus(2);
    minus << -std::conj(phase) * s, Complex(c, 0.0);

    ProjectiveObservable obs;
    obs.site_dim = 2;
    obs.projectors.push_back(plus * plus.adjoint());
    obs.projectors.push_back(minus * minus.adjoint());
    return obs;
}

ProjectiveObservable pauli_x_observable() { return bloch_observable({M_PI / 2.0, 0.0}); }

ProjectiveObservable pauli_y_observable() { return bloch_observable({M_PI / 2.0, M_PI / 2.0}); }

ProjectiveObservable pauli_z_observable() { return bloch_observable({0.0, 0.0}); }

namespace {

DensityMatrix pure_from_vector(const CVec &psi) {
    return DensityMatrix::trusted(psi * psi.adjoint());
}

CVec ghz_vector() {
    CVec psi = CVec::Zero(8);
    const double a = 1.0 / std::sqrt(2.0);
    psi(0) = a;  // |000>
    psi(7) = a;  // |111>
    return psi;
}

CVec w_vector() {
    CVec psi = CVec::Zero(8);
    const double a = 1.0 / std::sqrt(3.0);
    psi(1) = a;  // |001>
    psi(2) = a;  // |010>
    psi(4) = a;  // |100>
    return psi;
}

}  // namespace

DensityMatrix ghz_state() { return pure_from_vector(ghz_vector()); }

DensityMatrix w_state() { return pure_from_vector(w_vector()); }

DensityMatrix noisy_state(const NoiseFamilySpec &spec) {
    if (!(spec.noise >= 0.0 && spec.noise <= 1.0)) {
        throw std::invalid_argument("noise fraction must lie in [0, 1], got " +
                                    std::to_string(spec.noise));
    }
    const CVec psi = spec.family == PureFamily::Ghz ? ghz_vector() : w_vector();
    CMat rho = (spec.noise / 8.0) * CMat::Identity(8, 8);
    rho += (1.0 - spec.noise) * (psi * psi.adjoint());
    return DensityMatrix::trusted(std::move(rho));
}

namespace {

void check_mixture_length(const ProbabilityVector &p, const ProjectiveObservable &obs,
                          const char *label) {
    if (p.size() > obs.projectors.size()) {
        throw std::invalid_argument(std::string("mixture has more terms than projectors at site ") +
                                    label);
    }
}

}  // namespace

DensityMatrix cc_state(const ProbabilityVector &p, const ProjectiveObservable &basis_a,
                       const ProjectiveObservable &basis_b) {
    check_mixture_length(p, basis_a, "A");
    check_mixture_length(p, basis_b, "B");
    const int d = basis_a.site_dim * basis_b.site_dim;
    CMat rho = CMat::Zero(d, d);
    for (std::size_t k = 0; k < p.size(); ++k) {
        rho += p[k] * kron(basis_a.projectors[k], basis_b.projectors[k]);
    }
    return DensityMatrix::trusted(std::move(rho), {basis_a.site_dim, basis_b.site_dim});
}

DensityMatrix ccc_state(const ProbabilityVector &p, const ProjectiveObservable &basis_a,
                        const ProjectiveObservable &basis_b, const ProjectiveObservable &basis_c) {
    check_mixture_length(p, basis_a, "A");
    check_mixture_length(p, basis_b, "B");
    check_mixture_length(p, basis_c, "C");
    const int d = basis_a.site_dim * basis_b.site_dim * basis_c.site_dim;
    CMat rho = CMat::Zero(d, d);
    for (std::size_t k = 0; k < p.size(); ++k) {
        rho += p[k] * kron(kron(basis_a.projectors[k], basis_b.projectors[k]),
                           basis_c.projectors[k]);
    }
    return DensityMatrix::trusted(std::move(rho),
                                  {basis_a.site_dim, basis_b.site_dim, basis_c.site_dim});
}

DensityMatrix schmidt_pure_state(const SchmidtSpec &spec) {
    if (spec.xi.size() > 2) {
        throw InvalidDimensions("qubit realization supports at most two Schmidt coefficients");
    }
    CVec psi = CVec::Zero(8);
    psi(0) = std::sqrt(spec.xi[0]);  // |000>
    if (spec.xi.size() == 2) {
        psi(7) = std::sqrt(spec.xi[1]);  // |111>
    }
    return pure_from_vector(psi);
}

}  // namespace rbnl

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

#include "rbnl/random_states.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/QR>

#include "rbnl/errors.hpp"

namespace rbnl {

double Sampler::gaussian() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

BlochDirection Sampler::direction() {
    const double cos_theta = 2.0 * uniform() - 1.0;
    const double phi = 2.0 * M_PI * uniform();
    return BlochDirection{std::acos(cos_theta), phi};
}

namespace {

int dim_for_sites(int sites) {
    if (sites < 1 || sites > 10) {
        throw InvalidDimensions("site count out of supported range");
    }
    return 1 << sites;
}

}  // namespace

DensityMatrix StateSampler::random_pure(int sites) {
    const int d = dim_for_sites(sites);
    CVec psi(d);
    for (int i = 0; i < d; ++i) {
        psi(i) = Complex(sampler_.gaussian(), sampler_.gaussian());
    }
    psi /= psi.norm();
    return DensityMatrix::trusted(psi * psi.adjoint());
}

DensityMatrix StateSampler::random_mixed(int sites) {
    const int d = dim_for_sites(sites);
    CMat g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            g(i, j) = Complex(sampler_.gaussian(), sampler_.gaussian());
        }
    }
    CMat rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::trusted(std::move(rho));
}

CMat StateSampler::random_unitary(int dim) {
    if (dim < 1) {
        throw InvalidDimensions("unitary dimension must be positive");
    }
    CMat g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(sampler_.gaussian(), sampler_.gaussian());
        }
    }
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= a > 0.0 ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

ProjectiveObservable StateSampler::random_observable() {
    return bloch_observable(sampler_.direction());
}

}  // namespace rbnl

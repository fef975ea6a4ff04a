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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "rbnl/errors.hpp"
#include "rbnl/random_states.hpp"
#include "rbnl/states.hpp"

namespace {

using rbnl::CMat;
using rbnl::Complex;

}  // namespace

TEST_SUITE("states") {

TEST_CASE("density matrix validation catches each invariant") {
    CMat not_hermitian(2, 2);
    not_hermitian << 0.5, Complex(0, 0.5), Complex(0, 0.5), 0.5;
    CHECK_THROWS_AS(rbnl::DensityMatrix{not_hermitian}, rbnl::InvalidOperator);

    CHECK_THROWS_AS(rbnl::DensityMatrix{CMat::Identity(2, 2)}, rbnl::InvalidOperator);

    CMat negative = CMat::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(rbnl::DensityMatrix{negative}, rbnl::NotPositiveSemidefinite);

    CHECK_THROWS_AS(rbnl::DensityMatrix(CMat::Identity(4, 4) / 4.0, {2, 3}),
                    rbnl::InvalidDimensions);
    CHECK_THROWS_AS(rbnl::DensityMatrix(CMat::Identity(6, 6) / 6.0), rbnl::InvalidDimensions);

    const rbnl::DensityMatrix qubits(CMat::Identity(8, 8) / 8.0);
    CHECK(qubits.sites() == 3);
    CHECK(qubits.dims() == std::vector<int>{2, 2, 2});

    const rbnl::DensityMatrix mixed_dims(CMat::Identity(6, 6) / 6.0, {2, 3});
    CHECK(mixed_dims.sites() == 2);
}

TEST_CASE("bloch observable along the poles and the equator") {
    const auto z = rbnl::bloch_observable({0.0, 0.0});
    CMat p0 = CMat::Zero(2, 2);
    p0(0, 0) = 1.0;
    CMat p1 = CMat::Zero(2, 2);
    p1(1, 1) = 1.0;
    CHECK(rbnl::approx_equal(z.projectors[0], p0, 1e-15));
    CHECK(rbnl::approx_equal(z.projectors[1], p1, 1e-15));

    const auto x = rbnl::bloch_observable({M_PI / 2.0, 0.0});
    CMat px(2, 2);
    px << 0.5, 0.5, 0.5, 0.5;
    CMat mx(2, 2);
    mx << 0.5, -0.5, -0.5, 0.5;
    CHECK(rbnl::approx_equal(x.projectors[0], px, 1e-12));
    CHECK(rbnl::approx_equal(x.projectors[1], mx, 1e-12));
}

TEST_CASE("antipodal directions swap the projector pair") {
    rbnl::Sampler sampler(21);
    for (int trial = 0; trial < 50; ++trial) {
        const rbnl::BlochDirection dir = sampler.direction();
        const auto obs = rbnl::bloch_observable(dir);
        const auto antipode =
            rbnl::bloch_observable({M_PI - dir.theta, std::fmod(dir.phi + M_PI, 2.0 * M_PI)});
        CHECK(rbnl::approx_equal(obs.projectors[0], antipode.projectors[1], 1e-12));
        CHECK(rbnl::approx_equal(obs.projectors[1], antipode.projectors[0], 1e-12));
    }
}

TEST_CASE("bloch observables satisfy the projector invariants everywhere") {
    rbnl::Sampler sampler(22);
    for (int trial = 0; trial < 10000; ++trial) {
        CHECK_NOTHROW(rbnl::validate_observable(rbnl::bloch_observable(sampler.direction())));
    }
}

TEST_CASE("observable validation rejects broken sets") {
    rbnl::ProjectiveObservable broken;
    broken.site_dim = 2;
    broken.projectors.push_back(CMat::Identity(2, 2));
    broken.projectors.push_back(CMat::Identity(2, 2));
    CHECK_THROWS_AS(rbnl::validate_observable(broken), rbnl::InvalidOperator);
}

TEST_CASE("the two maximally entangled three-qubit families") {
    const CMat ghz = rbnl::ghz_state().matrix();
    CHECK(std::abs(ghz(0, 0).real() - 0.5) <= 1e-15);
    CHECK(std::abs(ghz(7, 7).real() - 0.5) <= 1e-15);
    CHECK(std::abs(ghz(0, 7).real() - 0.5) <= 1e-15);
    CHECK(std::abs(rbnl::von_neumann_entropy(ghz)) <= 1e-12);

    const CMat w = rbnl::w_state().matrix();
    CHECK(std::abs(w(4, 2).real() - 1.0 / 3.0) <= 1e-15);  // <100|rho|010>
    CHECK(std::abs(w(1, 1).real() - 1.0 / 3.0) <= 1e-15);
    CHECK(std::abs(rbnl::von_neumann_entropy(w)) <= 1e-12);
}

TEST_CASE("noisy states interpolate between pure and maximally mixed") {
    const CMat pure = rbnl::noisy_state({rbnl::PureFamily::W, 0.0}).matrix();
    CHECK(rbnl::approx_equal(pure, rbnl::w_state().matrix(), 1e-15));

    const CMat flat = rbnl::noisy_state({rbnl::PureFamily::Ghz, 1.0}).matrix();
    CHECK(rbnl::approx_equal(flat, CMat::Identity(8, 8) / 8.0, 1e-15));

    CHECK_THROWS_AS(rbnl::noisy_state({rbnl::PureFamily::Ghz, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(rbnl::noisy_state({rbnl::PureFamily::Ghz, -0.1}), std::invalid_argument);
}

TEST_CASE("the half-noise spectrum splits into one heavy and seven light eigenvalues") {
    // Analytic oracle: the identity contributes noise/8 on every eigenvector
    // and the pure part adds (1 - noise) along its own direction.
    const double noise = 0.5;
    const double heavy = (1.0 - noise) + noise / 8.0;
    const double light = noise / 8.0;

    const auto spectrum = rbnl::hermitian_eigenvalues(
        rbnl::noisy_state({rbnl::PureFamily::Ghz, noise}).matrix());
    CHECK(std::abs(spectrum.eigenvalues[0] - heavy) <= 1e-12);
    CHECK(std::abs(heavy - 0.5625) <= 1e-15);
    for (std::size_t i = 1; i < spectrum.eigenvalues.size(); ++i) {
        CHECK(std::abs(spectrum.eigenvalues[i] - light) <= 1e-12);
    }
}

TEST_CASE("noisy states are affine in the noise parameter") {
    const CMat at0 = rbnl::noisy_state({rbnl::PureFamily::W, 0.0}).matrix();
    const CMat at1 = rbnl::noisy_state({rbnl::PureFamily::W, 1.0}).matrix();
    const CMat at03 = rbnl::noisy_state({rbnl::PureFamily::W, 0.3}).matrix();
    CHECK(rbnl::approx_equal(at03, 0.7 * at0 + 0.3 * at1, 1e-12));
}

TEST_CASE("classically correlated two-site states") {
    const auto z = rbnl::pauli_z_observable();
    const CMat cc = rbnl::cc_state({0.5, 0.5}, z, z).matrix();
    CMat expected = CMat::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    CHECK(rbnl::approx_equal(cc, expected, 1e-15));

    const CMat pure = rbnl::cc_state({1.0, 0.0}, z, z).matrix();
    CHECK(std::abs(rbnl::von_neumann_entropy(pure)) <= 1e-12);

    rbnl::StateSampler sampler(23);
    const CMat skew =
        rbnl::cc_state({0.8, 0.2}, sampler.random_observable(), sampler.random_observable())
            .matrix();
    CHECK(std::abs(skew.trace().real() - 1.0) <= 1e-12);

    CHECK_THROWS_AS(rbnl::cc_state({0.5, 0.3, 0.2}, z, z), std::invalid_argument);
}

TEST_CASE("classically correlated three-site states") {
    const auto z = rbnl::pauli_z_observable();
    const CMat ccc = rbnl::ccc_state({0.5, 0.5}, z, z, z).matrix();
    CMat expected = CMat::Zero(8, 8);
    expected(0, 0) = 0.5;
    expected(7, 7) = 0.5;
    CHECK(rbnl::approx_equal(ccc, expected, 1e-15));

    const rbnl::ProbabilityVector p{0.8, 0.2};
    const auto state = rbnl::ccc_state(p, z, z, z);
    CHECK(std::abs(rbnl::von_neumann_entropy(state.matrix()) - rbnl::shannon_entropy(p)) <=
          1e-12);

    // Tracing out the last site leaves the two-site classical correlation.
    CHECK(rbnl::approx_equal(state.reduced({0, 1}).matrix(),
                             rbnl::cc_state(p, z, z).matrix(), 1e-12));
}

TEST_CASE("computational-basis realization of two-term product decompositions") {
    CHECK(rbnl::approx_equal(rbnl::schmidt_pure_state({{0.5, 0.5}}).matrix(),
                             rbnl::ghz_state().matrix(), 1e-15));

    const CMat product = rbnl::schmidt_pure_state({{1.0, 0.0}}).matrix();
    CMat expected = CMat::Zero(8, 8);
    expected(0, 0) = 1.0;
    CHECK(rbnl::approx_equal(product, expected, 1e-15));

    // Oracle for the skewed coefficients: the single-site reduced state is
    // diagonal with the coefficients themselves, so its entropy is H(xi).
    const auto skew = rbnl::schmidt_pure_state({{0.7, 0.3}});
    const double h = rbnl::shannon_entropy({0.7, 0.3});
    CHECK(std::abs(h - 0.6108643020548935) <= 1e-12);
    for (int site = 0; site < 3; ++site) {
        CHECK(std::abs(rbnl::von_neumann_entropy(skew.reduced({site}).matrix()) - h) <= 1e-12);
    }
}

TEST_CASE("every constructed state passes the density-matrix invariants") {
    const auto z = rbnl::pauli_z_observable();
    const auto x = rbnl::pauli_x_observable();
    for (const rbnl::DensityMatrix &state :
         {rbnl::ghz_state(), rbnl::w_state(), rbnl::noisy_state({rbnl::PureFamily::W, 0.4}),
          rbnl::cc_state({0.6, 0.4}, z, x), rbnl::ccc_state({0.9, 0.1}, x, x, z),
          rbnl::schmidt_pure_state({{0.9, 0.1}})}) {
        CHECK_NOTHROW(rbnl::DensityMatrix(state.matrix(), state.dims()));
    }
}

TEST_CASE("purity distinguishes pure from mixed") {
    CHECK(std::abs(rbnl::ghz_state().purity() - 1.0) <= 1e-12);
    CHECK(rbnl::noisy_state({rbnl::PureFamily::Ghz, 0.5}).purity() < 0.9);
}

}  // TEST_SUITE

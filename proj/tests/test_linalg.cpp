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
#include <vector>

#include <doctest.h>

#include "rbnl/errors.hpp"
#include "rbnl/linalg.hpp"
#include "rbnl/random_states.hpp"
#include "rbnl/states.hpp"

namespace {

using rbnl::CMat;
using rbnl::Complex;

CMat sigma_z() {
    CMat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMat ket_bra(int dim, int i, int j) {
    CMat m = CMat::Zero(dim, dim);
    m(i, j) = 1.0;
    return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("kron of identities and diagonals") {
    CHECK(rbnl::approx_equal(rbnl::kron(rbnl::identity(2), rbnl::identity(2)),
                             rbnl::identity(4)));

    CMat zz = rbnl::kron(sigma_z(), sigma_z());
    CMat expected = CMat::Zero(4, 4);
    expected(0, 0) = 1;
    expected(1, 1) = -1;
    expected(2, 2) = -1;
    expected(3, 3) = 1;
    CHECK(rbnl::approx_equal(zz, expected));

    CMat basis = rbnl::kron(ket_bra(2, 0, 0), ket_bra(2, 1, 1));
    CHECK(rbnl::approx_equal(basis, ket_bra(4, 1, 1)));
}

TEST_CASE("kron dimensions follow the slow-left convention") {
    CMat a(2, 2);
    a << 1, 2, 3, 4;
    CMat b(2, 2);
    b << 0, 5, 6, 7;
    const CMat k = rbnl::kron(a, b);
    REQUIRE(k.rows() == 4);
    CHECK(k(0, 1) == Complex(5, 0));   // a(0,0) * b(0,1)
    CHECK(k(2, 1) == Complex(15, 0));  // a(1,0) * b(0,1)
}

TEST_CASE("partial trace of a product state returns the kept factor") {
    rbnl::StateSampler sampler(11);
    const CMat rho_a = sampler.random_mixed(1).matrix();
    const CMat rho_b = sampler.random_mixed(1).matrix();
    const CMat joint = rbnl::kron(rho_a, rho_b);
    CHECK(rbnl::approx_equal(rbnl::partial_trace(joint, {2, 2}, {0}), rho_a));
    CHECK(rbnl::approx_equal(rbnl::partial_trace(joint, {2, 2}, {1}), rho_b));
}

TEST_CASE("partial trace of the maximally entangled three-qubit state") {
    const CMat rho = rbnl::ghz_state().matrix();
    const CMat reduced = rbnl::partial_trace(rho, {2, 2, 2}, {0, 1});
    CMat expected = CMat::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    CHECK(rbnl::approx_equal(reduced, expected));
}

TEST_CASE("partial trace of the maximally mixed state") {
    const CMat rho = CMat::Identity(8, 8) / 8.0;
    CHECK(rbnl::approx_equal(rbnl::partial_trace(rho, {2, 2, 2}, {1}),
                             CMat::Identity(2, 2) / 2.0));
}

TEST_CASE("partial trace preserves the trace and handles unequal site dims") {
    rbnl::StateSampler sampler(12);
    for (int trial = 0; trial < 10; ++trial) {
        const CMat rho = sampler.random_mixed(3).matrix();
        for (const std::vector<int> &keep :
             {std::vector<int>{0}, std::vector<int>{2}, std::vector<int>{0, 2},
              std::vector<int>{1, 2}}) {
            const CMat reduced = rbnl::partial_trace(rho, {2, 2, 2}, keep);
            CHECK(std::abs(reduced.trace().real() - 1.0) <= 1e-12);
            CHECK(std::abs(reduced.trace().imag()) <= 1e-12);
        }
    }
    // A qubit-qutrit split exercises the general stride bookkeeping.
    CMat rho6 = CMat::Zero(6, 6);
    for (int i = 0; i < 6; ++i) {
        rho6(i, i) = (i + 1) / 21.0;
    }
    const CMat qutrit = rbnl::partial_trace(rho6, {2, 3}, {1});
    REQUIRE(qutrit.rows() == 3);
    CHECK(std::abs(qutrit.trace().real() - 1.0) <= 1e-12);
    CHECK(std::abs(qutrit(0, 0).real() - (1 + 4) / 21.0) <= 1e-12);
}

TEST_CASE("partial trace rejects malformed inputs") {
    const CMat rho = CMat::Identity(8, 8) / 8.0;
    CHECK_THROWS_AS(rbnl::partial_trace(rho, {2, 2}, {0}), rbnl::InvalidDimensions);
    CHECK_THROWS_AS(rbnl::partial_trace(rho, {2, 2, 2}, {}), rbnl::InvalidDimensions);
    CHECK_THROWS_AS(rbnl::partial_trace(rho, {2, 2, 2}, {0, 1, 2}), rbnl::InvalidDimensions);
    CHECK_THROWS_AS(rbnl::partial_trace(rho, {2, 2, 2}, {1, 0}), rbnl::InvalidDimensions);
    CHECK_THROWS_AS(rbnl::partial_trace(rho, {2, 2, 2}, {3}), rbnl::InvalidDimensions);
}

TEST_CASE("hermitian eigenvalues of fixed operators") {
    const auto pauli = rbnl::hermitian_eigenvalues(sigma_z());
    REQUIRE(pauli.eigenvalues.size() == 2);
    CHECK(pauli.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pauli.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));

    const auto mixed = rbnl::hermitian_eigenvalues(CMat::Identity(8, 8) / 8.0);
    for (double lambda : mixed.eigenvalues) {
        CHECK(std::abs(lambda - 0.125) <= 1e-12);
    }

    const auto pure = rbnl::hermitian_eigenvalues(rbnl::ghz_state().matrix());
    CHECK(std::abs(pure.eigenvalues.front() - 1.0) <= 1e-12);
    for (std::size_t i = 1; i < pure.eigenvalues.size(); ++i) {
        CHECK(std::abs(pure.eigenvalues[i]) <= 1e-12);
    }
}

TEST_CASE("hermitian eigenvalues recover a known spectrum under conjugation") {
    // Oracle: build U D U^dagger from a known diagonal and a random unitary;
    // the solver must hand back D's entries.
    rbnl::StateSampler sampler(13);
    const std::vector<double> diag = {0.4, 0.25, 0.2, 0.1, 0.05, 0.0, 0.0, 0.0};
    CMat d = CMat::Zero(8, 8);
    for (int i = 0; i < 8; ++i) {
        d(i, i) = diag[static_cast<std::size_t>(i)];
    }
    const CMat u = sampler.random_unitary(8);
    CHECK(rbnl::approx_equal(u * u.adjoint(), CMat::Identity(8, 8), 1e-12));

    const auto spectrum = rbnl::hermitian_eigenvalues(u * d * u.adjoint());
    REQUIRE(spectrum.eigenvalues.size() == diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(std::abs(spectrum.eigenvalues[i] - diag[i]) <= 1e-9);
    }
}

TEST_CASE("hermitian eigenvalues of random density matrices form a distribution") {
    rbnl::StateSampler sampler(14);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spectrum =
            rbnl::hermitian_eigenvalues(sampler.random_mixed(3).matrix());
        double sum = 0.0;
        for (double lambda : spectrum.eigenvalues) {
            CHECK(lambda >= -1e-10);
            CHECK(lambda <= 1.0 + 1e-10);
            sum += lambda;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
}

TEST_CASE("hermitian eigenvalues reject non-Hermitian input") {
    CMat m(2, 2);
    m << 1, 1, 0, 1;
    CHECK_THROWS_AS(rbnl::hermitian_eigenvalues(m), rbnl::InvalidOperator);
}

TEST_CASE("entropy of pure, maximally mixed, and rank-two states") {
    CHECK(std::abs(rbnl::von_neumann_entropy(rbnl::ghz_state().matrix())) <= 1e-12);
    CHECK(std::abs(rbnl::von_neumann_entropy(CMat::Identity(8, 8) / 8.0) -
                   3.0 * std::log(2.0)) <= 1e-12);

    CMat half = CMat::Zero(4, 4);
    half(0, 0) = 0.5;
    half(3, 3) = 0.5;
    CHECK(std::abs(rbnl::von_neumann_entropy(half) - std::log(2.0)) <= 1e-12);
}

TEST_CASE("entropy of a diagonal state matches the Shannon entropy") {
    rbnl::Sampler sampler(15);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> p(8);
        double sum = 0.0;
        for (double &x : p) {
            x = sampler.uniform_open();
            sum += x;
        }
        for (double &x : p) {
            x /= sum;
        }
        CMat rho = CMat::Zero(8, 8);
        for (int i = 0; i < 8; ++i) {
            rho(i, i) = p[static_cast<std::size_t>(i)];
        }
        CHECK(std::abs(rbnl::von_neumann_entropy(rho) -
                       rbnl::shannon_entropy(rbnl::ProbabilityVector(p))) <= 1e-12);
    }
}

TEST_CASE("entropy stays within its bounds") {
    rbnl::StateSampler sampler(16);
    for (int trial = 0; trial < 20; ++trial) {
        const double s = rbnl::von_neumann_entropy(sampler.random_mixed(2).matrix());
        CHECK(s >= -1e-12);
        CHECK(s <= std::log(4.0) + 1e-12);
    }
}

TEST_CASE("entropy rejects genuinely negative spectra") {
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = 1.1;
    m(1, 1) = -0.1;
    CHECK_THROWS_AS(rbnl::von_neumann_entropy(m), rbnl::NotPositiveSemidefinite);
}

TEST_CASE("shannon entropy of fixed distributions") {
    CHECK(std::abs(rbnl::shannon_entropy({0.5, 0.5}) - std::log(2.0)) <= 1e-15);
    CHECK(rbnl::shannon_entropy({1.0, 0.0}) == 0.0);
    CHECK(std::abs(rbnl::shannon_entropy({1.0 / 3, 1.0 / 3, 1.0 / 3}) - std::log(3.0)) <=
          1e-12);
}

TEST_CASE("probability vectors validate their entries") {
    CHECK_THROWS_AS(rbnl::ProbabilityVector({0.5, -0.5, 1.0}), rbnl::NotPositiveSemidefinite);
    CHECK_THROWS_AS(rbnl::ProbabilityVector({0.5, 0.4}), rbnl::ConsistencyError);
    CHECK_THROWS_AS(rbnl::ProbabilityVector(std::vector<double>{}), rbnl::InvalidDimensions);
}

}  // TEST_SUITE

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

#include <cstdint>
#include <random>

#include "rbnl/states.hpp"

namespace rbnl {

// Deterministic sampling primitives. std::mt19937_64 supplies the bits; the
// mappings to doubles are spelled out here instead of using the standard
// distributions, whose output is implementation-defined. Identical seeds give
// identical streams on every platform.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a logarithm argument.
    double uniform_open() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via the Box-Muller transform (one value per call).
    double gaussian();

    // Uniform direction on the sphere: cos theta uniform, then phi uniform.
    BlochDirection direction();

  private:
    std::mt19937_64 engine_;
};

// Random states and operators for property tests and self-checks.
class StateSampler {
  public:
    explicit StateSampler(std::uint64_t seed) : sampler_(seed) {}

    Sampler &sampler() { return sampler_; }

    // Haar-distributed pure state over the given number of qubits.
    DensityMatrix random_pure(int sites);

    // Full-rank mixed state G G^dagger / tr(G G^dagger) with Gaussian G.
    DensityMatrix random_mixed(int sites);

    // Haar-distributed unitary via QR of a Gaussian matrix with the phase
    // convention fixed by R's diagonal.
    CMat random_unitary(int dim);

    // Qubit observable along a random direction.
    ProjectiveObservable random_observable();

  private:
    Sampler sampler_;
};

}  // namespace rbnl

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
#include <vector>

#include "rbnl/random_states.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

// One measurement context: an observable per site, with the generating Bloch
// directions kept alongside for reporting.
struct Setting {
    std::vector<ProjectiveObservable> observables;
    std::vector<BlochDirection> directions;
};

Setting setting_from_directions(const std::vector<BlochDirection> &dirs);

// Deterministic lexicographic enumeration of per-site direction tuples with
// theta in {0, inc, ..., pi} and phi in {0, inc, ..., 2*pi - inc}. Angles are
// formed as integer multiples of pi divided by the increment denominator, so
// coarser grids are bit-exact subsets of finer power-of-two refinements.
//
// The full enumeration counts physically duplicated directions (every phi at
// the poles; antipodal pairs, which name the same projector pair with labels
// swapped). dedupe=true keeps one representative per projector pair instead.
class SettingGrid {
  public:
    // increment must equal pi divided by a positive integer.
    SettingGrid(double increment, int sites, bool dedupe = false);

    int sites() const { return sites_; }
    double increment() const;
    int denominator() const { return den_; }
    bool dedupe() const { return dedupe_; }

    // The shared per-site direction list, in enumeration order.
    const std::vector<BlochDirection> &directions() const { return directions_; }
    int directions_per_site() const { return static_cast<int>(directions_.size()); }

    long long setting_count() const;

    // Decomposes a flat setting index into per-site direction indices,
    // site 0 slowest.
    void direction_indices(long long setting_index, int *out) const;

    Setting setting(long long setting_index) const;

  private:
    int sites_;
    int den_;
    bool dedupe_;
    std::vector<BlochDirection> directions_;
};

// Seeded stream of settings with directions drawn uniformly on the sphere
// (cos theta uniform on [-1, 1], phi uniform on [0, 2*pi)). Draw order is
// fixed — sites in order, cos theta before phi — so a seed fully determines
// the stream on every platform.
class RandomSettingStream {
  public:
    RandomSettingStream(long long count, std::uint64_t seed, int sites);

    long long count() const { return count_; }
    std::uint64_t seed() const { return seed_; }
    int sites() const { return sites_; }
    long long emitted() const { return emitted_; }

    // Fills one setting's directions; returns false once the stream is done.
    bool next(std::vector<BlochDirection> &out);

    Setting next_setting();

  private:
    long long count_;
    std::uint64_t seed_;
    int sites_;
    long long emitted_;
    Sampler sampler_;
};

}  // namespace rbnl

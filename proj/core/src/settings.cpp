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

#include "rbnl/settings.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rbnl/errors.hpp"

namespace rbnl {

Setting setting_from_directions(const std::vector<BlochDirection> &dirs) {
    Setting s;
    s.directions = dirs;
    s.observables.reserve(dirs.size());
    for (const BlochDirection &d : dirs) {
        s.observables.push_back(bloch_observable(d));
    }
    return s;
}

namespace {

void check_sites(int sites) {
    if (sites != 2 && sites != 3) {
        throw std::invalid_argument("setting streams support 2 or 3 sites, got " +
                                    std::to_string(sites));
    }
}

}  // namespace

SettingGrid::SettingGrid(double increment, int sites, bool dedupe)
    : sites_(sites), den_(0), dedupe_(dedupe) {
    check_sites(sites);
    if (!(increment > 0.0)) {
        throw std::invalid_argument("grid increment must be positive");
    }
    const double ratio = M_PI / increment;
    const int den = static_cast<int>(std::lround(ratio));
    if (den < 1 || den > 1024 || std::abs(M_PI / den - increment) > 1e-12) {
        throw std::invalid_argument("grid increment must divide pi exactly");
    }
    den_ = den;

    // Angles are (integer * pi) / denominator, never accumulated sums, so a
    // pi/4 grid point carries the exact bits of its pi/8 counterpart.
    for (int t = 0; t <= den_; ++t) {
        for (int p = 0; p < 2 * den_; ++p) {
            if (dedupe_) {
                if (t == 0 && p > 0) {
                    continue;  // north pole: every phi is the same direction
                }
                if (2 * t == den_ && p >= den_) {
                    continue;  // equator: keep one of each antipodal pair
                }
                if (2 * t > den_) {
                    continue;  // southern hemisphere: antipode already kept
                }
            }
            directions_.push_back(
                BlochDirection{(t * M_PI) / den_, (p * M_PI) / den_});
        }
    }
}

double SettingGrid::increment() const { return M_PI / den_; }

long long SettingGrid::setting_count() const {
    long long n = 1;
    for (int s = 0; s < sites_; ++s) {
        n *= directions_per_site();
    }
    return n;
}

void SettingGrid::direction_indices(long long setting_index, int *out) const {
    if (setting_index < 0 || setting_index >= setting_count()) {
        throw std::invalid_argument("setting index out of range");
    }
    const long long d = directions_per_site();
    for (int s = sites_ - 1; s >= 0; --s) {
        out[s] = static_cast<int>(setting_index % d);
        setting_index /= d;
    }
}

Setting SettingGrid::setting(long long setting_index) const {
    int idx[3] = {0, 0, 0};
    direction_indices(setting_index, idx);
    std::vector<BlochDirection> dirs;
    dirs.reserve(static_cast<std::size_t>(sites_));
    for (int s = 0; s < sites_; ++s) {
        dirs.push_back(directions_[static_cast<std::size_t>(idx[s])]);
    }
    return setting_from_directions(dirs);
}

RandomSettingStream::RandomSettingStream(long long count, std::uint64_t seed, int sites)
    : count_(count), seed_(seed), sites_(sites), emitted_(0), sampler_(seed) {
    check_sites(sites);
    if (count < 0) {
        throw std::invalid_argument("setting count must be nonnegative");
    }
}

bool RandomSettingStream::next(std::vector<BlochDirection> &out) {
    if (emitted_ >= count_) {
        return false;
    }
    out.resize(static_cast<std::size_t>(sites_));
    for (int s = 0; s < sites_; ++s) {
        out[static_cast<std::size_t>(s)] = sampler_.direction();
    }
    ++emitted_;
    return true;
}

Setting RandomSettingStream::next_setting() {
    std::vector<BlochDirection> dirs;
    if (!next(dirs)) {
        throw std::out_of_range("random setting stream exhausted");
    }
    return setting_from_directions(dirs);
}

}  // namespace rbnl

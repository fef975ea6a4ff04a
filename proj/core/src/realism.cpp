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

#include "rbnl/realism.hpp"

#include <string>

#include "rbnl/errors.hpp"

namespace rbnl {

namespace {

void check_site(const DensityMatrix &rho, const ProjectiveObservable &obs, int site) {
    if (site < 0 || site >= rho.sites()) {
        throw InvalidDimensions("site index " + std::to_string(site) + " out of range for " +
                                std::to_string(rho.sites()) + " sites");
    }
    if (obs.site_dim != rho.dims()[static_cast<std::size_t>(site)]) {
        throw InvalidDimensions("observable dimension " + std::to_string(obs.site_dim) +
                                " does not match site dimension " +
                                std::to_string(rho.dims()[static_cast<std::size_t>(site)]));
    }
}

// P embedded at `site`: identity on every other factor.
CMat embed_at_site(const DensityMatrix &rho, const CMat &p, int site) {
    CMat full = p;
    for (int s = site - 1; s >= 0; --s) {
        full = kron(identity(rho.dims()[static_cast<std::size_t>(s)]), full);
    }
    for (int s = site + 1; s < rho.sites(); ++s) {
        full = kron(full, identity(rho.dims()[static_cast<std::size_t>(s)]));
    }
    return full;
}

}  // namespace

DensityMatrix dephase(const DensityMatrix &rho, const ProjectiveObservable &obs, int site) {
    check_site(rho, obs, site);
    CMat out = CMat::Zero(rho.dim(), rho.dim());
    for (const CMat &p : obs.projectors) {
        const CMat full = embed_at_site(rho, p, site);
        out += full * rho.matrix() * full;
    }
    return DensityMatrix::trusted(std::move(out), rho.dims());
}

DensityMatrix dephase_multi(const DensityMatrix &rho,
                            const std::map<int, ProjectiveObservable> &obs_by_site) {
    DensityMatrix out = rho;
    for (const auto &[site, obs] : obs_by_site) {
        out = dephase(out, obs, site);
    }
    return out;
}

double clamp_nonnegative(double value, const char *what) {
    if (value < kPsdFloor) {
        throw ConsistencyError(std::string(what) + " evaluated to " + std::to_string(value) +
                               ", beyond the rounding tolerance");
    }
    return value < 0.0 ? 0.0 : value;
}

double irreality(const DensityMatrix &rho, const ProjectiveObservable &obs, int site) {
    return irreality(rho, obs, site, von_neumann_entropy(rho.matrix()));
}

double irreality(const DensityMatrix &rho, const ProjectiveObservable &obs, int site,
                 double s_rho) {
    const double s_dephased = von_neumann_entropy(dephase(rho, obs, site).matrix());
    return clamp_nonnegative(s_dephased - s_rho, "irreality");
}

double contextual_nl_2(const DensityMatrix &rho, const ProjectiveObservable &obs_a,
                       const ProjectiveObservable &obs_b) {
    return contextual_nl_2(rho, obs_a, obs_b, von_neumann_entropy(rho.matrix()));
}

double contextual_nl_2(const DensityMatrix &rho, const ProjectiveObservable &obs_a,
                       const ProjectiveObservable &obs_b, double s_rho) {
    if (rho.sites() != 2) {
        throw InvalidDimensions("two-site contextual nonlocality needs a two-site state");
    }
    const double s_a = von_neumann_entropy(dephase(rho, obs_a, 0).matrix());
    const DensityMatrix phi_b = dephase(rho, obs_b, 1);
    const double s_b = von_neumann_entropy(phi_b.matrix());
    const double s_ab = von_neumann_entropy(dephase(phi_b, obs_a, 0).matrix());
    return clamp_nonnegative(s_a + s_b - s_ab - s_rho, "contextual nonlocality");
}

namespace {

void check_setting(const DensityMatrix &rho, int target, const Setting &setting) {
    if (rho.sites() != 3) {
        throw InvalidDimensions("three-site contextual nonlocality needs a three-site state");
    }
    if (target < 0 || target >= 3) {
        throw InvalidDimensions("target site index out of range");
    }
    if (setting.observables.size() != 3) {
        throw InvalidDimensions("setting must provide an observable for each of the three sites");
    }
}

// Fills the three dephased entropies; s_rho and eta are left to the caller.
void dephased_entropies(const DensityMatrix &rho, int target, const Setting &setting,
                        ContextEntropies &out) {
    const ProjectiveObservable &target_obs =
        setting.observables[static_cast<std::size_t>(target)];
    out.s_target = von_neumann_entropy(dephase(rho, target_obs, target).matrix());

    std::map<int, ProjectiveObservable> remote;
    for (int s = 0; s < 3; ++s) {
        if (s != target) {
            remote.emplace(s, setting.observables[static_cast<std::size_t>(s)]);
        }
    }
    const DensityMatrix phi_remote = dephase_multi(rho, remote);
    out.s_remote = von_neumann_entropy(phi_remote.matrix());
    out.s_all = von_neumann_entropy(dephase(phi_remote, target_obs, target).matrix());
}

}  // namespace

ContextEntropies contextual_entropies(const DensityMatrix &rho, int target,
                                      const Setting &setting) {
    check_setting(rho, target, setting);
    ContextEntropies out;
    out.s_rho = von_neumann_entropy(rho.matrix());
    dephased_entropies(rho, target, setting, out);
    out.eta = clamp_nonnegative(out.s_target + out.s_remote - out.s_all - out.s_rho,
                                "contextual nonlocality");
    return out;
}

double contextual_nl_3(const DensityMatrix &rho, int target, const Setting &setting) {
    return contextual_entropies(rho, target, setting).eta;
}

double contextual_nl_3(const DensityMatrix &rho, int target, const Setting &setting,
                       double s_rho) {
    check_setting(rho, target, setting);
    ContextEntropies out;
    dephased_entropies(rho, target, setting, out);
    return clamp_nonnegative(out.s_target + out.s_remote - out.s_all - s_rho,
                             "contextual nonlocality");
}

}  // namespace rbnl

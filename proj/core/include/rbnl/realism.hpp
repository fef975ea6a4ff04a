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

#include <map>

#include "rbnl/settings.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

// Unrevealed measurement of obs at one site: the outcome is discarded, so the
// state dephases in the observable's eigenbasis,
//   rho -> sum_a (P_a at site) rho (P_a at site).
// Trace-preserving, unital, and idempotent.
DensityMatrix dephase(const DensityMatrix &rho, const ProjectiveObservable &obs, int site);

// Composition of dephase over the mapped sites; maps on distinct sites
// commute, so the application order does not matter.
DensityMatrix dephase_multi(const DensityMatrix &rho,
                            const std::map<int, ProjectiveObservable> &obs_by_site);

// Irreality of obs at site: S(dephased) - S(rho). Zero exactly when the
// observable is already real for rho; values in [-1e-10, 0) are clamped to 0
// and anything lower raises ConsistencyError.
double irreality(const DensityMatrix &rho, const ProjectiveObservable &obs, int site);
double irreality(const DensityMatrix &rho, const ProjectiveObservable &obs, int site,
                 double s_rho);

// Contextual nonlocality of a two-site state: the drop in A's irreality
// caused by an unrevealed measurement of B, computed in the four-entropy form
//   S(Phi_A rho) + S(Phi_B rho) - S(Phi_AB rho) - S(rho).
// Nonnegative up to the same clamp as irreality.
double contextual_nl_2(const DensityMatrix &rho, const ProjectiveObservable &obs_a,
                       const ProjectiveObservable &obs_b);
double contextual_nl_2(const DensityMatrix &rho, const ProjectiveObservable &obs_a,
                       const ProjectiveObservable &obs_b, double s_rho);

// The four entropies behind the three-site contextual nonlocality
//   eta = S(Phi_target rho) + S(Phi_remote rho) - S(Phi_all rho) - S(rho),
// where "remote" dephases the two non-target sites and "all" dephases every
// site in the setting's bases.
struct ContextEntropies {
    double s_rho = 0.0;
    double s_target = 0.0;
    double s_remote = 0.0;
    double s_all = 0.0;
    double eta = 0.0;
};

ContextEntropies contextual_entropies(const DensityMatrix &rho, int target,
                                      const Setting &setting);

// Contextual nonlocality of a three-site state for the given target site.
double contextual_nl_3(const DensityMatrix &rho, int target, const Setting &setting);
double contextual_nl_3(const DensityMatrix &rho, int target, const Setting &setting,
                       double s_rho);

// Shared clamp for the nonnegative-by-theory quantities: values in
// [-1e-10, 0) become 0; anything below -1e-10 raises ConsistencyError.
double clamp_nonnegative(double value, const char *what);

}  // namespace rbnl

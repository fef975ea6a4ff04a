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

#include <stdexcept>
#include <string>

namespace rbnl {

// Operator dimensions do not match the declared subsystem layout.
struct InvalidDimensions : std::invalid_argument {
    explicit InvalidDimensions(const std::string &msg) : std::invalid_argument(msg) {}
};

// Input fails an operator-level precondition (non-Hermitian, incomplete
// projector set, ...).
struct InvalidOperator : std::invalid_argument {
    explicit InvalidOperator(const std::string &msg) : std::invalid_argument(msg) {}
};

// A state has an eigenvalue below the negativity floor.
struct NotPositiveSemidefinite : std::domain_error {
    explicit NotPositiveSemidefinite(const std::string &msg) : std::domain_error(msg) {}
};

// A pure-state-only quantity was requested for a mixed state.
struct NotPure : std::domain_error {
    explicit NotPure(const std::string &msg) : std::domain_error(msg) {}
};

// A quantity that is nonnegative by construction came out negative beyond
// the floating-point floor. Indicates a genuine numerical problem, never
// silently clamped.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace rbnl

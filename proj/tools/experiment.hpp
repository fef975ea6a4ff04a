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

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbnl/optimizer.hpp"
#include "rbnl/realism.hpp"
#include "rbnl/states.hpp"

namespace rbnl::experiment {

// Raised when an output stream cannot be opened or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// start, start + step, ..., clamped so the last value is exactly `end` when
// the step divides the span (up to rounding).
std::vector<double> grid_values(double start, double end, double step);

// The one number format used in every text and CSV output: %.12g.
std::string format_value(double value);

// "pi/8" for M_PI / 8 and so on; inverse of the CLI increment spelling.
std::string increment_label(double increment);

std::string family_label(PureFamily family);

// State specifications: "ghz", "w", "ghz(0.3)", "w(0.3)", "mixed(0.3)" (white
// noise over the first family), "schmidt(0.7,0.3)", "ccc(0.8,0.2)".
DensityMatrix parse_state(const std::string &spec);

// Comma-separated per-site directions: "x", "y", "z", or "theta:phi" with both
// angles in units of pi. Example: "z,z,0.5:0.25".
Setting parse_setting(const std::string &spec);

// "a" -> 0, "b" -> 1, "c" -> 2.
int parse_target(const std::string &spec);

struct NoiseSweepConfig {
    PureFamily family = PureFamily::Ghz;
    double noise_start = 0.0;
    double noise_end = 1.0;
    double noise_step = 0.1;
    OptimizationStrategy strategy;
    bool symmetric = false;
    SweepOptions options;
    bool timing = false;  // adds the wall-clock column to the output
};

struct NoiseSweepRow {
    double noise = 0.0;
    double n3 = 0.0;
    std::array<BlochDirection, 3> argmax{};
    long long evaluations = 0;
    double wall_ms = 0.0;
};

struct NoiseSweepResult {
    NoiseSweepConfig config;
    std::vector<NoiseSweepRow> rows;
    // One message per adjacent pair where the value rose by more than 1e-9.
    std::vector<std::string> warnings;
};

NoiseSweepResult run_noise_sweep(const NoiseSweepConfig &config);

struct MonogamyConfig {
    PureFamily family = PureFamily::Ghz;
    double noise_start = 0.0;
    double noise_end = 1.0;
    double noise_step = 0.01;
    double alpha_start = 0.5;
    double alpha_end = 5.0;
    double alpha_step = 0.01;
    OptimizationStrategy strategy;
    bool symmetric = false;
    SweepOptions options;
};

struct MonogamyRow {
    double noise = 0.0;
    double alpha = 0.0;
    double n3 = 0.0;
    double n2_ab = 0.0;
    double n2_ac = 0.0;
    double delta = 0.0;
    // delta divided by the scan's largest delta; all zeros when that largest
    // value is not positive.
    double delta_normalized = 0.0;
};

struct MonogamySummary {
    // Where delta turns nonnegative along alpha at the lowest noise value,
    // linearly interpolated between the bracketing grid points.
    bool has_crossing = false;
    double crossing_alpha = 0.0;
    // Argmax of delta over alpha at the lowest noise value.
    double peak_alpha = 0.0;
    double peak_delta = 0.0;
    // Largest delta over the whole scan and where it occurs.
    double max_delta = 0.0;
    double max_delta_alpha = 0.0;
    double max_delta_noise = 0.0;
};

struct MonogamyResult {
    MonogamyConfig config;
    std::vector<MonogamyRow> rows;  // noise outer, alpha inner
    MonogamySummary summary;
};

MonogamyResult run_monogamy_scan(const MonogamyConfig &config);

// Writers emit '#'-prefixed metadata, a header row, and %.12g values with
// angles in units of pi. The output depends only on the configuration and the
// rows, never on timing or thread count, so reruns are byte-identical
// (the opt-in wall-clock column is the one exception).
void write_noise_sweep_csv(std::ostream &out, const NoiseSweepResult &result);
void write_noise_sweep_json(std::ostream &out, const NoiseSweepResult &result);
void write_monogamy_csv(std::ostream &out, const MonogamyResult &result);
void write_monogamy_json(std::ostream &out, const MonogamyResult &result);

// Property checks over seeded random states and settings; logs one line per
// check and returns the number of failed cases.
int selftest(std::ostream &log);

}  // namespace rbnl::experiment

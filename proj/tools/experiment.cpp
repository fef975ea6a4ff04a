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

#include "experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "rbnl/errors.hpp"
#include "rbnl/random_states.hpp"
#include "rbnl/version.hpp"

namespace rbnl::experiment {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) { return format_value(v); }

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const auto pos = s.find(sep, begin);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(begin));
            return parts;
        }
        parts.push_back(s.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

double parse_number(const std::string &token) {
    const std::string t = trim(token);
    std::size_t pos = 0;
    const double value = std::stod(t, &pos);  // throws invalid_argument / out_of_range
    if (pos != t.size()) {
        throw std::invalid_argument("trailing characters in number '" + token + "'");
    }
    return value;
}

// The setting achieving the reported minimum-over-cuts value.
const NonlocalityResult &min_cut_result(const TripartiteResult &result) {
    return result.symmetric_shortcut_used
               ? result.per_cut[0]
               : result.per_cut[static_cast<std::size_t>(result.min_cut)];
}

}  // namespace

std::string format_value(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::vector<double> grid_values(double start, double end, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (end < start) {
        throw std::invalid_argument("grid end must not precede its start");
    }
    const auto last = static_cast<long long>(std::floor((end - start) / step + 1e-6));
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(last) + 1);
    for (long long k = 0; k <= last; ++k) {
        values.push_back(std::min(start + static_cast<double>(k) * step, end));
    }
    return values;
}

std::string increment_label(double increment) {
    const long den = std::lround(M_PI / increment);
    return den == 1 ? "pi" : "pi/" + std::to_string(den);
}

std::string family_label(PureFamily family) {
    return family == PureFamily::Ghz ? "ghz" : "w";
}

DensityMatrix parse_state(const std::string &spec) {
    const std::string s = trim(spec);
    std::string name = s;
    std::vector<double> args;
    const auto paren = s.find('(');
    if (paren != std::string::npos) {
        if (s.back() != ')') {
            throw std::invalid_argument("unbalanced parentheses in state '" + spec + "'");
        }
        name = trim(s.substr(0, paren));
        for (const auto &token : split(s.substr(paren + 1, s.size() - paren - 2), ',')) {
            args.push_back(parse_number(token));
        }
    }

    if (name == "ghz" && args.empty()) return ghz_state();
    if (name == "w" && args.empty()) return w_state();
    if ((name == "ghz" || name == "mixed") && args.size() == 1) {
        return noisy_state({PureFamily::Ghz, args[0]});
    }
    if (name == "w" && args.size() == 1) {
        return noisy_state({PureFamily::W, args[0]});
    }
    try {
        if (name == "schmidt" && args.size() == 2) {
            return schmidt_pure_state({ProbabilityVector{args[0], args[1]}});
        }
        if (name == "ccc" && args.size() == 2) {
            const auto z = pauli_z_observable();
            return ccc_state(ProbabilityVector{args[0], args[1]}, z, z, z);
        }
    } catch (const ConsistencyError &) {
        throw std::invalid_argument("state weights in '" + spec + "' must sum to one");
    } catch (const NotPositiveSemidefinite &) {
        throw std::invalid_argument("state weights in '" + spec + "' must be nonnegative");
    }
    throw std::invalid_argument(
        "unknown state '" + spec +
        "' (expected ghz, w, ghz(n), w(n), mixed(n), schmidt(a,b), or ccc(p0,p1))");
}

Setting parse_setting(const std::string &spec) {
    const auto tokens = split(spec, ',');
    if (tokens.size() != 3) {
        throw std::invalid_argument("setting '" + spec +
                                    "' must name one direction per site, e.g. \"z,z,x\"");
    }
    std::vector<BlochDirection> dirs;
    for (const auto &raw : tokens) {
        const std::string token = trim(raw);
        if (token == "x") {
            dirs.push_back({M_PI / 2.0, 0.0});
        } else if (token == "y") {
            dirs.push_back({M_PI / 2.0, M_PI / 2.0});
        } else if (token == "z") {
            dirs.push_back({0.0, 0.0});
        } else {
            const auto parts = split(token, ':');
            if (parts.size() != 2) {
                throw std::invalid_argument("direction '" + token +
                                            "' must be x, y, z, or theta:phi in units of pi");
            }
            dirs.push_back({parse_number(parts[0]) * M_PI, parse_number(parts[1]) * M_PI});
        }
    }
    return setting_from_directions(dirs);
}

int parse_target(const std::string &spec) {
    const std::string t = trim(spec);
    if (t == "a") return 0;
    if (t == "b") return 1;
    if (t == "c") return 2;
    throw std::invalid_argument("target '" + spec + "' must be a, b, or c");
}

NoiseSweepResult run_noise_sweep(const NoiseSweepConfig &config) {
    NoiseSweepResult result;
    result.config = config;
    for (const double noise : grid_values(config.noise_start, config.noise_end,
                                          config.noise_step)) {
        const DensityMatrix rho = noisy_state({config.family, noise});
        const auto t0 = std::chrono::steady_clock::now();
        const TripartiteResult swept = n3(rho, config.strategy, config.symmetric,
                                          config.options);
        const auto t1 = std::chrono::steady_clock::now();

        NoiseSweepRow row;
        row.noise = noise;
        row.n3 = swept.value;
        const NonlocalityResult &at_min_cut = min_cut_result(swept);
        for (std::size_t s = 0; s < 3; ++s) {
            row.argmax[s] = at_min_cut.argmax.directions[s];
        }
        row.evaluations = swept.evaluations;
        row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        result.rows.push_back(row);
    }

    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        const NoiseSweepRow &prev = result.rows[i - 1];
        const NoiseSweepRow &cur = result.rows[i];
        if (cur.n3 > prev.n3 + 1e-9) {
            result.warnings.push_back("nonlocality rose from " + fmt(prev.n3) + " to " +
                                      fmt(cur.n3) + " between noise " + fmt(prev.noise) +
                                      " and " + fmt(cur.noise));
        }
    }
    return result;
}

MonogamyResult run_monogamy_scan(const MonogamyConfig &config) {
    MonogamyResult result;
    result.config = config;
    const auto noises = grid_values(config.noise_start, config.noise_end, config.noise_step);
    const auto alphas = grid_values(config.alpha_start, config.alpha_end, config.alpha_step);

    // The three optimized ingredients depend on the noise only; the powers are
    // cheap, so each state is swept once and reused across the alpha grid.
    for (const double noise : noises) {
        const DensityMatrix rho = noisy_state({config.family, noise});
        const MonogamyComponents components =
            monogamy_components(rho, config.strategy, config.symmetric, config.options);
        for (const double alpha : alphas) {
            MonogamyRow row;
            row.noise = noise;
            row.alpha = alpha;
            row.n3 = components.n3;
            row.n2_ab = components.n2_ab;
            row.n2_ac = components.n2_ac;
            row.delta = monogamy_witness(components, alpha);
            result.rows.push_back(row);
        }
    }

    // Guard against row corruption: the stored delta must reproduce from the
    // stored ingredients.
    for (const MonogamyRow &row : result.rows) {
        const double recomputed = std::pow(row.n3, row.alpha) - std::pow(row.n2_ab, row.alpha) -
                                  std::pow(row.n2_ac, row.alpha);
        if (std::abs(recomputed - row.delta) > 1e-12) {
            throw ConsistencyError("monogamy row at noise " + fmt(row.noise) + ", alpha " +
                                   fmt(row.alpha) + " does not reproduce its witness value");
        }
    }

    double max_delta = result.rows.empty() ? 0.0 : result.rows[0].delta;
    std::size_t max_index = 0;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        if (result.rows[i].delta > max_delta) {
            max_delta = result.rows[i].delta;
            max_index = i;
        }
    }
    if (max_delta > 0.0) {
        for (MonogamyRow &row : result.rows) {
            row.delta_normalized = row.delta / max_delta;
        }
    }
    if (!result.rows.empty()) {
        result.summary.max_delta = max_delta;
        result.summary.max_delta_alpha = result.rows[max_index].alpha;
        result.summary.max_delta_noise = result.rows[max_index].noise;
    }

    // Crossing and peak along alpha at the lowest noise of the scan.
    if (!result.rows.empty()) {
        const std::size_t n_alpha = alphas.size();
        if (result.rows[0].delta >= 0.0) {
            result.summary.has_crossing = true;
            result.summary.crossing_alpha = result.rows[0].alpha;
        }
        result.summary.peak_alpha = result.rows[0].alpha;
        result.summary.peak_delta = result.rows[0].delta;
        for (std::size_t i = 1; i < n_alpha; ++i) {
            const MonogamyRow &prev = result.rows[i - 1];
            const MonogamyRow &cur = result.rows[i];
            if (!result.summary.has_crossing && prev.delta < 0.0 && cur.delta >= 0.0) {
                result.summary.has_crossing = true;
                result.summary.crossing_alpha =
                    prev.alpha + (0.0 - prev.delta) * (cur.alpha - prev.alpha) /
                                     (cur.delta - prev.delta);
            }
            if (cur.delta > result.summary.peak_delta) {
                result.summary.peak_delta = cur.delta;
                result.summary.peak_alpha = cur.alpha;
            }
        }
    }
    return result;
}

namespace {

void write_common_metadata_csv(std::ostream &out, const std::string &command,
                               PureFamily family, const OptimizationStrategy &strategy,
                               bool symmetric) {
    out << "# tool=rbnl " << kVersion << "\n";
    out << "# command=" << command << "\n";
    out << "# chi=" << family_label(family) << "\n";
    if (const auto *grid = std::get_if<GridStrategy>(&strategy)) {
        out << "# strategy=grid\n";
        out << "# increment=" << increment_label(grid->increment) << "\n";
        out << "# dedupe=" << (grid->dedupe ? "true" : "false") << "\n";
    } else {
        const auto &random = std::get<RandomStrategy>(strategy);
        out << "# strategy=random\n";
        out << "# count=" << random.count << "\n";
        out << "# seed=" << random.seed << "\n";
    }
    out << "# symmetric=" << (symmetric ? "true" : "false") << "\n";
    out << "# angle-unit=pi\n";
}

ordered_json common_metadata_json(const std::string &command, PureFamily family,
                                  const OptimizationStrategy &strategy, bool symmetric) {
    ordered_json meta;
    meta["tool"] = "rbnl";
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["chi"] = family_label(family);
    if (const auto *grid = std::get_if<GridStrategy>(&strategy)) {
        meta["strategy"] = "grid";
        meta["increment"] = increment_label(grid->increment);
        meta["dedupe"] = grid->dedupe;
    } else {
        const auto &random = std::get<RandomStrategy>(strategy);
        meta["strategy"] = "random";
        meta["count"] = random.count;
        meta["seed"] = random.seed;
    }
    meta["symmetric"] = symmetric;
    meta["angle_unit"] = "pi";
    return meta;
}

std::string grid_label(double start, double end, double step) {
    return fmt(start) + ":" + fmt(end) + ":" + fmt(step);
}

}  // namespace

void write_noise_sweep_csv(std::ostream &out, const NoiseSweepResult &result) {
    const NoiseSweepConfig &config = result.config;
    write_common_metadata_csv(out, "sweep-noise", config.family, config.strategy,
                              config.symmetric);
    out << "# noise-grid=" << grid_label(config.noise_start, config.noise_end,
                                         config.noise_step)
        << "\n";
    out << "chi,noise,n3,theta_a,phi_a,theta_b,phi_b,theta_c,phi_c,evaluations";
    if (config.timing) out << ",wall_ms";
    out << "\n";
    for (const NoiseSweepRow &row : result.rows) {
        out << family_label(config.family) << "," << fmt(row.noise) << "," << fmt(row.n3);
        for (const BlochDirection &d : row.argmax) {
            out << "," << fmt(d.theta / M_PI) << "," << fmt(d.phi / M_PI);
        }
        out << "," << row.evaluations;
        if (config.timing) out << "," << fmt(row.wall_ms);
        out << "\n";
    }
}

void write_noise_sweep_json(std::ostream &out, const NoiseSweepResult &result) {
    const NoiseSweepConfig &config = result.config;
    ordered_json doc;
    doc["metadata"] = common_metadata_json("sweep-noise", config.family, config.strategy,
                                           config.symmetric);
    doc["metadata"]["noise_grid"] = {{"start", config.noise_start},
                                     {"end", config.noise_end},
                                     {"step", config.noise_step}};
    doc["rows"] = ordered_json::array();
    for (const NoiseSweepRow &row : result.rows) {
        ordered_json r;
        r["chi"] = family_label(config.family);
        r["noise"] = row.noise;
        r["n3"] = row.n3;
        r["theta_a"] = row.argmax[0].theta / M_PI;
        r["phi_a"] = row.argmax[0].phi / M_PI;
        r["theta_b"] = row.argmax[1].theta / M_PI;
        r["phi_b"] = row.argmax[1].phi / M_PI;
        r["theta_c"] = row.argmax[2].theta / M_PI;
        r["phi_c"] = row.argmax[2].phi / M_PI;
        r["evaluations"] = row.evaluations;
        if (config.timing) r["wall_ms"] = row.wall_ms;
        doc["rows"].push_back(std::move(r));
    }
    out << doc.dump(2) << "\n";
}

void write_monogamy_csv(std::ostream &out, const MonogamyResult &result) {
    const MonogamyConfig &config = result.config;
    write_common_metadata_csv(out, "monogamy", config.family, config.strategy,
                              config.symmetric);
    out << "# noise-grid=" << grid_label(config.noise_start, config.noise_end,
                                         config.noise_step)
        << "\n";
    out << "# alpha-grid=" << grid_label(config.alpha_start, config.alpha_end,
                                         config.alpha_step)
        << "\n";
    out << "chi,noise,alpha,n3,n2_ab,n2_ac,delta,delta_normalized\n";
    for (const MonogamyRow &row : result.rows) {
        out << family_label(config.family) << "," << fmt(row.noise) << "," << fmt(row.alpha)
            << "," << fmt(row.n3) << "," << fmt(row.n2_ab) << "," << fmt(row.n2_ac) << ","
            << fmt(row.delta) << "," << fmt(row.delta_normalized) << "\n";
    }
    const MonogamySummary &summary = result.summary;
    out << "# crossing-alpha="
        << (summary.has_crossing ? fmt(summary.crossing_alpha) : std::string("none")) << "\n";
    out << "# peak-alpha=" << fmt(summary.peak_alpha) << "\n";
    out << "# peak-delta=" << fmt(summary.peak_delta) << "\n";
    out << "# max-delta=" << fmt(summary.max_delta) << "\n";
    out << "# max-delta-alpha=" << fmt(summary.max_delta_alpha) << "\n";
    out << "# max-delta-noise=" << fmt(summary.max_delta_noise) << "\n";
}

void write_monogamy_json(std::ostream &out, const MonogamyResult &result) {
    const MonogamyConfig &config = result.config;
    ordered_json doc;
    doc["metadata"] =
        common_metadata_json("monogamy", config.family, config.strategy, config.symmetric);
    doc["metadata"]["noise_grid"] = {{"start", config.noise_start},
                                     {"end", config.noise_end},
                                     {"step", config.noise_step}};
    doc["metadata"]["alpha_grid"] = {{"start", config.alpha_start},
                                     {"end", config.alpha_end},
                                     {"step", config.alpha_step}};
    doc["rows"] = ordered_json::array();
    for (const MonogamyRow &row : result.rows) {
        ordered_json r;
        r["chi"] = family_label(config.family);
        r["noise"] = row.noise;
        r["alpha"] = row.alpha;
        r["n3"] = row.n3;
        r["n2_ab"] = row.n2_ab;
        r["n2_ac"] = row.n2_ac;
        r["delta"] = row.delta;
        r["delta_normalized"] = row.delta_normalized;
        doc["rows"].push_back(std::move(r));
    }
    const MonogamySummary &summary = result.summary;
    ordered_json s;
    if (summary.has_crossing) {
        s["crossing_alpha"] = summary.crossing_alpha;
    } else {
        s["crossing_alpha"] = nullptr;
    }
    s["peak_alpha"] = summary.peak_alpha;
    s["peak_delta"] = summary.peak_delta;
    s["max_delta"] = summary.max_delta;
    s["max_delta_alpha"] = summary.max_delta_alpha;
    s["max_delta_noise"] = summary.max_delta_noise;
    doc["summary"] = std::move(s);
    out << doc.dump(2) << "\n";
}

namespace {

double max_abs_diff(const CMat &a, const CMat &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

struct CheckReport {
    int cases = 0;
    int failures = 0;
};

void log_check(std::ostream &log, const char *name, const CheckReport &report) {
    log << name << ": " << report.cases << " cases, " << report.failures << " failures\n";
}

CheckReport check_idempotence() {
    CheckReport report;
    StateSampler states(101);
    Sampler dirs(102);
    for (int trial = 0; trial < 50; ++trial) {
        ++report.cases;
        const DensityMatrix rho = states.random_mixed(3);
        const ProjectiveObservable obs = bloch_observable(dirs.direction());
        const DensityMatrix once = dephase(rho, obs, trial % 3);
        const DensityMatrix twice = dephase(once, obs, trial % 3);
        if (max_abs_diff(once.matrix(), twice.matrix()) > 1e-12) ++report.failures;
    }
    return report;
}

CheckReport check_commutation() {
    CheckReport report;
    StateSampler states(103);
    Sampler dirs(104);
    for (int trial = 0; trial < 50; ++trial) {
        ++report.cases;
        const DensityMatrix rho = states.random_mixed(3);
        const ProjectiveObservable oa = bloch_observable(dirs.direction());
        const ProjectiveObservable ob = bloch_observable(dirs.direction());
        const int site_a = trial % 3;
        const int site_b = (trial + 1) % 3;
        const CMat ab = dephase(dephase(rho, oa, site_a), ob, site_b).matrix();
        const CMat ba = dephase(dephase(rho, ob, site_b), oa, site_a).matrix();
        if (max_abs_diff(ab, ba) > 1e-12) ++report.failures;
    }
    return report;
}

CheckReport check_trace_preservation() {
    CheckReport report;
    StateSampler states(105);
    Sampler dirs(106);
    for (int trial = 0; trial < 50; ++trial) {
        ++report.cases;
        const DensityMatrix rho = states.random_mixed(3);
        const DensityMatrix dephased = dephase(rho, bloch_observable(dirs.direction()),
                                               trial % 3);
        if (std::abs(dephased.matrix().trace().real() - 1.0) > 1e-12) ++report.failures;
    }
    return report;
}

CheckReport check_unitality() {
    CheckReport report;
    Sampler dirs(107);
    const DensityMatrix flat = DensityMatrix::trusted(CMat::Identity(8, 8) / 8.0);
    for (int trial = 0; trial < 50; ++trial) {
        ++report.cases;
        const DensityMatrix dephased = dephase(flat, bloch_observable(dirs.direction()),
                                               trial % 3);
        if (max_abs_diff(dephased.matrix(), flat.matrix()) > 1e-12) ++report.failures;
    }
    return report;
}

CheckReport check_entropy_chain() {
    CheckReport report;
    StateSampler states(108);
    Sampler dirs(109);
    for (int trial = 0; trial < 100; ++trial) {
        ++report.cases;
        const DensityMatrix rho = states.random_mixed(3);
        const double s0 = von_neumann_entropy(rho.matrix());
        const DensityMatrix da = dephase(rho, bloch_observable(dirs.direction()), 0);
        const double s1 = von_neumann_entropy(da.matrix());
        const DensityMatrix dab = dephase(da, bloch_observable(dirs.direction()), 1);
        const double s2 = von_neumann_entropy(dab.matrix());
        const DensityMatrix dabc = dephase(dab, bloch_observable(dirs.direction()), 2);
        const double s3 = von_neumann_entropy(dabc.matrix());
        if (s1 < s0 - 1e-12 || s2 < s1 - 1e-12 || s3 < s2 - 1e-12) ++report.failures;
    }
    return report;
}

CheckReport check_pure_state_inequality() {
    CheckReport report;
    StateSampler states(110);
    Sampler dirs(111);
    for (int trial = 0; trial < 100; ++trial) {
        ++report.cases;
        const DensityMatrix pure = states.random_pure(3);
        const Setting setting = setting_from_directions(
            {dirs.direction(), dirs.direction(), dirs.direction()});
        const ContextEntropies ent = contextual_entropies(pure, trial % 3, setting);
        if (2.0 * ent.s_all < ent.s_target + ent.s_remote - 1e-12) ++report.failures;
    }
    return report;
}

CheckReport check_nonnegativity() {
    CheckReport report;
    StateSampler states(112);
    Sampler dirs(113);
    for (int trial = 0; trial < 10000; ++trial) {
        ++report.cases;
        const DensityMatrix rho = states.random_mixed(3);
        const Setting setting = setting_from_directions(
            {dirs.direction(), dirs.direction(), dirs.direction()});
        try {
            if (contextual_nl_3(rho, trial % 3, setting) < 0.0) ++report.failures;
        } catch (const ConsistencyError &) {
            ++report.failures;
        }
    }
    return report;
}

}  // namespace

int selftest(std::ostream &log) {
    int failures = 0;
    const std::pair<const char *, CheckReport (*)()> checks[] = {
        {"dephasing idempotence", check_idempotence},
        {"cross-site commutation", check_commutation},
        {"trace preservation", check_trace_preservation},
        {"unitality", check_unitality},
        {"entropy monotonicity chain", check_entropy_chain},
        {"pure-state entropy inequality", check_pure_state_inequality},
        {"nonnegativity of contextual nonlocality", check_nonnegativity},
    };
    for (const auto &[name, check] : checks) {
        const CheckReport report = check();
        log_check(log, name, report);
        failures += report.failures;
    }
    log << "selftest: " << failures << " failing case(s)\n";
    return failures;
}

}  // namespace rbnl::experiment

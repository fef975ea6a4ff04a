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

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "experiment.hpp"
#include "rbnl/errors.hpp"
#include "rbnl/version.hpp"

namespace {

namespace experiment = rbnl::experiment;

struct StrategyFlags {
    std::string increment = "pi/8";
    bool dedupe = false;
    long long random = 0;
    std::uint64_t seed = 1;
};

void add_strategy_flags(CLI::App *cmd, StrategyFlags &flags) {
    auto *increment =
        cmd->add_option("--increment", flags.increment, "grid angle increment")
            ->check(CLI::IsMember({"pi/8", "pi/4", "pi/2"}))
            ->capture_default_str();
    auto *dedupe = cmd->add_flag("--dedupe", flags.dedupe,
                                 "enumerate one direction per projector pair instead of the "
                                 "full sphere parametrization");
    auto *random = cmd->add_option(
        "--random", flags.random,
        "sample this many seeded random settings instead of sweeping the grid")
                       ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags.seed, "seed for --random sampling")->capture_default_str();
    random->excludes(increment);
    random->excludes(dedupe);
}

rbnl::OptimizationStrategy make_strategy(const StrategyFlags &flags) {
    if (flags.random > 0) {
        return rbnl::RandomStrategy{flags.random, flags.seed};
    }
    if (flags.random < 0) {
        throw std::invalid_argument("--random needs a positive count");
    }
    double increment = M_PI / 8.0;
    if (flags.increment == "pi/4") increment = M_PI / 4.0;
    if (flags.increment == "pi/2") increment = M_PI / 2.0;
    return rbnl::GridStrategy{increment, flags.dedupe};
}

rbnl::PureFamily parse_family(const std::string &chi) {
    return chi == "w" ? rbnl::PureFamily::W : rbnl::PureFamily::Ghz;
}

int workers_from_env() {
    if (const char *env = std::getenv("RBN_WORKERS")) {
        return std::atoi(env);
    }
    return 0;
}

void emit(const std::string &out_path, const std::function<void(std::ostream &)> &writer) {
    if (out_path.empty()) {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw experiment::IoError("failed writing to standard output");
        }
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw experiment::IoError("cannot open '" + out_path + "' for writing");
    }
    writer(file);
    file.flush();
    if (!file) {
        throw experiment::IoError("failed writing '" + out_path + "'");
    }
}

constexpr char kSiteLetter[3] = {'A', 'B', 'C'};

void write_eval_text(std::ostream &out, const rbnl::ContextEntropies &ent, int target) {
    std::string remote;
    for (int s = 0; s < 3; ++s) {
        if (s == target) continue;
        if (!remote.empty()) remote += ',';
        remote += kSiteLetter[s];
    }
    out << "S(rho) = " << experiment::format_value(ent.s_rho) << "\n";
    out << "S(dephased " << kSiteLetter[target] << ") = " << experiment::format_value(ent.s_target)
        << "\n";
    out << "S(dephased " << remote << ") = " << experiment::format_value(ent.s_remote) << "\n";
    out << "S(dephased A,B,C) = " << experiment::format_value(ent.s_all) << "\n";
    out << "eta = " << experiment::format_value(ent.eta) << "\n";
}

void write_eval_csv(std::ostream &out, const rbnl::ContextEntropies &ent,
                    const std::string &state, const std::string &setting,
                    const std::string &target) {
    out << "# tool=rbnl " << rbnl::kVersion << "\n";
    out << "# command=eval\n";
    out << "state,setting,target,s_rho,s_target,s_remote,s_all,eta\n";
    out << '"' << state << "\",\"" << setting << "\",\"" << target << "\","
        << experiment::format_value(ent.s_rho) << "," << experiment::format_value(ent.s_target) << ","
        << experiment::format_value(ent.s_remote) << "," << experiment::format_value(ent.s_all) << ","
        << experiment::format_value(ent.eta) << "\n";
}

void write_eval_json(std::ostream &out, const rbnl::ContextEntropies &ent,
                     const std::string &state, const std::string &setting,
                     const std::string &target) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {{"tool", "rbnl"}, {"version", rbnl::kVersion}, {"command", "eval"}};
    doc["input"] = {{"state", state}, {"setting", setting}, {"target", target}};
    doc["entropies"] = {{"s_rho", ent.s_rho},
                        {"s_target", ent.s_target},
                        {"s_remote", ent.s_remote},
                        {"s_all", ent.s_all},
                        {"eta", ent.eta}};
    out << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Contextual nonlocality of three-qubit states: single-setting evaluation, "
                 "noise sweeps of the genuine nonlocality, and monogamy witness scans.",
                 "rbnl"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("rbnl ") + rbnl::kVersion);
    const int default_workers = workers_from_env();

    // eval
    auto *eval_cmd = app.add_subcommand(
        "eval", "print the four dephasing entropies and the contextual nonlocality "
                "of one state at one measurement setting");
    std::string eval_state;
    std::string eval_setting;
    std::string eval_target = "a";
    std::string eval_format = "text";
    std::string eval_out;
    eval_cmd->add_option("--state", eval_state,
                         "ghz | w | ghz(n) | w(n) | mixed(n) | schmidt(a,b) | ccc(p0,p1)")
        ->required();
    eval_cmd->add_option("--setting", eval_setting,
                         "per-site directions: x, y, z, or theta:phi in units of pi")
        ->required();
    eval_cmd->add_option("--target", eval_target, "target site")
        ->check(CLI::IsMember({"a", "b", "c"}))
        ->capture_default_str();
    eval_cmd->add_option("--format", eval_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    eval_cmd->add_option("--out", eval_out, "output file (default: standard output)");

    // sweep-noise
    auto *sweep_cmd = app.add_subcommand(
        "sweep-noise", "genuine tripartite nonlocality across a white-noise ramp");
    std::string sweep_chi = "ghz";
    StrategyFlags sweep_strategy;
    experiment::NoiseSweepConfig sweep_config;
    std::string sweep_format = "csv";
    std::string sweep_out;
    int sweep_workers = default_workers;
    sweep_cmd->add_option("--chi", sweep_chi, "pure state the noise is mixed into")
        ->check(CLI::IsMember({"ghz", "w"}))
        ->capture_default_str();
    sweep_cmd->add_option("--noise-start", sweep_config.noise_start, "first noise weight")
        ->capture_default_str();
    sweep_cmd->add_option("--noise-end", sweep_config.noise_end, "last noise weight")
        ->capture_default_str();
    sweep_cmd->add_option("--noise-step", sweep_config.noise_step, "noise grid step")
        ->capture_default_str();
    add_strategy_flags(sweep_cmd, sweep_strategy);
    sweep_cmd->add_flag("--symmetric", sweep_config.symmetric,
                        "sweep one bipartition and reuse it (valid for "
                        "subsystem-permutation-symmetric states; verified on a spot check)");
    sweep_cmd->add_flag("--timing", sweep_config.timing,
                        "append a wall-clock column (breaks byte-identical reruns)");
    sweep_cmd->add_option("--workers", sweep_workers,
                          "worker threads (0 = one per hardware thread; env RBN_WORKERS "
                          "overrides this default)")
        ->capture_default_str();
    sweep_cmd->add_option("--format", sweep_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "output file (default: standard output)");

    // monogamy
    auto *mono_cmd = app.add_subcommand(
        "monogamy", "monogamy witness over a noise and exponent grid, with its "
                    "zero crossing and peak");
    std::string mono_chi = "ghz";
    StrategyFlags mono_strategy;
    experiment::MonogamyConfig mono_config;
    std::string mono_format = "csv";
    std::string mono_out;
    int mono_workers = default_workers;
    mono_cmd->add_option("--chi", mono_chi, "pure state the noise is mixed into")
        ->check(CLI::IsMember({"ghz", "w"}))
        ->capture_default_str();
    mono_cmd->add_option("--noise-start", mono_config.noise_start, "first noise weight")
        ->capture_default_str();
    mono_cmd->add_option("--noise-end", mono_config.noise_end, "last noise weight")
        ->capture_default_str();
    mono_cmd->add_option("--noise-step", mono_config.noise_step, "noise grid step")
        ->capture_default_str();
    mono_cmd->add_option("--alpha-start", mono_config.alpha_start, "first witness exponent")
        ->capture_default_str();
    mono_cmd->add_option("--alpha-end", mono_config.alpha_end, "last witness exponent")
        ->capture_default_str();
    mono_cmd->add_option("--alpha-step", mono_config.alpha_step, "exponent grid step")
        ->capture_default_str();
    add_strategy_flags(mono_cmd, mono_strategy);
    mono_cmd->add_flag("--symmetric", mono_config.symmetric,
                       "sweep one bipartition and reuse it (valid for "
                       "subsystem-permutation-symmetric states; verified on a spot check)");
    mono_cmd->add_option("--workers", mono_workers,
                         "worker threads (0 = one per hardware thread; env RBN_WORKERS "
                         "overrides this default)")
        ->capture_default_str();
    mono_cmd->add_option("--format", mono_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    mono_cmd->add_option("--out", mono_out, "output file (default: standard output)");

    // selftest
    auto *self_cmd = app.add_subcommand(
        "selftest", "run the seeded property checks of the dephasing algebra");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*eval_cmd) {
            const rbnl::DensityMatrix state = experiment::parse_state(eval_state);
            const rbnl::Setting setting = experiment::parse_setting(eval_setting);
            const int target = experiment::parse_target(eval_target);
            const rbnl::ContextEntropies ent = rbnl::contextual_entropies(state, target,
                                                                          setting);
            emit(eval_out, [&](std::ostream &out) {
                if (eval_format == "csv") {
                    write_eval_csv(out, ent, eval_state, eval_setting, eval_target);
                } else if (eval_format == "json") {
                    write_eval_json(out, ent, eval_state, eval_setting, eval_target);
                } else {
                    write_eval_text(out, ent, target);
                }
            });
        } else if (*sweep_cmd) {
            sweep_config.family = parse_family(sweep_chi);
            sweep_config.strategy = make_strategy(sweep_strategy);
            sweep_config.options.workers = sweep_workers;
            const experiment::NoiseSweepResult result = experiment::run_noise_sweep(sweep_config);
            emit(sweep_out, [&](std::ostream &out) {
                if (sweep_format == "json") {
                    experiment::write_noise_sweep_json(out, result);
                } else {
                    experiment::write_noise_sweep_csv(out, result);
                }
            });
            for (const std::string &warning : result.warnings) {
                std::cerr << "warning: " << warning << "\n";
            }
        } else if (*mono_cmd) {
            mono_config.family = parse_family(mono_chi);
            mono_config.strategy = make_strategy(mono_strategy);
            mono_config.options.workers = mono_workers;
            const experiment::MonogamyResult result = experiment::run_monogamy_scan(mono_config);
            emit(mono_out, [&](std::ostream &out) {
                if (mono_format == "json") {
                    experiment::write_monogamy_json(out, result);
                } else {
                    experiment::write_monogamy_csv(out, result);
                }
            });
        } else if (*self_cmd) {
            const int failures = experiment::selftest(std::cout);
            return failures == 0 ? 0 : 2;
        }
        return 0;
    } catch (const experiment::IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rbnl::ConsistencyError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

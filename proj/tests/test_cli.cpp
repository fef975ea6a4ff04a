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

// End-to-end checks that spawn the installed command-line binary, located at
// compile time through the RBNL_CLI_PATH definition.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

namespace {

constexpr double kLn2 = 0.6931471805599453;

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path &path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

std::filesystem::path temp_file(const std::string &tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("rbnl_cli_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
            std::to_string(counter++));
}

// Runs the binary with a shell argument string (optionally prefixed with
// environment assignments) and captures both streams.
CliRun run_cli(const std::string &args, const std::string &env_prefix = "") {
    const auto out_path = temp_file("out");
    const auto err_path = temp_file("err");
    const std::string command = env_prefix + (env_prefix.empty() ? "" : " ") + RBNL_CLI_PATH +
                                " " + args + " > " + out_path.string() + " 2> " +
                                err_path.string();
    const int raw = std::system(command.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    run.out = slurp(out_path);
    run.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return run;
}

// Extracts the number following "<key> = " on its own line of text output.
double text_value(const std::string &out, const std::string &key) {
    const std::string needle = key + " = ";
    const auto pos = out.find(needle);
    REQUIRE(pos != std::string::npos);
    return std::stod(out.substr(pos + needle.size()));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints the documented entropies") {
    const CliRun ghz = run_cli("eval --state ghz --setting z,z,z");
    CHECK(ghz.exit_code == 0);
    CHECK(text_value(ghz.out, "eta") == doctest::Approx(kLn2).epsilon(1e-9));
    CHECK(text_value(ghz.out, "S(dephased A)") == doctest::Approx(kLn2).epsilon(1e-9));
    CHECK(std::abs(text_value(ghz.out, "S(rho)")) <= 1e-10);

    const CliRun w = run_cli("eval --state w --setting z,z,z --target b");
    CHECK(w.exit_code == 0);
    CHECK(text_value(w.out, "eta") == doctest::Approx(0.636514168294813).epsilon(1e-9));

    const CliRun flat = run_cli("eval --state \"mixed(1.0)\" --setting x,y,z");
    CHECK(flat.exit_code == 0);
    CHECK(text_value(flat.out, "eta") == 0.0);
}

TEST_CASE("eval emits parseable csv and json") {
    const CliRun csv = run_cli("eval --state ghz --setting x,x,x --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("state,setting,target,s_rho,s_target,s_remote,s_all,eta") !=
          std::string::npos);
    CHECK(csv.out.find("\"ghz\",\"x,x,x\",\"a\"") != std::string::npos);

    const CliRun json = run_cli("eval --state ghz --setting x,x,x --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["entropies"]["eta"].get<double>() == doctest::Approx(kLn2).epsilon(1e-9));
    CHECK(doc["input"]["setting"] == "x,x,x");
}

TEST_CASE("usage errors exit with code one") {
    CHECK(run_cli("eval --state nope --setting z,z,z").exit_code == 1);
    CHECK(run_cli("eval --state ghz --setting z,z").exit_code == 1);
    CHECK(run_cli("eval --state ghz --setting z,z,z --target q").exit_code == 1);
    CHECK(run_cli("eval --state \"schmidt(2,-1)\" --setting z,z,z").exit_code == 1);
    CHECK(run_cli("eval --state ghz").exit_code == 1);          // missing --setting
    CHECK(run_cli("").exit_code == 1);                          // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 1);                // unknown subcommand
    CHECK(run_cli("sweep-noise --random 10 --dedupe").exit_code == 1);
    CHECK(run_cli("sweep-noise --noise-step 0").exit_code == 1);
    CHECK(run_cli("sweep-noise --random 0").exit_code == 1);

    const CliRun bad = run_cli("eval --state nope --setting z,z,z");
    CHECK(bad.err.find("error:") != std::string::npos);
    CHECK(bad.out.empty());
}

TEST_CASE("unwritable output paths exit with code three") {
    const CliRun run =
        run_cli("eval --state ghz --setting z,z,z --out /nonexistent-dir/report.txt");
    CHECK(run.exit_code == 3);
    CHECK(run.err.find("error:") != std::string::npos);
}

TEST_CASE("help and version exit cleanly") {
    const CliRun help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("sweep-noise") != std::string::npos);
    CHECK(run_cli("sweep-noise --help").exit_code == 0);

    const CliRun version = run_cli("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.out.find("rbnl") != std::string::npos);
}

TEST_CASE("selftest reports zero failing cases") {
    const CliRun run = run_cli("selftest");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("selftest: 0 failing case(s)") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical across processes and workers") {
    const std::string args = "sweep-noise --chi w --increment pi/2 --noise-step 0.25";
    const CliRun first = run_cli(args + " --workers 1");
    const CliRun second = run_cli(args + " --workers 1");
    const CliRun parallel = run_cli(args + " --workers 3");
    const CliRun via_env = run_cli(args, "RBN_WORKERS=2");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == parallel.out);
    CHECK(first.out == via_env.out);
    CHECK(first.out.find("# strategy=grid") != std::string::npos);
    CHECK(first.out.find("# increment=pi/2") != std::string::npos);
}

TEST_CASE("monogamy scan emits its summary trailer") {
    const CliRun run = run_cli(
        "monogamy --chi ghz --increment pi/2 --symmetric --noise-step 0.5 "
        "--alpha-start 1 --alpha-end 2 --alpha-step 0.5");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("chi,noise,alpha,n3,n2_ab,n2_ac,delta,delta_normalized") !=
          std::string::npos);
    CHECK(run.out.find("# crossing-alpha=") != std::string::npos);
    CHECK(run.out.find("# max-delta=") != std::string::npos);
}

TEST_CASE("an output file matches what standard output would carry") {
    const auto report = temp_file("report");
    const std::string args = "sweep-noise --chi ghz --increment pi/2 --noise-step 0.5";
    const CliRun direct = run_cli(args);
    const CliRun to_file = run_cli(args + " --out " + report.string());
    CHECK(direct.exit_code == 0);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(report) == direct.out);
    std::filesystem::remove(report);
}

}  // TEST_SUITE

#include "catch2/catch_amalgamated.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HARDY_CLI_PATH
#error "HARDY_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
    const std::string out_file = "cli_out_" + tag + ".txt";
    const std::string cmd =
        std::string(HARDY_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(raw), ss.str()};
}

double parse_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    const auto eq = text.find('=', pos);
    REQUIRE(eq != std::string::npos);
    return std::strtod(text.c_str() + eq + 1, nullptr);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli constant: the s = 1/2 zero of the half-space constant") {
    auto r = run_cli("constant --regime half --d 3 --s 0.5 --p 2 --alpha 0 --beta 0", "bd0");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(parse_after(r.out, "constant")) <= 1e-10);
}

TEST_CASE("cli constant: both methods agree on the full space") {
    auto r = run_cli(
        "constant --regime full --d 1 --s 0.25 --p 2 --alpha 0 --beta 0 --method both", "both");
    CHECK(r.exit_code == 0);
    CHECK(parse_after(r.out, "constant(integral)") == Catch::Approx(1.4037085997664525).epsilon(1e-8));
    CHECK(parse_after(r.out, "discrepancy") <= 1e-8);
}

TEST_CASE("cli constant: validation failures exit 2") {
    // alpha+beta outside (-sp, d): invalid in every full-space regime
    auto r = run_cli("constant --regime full --d 1 --s 0.5 --p 2 --alpha 0.6 --beta 0.6", "inv");
    CHECK(r.exit_code == 2);
    // sp+alpha+beta > d needs the punctured regime: integral route refuses under 'full'
    auto r2 = run_cli(
        "constant --regime full --d 1 --s 0.5 --p 2 --alpha 0.3 --beta 0.3 --method integral",
        "wrongclass");
    CHECK(r2.exit_code == 2);
    auto r3 = run_cli(
        "constant --regime full-punctured --d 1 --s 0.5 --p 2 --alpha 0.3 --beta 0.3 "
        "--method integral",
        "punctured");
    CHECK(r3.exit_code == 0);
}

TEST_CASE("cli verify: ground-state identity suite") {
    auto r = run_cli("verify --suite identity-p2 --d 1 --s 0.4 --alpha 0.1 --beta 0.2", "gs");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli verify: pseudo-distance suite on a ball") {
    auto r = run_cli("verify --suite mdist --shape ball", "mdist");
    CHECK(r.exit_code == 0);
}

TEST_CASE("cli sweep: deterministic files, inadmissible rows flagged") {
    const std::string args =
        "sweep --regime half --d 1 --s 0.25:0.65:0.2 --p 2 --alpha 0:0.2:0.1 --beta 0.1 "
        "--no-timing --out ";
    // pool size from the flag on one run, from the env var on the other: same bytes
    auto r1 = run_cli(args + "sweep_a.csv --threads 2", "sw1");
    setenv("HARDY_SHARP_THREADS", "3", 1);
    auto r2 = run_cli(args + "sweep_b.csv", "sw2");
    unsetenv("HARDY_SHARP_THREADS");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    const std::string a = slurp("sweep_a.csv"), b = slurp("sweep_b.csv");
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.find("regime,d,s,p,alpha,beta,constant_integral,constant_closed,discrepancy,status") == 0);
    std::remove("sweep_a.csv");
    std::remove("sweep_b.csv");
    // 3 s-values x 3 alphas = 9 rows + header
    CHECK(std::count(a.begin(), a.end(), '\n') == 10);
}

TEST_CASE("cli limits: digamma route matches the s = 0 integral") {
    auto r = run_cli("limits --regime full --d 2 --p 2 --alpha 0.8 --beta 0.6", "lim");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digamma closed form") != std::string::npos);
}

// Drives the built CLI binary end to end: exit codes, JSON schema keys,
// byte-identical reruns. The binary path comes from the build system.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "thetalift/format.hpp"
#include "thetalift/kronecker.hpp"

#ifndef THETALIFT_CLI_PATH
#define THETALIFT_CLI_PATH "./thetalift"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(THETALIFT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval subcommand: values and schema") {
    auto r = run_cli("eval e1 --tau i --z 1/2,0");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("params"));
    CHECK(std::abs(j["value"]["re"].get<double>()) < 1e-9);
    CHECK(std::abs(j["value"]["im"].get<double>()) < 1e-9);
    CHECK(j.contains("est_error"));

    // pass-through against the library
    auto r2 = run_cli("eval e2 --tau i --z 1/4,0");
    auto j2 = nlohmann::json::parse(r2.out);
    thetalift::SeriesParams P;
    auto lib = thetalift::e2(thetalift::UpperHalfPoint(thetalift::cplx(0, 1)),
                             thetalift::TorsionCoord(thetalift::Rat(1, 4), thetalift::Rat(0)), P);
    CHECK(j2["value"]["re"].get<double>() == lib.real());
    CHECK(j2["value"]["im"].get<double>() == lib.imag());

    // k regression against the recorded oracle value
    auto r3 = run_cli("eval k --a 0 --s 2 --tau i --z 0.3");
    auto j3 = nlohmann::json::parse(r3.out);
    CHECK(std::abs(j3["value"]["re"].get<double>() - 131.919866482956621) < 1e-8);
}

TEST_CASE("theta subcommand") {
    auto r = run_cli("theta --matrix '0,1;1,0' --point '1/5,0;0,1/5' --tau i");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    thetalift::SeriesParams P;
    thetalift::Evaluator ev(thetalift::UpperHalfPoint(thetalift::cplx(0, 1)), P);
    auto e1e1 = ev.e1e1(thetalift::parse_point("1/5,0;0,1/5"));
    CHECK(std::abs(j["value"]["re"].get<double>() - e1e1.real()) < 1e-12);
    CHECK(std::abs(j["value"]["im"].get<double>() - e1e1.imag()) < 1e-12);

    auto r2 = run_cli("theta --matrix '2,0;0,3' --point '1/5,0;0,1/5' --tau i");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["value"]["re"].get<double>() == 0.0);

    auto r3 = run_cli("theta --matrix '1,1;1,2' --point '1/5,0;0,1/5' --tau 0.2+1.1i --telescoped");
    auto j3 = nlohmann::json::parse(r3.out);
    CHECK(j3["difference"].get<double>() < 1e-6);
}

TEST_CASE("verify subcommand exit codes and determinism") {
    auto a = run_cli("verify parity --seed 7");
    auto b = run_cli("verify parity --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["suite"] == "parity");
    CHECK(j["failures"] == 0);
    CHECK(j.contains("worst_error"));
}

TEST_CASE("hecke subcommand reports kappa") {
    auto r = run_cli("hecke --p 2 --N 5 --gamma '1,0;1,1' --tau 0.3+1.1i");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["difference"].get<double>() < 1e-4);
    CHECK(j.contains("kappa"));
}

TEST_CASE("error exit codes") {
    CHECK(run_cli("eval e1 --tau nonsense --z 1/2,0").exit_code == 2);
    CHECK(run_cli("theta --matrix 1,2,3 --point '1/5,0;0,1/5'").exit_code == 2);
    // evaluation error: singular matrix
    CHECK(run_cli("theta --matrix '1,2;2,4' --point '1/5,0;0,1/5'").exit_code == 3);
    // verify failure path: absurd tolerance
    CHECK(run_cli("verify parity --seed 7 --tol 1e-30").exit_code == 1);
}

TEST_CASE("cm-theta and cusp subcommands") {
    auto r = run_cli("cm-theta --tau cm:0,-1 --matrix '1,0:1;0,1' --point '1/5,0;2/5,1/5'");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["value"]["im"].get<double>()) > 1e-6);  // i * E2 value

    auto rc = run_cli("cusp --matrix '1,2;0,1' --point '1/5,2/5;0,1/3' --ys 20,50");
    CHECK(rc.exit_code == 0);
    auto jc = nlohmann::json::parse(rc.out);
    CHECK(jc["stabilized"].get<bool>());
}

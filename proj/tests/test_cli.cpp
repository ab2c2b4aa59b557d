#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ribbontab/json_io.hpp"

using namespace ribbontab;
using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("core and quotient") {
    auto r = run("--text core --k 3 --shape 8,7,7,4,1,1,1,1,1");
    CHECK(r.code == 0);
    CHECK(r.out == "2,1,1\n");
    r = run("--text quotient --k 3 --shape 8,7,7,4,1,1,1,1,1");
    CHECK(r.code == 0);
    CHECK(r.out == "2,1\n2,2\n2\n");
    r = run("quotient --k 3 --shape 8,7,7,4,1,1,1,1,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"([[2,1],[2,2],[2]])"));
}

TEST_CASE("charge") {
    auto r = run("charge --word 231112");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("ribbon tableau listing") {
    auto r = run("--text ribbon-tableaux --k 3 --shape 4,4,3 --inner 3,2 --weight 1,1");
    CHECK(r.code == 0);
    CHECK(r.out == "(3,2) < (4,4) < (4,4,3)\n");
    r = run("ribbon-tableaux --k 3 --shape 4,4,3 --inner 3,2 --weight 1,1 --spins");
    CHECK(r.code == 0);
    auto arr = json::parse(r.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["k"] == 3);
    CHECK(arr[0]["chain"] == json::parse(R"([[3,2],[4,4],[4,4,3]])"));
    CHECK(arr[0].contains("spin2"));
}

TEST_CASE("symmetric function commands") {
    auto r = run("hfun --k 2 --mu 3,2,1,1 --basis schur");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == symfunc_to_json(hfun({3, 2, 1, 1}, 2, Basis::schur)));
    // byte-identical repeat
    CHECK(run("hfun --k 2 --mu 3,2,1,1 --basis schur").out == r.out);

    r = run("gfun --k 3 --shape 3,3,3,2,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == symfunc_to_json(gfun_tilde({3, 3, 3, 2, 1}, 3)));

    r = run("qprime --mu 3,2,1,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) ==
          symfunc_to_json(convert(hall_littlewood_qprime({3, 2, 1, 1}), Basis::schur)));

    r = run("--text kostka-foulkes --lambda 3,1 --mu 2,1,1");
    CHECK(r.code == 0);
    CHECK(r.out == kostka_foulkes({3, 1}, {2, 1, 1}).to_string() + "\n");
    r = run("--text kostka-foulkes --lambda 4,1 --mu 2,2,1 --inner 2");
    CHECK(r.code == 0);
    CHECK(r.out == skew_kostka_foulkes({4, 1}, {2}, {2, 2, 1}).to_string() + "\n");

    r = run("plethysm --k 3 --of h --index 2,1");
    CHECK(r.code == 0);
    SymFunc want = convert(
        plethysm_power(convert(SymFunc::single(Basis::complete, {2, 1}), Basis::powersum), 3),
        Basis::schur);
    CHECK(json::parse(r.out) == symfunc_to_json(want));

    r = run("cyclic --k 4 --r 2 --compose-with s:1,1");
    CHECK(r.code == 0);
    SymFunc composed = convert(
        plethysm_compose(cyclic_character(4, 2), SymFunc::single(Basis::schur, {1, 1})),
        Basis::schur);
    CHECK(json::parse(r.out) == symfunc_to_json(composed));
}

TEST_CASE("fock commands") {
    auto r = run("fock hwv --n 2 --mu 2,1");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == fock_to_json(psi_q(2, {2, 1})));

    std::string state = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                        "/rtab_state.json";
    std::ofstream(state) << fock_to_json(psi_q(2, {2, 1})).dump();
    r = run("fock act --n 2 --op e --i 0 --state " + state);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == fock_to_json(e_action(0, psi_q(2, {2, 1}))));
    r = run("fock act --n 2 --op V --i 1 --state " + state);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == fock_to_json(v_op(1, psi_q(2, {2, 1}))));
    std::remove(state.c_str());
}

TEST_CASE("tabloid statistics") {
    auto r = run("--text tabloids --shape 4,2 --weight 3,2,1 --stat cocharge");
    CHECK(r.code == 0);
    CHECK(r.out.find("poly: 1 + q + 2*q^2 + q^3") != std::string::npos);
    r = run("tabloids --shape 3,2,1 --weight 4,2 --stat d");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["stat"] == "d");
    CHECK(j["tabloids"].size() == poincare_polys({3, 2, 1}, {4, 2}).d.evaluate_at_one());
    CHECK(laurent_from_json(j["poly"]) == poincare_polys({3, 2, 1}, {4, 2}).d);
    r = run("tabloids --shape 2,3 --weight 3,2 --stat inv");
    CHECK(r.code == 0);
    CHECK(laurent_from_json(json::parse(r.out)["poly"]) == poincare_polys({2, 3}, {3, 2}).e);
}

TEST_CASE("identity checks and exit codes") {
    auto r = run("check STABLE --max-size 3");
    CHECK(r.code == 0);
    CHECK(r.out == "STABLE: pass (|mu|<=3, l(mu)<=k<=l(mu)+2)\n");
    r = run("check STABLE --max-size 3 --json");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["counterexamples"].empty());

    r = run("check SELFTEST --max-size 3");
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["status"] == "fail");
    CHECK(!j["counterexamples"].empty());

    CHECK(run("check NO-SUCH-IDENTITY --max-size 3").code == 2);
    CHECK(run("core --k 3").code == 2);
    CHECK(run("frobnicate").code == 2);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    // the binary under test comes last on the command line
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_binary = argv[argc - 1];
        --argc;
    }
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}

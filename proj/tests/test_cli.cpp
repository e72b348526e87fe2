#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TORICARR_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
    return std::string(TORICARR_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("golden outputs") {
    RunResult r = run("psi-toric " + data("example2.toric"));
    CHECK(r.code == 0);
    CHECK(r.out == "(a-b)^3 + 7*dc + 8*cd\n");

    r = run("psi-unbounded " + data("cube6.affine"));
    CHECK(r.code == 0);
    CHECK(r.out == "1*ccc + 22*dc + 24*cd\n");

    r = run("chi " + data("example1.toric") + " --at 0");
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    r = run("chi " + data("k3.graph"));
    CHECK(r.code == 0);
    CHECK(r.out == "t^3 - 3*t^2 + 2*t\n");

    r = run("cdindex " + data("b3.poset"));
    CHECK(r.code == 0);
    CHECK(r.out == "1*cc + 1*d\n");
}

TEST_CASE("routes agree through the --via flag") {
    std::string base;
    for (const char* via : {"stanley", "chains", "flag_h", "moebius"}) {
        RunResult r = run("abindex " + data("b3.poset") + " --via " + via);
        CHECK(r.code == 0);
        if (base.empty()) base = r.out;
        CHECK(r.out == base);
    }
}

TEST_CASE("json output carries the stable schema") {
    RunResult r = run("regions " + data("example2.toric") + " --format json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["operation"] == "regions");
    CHECK(j["input"] == data("example2.toric"));
    CHECK(j["result"]["regions"] == "8");
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("verify reports per-check results and succeeds on the examples") {
    for (const char* f : {"example1.toric", "example2.toric", "cube6.affine", "coords3.affine",
                          "lines3.affine", "k3.graph", "c4.graph", "b3.poset"}) {
        RunResult r = run("verify " + data(f));
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("pass") != std::string::npos);
    }
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    CHECK(run("frobnicate " + data("b3.poset")).code == 2);       // unknown verb
    CHECK(run("abindex " + data("b3.poset") + " --bogus").code == 2);
    CHECK(run("chi " + data("nonexistent.toric")).code == 1);     // missing file
    CHECK(run("psi-toric " + data("b3.poset")).code == 1);        // wrong input type
    CHECK(run("regions " + data("b3.poset")).code == 1);
}

TEST_CASE("output is deterministic across runs") {
    std::string first = run("flag " + data("example2.toric")).out;
    CHECK(!first.empty());
    CHECK(run("flag " + data("example2.toric")).out == first);
}

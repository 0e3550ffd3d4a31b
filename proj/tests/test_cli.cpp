#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "tbcert/scan.hpp"

#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace tbcert;

namespace {

struct RunResult {
    int status;
    std::string out;
};

// spawns the installed binary named by TBCERT_BIN and captures stdout
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("TBCERT_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("certify a fraction") {
    auto r = run_cli("certify 14/1825");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "non_simple");
    CHECK(j["bound_n"] == 9);
    CHECK(j["rank_r"] == 2);
}

TEST_CASE("certify continued fraction terms") {
    auto r = run_cli("certify 6 1 7 1 2");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["input"] == "26/179");
    CHECK(j["tb"] == 5);
}

TEST_CASE("certify text format") {
    auto r = run_cli("certify 14/1825 --format text");
    CHECK(r.status == 0);
    CHECK(r.out.find("verdict: non_simple (N = 9)") != std::string::npos);
}

TEST_CASE("exit codes by verdict") {
    CHECK(run_cli("certify 1/3").status == 2);       // torus knot
    CHECK(run_cli("certify 1/4").status == 2);       // link
    CHECK(run_cli("certify 4 1 3").status == 1);     // bound of one
    CHECK(run_cli("certify zzz").status == 3);       // unparsable
    CHECK(run_cli("frobnicate").status == 3);        // unknown subcommand
    CHECK(run_cli("scan").status == 3);              // missing range
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("tables reproduce from the command line") {
    auto t1 = run_cli("tables 1");
    CHECK(t1.status == 0);
    CHECK(t1.out.find("table 1: 15 rows, all reproduced") != std::string::npos);
    auto t2 = run_cli("tables 2");
    CHECK(t2.status == 0);
    CHECK(t2.out.find("table 2: 14 rows, all reproduced") != std::string::npos);
    CHECK(run_cli("tables 3").status == 3);
}

TEST_CASE("scan emits csv") {
    auto r = run_cli("scan --max-det 61");
    CHECK(r.status == 0);
    REQUIRE(r.out.find('\n') != std::string::npos);
    CHECK(r.out.substr(0, r.out.find('\n')) == csv_header());

    ScanConfig cfg;
    cfg.max_det = 61;
    size_t expect = scan_targets(cfg).size();
    size_t lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == expect + 1);

    CHECK(r.out.find("\n1/3,\"[3]\",,,,,,,\"\",,,inapplicable\n") != std::string::npos);
}

TEST_CASE("scan cache persists and replays") {
    const char* path = "tbcert_cli_cache_test.json";
    std::remove(path);
    auto first = run_cli("scan --max-det 31 --cache tbcert_cli_cache_test.json");
    CHECK(first.status == 0);
    CHECK(std::ifstream(path).good());
    auto second = run_cli("scan --max-det 31 --cache tbcert_cli_cache_test.json");
    CHECK(second.status == 0);
    CHECK(second.out == first.out);

    auto hit = run_cli("certify 26/179 --cache tbcert_cli_cache_test.json");
    CHECK(hit.status == 0);
    std::remove(path);
}

TEST_CASE("invariants dump") {
    auto r = run_cli("invariants 14/19");
    CHECK(r.status == 0);
    CHECK(r.out.find("delta: -2t^-2 + 5t^-1 - 5 + 5t - 2t^2") != std::string::npos);
    CHECK(r.out.find("signature: 2") != std::string::npos);
    CHECK(r.out.find("total rank 19") != std::string::npos);

    auto j = run_cli("invariants 14/19 --format json");
    CHECK(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["determinant"] == 19);
    CHECK(parsed["hfk"].size() == 5);
}

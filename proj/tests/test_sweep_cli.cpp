#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "hulldim/numth.hpp"
#include "hulldim/sweep.hpp"

using namespace hulldim;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HULLDIM_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("compute_row: frozen point q=3, r=2, n=4") {
    SweepRow row = compute_row(3, 2, 4);
    CHECK(row.n == 4);
    CHECK(row.q == 3);
    CHECK(row.p == 3);
    CHECK(row.nu == 0);
    CHECK(row.nbar == 4);
    CHECK(row.r == 2);
    CHECK(row.gamma == 2);
    CHECK(row.v2_nbar == 2);
    CHECK(row.v2_r == 1);
    CHECK(row.B == 0);
    CHECK(row.EH == Rational(1));
    CHECK(row.cls == BoundClass::LowerQuarter);
    CHECK(row.lower == Rational(1));
    CHECK(row.r_in_mq);
    CHECK(row.n_in_mq);
}

TEST_CASE("run_sweep produces one row per (q, r, n), ordered") {
    std::vector<SweepRow> rows = run_sweep({.qs = {2}, .n_max = 8});
    REQUIRE(rows.size() == 16);  // r in {1, 3}, n in 1..8
    size_t i = 0;
    for (int64_t r : {1, 3})
        for (int64_t n = 1; n <= 8; ++n, ++i) {
            CHECK(rows[i].r == r);
            CHECK(rows[i].n == n);
            CHECK(rows[i] == compute_row(2, r, n));
        }
}

TEST_CASE("sweep output is independent of the worker count") {
    SweepOptions one{.qs = {2, 3}, .n_max = 10, .workers = 1};
    SweepOptions four{.qs = {2, 3}, .n_max = 10, .workers = 4};
    CHECK(to_csv(run_sweep(one)) == to_csv(run_sweep(four)));
}

TEST_CASE("sweep self-verification passes on a small grid") {
    SweepOptions opts{.qs = {2, 3}, .n_max = 6, .verify_max = 512};
    CHECK_NOTHROW(run_sweep(opts));
}

TEST_CASE("CSV round trip") {
    CHECK(sweep_csv_header() ==
          "n,q,p,nu,nbar,r,gamma,v2_nbar,v2_r,B,EH_num,EH_den,class,lower_num,lower_den,"
          "r_in_Mq,n_in_Mq");
    std::vector<SweepRow> rows = run_sweep({.qs = {2, 3}, .n_max = 7});
    std::string csv = to_csv(rows);
    std::vector<SweepRow> back = parse_csv(csv);
    CHECK(back == rows);
    CHECK(to_csv(back) == csv);
    // recomputing every parsed row reproduces it bit-exactly
    for (const SweepRow& row : back) CHECK(compute_row(row.q, row.r, row.n) == row);
    CHECK_THROWS_AS(parse_csv("nope\n1,2\n"), DomainError);
    CHECK_THROWS_AS(parse_csv(sweep_csv_header() + "\n1,2,3\n"), DomainError);
    CHECK(parse_csv(sweep_csv_header() + "\n").empty());
}

TEST_CASE("run_sweep validates its options") {
    CHECK_THROWS_AS(run_sweep({.qs = {2}, .n_max = 0}), DomainError);
    CHECK_THROWS_AS(run_sweep({.qs = {}, .n_max = 5}), DomainError);
    CHECK_THROWS_AS(run_sweep({.qs = {6}, .n_max = 5}), DomainError);
}

TEST_CASE("cli: average with verification") {
    RunResult r = run_cli("avg --q 2 --n 5 --r 1 --verify --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["EH"]["num"] == 1);
    CHECK(doc["EH"]["den"] == 1);
    CHECK(doc["B"] == 1);
    CHECK(doc["class"] == "LowerEighth");
    CHECK(doc["oracle_agrees"] == true);
    CHECK(doc["oracle_EH"]["num"] == 1);
}

TEST_CASE("cli: verification beyond the desk-scale limit warns but succeeds") {
    RunResult r = run_cli("avg --q 2 --n 101 --r 1 --verify --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("warning:") != std::string::npos);
    // stdout is still a complete report without oracle fields
    size_t brace = r.output.find('{');
    REQUIRE(brace != std::string::npos);
    auto doc = nlohmann::json::parse(r.output.substr(brace));
    CHECK(!doc.contains("oracle_agrees"));
    CHECK(doc.contains("EH"));
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run_cli("avg --q 2").exit_code == 2);          // missing --n
    CHECK(run_cli("bogus-command").exit_code == 2);
    CHECK(run_cli("avg --q 2 --n 5 --format nope").exit_code == 2);
    CHECK(run_cli("avg --q 2 --n 5 --format csv").exit_code == 2);  // csv is sweep-only
    CHECK(run_cli("hull --q 2 --n 5").exit_code == 2);   // missing --exp
    CHECK(run_cli("hull --q 2 --n 5 --exp 0,1").exit_code == 2);  // wrong arity
    CHECK(run_cli("sweep --q 2 --n-max 0").exit_code == 2);       // empty grid
    CHECK(run_cli("").exit_code == 2);                   // subcommand required
}

TEST_CASE("cli: precondition violations exit with 3") {
    RunResult bad_r = run_cli("avg --q 2 --n 5 --r 5");
    CHECK(bad_r.exit_code == 3);
    CHECK(bad_r.output.find("error:") != std::string::npos);
    CHECK(run_cli("avg --q 6 --n 5").exit_code == 3);   // q not a prime power
    CHECK(run_cli("factor --q 2 --n 101").exit_code == 3);  // splitting degree too large
    CHECK(run_cli("factor --q 2 --n 5 --r 2").exit_code == 3);  // 2 does not divide q+1
}

TEST_CASE("cli: help exits with 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("avg --help").exit_code == 0);
}

TEST_CASE("cli: factorization report as json") {
    RunResult r = run_cli("factor --q 2 --n 5 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["n"] == 5);
    CHECK(doc["r"] == 1);
    CHECK(doc["nbar"] == 5);
    CHECK(doc["nu"] == 0);
    CHECK(doc["s"] == 1);
    CHECK(doc["t"] == 1);
    CHECK(doc["scr"].size() == 1);
    CHECK(doc["pairs"].size() == 1);
    CHECK(doc["scr"][0] == "[[1,0],[1,0]]");  // x + 1 over F_4
}

TEST_CASE("cli: hull of a designated code") {
    RunResult r = run_cli("hull --q 2 --n 5 --exp 0,1,0 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["exponents"] == std::vector<int64_t>{0, 1, 0});
    CHECK(doc["dim"] == 3);
    CHECK(doc["dual_dim"] == 2);
    CHECK(doc["hull_dim"] == 2);
}

TEST_CASE("cli: trivial codes have zero-dimensional hulls") {
    for (const char* exp : {"0,0,0", "1,1,1"}) {
        RunResult r = run_cli(std::string("hull --q 2 --n 5 --exp ") + exp + " --format json");
        REQUIRE(r.exit_code == 0);
        auto doc = nlohmann::json::parse(r.output);
        CHECK(doc["hull_dim"] == 0);
    }
}

TEST_CASE("cli: sweep honors the global format flag") {
    RunResult r = run_cli("sweep --q 2 --n-max 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 6);
    CHECK(doc[0]["n"] == 1);
    CHECK(doc[0]["EH_num"] == 0);
}

TEST_CASE("cli: sweep csv output matches the library") {
    RunResult r = run_cli("sweep --q 2 --n-max 8 --out csv");
    REQUIRE(r.exit_code == 0);
    std::vector<SweepRow> rows = parse_csv(r.output);
    CHECK(rows == run_sweep({.qs = {2}, .n_max = 8}));
}

TEST_CASE("cli: sweep with verification enabled") {
    RunResult r = run_cli("sweep --q 2 --q 3 --n-max 5 --verify-max 256 --out csv");
    CHECK(r.exit_code == 0);
    CHECK(parse_csv(r.output).size() == size_t(2 * 5 + 3 * 5));
}

TEST_CASE("cli: classify") {
    RunResult r = run_cli("classify --q 3 --n 4 --r 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["class"] == "LowerQuarter");
    CHECK(doc["witness"] == "v2(nbar)+v2(r) = 3 > gamma = 2");
    CHECK(doc["lower"]["num"] == 1);
    CHECK(doc["upper"]["num"] == 4);
    CHECK(doc["upper"]["den"] == 3);
}

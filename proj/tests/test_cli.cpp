#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ogb/cli.hpp"

using namespace ogb;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l)) out.push_back(l);
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

} // namespace

TEST_CASE("bounds: header, grid size, internal consistency") {
    CliResult r = run({"bounds", "--f", "poly:0,0,0.5", "--x", "0:1:5",
                       "--weight", "beta:0.5,0.5", "--c", "0"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] ==
          "x,c,L_value,lower,upper,t_star,nu,kernel_l1,majorant_bound,"
          "l2_bound");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cells = split_csv(ls[i]);
        REQUIRE(cells.size() >= 8);
        double L = std::stod(cells[2]);
        double lo = std::stod(cells[3]);
        double hi = std::stod(cells[4]);
        double nu = std::stod(cells[6]);
        CHECK(lo <= L + 1e-9);
        CHECK(L <= hi + 1e-9);
        CHECK(nu >= 0.0);
    }
}

TEST_CASE("bounds: repeated runs are byte-identical") {
    std::vector<std::string> args{"bounds", "--f", "poly:1,-1,2,0.25",
                                  "--x",    "0:1:7", "--weight",
                                  "normal:0,1"};
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bounds: c outside [0,1] points at the classical subcommand") {
    CliResult r = run({"bounds", "--f", "poly:0,1", "--c", "1.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("classical") != std::string::npos);
}

TEST_CASE("parse errors exit 2") {
    CHECK(run({"bounds", "--f", "poly:0,1", "--no-such-flag"}).code == 2);
    CHECK(run({"bounds"}).code == 2); // --f required
    CHECK(run({"bounds", "--f", "poly:0,1", "--weight", "gauss"}).code == 2);
    CHECK(run({"bounds", "--f", "poly:0,1", "--interval", "1,0"}).code == 2);
    CHECK(run({"table1", "--step", "0.3"}).code == 2);
    CHECK(run({}).code == 2); // a subcommand is required
}

TEST_CASE("help exits 0") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bounds") != std::string::npos);
}

TEST_CASE("verify: small battery") {
    CliResult r = run({"verify", "--trials", "2", "--seed", "7"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 12); // header + 11 suites
    CHECK(ls[0] == "suite,checks,failures,worst_slack");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cells = split_csv(ls[i]);
        REQUIRE(cells.size() == 4);
        CHECK(cells[2] == "0");
    }
}

TEST_CASE("table1: table, separator, errata block") {
    CliResult r = run({"table1"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    // header + 11 rows + blank + errata header + >= 12 findings
    REQUIRE(ls.size() >= 26);
    CHECK(ls[0] ==
          "x,nu_corrected,nu_table_convention,lhs,rhs,actual,paper_nu,"
          "paper_lhs,paper_rhs,paper_actual");
    CHECK(ls[12].empty());
    CHECK(ls[13] == "id,location,computed,paper");
    int e1 = 0, e2 = 0, e3 = 0;
    for (std::size_t i = 14; i < ls.size(); ++i) {
        auto cells = split_csv(ls[i]);
        if (cells[0] == "E1") ++e1;
        if (cells[0] == "E2") ++e2;
        if (cells[0] == "E3") ++e3;
    }
    CHECK(e1 == 10);
    CHECK(e2 == 1);
    CHECK(e3 == 1);
    // spot-check the x = 0.5 row against the closed form
    auto mid = split_csv(ls[6]);
    CHECK(std::stod(mid[0]) == doctest::Approx(0.5));
    CHECK(std::stod(mid[1]) ==
          doctest::Approx(0.159154943091895).epsilon(1e-12));
    CHECK(std::stod(mid[6]) ==
          doctest::Approx(0.068309886183791).epsilon(1e-12));
}

TEST_CASE("erratum subcommand") {
    CliResult r = run({"erratum"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls[0] == "id,location,computed,paper");
    CHECK(ls.size() == 13);
    CHECK(ls.back().rfind("E3", 0) == 0);
}

TEST_CASE("classical subcommand accepts c up to 2") {
    CliResult r = run({"classical", "--f", "poly:0,0,0.5", "--x", "0.5",
                       "--c", "1.5"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] ==
          "x,c,L_value,e33_lower,e33_upper,cheng,matic,dragomir_wang,"
          "anastassiou");
    CHECK(run({"classical", "--f", "poly:0,1", "--c", "2.5"}).code == 2);
}

TEST_CASE("majorant subcommand emits samples and hull") {
    CliResult r = run({"majorant", "--f", "poly:0,0,0.5", "--n-grid", "65"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls[0] == "kind,s,value");
    int omega = 0, hull = 0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cells = split_csv(ls[i]);
        if (cells[0] == "omega") ++omega;
        if (cells[0] == "hull") ++hull;
    }
    CHECK(omega == 65);
    CHECK(hull >= 2);
    CHECK(hull <= omega);
}

TEST_CASE("--out writes the same bytes to a file") {
    std::vector<std::string> args{"bounds", "--f", "poly:0,0,0.5"};
    CliResult direct = run(args);
    std::string path = "cli_test_out.csv";
    args.insert(args.end(), {"--out", path});
    CliResult filed = run(args);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path);
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == direct.out);
    in.close();
    std::remove(path.c_str());
    CHECK(run({"bounds", "--f", "poly:0,1", "--out",
               "no_such_dir/x.csv"}).code == 3);
}

TEST_CASE("text format uses column spacing") {
    CliResult r = run({"classical", "--f", "poly:0,1", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0].find("  ") != std::string::npos);
    CHECK(lines(r.out)[0].find(',') == std::string::npos);
}

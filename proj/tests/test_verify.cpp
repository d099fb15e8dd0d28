#include <doctest.h>

#include <cmath>

#include "ogb/core.hpp"
#include "ogb/verify.hpp"

using namespace ogb;

namespace {
const Interval unit(0.0, 1.0);
}

TEST_CASE("beta_nu_closed: values and core oracle") {
    CHECK(beta_nu_closed(0.0, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(beta_nu_closed(0.5, 0.5, 0.5) ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
    CHECK(beta_nu_closed(0.4, 0.5, 0.5) ==
          doctest::Approx(0.2123495).epsilon(1e-6));
    for (auto [p, q] : {std::pair{0.5, 0.5}, std::pair{2.0, 3.0},
                        std::pair{1.5, 0.7}}) {
        Weight w = Weight::beta(p, q);
        for (double x : {0.0, 0.2, 0.45, 0.6, 0.9, 1.0})
            CHECK(std::abs(beta_nu_closed(x, p, q) - nu(x, 0.0, w)) < 1e-9);
    }
}

TEST_CASE("beta_nu_table_convention reproduces the printed column") {
    for (const auto& pr : printed_table1())
        CHECK(std::abs(beta_nu_table_convention(pr.x, 0.5, 0.5) - pr.nu) <
              5e-7);
    // conventions coincide only where the incomplete-beta term vanishes
    CHECK(std::abs(beta_nu_table_convention(0.0, 0.5, 0.5) -
                   beta_nu_closed(0.0, 0.5, 0.5)) < 1e-12);
    CHECK(std::abs(beta_nu_table_convention(0.5, 0.5, 0.5) -
                   beta_nu_closed(0.5, 0.5, 0.5)) > 1e-2);
}

TEST_CASE("normal_nu_closed") {
    Weight w = Weight::truncated_normal(0.0, 1.0, unit);
    double mean = w.mean(0.0, 1.0);
    CHECK(normal_nu_closed(0.0, 0.0, 1.0, unit) ==
          doctest::Approx(mean).epsilon(1e-12));
    CHECK(normal_nu_closed(1.0, 0.0, 1.0, unit) ==
          doctest::Approx(1.0 - mean).epsilon(1e-12));
    // branches meet at x = sigma
    double eps = 1e-9;
    CHECK(std::abs(normal_nu_closed(mean - eps, 0.0, 1.0, unit) -
                   normal_nu_closed(mean + eps, 0.0, 1.0, unit)) < 1e-8);
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0})
        CHECK(std::abs(normal_nu_closed(x, 0.0, 1.0, unit) -
                       nu(x, 0.0, w)) < 1e-10);
}

TEST_CASE("random_function: deterministic, bounded, exact range") {
    FunctionSpec a = random_function(42, 5);
    FunctionSpec b = random_function(42, 5);
    FunctionSpec c = random_function(42, 6);
    bool differs = false;
    for (double t : {0.0, 0.3, 0.7, 1.0}) {
        CHECK(a.eval(t) == b.eval(t));
        CHECK(a.derivative(t) == b.derivative(t));
        if (a.eval(t) != c.eval(t)) differs = true;
    }
    CHECK(differs);
    for (int i = 0; i < 50; ++i) {
        FunctionSpec f = random_function(11, i);
        REQUIRE(f.derivative_range.has_value());
        auto [gamma, Gamma] = *f.derivative_range;
        CHECK(gamma <= Gamma);
        for (int k = 0; k <= 64; ++k) {
            double d = f.derivative(k / 64.0);
            CHECK(d >= gamma - 1e-12);
            CHECK(d <= Gamma + 1e-12);
        }
    }
}

TEST_CASE("table1: row invariants") {
    std::vector<Table1Row> rows = table1();
    REQUIRE(rows.size() == 11);
    for (const auto& r : rows) {
        CHECK(std::abs(r.actual - (r.x * r.x / 2.0 - 3.0 / 16.0)) < 1e-10);
        CHECK(std::abs(r.lhs + r.nu_corrected) < 1e-14);
        CHECK(std::abs(r.rhs - ((r.x - 0.5) + r.nu_corrected)) < 1e-14);
        // the corrected bounds enclose the evaluated functional
        CHECK(r.lhs <= r.actual + 1e-12);
        CHECK(r.actual <= r.rhs + 1e-12);
        REQUIRE(r.paper_nu.has_value());
        // the printed bounds happen to hold as well, just more tightly
        CHECK(*r.paper_lhs <= r.actual + 1e-12);
        CHECK(r.actual <= *r.paper_rhs + 1e-12);
        CHECK(std::abs(*r.paper_actual - r.actual) < 5e-7);
        double margin_corr =
            std::min(r.actual - r.lhs, r.rhs - r.actual);
        double margin_paper =
            std::min(r.actual - *r.paper_lhs, *r.paper_rhs - r.actual);
        CHECK(margin_corr >= margin_paper - 1e-12);
        if (r.x > 0.05)
            CHECK(std::abs(r.nu_corrected - *r.paper_nu) > 1e-3);
        else
            CHECK(std::abs(r.nu_corrected - *r.paper_nu) < 1e-12);
    }
    // the near-miss: printed lower bound clears the functional by < 6e-3
    const Table1Row& mid = rows[5];
    CHECK(mid.x == doctest::Approx(0.5));
    CHECK(mid.actual - *mid.paper_lhs > 0.0);
    CHECK(mid.actual - *mid.paper_lhs < 6e-3);
    CHECK(mid.nu_corrected ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("table1: step handling") {
    CHECK(table1(0.5).size() == 3);
    CHECK(table1(0.02).size() == 51);
    CHECK_THROWS_AS(table1(0.3), std::invalid_argument);
    CHECK_THROWS_AS(table1(0.0), std::invalid_argument);
    CHECK_THROWS_AS(table1(-0.1), std::invalid_argument);
    // rows off the printed grid carry no printed columns
    auto fine = table1(0.05);
    CHECK_FALSE(fine[1].paper_nu.has_value());
    CHECK(fine[2].paper_nu.has_value());
}

TEST_CASE("erratum_report") {
    std::vector<ErratumFinding> errata = erratum_report();
    int e1 = 0, e2 = 0, e3 = 0;
    for (const auto& e : errata) {
        if (e.id == "E1") {
            ++e1;
            REQUIRE(e.computed_value.has_value());
            REQUIRE(e.paper_value.has_value());
            CHECK(std::abs(*e.computed_value - *e.paper_value) > 1e-3);
        } else if (e.id == "E2") {
            ++e2;
            CHECK(*e.computed_value ==
                  doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
            CHECK(*e.paper_value ==
                  doctest::Approx(1.0 / M_PI).epsilon(1e-12));
        } else if (e.id == "E3") {
            ++e3;
            CHECK_FALSE(e.computed_value.has_value());
        }
    }
    CHECK(e1 == 10); // every printed row except x=0, where the term vanishes
    CHECK(e2 == 1);
    CHECK(e3 == 1);
    // table1 with errata output agrees
    std::vector<ErratumFinding> via_table;
    table1(0.1, &via_table);
    CHECK(via_table.size() == errata.size());
}

TEST_CASE("run_battery: small run passes every suite") {
    BatterySummary s = run_battery(123, 3);
    CHECK(s.suites.size() == 11);
    CHECK(s.all_passed());
    for (const auto& suite : s.suites) {
        CHECK(suite.checks > 0);
        CHECK(suite.failures == 0);
        CHECK(suite.worst_slack >= 0.0);
    }
    CHECK_THROWS_AS(run_battery(1, 0), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "ogb/quadrature.hpp"
#include "ogb/root.hpp"
#include "ogb/special.hpp"

using namespace ogb;

namespace {

std::uint64_t mix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
double u01(std::uint64_t& s) { return double(mix(s) >> 11) * 0x1.0p-53; }

} // namespace

TEST_CASE("integrate: basic values") {
    CHECK(integrate([](double t) { return t; }, 0.0, 1.0).value ==
          doctest::Approx(0.5).epsilon(1e-12));
    // standard normal density over [0,1]
    double v = integrate([](double t) { return normal_pdf(t); }, 0.0, 1.0)
                   .value;
    CHECK(std::abs(v - (normal_cdf(1.0) - normal_cdf(0.0))) < 1e-10);
    CHECK(v == doctest::Approx(0.3413447).epsilon(1e-6));
    // empty interval
    CHECK(integrate([](double t) { return t; }, 0.3, 0.3).value == 0.0);
}

TEST_CASE("integrate: exact on polynomials up to degree 10") {
    std::uint64_t s = 7;
    for (int deg = 0; deg <= 10; ++deg) {
        std::vector<double> c(deg + 1);
        for (auto& ci : c) ci = -2.0 + 4.0 * u01(s);
        auto f = [&](double t) {
            double v = 0.0;
            for (int k = deg; k >= 0; --k) v = v * t + c[k];
            return v;
        };
        auto F = [&](double t) {
            double v = 0.0;
            for (int k = deg; k >= 0; --k) v = v * t + c[k] / (k + 1);
            return v * t;
        };
        double lo = -1.0 + u01(s), hi = 1.0 + u01(s);
        double got = integrate(f, lo, hi).value;
        CHECK(std::abs(got - (F(hi) - F(lo))) < 1e-9);
    }
}

TEST_CASE("integrate: interval additivity") {
    auto f = [](double t) { return std::exp(-t) * std::sin(5.0 * t); };
    double whole = integrate(f, 0.0, 2.0).value;
    double parts = integrate(f, 0.0, 0.7).value +
                   integrate(f, 0.7, 2.0).value;
    CHECK(std::abs(whole - parts) < 1e-10);
}

TEST_CASE("integrate: sqrt-type endpoint behavior converges") {
    double v = integrate([](double t) { return std::sqrt(t); }, 0.0, 1.0)
                   .value;
    CHECK(std::abs(v - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("integrate: non-integrable input throws NonConvergence") {
    QuadConfig cfg;
    cfg.max_subdivisions = 200;
    CHECK_THROWS_AS(integrate([](double t) { return 1.0 / t; }, 0.0, 1.0,
                              cfg),
                    NonConvergence);
    try {
        integrate([](double t) { return 1.0 / t; }, 0.0, 1.0, cfg);
    } catch (const NonConvergence& e) {
        CHECK(e.err_estimate > 0.0);
        CHECK(std::isfinite(e.value));
    }
}

TEST_CASE("integrate: bad arguments") {
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 1.0, 0.0),
                    std::invalid_argument);
    QuadConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 0.0, 1.0, bad),
                    std::invalid_argument);
}

TEST_CASE("find_root: basic") {
    CHECK(find_root([](double t) { return t - 0.75; }, 0.0, 1.0) ==
          doctest::Approx(0.75).epsilon(1e-12));
    // arcsine CDF level 0.9
    double r = find_root([](double t) { return arcsine_cdf(t) - 0.9; }, 0.0,
                         1.0);
    double expect = std::pow(std::sin(0.45 * M_PI), 2);
    CHECK(std::abs(r - expect) < 1e-10);
    // symmetry of the normal CDF
    double z = find_root([](double t) { return normal_cdf(t) - 0.5; }, -1.0,
                         1.0);
    CHECK(std::abs(z) < 1e-10);
}

TEST_CASE("find_root: no bracket throws") {
    CHECK_THROWS_AS(
        find_root([](double t) { return t * t + 1.0; }, -1.0, 1.0),
        NoBracket);
}

TEST_CASE("find_root: result stable under tolerance halving") {
    auto g = [](double t) { return std::cos(t) - t; };
    RootConfig c1;
    c1.x_tol = 1e-8;
    c1.f_tol = 1e-30; // force bracket-width termination
    RootConfig c2 = c1;
    c2.x_tol = 5e-9;
    double r1 = find_root(g, 0.0, 1.0, c1);
    double r2 = find_root(g, 0.0, 1.0, c2);
    CHECK(std::abs(r1 - r2) <= c1.x_tol);
}

TEST_CASE("special: incomplete beta continued fraction") {
    // closed forms: I(x;1,1) = x, I(x;2,1) = x^2, arcsine case
    CHECK(reg_inc_beta(0.37, 1.0, 1.0) == doctest::Approx(0.37).epsilon(1e-12));
    CHECK(reg_inc_beta(0.37, 2.0, 1.0) ==
          doctest::Approx(0.37 * 0.37).epsilon(1e-12));
    CHECK(std::abs(reg_inc_beta(0.4, 0.5, 0.5) - arcsine_cdf(0.4)) < 1e-12);
    CHECK(reg_inc_beta(0.0, 2.0, 3.0) == 0.0);
    CHECK(reg_inc_beta(1.0, 2.0, 3.0) == 1.0);
    // complement symmetry
    std::uint64_t s = 11;
    for (int i = 0; i < 50; ++i) {
        double x = u01(s), p = 0.3 + 4.0 * u01(s), q = 0.3 + 4.0 * u01(s);
        CHECK(std::abs(reg_inc_beta(x, p, q) +
                       reg_inc_beta(1.0 - x, q, p) - 1.0) < 1e-12);
    }
}

TEST_CASE("special: beta function and normal pieces") {
    CHECK(beta_function(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(normal_pdf(0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));
    CHECK(laplace_phi(1.0) == doctest::Approx(0.3413447).epsilon(1e-6));
    CHECK(arcsine_quantile(arcsine_cdf(0.321)) ==
          doctest::Approx(0.321).epsilon(1e-12));
}

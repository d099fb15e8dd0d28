#include "ogb/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ogb {
namespace {

void check_x_c(double x, double c, const Weight& w) {
    const Interval& iv = w.interval();
    if (!(iv.a - 1e-12 <= x && x <= iv.b + 1e-12))
        throw std::invalid_argument("core: x outside [a,b]");
    if (!(0.0 <= c && c <= 1.0))
        throw std::invalid_argument("core: weighted bounds need c in [0,1]");
}

} // namespace

double u_wc(double x, double c, const Weight& w) {
    check_x_c(x, c, w);
    const Interval& iv = w.interval();
    double sigma = w.mean(iv.a, iv.b);
    return c * (x - sigma) / iv.length();
}

double t_star(double x, double c, const Weight& w, const RootConfig& rc) {
    check_x_c(x, c, w);
    const Interval& iv = w.interval();
    double sigma = w.mean(iv.a, iv.b);
    double u = c * (x - sigma) / iv.length();

    if (x <= sigma) {
        // G(t*) = 1 + u, t* in [x,b]; u <= 0 here.
        double target = std::clamp(1.0 + u, 0.0, 1.0);
        if (target >= 1.0) return iv.b;
        auto g = [&](double t) { return w.cdf_normalized(t) - target; };
        return find_root(g, x, iv.b, rc);
    }
    // G(t*) = u, t* in [a,x]; u > 0 here.
    double target = std::clamp(u, 0.0, 1.0);
    if (target <= 0.0) return iv.a;
    auto g = [&](double t) { return w.cdf_normalized(t) - target; };
    return find_root(g, iv.a, x, rc);
}

double nu(double x, double c, const Weight& w, const RootConfig& rc) {
    double ts = t_star(x, c, w, rc);
    const Interval& iv = w.interval();
    double lo = std::min(x, ts), hi = std::max(x, ts);
    double signed_part = w.first_moment(lo, hi) - x * w.mass(lo, hi);
    double v = (ts >= x ? signed_part : -signed_part) / w.total_mass();
    return std::max(v, 0.0);
}

double kernel_P(double x, double t, double c, const Weight& w) {
    check_x_c(x, c, w);
    const Interval& iv = w.interval();
    if (!(iv.a <= t && t <= iv.b))
        throw std::invalid_argument("kernel_P: t outside [a,b]");
    double u = u_wc(x, c, w);
    double G = w.cdf_normalized(t);
    return t < x ? G - u : G - 1.0 - u;
}

double kernel_l1(double x, double c, const Weight& w) {
    const Interval& iv = w.interval();
    double sigma = w.mean(iv.a, iv.b);
    return (c - 1.0) * std::abs(x - sigma) + 2.0 * nu(x, c, w);
}

double weighted_average(const FunctionSpec& f, const Weight& w) {
    return w.integrate_against(f.eval) / w.total_mass();
}

double functional_L_from_avg(const FunctionSpec& f, double avg, double x,
                             double c, const Weight& w) {
    if (!(c >= 0.0))
        throw std::invalid_argument("functional_L: c must be >= 0");
    const Interval& iv = w.interval();
    if (!iv.contains(x))
        throw std::invalid_argument("functional_L: x outside [a,b]");
    double sigma = w.mean(iv.a, iv.b);
    double slope = (f.eval(iv.b) - f.eval(iv.a)) / iv.length();
    return f.eval(x) - avg - c * slope * (x - sigma);
}

double functional_L(const FunctionSpec& f, double x, double c,
                    const Weight& w) {
    return functional_L_from_avg(f, weighted_average(f, w), x, c, w);
}

std::pair<double, double> bounds_derivative(std::pair<double, double> f_range,
                                            double x, double c,
                                            const Weight& w) {
    auto [gamma, Gamma] = f_range;
    if (!(gamma <= Gamma))
        throw std::invalid_argument("bounds_derivative: gamma > Gamma");
    check_x_c(x, c, w);
    const Interval& iv = w.interval();
    double sigma = w.mean(iv.a, iv.b);
    double v = nu(x, c, w);
    double lin = (1.0 - c) * (x - sigma);
    return {lin * gamma + (gamma - Gamma) * v,
            lin * Gamma + (Gamma - gamma) * v};
}

double bound_l2(std::pair<double, double> f_range, double x, const Weight& w) {
    auto [gamma, Gamma] = f_range;
    if (!(gamma <= Gamma))
        throw std::invalid_argument("bound_l2: gamma > Gamma");
    const Interval& iv = w.interval();
    if (!iv.contains(x))
        throw std::invalid_argument("bound_l2: x outside [a,b]");
    double m = w.total_mass();
    double sigma = w.mean(iv.a, iv.b);
    auto K = [&](double t) {
        double v = w.mass(iv.a, t);
        return t <= x ? v : v - m;
    };
    double k2 = integrate([&](double t) { double v = K(t); return v * v; },
                          iv.a, x).value +
                integrate([&](double t) { double v = K(t); return v * v; },
                          x, iv.b).value;
    double inner = k2 - m * m * (x - sigma) * (x - sigma) / iv.length();
    inner = std::max(inner, 0.0);
    return 0.5 * (Gamma - gamma) * std::sqrt(iv.length()) / m *
           std::sqrt(inner);
}

FunctionSpec sharpness_witness(const Weight& w, double gamma, double Gamma) {
    if (!(gamma < Gamma))
        throw std::invalid_argument("sharpness_witness: need gamma < Gamma");
    const Interval& iv = w.interval();
    double a = iv.a;
    double sigma = w.mean(iv.a, iv.b);
    FunctionSpec f;
    f.eval = [a, sigma, gamma, Gamma](double t) {
        return t < sigma ? Gamma * (t - a)
                         : Gamma * (sigma - a) + gamma * (t - sigma);
    };
    f.derivative = [sigma, gamma, Gamma](double t) {
        return t < sigma ? Gamma : gamma;
    };
    f.derivative_range = {{gamma, Gamma}};
    f.descriptor = "witness";
    return f;
}

BoundReport evaluate_bounds(const FunctionSpec& f, double x, double c,
                            const Weight& w) {
    BoundReport r;
    r.x = x;
    r.c = c;
    r.L_value = functional_L(f, x, c, w);
    if (f.derivative_range) {
        auto [lo, hi] = bounds_derivative(*f.derivative_range, x, c, w);
        r.lower = lo;
        r.upper = hi;
        r.l2_bound = bound_l2(*f.derivative_range, x, w);
    } else {
        throw std::invalid_argument(
            "evaluate_bounds: FunctionSpec lacks a derivative range");
    }
    r.t_star = t_star(x, c, w);
    r.nu = nu(x, c, w);
    r.kernel_l1 = kernel_l1(x, c, w);
    return r;
}

} // namespace ogb

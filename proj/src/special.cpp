#include "ogb/special.hpp"

#include <cmath>
#include <stdexcept>

namespace ogb {

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double laplace_phi(double z) { return normal_cdf(z) - 0.5; }

double log_beta(double p, double q) {
    return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

double beta_function(double p, double q) { return std::exp(log_beta(p, q)); }

namespace {

// Continued fraction for the incomplete beta (Lentz's algorithm).
double betacf(double x, double p, double q) {
    const double tiny = 1e-300;
    const double eps = 1e-16;
    const int max_iter = 500;

    double qab = p + q, qap = p + 1.0, qam = p - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (q - m) * x / ((qam + m2) * (p + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double reg_inc_beta(double x, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("reg_inc_beta: p,q must be > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double front = std::exp(p * std::log(x) + q * std::log1p(-x) -
                            log_beta(p, q));
    if (x < (p + 1.0) / (p + q + 2.0))
        return front * betacf(x, p, q) / p;
    return 1.0 - std::exp(q * std::log1p(-x) + p * std::log(x) -
                          log_beta(q, p)) * betacf(1.0 - x, q, p) / q;
}

double arcsine_cdf(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return (2.0 / M_PI) * std::asin(std::sqrt(x));
}

double arcsine_quantile(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double s = std::sin(u * M_PI / 2.0);
    return s * s;
}

} // namespace ogb

#include "ogb/weight.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ogb/special.hpp"

namespace ogb {
namespace {

void check_subinterval(const Interval& iv, double alpha, double beta) {
    if (!(iv.a - 1e-12 <= alpha && alpha <= beta && beta <= iv.b + 1e-12))
        throw std::invalid_argument("Weight: need a <= alpha <= beta <= b");
}

// I(x; p, q), routed through the arcsine closed form when p = q = 1/2.
double beta_I(double x, double p, double q) {
    if (p == 0.5 && q == 0.5) return arcsine_cdf(x);
    return reg_inc_beta(x, p, q);
}

// I(x; p+1, q); arcsine case has the closed form
// (asin(sqrt x) - sqrt(x(1-x))) / (pi/2).
double beta_I_shift(double x, double p, double q) {
    if (p == 0.5 && q == 0.5) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return (std::asin(std::sqrt(x)) - std::sqrt(x * (1.0 - x))) /
               (M_PI / 2.0);
    }
    return reg_inc_beta(x, p + 1.0, q);
}

} // namespace

Weight Weight::uniform(const Interval& iv) {
    Weight w(Kind::Uniform, iv);
    w.total_mass_ = 1.0;
    return w;
}

Weight Weight::beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("Weight::beta: p,q must be > 0");
    Weight w(Kind::Beta, Interval(0.0, 1.0));
    w.p1_ = p;
    w.p2_ = q;
    w.total_mass_ = 1.0;
    return w;
}

Weight Weight::truncated_normal(double mu, double s, const Interval& iv) {
    if (!(s > 0.0))
        throw std::invalid_argument("Weight::truncated_normal: s must be > 0");
    Weight w(Kind::TruncatedNormal, iv);
    w.p1_ = mu;
    w.p2_ = s;
    w.total_mass_ = normal_cdf((iv.b - mu) / s) - normal_cdf((iv.a - mu) / s);
    if (!(w.total_mass_ > 0.0))
        throw std::invalid_argument("Weight::truncated_normal: zero mass");
    return w;
}

Weight Weight::custom(std::function<double(double)> density,
                      const Interval& iv, double sing_a, double sing_b,
                      const QuadConfig& cfg) {
    if (!(sing_a > -1.0) || !(sing_b > -1.0))
        throw std::invalid_argument(
            "Weight::custom: non-integrable endpoint singularity");
    Weight w(Kind::Custom, iv);
    w.custom_density_ = std::move(density);
    w.sing_a_ = sing_a;
    w.sing_b_ = sing_b;
    w.cfg_ = cfg;
    for (int i = 1; i <= 17; ++i) {
        double t = iv.a + iv.length() * i / 18.0;
        if (!(w.custom_density_(t) > 0.0))
            throw std::invalid_argument("Weight::custom: density must be > 0");
    }
    w.total_mass_ = w.mass_numeric(iv.a, iv.b);
    if (!std::isfinite(w.total_mass_) || !(w.total_mass_ > 0.0))
        throw std::invalid_argument("Weight::custom: mass not finite positive");
    return w;
}

double Weight::density(double t) const {
    const double a = iv_.a, b = iv_.b;
    switch (kind_) {
        case Kind::Uniform:
            return 1.0 / (b - a);
        case Kind::Beta: {
            if ((t <= 0.0 && p1_ < 1.0) || (t >= 1.0 && p2_ < 1.0))
                throw std::domain_error("Weight::density: unbounded endpoint");
            if (t < 0.0 || t > 1.0)
                throw std::domain_error("Weight::density: t outside [0,1]");
            return std::pow(t, p1_ - 1.0) * std::pow(1.0 - t, p2_ - 1.0) /
                   beta_function(p1_, p2_);
        }
        case Kind::TruncatedNormal:
            return normal_pdf((t - p1_) / p2_) / p2_;
        case Kind::Custom:
            if ((t <= a && sing_a_ < 0.0) || (t >= b && sing_b_ < 0.0))
                throw std::domain_error("Weight::density: unbounded endpoint");
            return custom_density_(t);
    }
    throw std::logic_error("unreachable");
}

double Weight::mass(double alpha, double beta) const {
    check_subinterval(iv_, alpha, beta);
    const double a = iv_.a, b = iv_.b;
    switch (kind_) {
        case Kind::Uniform:
            return (beta - alpha) / (b - a);
        case Kind::Beta:
            return beta_I(beta, p1_, p2_) - beta_I(alpha, p1_, p2_);
        case Kind::TruncatedNormal:
            return normal_cdf((beta - p1_) / p2_) -
                   normal_cdf((alpha - p1_) / p2_);
        case Kind::Custom:
            return mass_numeric(alpha, beta);
    }
    throw std::logic_error("unreachable");
}

double Weight::first_moment(double alpha, double beta) const {
    check_subinterval(iv_, alpha, beta);
    const double a = iv_.a, b = iv_.b;
    switch (kind_) {
        case Kind::Uniform:
            return (beta * beta - alpha * alpha) / (2.0 * (b - a));
        case Kind::Beta: {
            // t w_{p,q}(t) = sigma w_{p+1,q}(t), sigma = p/(p+q)
            double sigma = p1_ / (p1_ + p2_);
            return sigma * (beta_I_shift(beta, p1_, p2_) -
                            beta_I_shift(alpha, p1_, p2_));
        }
        case Kind::TruncatedNormal: {
            double Fb = normal_cdf((beta - p1_) / p2_);
            double Fa = normal_cdf((alpha - p1_) / p2_);
            double wa = normal_pdf((alpha - p1_) / p2_) / p2_;
            double wb = normal_pdf((beta - p1_) / p2_) / p2_;
            return p1_ * (Fb - Fa) + p2_ * p2_ * (wa - wb);
        }
        case Kind::Custom:
            return first_moment_numeric(alpha, beta);
    }
    throw std::logic_error("unreachable");
}

double Weight::mean(double alpha, double beta) const {
    if (!(alpha < beta))
        throw std::invalid_argument("Weight::mean: need alpha < beta");
    return first_moment(alpha, beta) / mass(alpha, beta);
}

double Weight::cdf_normalized(double t) const {
    if (!iv_.contains(t))
        throw std::domain_error("Weight::cdf_normalized: t outside [a,b]");
    return mass(iv_.a, t) / total_mass_;
}

double Weight::integrate_weighted(const std::function<double(double)>& f,
                                  double alpha, double beta) const {
    if (alpha == beta) return 0.0;
    switch (kind_) {
        case Kind::Uniform:
        case Kind::TruncatedNormal:
            return integrate([&](double t) { return f(t) * density(t); },
                             alpha, beta, cfg_).value;
        case Kind::Beta: {
            // t = sin^2(theta) maps both endpoint singularities away for
            // p,q >= 1/2 and softens them otherwise.
            double p = p1_, q = p2_;
            double B = beta_function(p, q);
            double th_lo = std::asin(std::sqrt(std::clamp(alpha, 0.0, 1.0)));
            double th_hi = std::asin(std::sqrt(std::clamp(beta, 0.0, 1.0)));
            auto g = [&](double th) {
                double sn = std::sin(th), cs = std::cos(th);
                double t = sn * sn;
                return f(t) * 2.0 / B *
                       std::pow(sn, 2.0 * p - 1.0) *
                       std::pow(cs, 2.0 * q - 1.0);
            };
            return integrate(g, th_lo, th_hi, cfg_).value;
        }
        case Kind::Custom: {
            const double a = iv_.a, b = iv_.b;
            double mid = 0.5 * (a + b);
            double split = std::min(std::max(mid, alpha), beta);
            double total = 0.0;
            if (alpha < split) {
                // left half: t = a + u^k kills the (t-a)^sing_a singularity
                double k = sing_a_ < 0.0 ? 1.0 / (1.0 + sing_a_) : 1.0;
                double u_lo = std::pow(alpha - a, 1.0 / k);
                double u_hi = std::pow(split - a, 1.0 / k);
                auto g = [&](double u) {
                    double t = a + std::pow(u, k);
                    return f(t) * custom_density_(t) * k *
                           std::pow(u, k - 1.0);
                };
                total += integrate(g, u_lo, u_hi, cfg_).value;
            }
            if (split < beta) {
                double k = sing_b_ < 0.0 ? 1.0 / (1.0 + sing_b_) : 1.0;
                double v_lo = std::pow(b - beta, 1.0 / k);
                double v_hi = std::pow(b - split, 1.0 / k);
                auto g = [&](double v) {
                    double t = b - std::pow(v, k);
                    return f(t) * custom_density_(t) * k *
                           std::pow(v, k - 1.0);
                };
                total += integrate(g, v_lo, v_hi, cfg_).value;
            }
            return total;
        }
    }
    throw std::logic_error("unreachable");
}

double Weight::mass_numeric(double alpha, double beta) const {
    check_subinterval(iv_, alpha, beta);
    return integrate_weighted([](double) { return 1.0; }, alpha, beta);
}

double Weight::first_moment_numeric(double alpha, double beta) const {
    check_subinterval(iv_, alpha, beta);
    return integrate_weighted([](double t) { return t; }, alpha, beta);
}

double Weight::integrate_against(
    const std::function<double(double)>& f) const {
    return integrate_weighted(f, iv_.a, iv_.b);
}

std::string Weight::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Uniform: os << "uniform"; break;
        case Kind::Beta: os << "beta:" << p1_ << "," << p2_; break;
        case Kind::TruncatedNormal: os << "normal:" << p1_ << "," << p2_; break;
        case Kind::Custom: os << "custom"; break;
    }
    return os.str();
}

} // namespace ogb

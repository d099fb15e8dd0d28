#ifndef OGB_WEIGHT_HPP
#define OGB_WEIGHT_HPP

#include <functional>
#include <memory>
#include <string>

#include "ogb/interval.hpp"
#include "ogb/quadrature.hpp"

namespace ogb {

/// Positive integrable weight on (a,b) with subinterval masses m(alpha,beta),
/// first moments M(alpha,beta), means sigma(alpha,beta) and the normalized
/// CDF G(t) = m(a,t)/m(a,b). Built-in kinds carry closed forms; Custom falls
/// back to adaptive quadrature with endpoint power substitutions.
class Weight {
public:
    enum class Kind { Uniform, Beta, TruncatedNormal, Custom };

    static Weight uniform(const Interval& iv);
    static Weight beta(double p, double q); // interval forced to [0,1]
    static Weight truncated_normal(double mu, double s, const Interval& iv);
    // sing_a/sing_b: density ~ (t-a)^sing_a near a, (b-t)^sing_b near b;
    // exponents must be > -1 (integrability).
    static Weight custom(std::function<double(double)> density,
                         const Interval& iv, double sing_a = 0.0,
                         double sing_b = 0.0, const QuadConfig& cfg = {});

    Kind kind() const { return kind_; }
    const Interval& interval() const { return iv_; }
    double total_mass() const { return total_mass_; }
    double param1() const { return p1_; } // p or mu
    double param2() const { return p2_; } // q or s

    void set_quad_config(const QuadConfig& cfg) { cfg_ = cfg; }

    double density(double t) const;
    double mass(double alpha, double beta) const;
    double first_moment(double alpha, double beta) const;
    double mean(double alpha, double beta) const;
    double cdf_normalized(double t) const;

    // Generic adaptive-quadrature path; the oracle against which the closed
    // forms are checked. This is also the only path for Custom weights.
    double mass_numeric(double alpha, double beta) const;
    double first_moment_numeric(double alpha, double beta) const;

    // Integral of f(t) w(t) dt over [a,b], singularity-aware.
    double integrate_against(const std::function<double(double)>& f) const;

    std::string describe() const;

private:
    Weight(Kind k, const Interval& iv) : kind_(k), iv_(iv) {}

    double integrate_weighted(const std::function<double(double)>& f,
                              double alpha, double beta) const;

    Kind kind_;
    Interval iv_;
    double total_mass_ = 0.0;
    double p1_ = 0.0, p2_ = 0.0;
    std::function<double(double)> custom_density_;
    double sing_a_ = 0.0, sing_b_ = 0.0;
    QuadConfig cfg_;
};

} // namespace ogb

#endif

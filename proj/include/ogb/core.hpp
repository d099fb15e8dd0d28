#ifndef OGB_CORE_HPP
#define OGB_CORE_HPP

#include <optional>

#include "ogb/function_spec.hpp"
#include "ogb/root.hpp"
#include "ogb/weight.hpp"

namespace ogb {

/// One evaluation record for the weighted functional and its bounds.
struct BoundReport {
    double x = 0.0;
    double c = 1.0;
    double L_value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double t_star = 0.0;
    double nu = 0.0;
    double kernel_l1 = 0.0;
    std::optional<double> majorant_bound;
    std::optional<double> l2_bound;
};

// u_{w,c}(x) = c (x - sigma(a,b)) / (b - a); c restricted to [0,1].
double u_wc(double x, double c, const Weight& w);

// Unique crossing point of the kernel: G(t*) = 1 + u for x <= sigma(a,b)
// (t* in [x,b]), G(t*) = u for x > sigma(a,b) (t* in [a,x]). The tie at
// x = sigma takes the first branch.
double t_star(double x, double c, const Weight& w, const RootConfig& rc = {});

// nu(x,t*) = (1/m(a,b)) \int_x^{t*} (t-x) w(t) dt, always >= 0.
double nu(double x, double c, const Weight& w, const RootConfig& rc = {});

// Peano-type kernel: G(t) - u for t < x, G(t) - 1 - u for t >= x
// (everything normalized by m(a,b)).
double kernel_P(double x, double t, double c, const Weight& w);

// \int_a^b |P(x,t)| dt = (c-1)|x - sigma(a,b)| + 2 nu(x,t*).
double kernel_l1(double x, double c, const Weight& w);

// (1/m(a,b)) \int_a^b f w  (the weighted average subtracted inside L).
double weighted_average(const FunctionSpec& f, const Weight& w);

// L_{w,c}(f)(x) = f(x) - weighted average - c (f(b)-f(a))/(b-a) (x - sigma).
// Accepts any c >= 0.
double functional_L(const FunctionSpec& f, double x, double c,
                    const Weight& w);
// Same, with the weighted average precomputed (battery fast path).
double functional_L_from_avg(const FunctionSpec& f, double avg, double x,
                             double c, const Weight& w);

// Two-sided derivative bounds:
// (1-c)(x-sigma) gamma + (gamma-Gamma) nu <= L <= (1-c)(x-sigma) Gamma
// + (Gamma-gamma) nu.
std::pair<double, double> bounds_derivative(std::pair<double, double> f_range,
                                            double x, double c,
                                            const Weight& w);

// L2-type comparison bound on |L_w(f)(x)| (the c = 1 functional):
// (Gamma-gamma)/2 * sqrt(b-a)/m * { int K^2 - m^2 (x-sigma)^2/(b-a) }^{1/2},
// K(x,t) = m(a,t) for t <= x and m(a,t) - m(a,b) for t > x.
double bound_l2(std::pair<double, double> f_range, double x, const Weight& w);

// Continuous piecewise-affine function with slope Gamma on [a,sigma] and
// gamma on [sigma,b]; attains equality in the c = 1 bound at x = sigma.
FunctionSpec sharpness_witness(const Weight& w, double gamma, double Gamma);

// Full record; majorant/l2 columns are filled by the caller when wanted.
BoundReport evaluate_bounds(const FunctionSpec& f, double x, double c,
                            const Weight& w);

} // namespace ogb

#endif

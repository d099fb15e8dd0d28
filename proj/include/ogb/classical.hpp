#ifndef OGB_CLASSICAL_HPP
#define OGB_CLASSICAL_HPP

#include <utility>

#include "ogb/function_spec.hpp"
#include "ogb/interval.hpp"

namespace ogb {

/// Unweighted evaluation record: the functional, the two-sided quadratic
/// bounds (valid for c in [0,2]), and the classical bound-chain constants.
struct ClassicalReport {
    double x = 0.0;
    double c = 1.0;
    double L_value = 0.0;
    double e33_lower = 0.0;
    double e33_upper = 0.0;
    double cheng = 0.0;         // (b-a)(Gamma-gamma)/8
    double matic = 0.0;         // (b-a)(Gamma-gamma)/(4 sqrt 3)
    double dragomir_wang = 0.0; // (b-a)(Gamma-gamma)/4
    double anastassiou = 0.0;   // ((x-a)^2+(b-x)^2)/(2(b-a))
};

// L_c(f)(x) = f(x) - mean - c (f(b)-f(a))/(b-a) (x - midpoint), c >= 0.
double functional_Lc(const FunctionSpec& f, double x, double c,
                     const Interval& iv);

// Closed-form two-sided bounds with u_c(x) = c (x - midpoint), c in [0,2].
std::pair<double, double> bounds_e33(std::pair<double, double> f_range,
                                     double x, double c, const Interval& iv);

// ((x-a)^2 + (b-x)^2) / (2(b-a)); multiply by ||f'||_inf externally.
double anastassiou_bound(double x, const Interval& iv);

ClassicalReport evaluate_classical(const FunctionSpec& f, double x, double c,
                                   const Interval& iv);

} // namespace ogb

#endif

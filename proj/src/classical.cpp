#include "ogb/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "ogb/quadrature.hpp"

namespace ogb {

double functional_Lc(const FunctionSpec& f, double x, double c,
                     const Interval& iv) {
    if (!(c >= 0.0))
        throw std::invalid_argument("functional_Lc: c must be >= 0");
    if (!iv.contains(x))
        throw std::invalid_argument("functional_Lc: x outside [a,b]");
    double mean = integrate(f.eval, iv.a, iv.b).value / iv.length();
    double slope = (f.eval(iv.b) - f.eval(iv.a)) / iv.length();
    return f.eval(x) - mean - c * slope * (x - iv.midpoint());
}

std::pair<double, double> bounds_e33(std::pair<double, double> f_range,
                                     double x, double c, const Interval& iv) {
    auto [gamma, Gamma] = f_range;
    if (!(gamma <= Gamma))
        throw std::invalid_argument("bounds_e33: gamma > Gamma");
    if (!(0.0 <= c && c <= 2.0))
        throw std::invalid_argument("bounds_e33: c outside [0,2]");
    if (!iv.contains(x))
        throw std::invalid_argument("bounds_e33: x outside [a,b]");
    double u = c * (x - iv.midpoint());
    double pa = (x - iv.a - u) * (x - iv.a - u);
    double pb = (x - iv.b - u) * (x - iv.b - u);
    double denom = 2.0 * iv.length();
    return {(pa * gamma - pb * Gamma) / denom, (pa * Gamma - pb * gamma) / denom};
}

double anastassiou_bound(double x, const Interval& iv) {
    if (!iv.contains(x))
        throw std::invalid_argument("anastassiou_bound: x outside [a,b]");
    double da = x - iv.a, db = iv.b - x;
    return (da * da + db * db) / (2.0 * iv.length());
}

ClassicalReport evaluate_classical(const FunctionSpec& f, double x, double c,
                                   const Interval& iv) {
    if (!f.derivative_range)
        throw std::invalid_argument(
            "evaluate_classical: FunctionSpec lacks a derivative range");
    auto [gamma, Gamma] = *f.derivative_range;
    ClassicalReport r;
    r.x = x;
    r.c = c;
    r.L_value = functional_Lc(f, x, c, iv);
    auto [lo, hi] = bounds_e33(*f.derivative_range, x, c, iv);
    r.e33_lower = lo;
    r.e33_upper = hi;
    double base = iv.length() * (Gamma - gamma);
    r.cheng = base / 8.0;
    r.matic = base / (4.0 * std::sqrt(3.0));
    r.dragomir_wang = base / 4.0;
    r.anastassiou = anastassiou_bound(x, iv);
    return r;
}

} // namespace ogb

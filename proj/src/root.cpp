#include "ogb/root.hpp"

#include <cmath>
#include <stdexcept>

namespace ogb {

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 const RootConfig& cfg) {
    if (!(cfg.x_tol > 0.0) || !(cfg.f_tol > 0.0) || cfg.max_iter < 1)
        throw std::invalid_argument("find_root: bad RootConfig");
    if (lo > hi) std::swap(lo, hi);

    double a = lo, b = hi;
    double fa = g(a), fb = g(b);
    if (std::abs(fa) <= cfg.f_tol) return a;
    if (std::abs(fb) <= cfg.f_tol) return b;
    if (fa * fb > 0.0)
        throw NoBracket("find_root: g(lo) and g(hi) have the same sign");

    double c = a, fc = fa;
    double d = b - a, e = d;

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * cfg.x_tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || std::abs(fb) <= cfg.f_tol) return b;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // secant / inverse quadratic step
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = g(b);
        if (fb * fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

} // namespace ogb

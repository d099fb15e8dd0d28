#ifndef OGB_INTERVAL_HPP
#define OGB_INTERVAL_HPP

#include <cmath>
#include <stdexcept>

namespace ogb {

// Closed interval [a,b], a < b, both finite.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Interval: need finite a < b");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double t) const { return a <= t && t <= b; }
};

} // namespace ogb

#endif

#ifndef OGB_ERRORS_HPP
#define OGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ogb {

// Quadrature failed to reach the requested tolerance; carries the best
// value and the achieved error estimate.
struct NonConvergence : std::runtime_error {
    double value;
    double err_estimate;

    NonConvergence(const std::string& what, double v, double e)
        : std::runtime_error(what), value(v), err_estimate(e) {}
};

// Root finder was called without a sign change on [lo,hi].
struct NoBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ogb

#endif

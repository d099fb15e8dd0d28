#ifndef OGB_ROOT_HPP
#define OGB_ROOT_HPP

#include <functional>

#include "ogb/errors.hpp"

namespace ogb {

struct RootConfig {
    double x_tol = 1e-12;
    double f_tol = 1e-12;
    int max_iter = 200;
};

// Brent's method. Requires g(lo)*g(hi) <= 0; throws NoBracket otherwise.
// Stops when |g| <= f_tol or the bracket width drops below x_tol.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 const RootConfig& cfg = {});

} // namespace ogb

#endif

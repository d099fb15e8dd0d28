#ifndef OGB_QUADRATURE_HPP
#define OGB_QUADRATURE_HPP

#include <functional>

#include "ogb/errors.hpp"

namespace ogb {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value;
    double err_estimate;
};

// Adaptive Gauss-Kronrod 7/15 with recursive bisection. Deterministic:
// panels are processed in a fixed depth-first order. Throws NonConvergence
// (carrying the best value) when the panel budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double alpha,
                     double beta, const QuadConfig& cfg = {});

} // namespace ogb

#endif

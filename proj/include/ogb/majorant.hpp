#ifndef OGB_MAJORANT_HPP
#define OGB_MAJORANT_HPP

#include <utility>
#include <vector>

#include "ogb/core.hpp"
#include "ogb/function_spec.hpp"
#include "ogb/weight.hpp"

namespace ogb {

/// Piecewise-linear concave nondecreasing curve on [0, b-a]; knots start
/// at (0,0), s strictly increasing, values nondecreasing, slopes
/// nonincreasing.
struct MajorantCurve {
    std::vector<std::pair<double, double>> knots;
};

// Grid estimate of the first modulus of continuity:
// max |f(u)-f(v)| over grid pairs with |u-v| <= s, n_grid uniform points.
double modulus(const FunctionSpec& f, const Interval& iv, int n_grid,
               double s);

// Upper concave hull of sampled (s, omega) points (monotone chain).
MajorantCurve least_concave_majorant(
    const std::vector<std::pair<double, double>>& samples);

double eval_majorant(const MajorantCurve& curve, double t);

/// Sampled modulus of f on an n_grid uniform grid together with its least
/// concave majorant. Built once per function, evaluated many times.
class ModulusProfile {
public:
    ModulusProfile(const FunctionSpec& f, const Interval& iv, int n_grid);

    int n_grid() const { return n_grid_; }
    double step() const { return h_; }
    // sampled omega at s = d*h, d = 0..n_grid-1
    const std::vector<std::pair<double, double>>& samples() const {
        return samples_;
    }
    const MajorantCurve& hull() const { return hull_; }
    double omega(double s) const;         // piecewise-constant-from-samples
    double majorant(double s) const;      // omega-tilde at s (clamped)

private:
    int n_grid_;
    double h_;
    std::vector<std::pair<double, double>> samples_;
    MajorantCurve hull_;
};

// 2 omega-tilde(f; kernel_l1/2), with the grid refined (doubling from
// n_grid, up to 2^20 points) until the value is stable to 1e-3.
double bound_majorant(const FunctionSpec& f, double x, double c,
                      const Weight& w, int n_grid = 1025);

// 4 ||f||_inf, sup estimated on a 4096-point probe grid.
double bound_sup_norm(const FunctionSpec& f, double x, double c,
                      const Weight& w);

} // namespace ogb

#endif

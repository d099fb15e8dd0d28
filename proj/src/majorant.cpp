#include "ogb/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ogb {

double modulus(const FunctionSpec& f, const Interval& iv, int n_grid,
               double s) {
    if (n_grid < 2) throw std::invalid_argument("modulus: n_grid >= 2");
    if (s < 0.0 || s > iv.length() + 1e-12)
        throw std::invalid_argument("modulus: s outside [0, b-a]");
    if (s == 0.0) return 0.0;
    double h = iv.length() / (n_grid - 1);
    std::vector<double> v(n_grid);
    for (int i = 0; i < n_grid; ++i) v[i] = f.eval(iv.a + i * h);
    int kmax = std::min<int>(n_grid - 1, int(std::floor(s / h + 1e-12)));
    double best = 0.0;
    for (int d = 1; d <= kmax; ++d)
        for (int i = 0; i + d < n_grid; ++i)
            best = std::max(best, std::abs(v[i + d] - v[i]));
    return best;
}

MajorantCurve least_concave_majorant(
    const std::vector<std::pair<double, double>>& samples) {
    if (samples.empty() || samples.front().first != 0.0 ||
        samples.front().second != 0.0)
        throw std::invalid_argument(
            "least_concave_majorant: samples must start at (0,0)");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].first > samples[i - 1].first) ||
            samples[i].second < samples[i - 1].second - 1e-15)
            throw std::invalid_argument(
                "least_concave_majorant: need s increasing, values "
                "nondecreasing");

    MajorantCurve curve;
    auto& hull = curve.knots;
    for (const auto& pt : samples) {
        while (hull.size() >= 2) {
            const auto& p1 = hull[hull.size() - 2];
            const auto& p2 = hull.back();
            double cross = (p2.first - p1.first) * (pt.second - p1.second) -
                           (p2.second - p1.second) * (pt.first - p1.first);
            if (cross >= 0.0) hull.pop_back(); // p2 on or below chord
            else break;
        }
        hull.push_back(pt);
    }
    return curve;
}

double eval_majorant(const MajorantCurve& curve, double t) {
    const auto& k = curve.knots;
    if (k.empty()) throw std::invalid_argument("eval_majorant: empty curve");
    if (t < -1e-12 || t > k.back().first + 1e-12)
        throw std::invalid_argument("eval_majorant: t out of range");
    t = std::clamp(t, 0.0, k.back().first);
    auto it = std::lower_bound(
        k.begin(), k.end(), t,
        [](const auto& p, double x) { return p.first < x; });
    if (it == k.begin()) return it->second;
    if (it == k.end()) return k.back().second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    double lam = (t - lo.first) / (hi.first - lo.first);
    return lo.second + lam * (hi.second - lo.second);
}

ModulusProfile::ModulusProfile(const FunctionSpec& f, const Interval& iv,
                               int n_grid)
    : n_grid_(n_grid) {
    if (n_grid < 2) throw std::invalid_argument("ModulusProfile: n_grid >= 2");
    h_ = iv.length() / (n_grid - 1);
    std::vector<double> v(n_grid);
    for (int i = 0; i < n_grid; ++i) v[i] = f.eval(iv.a + i * h_);

    // omega at s = d*h is the running max of the per-distance max diffs.
    samples_.reserve(n_grid);
    samples_.emplace_back(0.0, 0.0);
    double run = 0.0;
    for (int d = 1; d < n_grid; ++d) {
        double m = 0.0;
        for (int i = 0; i + d < n_grid; ++i)
            m = std::max(m, std::abs(v[i + d] - v[i]));
        run = std::max(run, m);
        samples_.emplace_back(d * h_, run);
    }
    hull_ = least_concave_majorant(samples_);
}

double ModulusProfile::omega(double s) const {
    int d = std::min<int>(n_grid_ - 1, int(std::floor(s / h_ + 1e-12)));
    return samples_[std::max(d, 0)].second;
}

double ModulusProfile::majorant(double s) const {
    return eval_majorant(hull_, std::clamp(s, 0.0, samples_.back().first));
}

double bound_majorant(const FunctionSpec& f, double x, double c,
                      const Weight& w, int n_grid) {
    double theta = 0.5 * kernel_l1(x, c, w);
    const Interval& iv = w.interval();
    theta = std::clamp(theta, 0.0, iv.length());

    double prev = -1.0;
    int n = n_grid;
    const int n_cap = (1 << 20) + 1;
    while (true) {
        ModulusProfile prof(f, iv, n);
        double val = prof.majorant(theta);
        if (prev >= 0.0 && std::abs(val - prev) < 1e-3) return 2.0 * val;
        prev = val;
        if (n >= n_cap) return 2.0 * val;
        n = std::min(2 * (n - 1) + 1, n_cap);
    }
}

double bound_sup_norm(const FunctionSpec& f, double x, double c,
                      const Weight& w) {
    if (!(0.0 <= c && c <= 1.0))
        throw std::invalid_argument("bound_sup_norm: c outside [0,1]");
    const Interval& iv = w.interval();
    if (!iv.contains(x))
        throw std::invalid_argument("bound_sup_norm: x outside [a,b]");
    const int n = 4096;
    double sup = 0.0;
    for (int i = 0; i <= n; ++i)
        sup = std::max(sup, std::abs(f.eval(iv.a + iv.length() * i / n)));
    return 4.0 * sup;
}

} // namespace ogb

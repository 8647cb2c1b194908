#include "altinv/convolution.hpp"

#include "altinv/euler.hpp"
#include "altinv/rational.hpp"

#include <algorithm>
#include <cmath>

namespace altinv::conv {

namespace {

// Branch abscissae of t -> g(t, y) h(c - t, y) inside the oriented
// integration range: g's own points plus h's reflected through c.
std::vector<double> integrand_hints(const BivariateFn& g, const BivariateFn& h, double y,
                                    double c, double lo, double hi) {
    if (lo > hi) std::swap(lo, hi);
    std::vector<double> pts;
    if (g.branch_points_in) {
        auto a = g.branch_points_in(y, lo, hi);
        pts.insert(pts.end(), a.begin(), a.end());
    }
    if (h.branch_points_in) {
        auto b = h.branch_points_in(y, c - hi, c - lo);
        for (double u : b) pts.push_back(c - u);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

ConvolveValue convolve_at(const BivariateFn& g, const BivariateFn& h, double x, double y,
                          const QuadratureConfig& cfg) {
    if (!(y > 0.0)) throw ArgumentError("convolve: y must be positive");
    // branch detection acts on the ratio t/y, so the excised sliver around
    // a branch point must widen with y to stay clear of the snap radius
    QuadratureConfig local = cfg;
    local.branch_scale = std::max(1.0, y);
    auto first = [&](double t) { return g.eval(Arg(t), Arg(y)) * h.eval(Arg(x - t), Arg(y)); };
    auto second = [&](double t) {
        return g.eval(Arg(t), Arg(y)) * h.eval(Arg(x + y - t), Arg(y));
    };
    quad::IntegralResult i1 =
        quad::integrate(first, 0.0, x, local, integrand_hints(g, h, y, x, 0.0, x));
    quad::IntegralResult i2 =
        quad::integrate(second, x, y, local, integrand_hints(g, h, y, x + y, x, y));
    return {i1.value - i2.value, i1.est_error + i2.est_error};
}

BivariateFn convolve(const BivariateFn& g, const BivariateFn& h, const QuadratureConfig& cfg) {
    BivariateFn f;
    f.eval = [g, h, cfg](const Arg& x, const Arg& y) {
        return convolve_at(g, h, x.v, y.v, cfg).value;
    };
    return f;
}

std::function<Complex(double)> convolve(const BivariateFn& g, const BivariateFn& h, double y,
                                        const QuadratureConfig& cfg) {
    return [g, h, y, cfg](double x) { return convolve_at(g, h, x, y, cfg).value; };
}

InvarianceReport convolution_closure_report(const BivariateFn& g, const BivariateFn& h,
                                            const std::vector<GridPoint>& grid,
                                            const QuadratureConfig& cfg, double tol) {
    int n_max = 1;
    for (const GridPoint& p : grid) n_max = std::max(n_max, p.n);
    double effective = tol + n_max * cfg.abs_tol;
    return check_invariance(convolve(g, h, cfg), grid, effective);
}

double euler_convolution_numeric_residual(unsigned m, unsigned n, double x, double y,
                                          const QuadratureConfig& cfg) {
    if (m < 1 || n < 1) {
        throw ArgumentError("euler_convolution_numeric_residual: need m, n >= 1");
    }
    auto normalized = [](unsigned k) {
        BivariateFn base = euler::euler_invfn(k);
        double scale = 0.5 / factorial(k).get_d();
        BivariateFn f;
        f.eval = [base, scale](const Arg& xx, const Arg& yy) {
            return scale * base.eval(xx, yy);
        };
        return f;
    };
    Complex lhs = convolve_at(normalized(m), normalized(n), x, y, cfg).value;
    unsigned d = m + n + 1;
    double rhs = std::pow(y, static_cast<double>(d)) * euler::euler_eval(d, x / y) /
                 (2.0 * factorial(d).get_d());
    return std::abs(lhs - rhs);
}

} // namespace altinv::conv

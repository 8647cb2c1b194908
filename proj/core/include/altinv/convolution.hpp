#pragma once

#include "altinv/invariance.hpp"
#include "altinv/quadrature.hpp"

namespace altinv::conv {

using quad::QuadratureConfig;

struct ConvolveValue {
    Complex value;
    double est_error = 0.0;
};

/// (g*h)(x, y) = int_0^x g(t,y) h(x-t,y) dt - int_x^y g(t,y) h(x+y-t,y) dt,
/// both integrals oriented (reversed bounds negate), so the operator is
/// defined for every real x. Branch points declared by g and h become
/// panel splits.
ConvolveValue convolve_at(const BivariateFn& g, const BivariateFn& h, double x, double y,
                          const QuadratureConfig& cfg);

/// The convolution as a bivariate function (class membership is preserved
/// when g and h are members).
BivariateFn convolve(const BivariateFn& g, const BivariateFn& h, const QuadratureConfig& cfg);

/// Single-y slice x -> (g*h)(x, y).
std::function<Complex(double)> convolve(const BivariateFn& g, const BivariateFn& h, double y,
                                        const QuadratureConfig& cfg);

/// check_invariance on the convolution; quadrature error is absorbed into
/// the effective tolerance tol + n_max * cfg.abs_tol.
InvarianceReport convolution_closure_report(const BivariateFn& g, const BivariateFn& h,
                                            const std::vector<GridPoint>& grid,
                                            const QuadratureConfig& cfg, double tol);

/// Residual of the degree-additive convolution identity for the
/// factorial-normalized polynomial members of orders m and n at (x, y):
///   | conv - y^{m+n+1} E_{m+n+1}(x/y) / (2 (m+n+1)!) |.
double euler_convolution_numeric_residual(unsigned m, unsigned n, double x, double y,
                                          const QuadratureConfig& cfg);

} // namespace altinv::conv

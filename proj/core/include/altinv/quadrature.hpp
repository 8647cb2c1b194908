#pragma once

#include "altinv/bivariate.hpp"

#include <functional>
#include <vector>

namespace altinv::quad {

struct QuadratureConfig {
    int panel_order = 16;     // Gauss-Legendre nodes per panel, >= 4
    int max_refinements = 20; // bisection depth limit per panel
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    // Half-width of the sliver excluded around each declared branch point:
    // branch_margin * max(branch_scale, 1, |point|). The dropped mass is
    // bounded by a sample next to the sliver and added to est_error. Must
    // stay above the integer-detection snap radius of the integrand;
    // callers whose branch lattice lives in a ratio t/y set branch_scale=y.
    double branch_margin = 4e-9;
    double branch_scale = 1.0;
};

struct IntegralResult {
    Complex value;
    double est_error = 0.0;
    int panels = 0;
};

/// Nodes and weights of the order-point Gauss-Legendre rule on [-1, 1].
/// Cached per order; thread-safe.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

/// Adaptive integral of f over the oriented interval [lo, hi]
/// (lo > hi is interpreted as the negated integral over [hi, lo]).
/// split_hints lists interior or endpoint abscissae of integrand branch
/// points; panels touching a hint are pre-split geometrically (ratio 1/4)
/// toward it. Quadrature nodes are strictly interior, so endpoint
/// singularities are never evaluated.
IntegralResult integrate(const std::function<Complex(double)>& f, double lo, double hi,
                         const QuadratureConfig& cfg, std::vector<double> split_hints = {});

} // namespace altinv::quad

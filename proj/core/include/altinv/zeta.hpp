#pragma once

#include "altinv/bivariate.hpp"
#include "altinv/quadrature.hpp"

namespace altinv::zeta {

/// Evaluation route for zeta_e.
///   series  - accelerated alternating sum, needs Re(s) > 0
///   fourier - odd-frequency expansion with Gamma(1-s) prefactor,
///             needs Re(s) < 1; argument reduced into (0, 1]
///   negint  - exact E_m(x)/2 at s = -m
///   auto_   - negint if applicable, else series for Re(s) >= 1/2,
///             else fourier
enum class Regime { series, fourier, negint, auto_ };

const char* regime_name(Regime r);

struct ZetaParams {
    Complex s;
    Complex x;
    Regime regime = Regime::auto_;
    double tol = 1e-12;
};

struct ZetaValue {
    Complex value;
    Regime used = Regime::auto_;
    double est_error = 0.0;
};

/// Alternating Hurwitz zeta sum_{n>=0} (-1)^n (n+x)^{-s}, continued to all
/// s; x must avoid the nonpositive integers. Values for x <= 0 use the
/// principal branch of (n+x)^{-s}.
ZetaValue zeta_e_ex(const ZetaParams& p);
Complex zeta_e(const ZetaParams& p);
Complex zeta_e(Complex s, Complex x, double tol = 1e-12);

/// eta(s) = zeta_e(s, 1), the alternating zeta function.
ZetaValue eta_ex(Complex s, double tol = 1e-12);
Complex eta(Complex s, double tol = 1e-12);

/// | n^{-s} sum_{j<n} (-1)^j zeta_e(s, x + j/n)  -  zeta_e(s, n x) |
/// evaluated at working tolerance tol; n odd.
double zeta_distribution_residual(Complex s, double x, int n, double tol);

/// k-th coefficient of zeta_e(s,x) = sum_k (-1)^k g_k(x) (s-1)^k / k!
/// at s = 1. k = 0 is zeta_e(1, x) directly; k in 1..3 via
/// Richardson-extrapolated central differences with the step ladder
/// {1e-2, 5e-3, 2.5e-3}.
struct StieltjesTilde {
    unsigned k = 0;
    double x = 0.0;
    double value = 0.0;
    double ladder_spread = 0.0; // |difference of the two Richardson stages|
};
StieltjesTilde stieltjes_tilde(unsigned k, double x, double tol);

/// psi-tilde(x) = -zeta_e(1, x), the digamma attached to zeta_e.
double digamma_tilde(double x, double tol);

/// (x, y) -> y^{-s} zeta_e(s, x/y), excluding x/y in Z_{<=0}.
/// Analytic x-derivative -s y^{-(s+1)} zeta_e(s+1, x/y) registered.
BivariateFn zeta_invfn(Complex s);

/// Residual of the convolution identity for alpha, beta > 1:
///   | (g*h)(x,y) - y^{alpha+beta-1} zeta_e(1-alpha-beta, x/y) / Gamma(alpha+beta) |
/// with g, h the Gamma-normalized zeta members of orders alpha, beta.
double zeta_convolution_identity_residual(double alpha, double beta, double x, double y,
                                          double tol);

} // namespace altinv::zeta

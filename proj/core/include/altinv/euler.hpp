#pragma once

#include "altinv/bivariate.hpp"
#include "altinv/polyq.hpp"

namespace altinv::euler {

/// Degrees above this raise ArgumentError (coefficient bit-growth).
inline constexpr unsigned kDegreeCap = 64;

/// Euler polynomial E_m with exact rational coefficients, c_0..c_m
/// ascending, leading coefficient 1.
struct EulerPoly {
    unsigned degree = 0;
    PolyQ coeffs;
};

/// E_m from the triangular system
///   E_m(x) = x^m - (1/2) sum_{k<m} C(m,k) E_k(x).
/// Memoized; safe under concurrent access.
const EulerPoly& euler_poly(unsigned m);

Rational euler_eval(unsigned m, const Rational& x);
double euler_eval(unsigned m, double x);

/// sum_{r<n} (-1)^r E_m((x+r)/n) - E_m(x)/n^m in exact arithmetic;
/// identically zero for odd n.
Rational euler_distribution_residual(unsigned m, const Rational& x, int n);

/// Exact integral of E_m(t) E_n(1-t) over [0,1].
Rational euler_integral(unsigned m, unsigned n);

/// Closed form 2 E_{m+n+1}(1) / (C(m+n,n) (m+n+1)) the integral must equal.
Rational euler_integral_closed_form(unsigned m, unsigned n);

/// The bracket
///   B(x) = int_0^1 E_m(x-t) E_n(t) dt - 2 int_x^1 (x-t)^m E_n(t) dt
/// expanded exactly as a polynomial in x.
PolyQ euler_convolution_bracket(unsigned m, unsigned n);

/// E_{m+n+1}(x) - (C(m+n,m)(m+n+1)/2) B(x), exact; identically zero.
Rational euler_convolution_identity_residual(unsigned m, unsigned n, const Rational& x);

/// Coefficient-level identities.
bool reflection_holds(unsigned m);          // E_m(1-x) = (-1)^m E_m(x)
bool triangular_identity_holds(unsigned m);      // sum_k C(m,k) E_k + E_m = 2 x^m
bool difference_equation_holds(unsigned m); // E_m(x+1) + E_m(x) = 2 x^m

/// (x, y) -> y^m E_m(x/y), with analytic x-derivative m y^{m-1} E_{m-1}(x/y).
/// Exact rational evaluation when both arguments carry exact values.
BivariateFn euler_invfn(unsigned m);

} // namespace altinv::euler

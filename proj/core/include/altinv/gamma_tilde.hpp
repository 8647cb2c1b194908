#pragma once

#include "altinv/bivariate.hpp"

namespace altinv::gammat {

/// Value of the Gamma function attached to the alternating zeta, in log
/// form: Gamma~(x) = sign * exp(log_abs). est_error bounds the truncation
/// error of log_abs; sign is exact. For x > 0 the sign is +1.
struct GammaTildeValue {
    double x = 0.0;
    double log_abs = 0.0;
    int sign = 1;
    long truncation_terms = 0;
    double est_error = 0.0;
};

/// log |Gamma~(x)| from the alternating Weierstrass-type product
///   Gamma~(x) = (1/x) e^{x log 2} prod_k ( e^{-x/k} (1 + x/k) )^{(-1)^{k+1}},
/// summed in consecutive (odd, even) pairs so the paired tail decays like
/// 1/k^3; truncated when the pair-based tail bound drops below tol.
/// x must avoid the nonpositive integers.
GammaTildeValue log_gamma_tilde(double x, double tol);

/// Relative residual of the two-step recurrence ladder
///   n even: Gamma~(x+n) = (x+n-2)/(x+n-1) ... x/(x+1) * Gamma~(x)
///   n odd:  Gamma~(x+n) = (x+n-2)/(x+n-1) ... (x+1)/(x+2) * Gamma~(x+1)
/// for x > 0 (computed through log_gamma_tilde; n = 1 is exactly 0).
double recurrence_residual(double x, int n, double tol);

/// Residual of the odd-modulus distribution identity in log form,
///   log Gamma~(n x) = -(1/2) log n + sum_{j<n} (-1)^j log Gamma~(x + j/n),
/// including the sign product; a sign mismatch reports +infinity.
double distribution_residual(double x, int n, double tol);

/// n!! with (-1)!! = 0!! = 1.
double double_factorial(long long n);

/// The log-Gamma~ member: (x, y) -> log| Gamma~(x/y) / sqrt(y) | away from
/// x/y in Z_{<=0}, with the double-factorial branch values
///   x/y = -2m:     log( ((2m-1)!!/(2m)!!) sqrt(y)   * Gamma~(2) )
///   x/y = -(2m+1): log( ((2m)!!/(2m+1)!!) Gamma~(1) / y^{3/2} ).
/// Total function; branch selection follows the integer-detection policy.
BivariateFn gamma_invfn();

} // namespace altinv::gammat

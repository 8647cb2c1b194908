#pragma once

#include "altinv/bivariate.hpp"

#include <utility>

namespace altinv {

/// F(x, y) = a * f(b + c x, c y), c > 0. Membership in the invariant class
/// is preserved; exactness of b, c propagates into branch detection.
BivariateFn translate_scale(const BivariateFn& f, double a, const Arg& b, const Arg& c);

/// d f / d x. Uses the registered analytic derivative when present,
/// otherwise a 4th-order central stencil with one Richardson step,
/// h = max(1e-5, 1e-5 |x|). Near-branch evaluations raise DomainError.
BivariateFn partial_x(const BivariateFn& f);

/// F(x, y) = f(y - x, y); involution, preserves membership.
BivariateFn reflect(const BivariateFn& f);

/// Pointwise real / imaginary part (returned as complex with zero
/// imaginary component); both inherit membership.
BivariateFn real_part(const BivariateFn& f);
BivariateFn imag_part(const BivariateFn& f);

/// Sign-fractional lift: for shift t,
///   f1(x, y) = (-1)^floor((t+x)/y) * f(y * frac((t+x)/y), y)
/// and f2 = reflect(f1). Both are members whenever f is.
/// Raises DomainError when (t+x)/y sits on an integer (by the detection
/// policy) and f is branch-sensitive or excluded at the wrapped point.
std::pair<BivariateFn, BivariateFn> sign_fractional_lift(const BivariateFn& f, const Arg& t);

/// Truncated odd-frequency Fourier members
///   fcos(x, y) = (1/y) sum_{m<terms} h((2m+1)/y) cos(pi (2m+1) x / y)
/// and the sine analogue. Truncation is the caller's responsibility.
std::pair<BivariateFn, BivariateFn> odd_fourier_series(std::function<double(double)> h,
                                                       int terms);

/// Tail bound of odd_fourier_series for h(u) = r^u, 0 < r < 1:
///   (1/y) * r^{(2 terms + 1)/y} / (1 - r^{2/y}).
double odd_fourier_geometric_tail(double r, double y, int terms);

} // namespace altinv

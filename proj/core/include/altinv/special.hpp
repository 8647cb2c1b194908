#pragma once

#include "altinv/bivariate.hpp"

#include <optional>
#include <string>

namespace altinv {

/// Classical Gamma function, Lanczos approximation (g = 607/128, 15 terms)
/// with reflection for Re(z) < 1/2. Relative error below 1e-13 away from
/// the poles. Raises DomainError at nonpositive integers.
Complex gamma_fn(Complex z);
double gamma_fn(double x);

/// base^e with the principal logarithm; negative real bases take arg = +pi.
/// Raises DomainError for base == 0 with Re(e) <= 0.
Complex cpow(Complex base, Complex e);

/// Parse "a", "a+bi", "a-bi", "bi", "i" (decimal components).
std::optional<Complex> parse_complex(const std::string& text);

} // namespace altinv

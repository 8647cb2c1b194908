#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace altinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q", an integer, or a plain decimal ("-1.7" -> -17/10).
/// Returns nullopt if the string is not an exact rational literal
/// (scientific notation and inf/nan are rejected).
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact binomial coefficient C(n, k).
Integer binomial(unsigned long n, unsigned long k);

/// Exact factorial n!.
Integer factorial(unsigned long n);

} // namespace altinv

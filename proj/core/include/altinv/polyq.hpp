#pragma once

#include "altinv/rational.hpp"

#include <vector>

namespace altinv {

/// Dense polynomial over Q, coefficients in ascending degree order.
/// The zero polynomial is represented by an empty vector.
using PolyQ = std::vector<Rational>;

PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const Rational& s);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);

/// p(a x + b) expanded exactly.
PolyQ poly_compose_affine(const PolyQ& p, const Rational& a, const Rational& b);

/// Multiply by x^k.
PolyQ poly_shift_degree(const PolyQ& p, std::size_t k);

PolyQ poly_derivative(const PolyQ& p);
PolyQ poly_antiderivative(const PolyQ& p); // constant term 0

Rational poly_eval(const PolyQ& p, const Rational& x);
double poly_eval(const PolyQ& p, double x);

/// Exact definite integral over [lo, hi].
Rational poly_definite_integral(const PolyQ& p, const Rational& lo, const Rational& hi);

/// Drops trailing zero coefficients (canonical form).
void poly_trim(PolyQ& p);

bool poly_is_zero(const PolyQ& p);

} // namespace altinv

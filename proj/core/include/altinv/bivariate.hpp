#pragma once

#include "altinv/arg.hpp"
#include "altinv/errors.hpp"

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace altinv {

using Complex = std::complex<double>;

/// A candidate alternating invariant function f(x, y), defined for y > 0.
///
/// `eval` must be deterministic and defined for every admissible point;
/// points where `excluded` holds must raise DomainError, never return NaN.
/// `special_branch` marks points where the value comes from a separate
/// branch formula (integer ratios and the like); such points are evaluable
/// but only trustworthy when the inputs carry exact rationals.
/// `branch_points_in` enumerates the x-locations of branch/exclusion points
/// inside [lo, hi] at fixed y, used by quadrature to pre-split panels.
struct BivariateFn {
    std::function<Complex(const Arg&, const Arg&)> eval;
    std::function<Complex(const Arg&, const Arg&)> dx; // analytic d/dx, may be null
    // exact rational value where one exists (polynomial members); lets the
    // verification engine cancel alternating sums without rounding
    std::function<std::optional<Rational>(const Arg&, const Arg&)> eval_exact; // may be null
    std::function<bool(const Arg&, const Arg&)> excluded;       // may be null
    std::function<bool(const Arg&, const Arg&)> special_branch; // may be null
    std::function<std::vector<double>(double y, double lo, double hi)> branch_points_in; // may be null

    Complex operator()(const Arg& x, const Arg& y) const { return eval(x, y); }
    Complex operator()(double x, double y) const { return eval(Arg(x), Arg(y)); }

    bool is_excluded(const Arg& x, const Arg& y) const {
        return excluded && excluded(x, y);
    }
    bool is_special(const Arg& x, const Arg& y) const {
        return special_branch && special_branch(x, y);
    }
    bool has_dx() const { return static_cast<bool>(dx); }
};

/// Constant member c of the invariant class (alternating sums of an odd
/// number of equal terms collapse to one term).
inline BivariateFn constant_fn(Complex c) {
    BivariateFn f;
    f.eval = [c](const Arg&, const Arg&) { return c; };
    f.dx = [](const Arg&, const Arg&) { return Complex(0.0); };
    return f;
}

/// f(x, y) = x. Not a member of the class; kept as the canonical negative
/// control for the verification engine.
inline BivariateFn coordinate_fn() {
    BivariateFn f;
    f.eval = [](const Arg& x, const Arg&) { return Complex(x.v); };
    f.dx = [](const Arg&, const Arg&) { return Complex(1.0); };
    return f;
}

} // namespace altinv

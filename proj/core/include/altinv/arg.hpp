#pragma once

#include "altinv/rational.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

namespace altinv {

/// Relative threshold of the integer-detection policy for floating inputs:
/// u counts as integer iff |u - round(u)| <= kIntegerDetectionTol * max(1, |u|).
inline constexpr double kIntegerDetectionTol = 1e-9;

/// Numeric argument that optionally carries its exact rational value.
/// Exactness propagates through arithmetic and makes branch detection
/// (x/y integer, (a-x)/y integer, ...) exact instead of threshold-based.
struct Arg {
    double v = 0.0;
    std::optional<Rational> exact;

    Arg() = default;
    Arg(double value) : v(value) {}                              // NOLINT(google-explicit-constructor)
    Arg(int value) : v(value), exact(Rational(value)) {}         // NOLINT(google-explicit-constructor)
    Arg(const Rational& r) : v(to_double(r)), exact(r) {}        // NOLINT(google-explicit-constructor)

    bool is_exact() const { return exact.has_value(); }

    friend Arg operator+(const Arg& a, const Arg& b) {
        if (a.exact && b.exact) return Arg(Rational(*a.exact + *b.exact));
        return Arg(a.v + b.v);
    }
    friend Arg operator-(const Arg& a, const Arg& b) {
        if (a.exact && b.exact) return Arg(Rational(*a.exact - *b.exact));
        return Arg(a.v - b.v);
    }
    friend Arg operator*(const Arg& a, const Arg& b) {
        if (a.exact && b.exact) return Arg(Rational(*a.exact * *b.exact));
        return Arg(a.v * b.v);
    }
    friend Arg operator/(const Arg& a, const Arg& b) {
        if (a.exact && b.exact && *b.exact != 0) return Arg(Rational(*a.exact / *b.exact));
        return Arg(a.v / b.v);
    }
    Arg operator-() const {
        if (exact) return Arg(Rational(-*exact));
        return Arg(-v);
    }
};

/// Floating-side integer detection per the policy above.
inline bool near_integer(double u) {
    return std::abs(u - std::round(u)) <= kIntegerDetectionTol * std::max(1.0, std::abs(u));
}

/// If `a` is an integer (exactly when exact, by detection policy otherwise),
/// return its value; nullopt otherwise. Values outside int64 range are
/// treated as non-integers (nothing in this library needs them).
inline std::optional<std::int64_t> as_integer(const Arg& a) {
    if (a.exact) {
        if (!is_integer(*a.exact)) return std::nullopt;
        Integer n = a.exact->get_num();
        if (!n.fits_slong_p()) return std::nullopt;
        return static_cast<std::int64_t>(n.get_si());
    }
    if (!near_integer(a.v)) return std::nullopt;
    double r = std::round(a.v);
    if (std::abs(r) > 9.0e18) return std::nullopt;
    return static_cast<std::int64_t>(std::llround(r));
}

/// Integer test for the ratio x/y (used by all the ratio-branch builtins).
inline std::optional<std::int64_t> ratio_as_integer(const Arg& x, const Arg& y) {
    return as_integer(x / y);
}

/// Split u into (floor, fractional part); exact when u is exact.
/// Near-integer floating values snap to the integer (frac = 0) per the policy.
struct FloorSplit {
    std::int64_t floor = 0;
    bool floor_odd = false;
    Arg frac;             // value in [0, 1)
    bool snapped = false; // true when a floating u was snapped to an integer
};

inline FloorSplit floor_split(const Arg& u) {
    FloorSplit out;
    if (u.exact) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), u.exact->get_num().get_mpz_t(), u.exact->get_den().get_mpz_t());
        out.floor = static_cast<std::int64_t>(fl.get_si());
        out.floor_odd = mpz_odd_p(fl.get_mpz_t()) != 0;
        out.frac = Arg(Rational(*u.exact - Rational(fl)));
        return out;
    }
    if (near_integer(u.v)) {
        out.floor = static_cast<std::int64_t>(std::llround(u.v));
        out.floor_odd = (out.floor % 2) != 0;
        out.frac = Arg(0.0);
        out.frac.exact = Rational(0);
        out.snapped = true;
        return out;
    }
    double fl = std::floor(u.v);
    out.floor = static_cast<std::int64_t>(fl);
    out.floor_odd = (out.floor % 2) != 0;
    out.frac = Arg(u.v - fl);
    return out;
}

} // namespace altinv

#include "altinv/zeta.hpp"

#include "altinv/convolution.hpp"
#include "altinv/euler.hpp"
#include "altinv/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace altinv::zeta {

namespace {

constexpr double kImagRealCutoff = 1e-12;

bool nonpositive_integer(Complex v, long long* out = nullptr) {
    if (std::abs(v.imag()) > kImagRealCutoff) return false;
    double re = v.real();
    if (!near_integer(re)) return false;
    long long k = std::llround(re);
    if (k > 0) return false;
    if (out) *out = k;
    return true;
}

void require_admissible_x(Complex x) {
    if (nonpositive_integer(x)) {
        std::ostringstream os;
        os << "zeta_e: x = " << x.real() << " is a nonpositive integer";
        throw DomainError(os.str());
    }
}

Complex horner_complex(const PolyQ& coeffs, Complex x) {
    Complex acc(0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

// ---- series regime: accelerated alternating sum ------------------------

// Chebyshev-polynomial acceleration of sum_{k>=0} (-1)^k a_k. The same
// weights continue the sum analytically when the terms grow polynomially
// (s in the left half-plane), at the cost of extra terms.
ZetaValue series_accelerated(Complex s, Complex x, double tol) {
    // shift so Re(x') >= 0.5; finitely many leading terms summed directly
    Complex direct(0.0);
    double sign = 1.0;
    Complex xs = x;
    int shifts = 0;
    while (xs.real() < 0.5) {
        direct += sign * cpow(xs, -s);
        sign = -sign;
        xs += 1.0;
        if (++shifts > 1000000) throw ConvergenceError("zeta_e series: argument shift runaway");
    }

    int digits = static_cast<int>(std::ceil(-std::log10(std::max(tol, 1e-17))));
    digits = std::clamp(digits, 6, 17);
    int n = static_cast<int>(std::ceil(1.31 * digits)) + 8 +
            static_cast<int>(std::ceil(std::abs(s.imag()))) +
            2 * static_cast<int>(std::ceil(std::max(0.0, -s.real())));

    const double q = 3.0 + 2.0 * std::sqrt(2.0);
    double d = std::pow(q, n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d;
    Complex acc(0.0);
    double amax = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        Complex a = cpow(xs + static_cast<double>(k), -s);
        amax = std::max(amax, std::abs(a));
        acc += c * a;
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    Complex tail = acc / d;

    ZetaValue out;
    out.value = direct + sign * tail;
    out.used = Regime::series;
    out.est_error = 4.0 * std::pow(q, -n) * std::max(1.0, amax) +
                    1e-16 * (std::abs(direct) + amax * n / std::max(d, 1.0)) + 1e-16 * amax;
    return out;
}

// Fallback for complex x with a large imaginary part: direct summation
// with iterated Aitken extrapolation. Best effort only.
ZetaValue series_aitken(Complex s, Complex x, double tol) {
    constexpr int kMax = 20000;
    std::vector<Complex> partial;
    partial.reserve(256);
    Complex acc(0.0);
    double sign = 1.0;
    for (int k = 0; k < kMax; ++k) {
        acc += sign * cpow(x + static_cast<double>(k), -s);
        sign = -sign;
        partial.push_back(acc);
        if (partial.size() >= 12) {
            std::vector<Complex> v(partial.end() - 12, partial.end());
            for (int round = 0; round < 5; ++round) {
                std::vector<Complex> w;
                for (std::size_t i = 0; i + 2 < v.size(); ++i) {
                    Complex d2 = v[i + 2] - 2.0 * v[i + 1] + v[i];
                    if (std::abs(d2) < 1e-300) {
                        w.push_back(v[i + 2]);
                    } else {
                        Complex d1 = v[i + 1] - v[i];
                        w.push_back(v[i] - d1 * d1 / d2);
                    }
                }
                v = std::move(w);
            }
            Complex best = v.back();
            Complex prev = v.size() >= 2 ? v[v.size() - 2] : v.back();
            double spread = std::abs(best - prev);
            if (spread < tol && k > 40) {
                return {best, Regime::series, spread};
            }
        }
    }
    throw ConvergenceError("zeta_e series: Aitken fallback did not converge");
}

ZetaValue series_eval(Complex s, Complex x, double tol) {
    if (std::abs(x.imag()) > 0.5) return series_aitken(s, x, tol);
    return series_accelerated(s, x, tol);
}

// ---- fourier regime -----------------------------------------------------

// sum_{m>=0} z^m (2m+1)^{s-1} for |z| <= 1, z != 1: direct prefix plus a
// generalized Euler transform of the tail (iterated forward differences
// against powers of z/(1-z)).
struct OscSum {
    Complex value;
    double est_error;
};

OscSum osc_sum(Complex z, Complex s, double tol) {
    const int kDiff = 30;
    double qmag = std::abs(z / (1.0 - z));
    double m_needed = 6.0 * qmag * (kDiff + std::abs(s - 1.0));
    if (m_needed > 2.0e5) {
        throw ConvergenceError("zeta_e fourier: expansion point too close to an integer");
    }
    int M = std::max(48, static_cast<int>(std::ceil(m_needed)));

    Complex acc(0.0);
    Complex zp(1.0);
    for (int m = 0; m < M; ++m) {
        acc += zp * cpow(Complex(2.0 * m + 1.0), s - 1.0);
        zp *= z;
        if ((m & 63) == 63) zp = cpow(z, Complex(m + 1.0)); // kill phase drift
    }

    // Forward differences of phi(j) = (2(M+j)+1)^{s-1}. The iterated
    // differences amplify roundoff by ~2^k, so the table runs in long
    // double and the transform is summed to its smallest term, with the
    // remainder reported honestly.
    using CL = std::complex<long double>;
    std::vector<CL> table(kDiff);
    CL sl(static_cast<long double>(s.real()), static_cast<long double>(s.imag()));
    for (int j = 0; j < kDiff; ++j) {
        table[j] = std::exp((sl - 1.0L) * std::log(CL(2.0L * (M + j) + 1.0L)));
    }
    CL zl(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
    CL q = zl / (1.0L - zl);
    CL factor = CL(zp.real(), zp.imag()) / (1.0L - zl); // z^M / (1-z)
    CL tail(0.0L);
    CL qk(1.0L);
    double last = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    int small_streak = 0;
    for (int k = 0; k < kDiff; ++k) {
        CL term = qk * table[0];
        double mag = static_cast<double>(std::abs(factor) * std::abs(term));
        if (k >= 2 && mag > prev) break; // roundoff floor of the table
        tail += term;
        last = mag;
        prev = mag;
        if (mag < 0.05 * tol) {
            if (++small_streak >= 2) break;
        } else {
            small_streak = 0;
        }
        for (int j = 0; j + 1 < kDiff - k; ++j) table[j] = table[j + 1] - table[j];
        qk *= q;
    }
    CL total = factor * tail;
    return {acc + Complex(static_cast<double>(total.real()), static_cast<double>(total.imag())),
            4.0 * last + 1e-16 * (std::abs(acc) + M * 1e-16)};
}

// z == 1 branch: sum_{m>=0} (2m+1)^{s-1} for Re(s) < 0 by Euler-Maclaurin.
OscSum osc_sum_at_one(Complex s, double tol) {
    if (s.real() >= -1e-12) {
        throw ConvergenceError("zeta_e fourier: series at the interval endpoint diverges for "
                               "0 <= Re(s) < 1");
    }
    int M = 48;
    // push M until the first omitted correction is safely below tol
    while (std::pow(2.0 * M + 1.0, s.real() - 7.0) * 1e3 > tol && M < 100000) M *= 2;
    Complex acc(0.0);
    for (int m = 0; m < M; ++m) acc += cpow(Complex(2.0 * m + 1.0), s - 1.0);
    Complex u(2.0 * M + 1.0);
    Complex integral = -cpow(u, s) / (2.0 * s);
    Complex f0 = cpow(u, s - 1.0);
    Complex f1 = 2.0 * (s - 1.0) * cpow(u, s - 2.0);
    Complex f3 = 8.0 * (s - 1.0) * (s - 2.0) * (s - 3.0) * cpow(u, s - 4.0);
    Complex f5 = 32.0 * (s - 1.0) * (s - 2.0) * (s - 3.0) * (s - 4.0) * (s - 5.0) *
                 cpow(u, s - 6.0);
    Complex tail = integral + 0.5 * f0 - f1 / 12.0 + f3 / 720.0 - f5 / 30240.0;
    double est = std::abs(cpow(u, s - 8.0)) * 1e3 + 1e-16 * std::abs(acc);
    return {acc + tail, est};
}

// Assembles the expansion from the two phase-conjugate oscillatory sums:
//   zeta_e = -i (Gamma(1-s)/pi^{1-s}) [ e^{i pi s/2} w T1 - e^{-i pi s/2} wbar T2 ]
// with w = e^{i pi x}, T1 = sum z^m (2m+1)^{s-1} at z = w^2 and T2 the
// mirrored sum.
ZetaValue fourier_eval(Complex s, Complex x, double tol, bool allow_fallback) {
    if (s.real() >= 1.0) {
        throw RegimeError("zeta_e fourier: requires Re(s) < 1");
    }
    // argument reduction into (0, 1] via the difference equation
    Complex acc(0.0);
    double sign = 1.0;
    Complex xr = x;
    int guard = 0;
    while (xr.real() > 1.0 + 1e-13) {
        xr -= 1.0;
        acc += sign * cpow(xr, -s);
        sign = -sign;
        if (++guard > 1000000) throw ConvergenceError("zeta_e fourier: reduction runaway");
    }
    while (xr.real() <= 1e-13) {
        acc += sign * cpow(xr, -s); // xr never hits Z_{<=0}: x was admissible
        sign = -sign;
        xr += 1.0;
        if (++guard > 1000000) throw ConvergenceError("zeta_e fourier: reduction runaway");
    }

    Complex w1 = std::exp(Complex(0.0, M_PI) * xr);
    Complex w2 = std::exp(Complex(0.0, -M_PI) * xr);
    Complex z1 = w1 * w1;
    bool at_one = std::abs(z1 - 1.0) < 1e-12 && std::abs(xr - 1.0) < 1e-12;

    if (allow_fallback && std::abs(z1 - 1.0) < 0.05 && (!at_one || s.real() > 0.0)) {
        // ill-conditioned expansion point; the accelerated series
        // continues analytically and stays cheap
        return series_eval(s, x, tol);
    }

    OscSum t1{}, t2{};
    if (at_one) {
        t1 = osc_sum_at_one(s, tol); // w1 = w2 = -1 exactly
        t2 = t1;
    } else {
        t1 = osc_sum(z1, s, tol);
        if (std::abs(s.imag()) < 1e-15 && std::abs(xr.imag()) < 1e-15) {
            t2 = {std::conj(t1.value), t1.est_error};
        } else {
            t2 = osc_sum(w2 * w2, s, tol);
        }
    }
    Complex pref = gamma_fn(1.0 - s) / cpow(Complex(M_PI), 1.0 - s);
    Complex core = Complex(0.0, -1.0) * pref *
                   (std::exp(Complex(0.0, M_PI / 2.0) * s) * (w1 * t1.value) -
                    std::exp(Complex(0.0, -M_PI / 2.0) * s) * (w2 * t2.value));
    double est = std::abs(pref) * (t1.est_error + t2.est_error);
    return {acc + sign * core, Regime::fourier, est};
}

// ---- negative-integer regime -------------------------------------------

ZetaValue negint_eval(long long mneg, Complex x) {
    unsigned m = static_cast<unsigned>(-mneg);
    const auto& poly = euler::euler_poly(m);
    Complex v = 0.5 * horner_complex(poly.coeffs, x);
    return {v, Regime::negint, 1e-15 * (1.0 + std::abs(v))};
}

} // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::series: return "series";
        case Regime::fourier: return "fourier";
        case Regime::negint: return "negint";
        case Regime::auto_: return "auto";
    }
    return "?";
}

ZetaValue zeta_e_ex(const ZetaParams& p) {
    require_admissible_x(p.x);
    if (!(p.tol > 0.0)) throw ArgumentError("zeta_e: tol must be positive");
    long long mneg = 0;
    bool s_is_negint = std::abs(p.s.imag()) <= kImagRealCutoff && near_integer(p.s.real()) &&
                       std::llround(p.s.real()) <= 0;
    if (s_is_negint) mneg = std::llround(p.s.real());

    switch (p.regime) {
        case Regime::negint:
            if (!s_is_negint) {
                throw RegimeError("zeta_e negint: s is not a nonpositive integer");
            }
            return negint_eval(mneg, p.x);
        case Regime::series:
            if (!(p.s.real() > 0.0)) {
                throw RegimeError("zeta_e series: requires Re(s) > 0");
            }
            return series_eval(p.s, p.x, p.tol);
        case Regime::fourier:
            return fourier_eval(p.s, p.x, p.tol, /*allow_fallback=*/false);
        case Regime::auto_:
            break;
    }
    if (s_is_negint) return negint_eval(mneg, p.x);
    if (p.s.real() >= 0.5) return series_eval(p.s, p.x, p.tol);
    return fourier_eval(p.s, p.x, p.tol, /*allow_fallback=*/true);
}

Complex zeta_e(const ZetaParams& p) { return zeta_e_ex(p).value; }

Complex zeta_e(Complex s, Complex x, double tol) {
    return zeta_e_ex({s, x, Regime::auto_, tol}).value;
}

ZetaValue eta_ex(Complex s, double tol) {
    bool s_is_negint = std::abs(s.imag()) <= kImagRealCutoff && near_integer(s.real()) &&
                       std::llround(s.real()) <= 0;
    if (s_is_negint) return zeta_e_ex({s, Complex(1.0), Regime::negint, tol});
    if (s.real() > 0.0) return zeta_e_ex({s, Complex(1.0), Regime::series, tol});
    if (s.real() < 0.0) return zeta_e_ex({s, Complex(1.0), Regime::fourier, tol});
    // Re(s) == 0, s not an integer: the accelerated series still sums the
    // bounded oscillating terms
    return series_eval(s, Complex(1.0), tol);
}

Complex eta(Complex s, double tol) { return eta_ex(s, tol).value; }

double zeta_distribution_residual(Complex s, double x, int n, double tol) {
    if (n < 1 || n % 2 == 0) {
        throw ArgumentError("zeta_distribution_residual: n must be a positive odd integer");
    }
    Complex lhs(0.0);
    double sign = 1.0;
    for (int j = 0; j < n; ++j) {
        lhs += sign * zeta_e(s, Complex(x + static_cast<double>(j) / n), tol);
        sign = -sign;
    }
    lhs *= cpow(Complex(static_cast<double>(n)), -s);
    Complex rhs = zeta_e(s, Complex(n * x), tol);
    return std::abs(lhs - rhs);
}

StieltjesTilde stieltjes_tilde(unsigned k, double x, double tol) {
    if (k > 3) throw ArgumentError("stieltjes_tilde: only k <= 3 is supported");
    StieltjesTilde out;
    out.k = k;
    out.x = x;
    if (k == 0) {
        out.value = zeta_e(Complex(1.0), Complex(x), tol).real();
        return out;
    }
    double inner_tol = std::min(tol * 1e-3, 1e-13);
    auto f = [&](double s) { return zeta_e(Complex(s), Complex(x), inner_tol).real(); };
    auto stencil = [&](double h) {
        switch (k) {
            case 1: return (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
            case 2: return (f(1.0 + h) - 2.0 * f(1.0) + f(1.0 - h)) / (h * h);
            default:
                return (f(1.0 + 2.0 * h) - 2.0 * f(1.0 + h) + 2.0 * f(1.0 - h) -
                        f(1.0 - 2.0 * h)) /
                       (2.0 * h * h * h);
        }
    };
    const double h0 = 1e-2, h1 = 5e-3, h2 = 2.5e-3;
    double d0 = stencil(h0), d1 = stencil(h1), d2 = stencil(h2);
    double r1a = (4.0 * d1 - d0) / 3.0;
    double r1b = (4.0 * d2 - d1) / 3.0;
    double deriv = (16.0 * r1b - r1a) / 15.0;
    out.value = ((k % 2) == 1 ? -deriv : deriv); // g_k = (-1)^k d^k/ds^k at s=1
    out.ladder_spread = std::abs(r1b - r1a);
    return out;
}

double digamma_tilde(double x, double tol) {
    return -zeta_e(Complex(1.0), Complex(x), tol).real();
}

BivariateFn zeta_invfn(Complex s) {
    BivariateFn f;
    const double eval_tol = 1e-12;
    f.eval = [s, eval_tol](const Arg& x, const Arg& y) {
        Complex ys = cpow(Complex(y.v), -s);
        return ys * zeta_e(s, Complex(x.v / y.v), eval_tol);
    };
    f.dx = [s, eval_tol](const Arg& x, const Arg& y) {
        Complex ys = cpow(Complex(y.v), -(s + 1.0));
        return -s * ys * zeta_e(s + 1.0, Complex(x.v / y.v), eval_tol);
    };
    f.excluded = [](const Arg& x, const Arg& y) {
        auto k = ratio_as_integer(x, y);
        return k.has_value() && *k <= 0;
    };
    f.branch_points_in = [](double y, double lo, double hi) {
        std::vector<double> pts;
        for (double k = 0.0;; k += 1.0) {
            double p = -k * y;
            if (p < lo) break;
            if (p <= hi) pts.push_back(p);
            if (k > 1e6) break;
        }
        return pts;
    };
    return f;
}

double zeta_convolution_identity_residual(double alpha, double beta, double x, double y,
                                          double tol) {
    if (!(alpha > 1.0) || !(beta > 1.0)) {
        throw ArgumentError("zeta_convolution_identity_residual: need alpha, beta > 1");
    }
    if (!(y > 0.0)) throw ArgumentError("zeta_convolution_identity_residual: need y > 0");

    auto member = [](double order) {
        BivariateFn base = zeta_invfn(Complex(1.0 - order));
        double scale = 1.0 / gamma_fn(order);
        BivariateFn f;
        f.eval = [base, scale](const Arg& xx, const Arg& yy) {
            return scale * base.eval(xx, yy);
        };
        f.excluded = base.excluded;
        f.branch_points_in = base.branch_points_in;
        return f;
    };
    BivariateFn g = member(alpha);
    BivariateFn h = member(beta);

    quad::QuadratureConfig cfg;
    cfg.abs_tol = std::min(1e-10, tol / 10.0);
    Complex lhs = conv::convolve_at(g, h, x, y, cfg).value;
    Complex rhs = cpow(Complex(y), Complex(alpha + beta - 1.0)) *
                  zeta_e(Complex(1.0 - alpha - beta), Complex(x / y), std::min(1e-12, tol)) /
                  gamma_fn(alpha + beta);
    return std::abs(lhs - rhs);
}

} // namespace altinv::zeta

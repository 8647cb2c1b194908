#include "altinv/euler.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

namespace altinv::euler {

namespace {

std::mutex g_cache_mutex;
std::vector<EulerPoly> g_cache; // g_cache[m] valid for m < g_cache.size()

void require_degree(unsigned m) {
    if (m > kDegreeCap) {
        std::ostringstream os;
        os << "euler: degree " << m << " exceeds cap " << kDegreeCap;
        throw ArgumentError(os.str());
    }
}

void extend_cache(unsigned m) {
    // E_m = x^m - (1/2) sum_{k<m} C(m,k) E_k
    for (unsigned d = static_cast<unsigned>(g_cache.size()); d <= m; ++d) {
        PolyQ acc(d + 1, Rational(0));
        acc[d] = 1;
        for (unsigned k = 0; k < d; ++k) {
            Rational w(binomial(d, k));
            w /= 2;
            const PolyQ& ek = g_cache[k].coeffs;
            for (std::size_t i = 0; i < ek.size(); ++i) acc[i] -= w * ek[i];
        }
        g_cache.push_back(EulerPoly{d, std::move(acc)});
    }
}

} // namespace

const EulerPoly& euler_poly(unsigned m) {
    require_degree(m);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (m >= g_cache.size()) extend_cache(m);
    return g_cache[m];
}

Rational euler_eval(unsigned m, const Rational& x) {
    return poly_eval(euler_poly(m).coeffs, x);
}

double euler_eval(unsigned m, double x) {
    return poly_eval(euler_poly(m).coeffs, x);
}

Rational euler_distribution_residual(unsigned m, const Rational& x, int n) {
    if (n < 1 || n % 2 == 0) {
        throw ArgumentError("euler_distribution_residual: n must be a positive odd integer");
    }
    Rational nn(n);
    Rational sum(0);
    int sign = 1;
    for (int r = 0; r < n; ++r) {
        Rational arg = (x + Rational(r)) / nn;
        Rational term = euler_eval(m, arg);
        sum += sign > 0 ? term : -term;
        sign = -sign;
    }
    Integer npow;
    mpz_pow_ui(npow.get_mpz_t(), Integer(n).get_mpz_t(), m);
    return sum - euler_eval(m, x) / Rational(npow);
}

Rational euler_integral(unsigned m, unsigned n) {
    const PolyQ& em = euler_poly(m).coeffs;
    PolyQ en_reflected = poly_compose_affine(euler_poly(n).coeffs, Rational(-1), Rational(1));
    PolyQ prod = poly_mul(em, en_reflected);
    return poly_definite_integral(prod, Rational(0), Rational(1));
}

Rational euler_integral_closed_form(unsigned m, unsigned n) {
    Rational e1 = euler_eval(m + n + 1, Rational(1));
    Rational denom(binomial(m + n, n) * Integer(m + n + 1));
    return 2 * e1 / denom;
}

PolyQ euler_convolution_bracket(unsigned m, unsigned n) {
    require_degree(m + n + 1);
    const PolyQ& em = euler_poly(m).coeffs;
    const PolyQ& en = euler_poly(n).coeffs;

    // I1(x) = int_0^1 E_m(x-t) E_n(t) dt.
    // E_m(x-t) = sum_k c_k sum_j C(k,j) (-1)^j x^{k-j} t^j, so the t^j
    // coefficient is a polynomial in x; pair against E_n's t^i and use
    // int_0^1 t^{i+j} = 1/(i+j+1).
    PolyQ i1; // polynomial in x
    for (std::size_t k = 0; k < em.size(); ++k) {
        if (em[k] == 0) continue;
        for (std::size_t j = 0; j <= k; ++j) {
            Rational cj = em[k] * Rational(binomial(static_cast<unsigned long>(k),
                                                    static_cast<unsigned long>(j)));
            if (j % 2 == 1) cj = -cj;
            // contribution cj * x^{k-j} * sum_i en[i]/(i+j+1)
            Rational s(0);
            for (std::size_t i = 0; i < en.size(); ++i) {
                s += en[i] / Rational(static_cast<long>(i + j + 1));
            }
            PolyQ mono = poly_shift_degree({cj * s}, k - j);
            i1 = poly_add(i1, mono);
        }
    }

    // I2(x) = int_x^1 (x-t)^m E_n(t) dt. Expand (x-t)^m likewise and use
    // the exact antiderivative in t evaluated at 1 and at x.
    PolyQ i2;
    for (std::size_t j = 0; j <= m; ++j) {
        Rational cj(binomial(m, static_cast<unsigned long>(j)));
        if (j % 2 == 1) cj = -cj;
        // coefficient polynomial cj x^{m-j} times int_x^1 t^{i+j} E-coeff
        for (std::size_t i = 0; i < en.size(); ++i) {
            Rational w = cj * en[i] / Rational(static_cast<long>(i + j + 1));
            // at t=1: w * x^{m-j}
            i2 = poly_add(i2, poly_shift_degree({w}, m - j));
            // at t=x: -w * x^{m-j} * x^{i+j+1} = -w x^{m+i+1}
            i2 = poly_add(i2, poly_shift_degree({-w}, m + i + 1));
        }
    }

    return poly_sub(i1, poly_scale(i2, Rational(2)));
}

Rational euler_convolution_identity_residual(unsigned m, unsigned n, const Rational& x) {
    if (m < 1 || n < 1) {
        throw ArgumentError("euler_convolution_identity_residual: need m, n >= 1");
    }
    PolyQ bracket = euler_convolution_bracket(m, n);
    Rational scale = Rational(binomial(m + n, m) * Integer(m + n + 1)) / 2;
    PolyQ rhs = poly_scale(bracket, scale);
    PolyQ resid = poly_sub(euler_poly(m + n + 1).coeffs, rhs);
    return poly_eval(resid, x);
}

bool reflection_holds(unsigned m) {
    PolyQ reflected = poly_compose_affine(euler_poly(m).coeffs, Rational(-1), Rational(1));
    PolyQ target = euler_poly(m).coeffs;
    if (m % 2 == 1) target = poly_scale(target, Rational(-1));
    return poly_is_zero(poly_sub(reflected, target));
}

bool triangular_identity_holds(unsigned m) {
    PolyQ acc;
    for (unsigned k = 0; k <= m; ++k) {
        acc = poly_add(acc, poly_scale(euler_poly(k).coeffs, Rational(binomial(m, k))));
    }
    acc = poly_add(acc, euler_poly(m).coeffs);
    PolyQ target = poly_shift_degree({Rational(2)}, m);
    return poly_is_zero(poly_sub(acc, target));
}

bool difference_equation_holds(unsigned m) {
    PolyQ shifted = poly_compose_affine(euler_poly(m).coeffs, Rational(1), Rational(1));
    PolyQ acc = poly_add(shifted, euler_poly(m).coeffs);
    PolyQ target = poly_shift_degree({Rational(2)}, m);
    return poly_is_zero(poly_sub(acc, target));
}

static Rational rational_pow(const Rational& base, unsigned e) {
    Rational out(1);
    Rational b = base;
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) out *= b;
        b *= b;
        k >>= 1u;
    }
    return out;
}

BivariateFn euler_invfn(unsigned m) {
    require_degree(m);
    euler_poly(m); // warm the cache before handing out closures
    if (m > 0) euler_poly(m - 1);
    BivariateFn f;
    f.eval = [m](const Arg& x, const Arg& y) {
        if (x.exact && y.exact) {
            Rational v = rational_pow(*y.exact, m) * euler_eval(m, Rational(*x.exact / *y.exact));
            return Complex(to_double(v));
        }
        return Complex(std::pow(y.v, static_cast<int>(m)) * euler_eval(m, x.v / y.v));
    };
    f.eval_exact = [m](const Arg& x, const Arg& y) -> std::optional<Rational> {
        if (!(x.exact && y.exact)) return std::nullopt;
        return rational_pow(*y.exact, m) * euler_eval(m, Rational(*x.exact / *y.exact));
    };
    f.dx = [m](const Arg& x, const Arg& y) {
        if (m == 0) return Complex(0.0);
        if (x.exact && y.exact) {
            Rational v = Rational(static_cast<long>(m)) * rational_pow(*y.exact, m - 1) *
                         euler_eval(m - 1, Rational(*x.exact / *y.exact));
            return Complex(to_double(v));
        }
        return Complex(static_cast<double>(m) * std::pow(y.v, static_cast<int>(m) - 1) *
                       euler_eval(m - 1, x.v / y.v));
    };
    return f;
}

} // namespace altinv::euler

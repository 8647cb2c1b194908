#include "altinv/gamma_tilde.hpp"

#include "altinv/zeta.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

namespace altinv::gammat {

namespace {

void require_not_nonpositive_integer(double x) {
    if (near_integer(x) && std::llround(x) <= 0) {
        std::ostringstream os;
        os << "log_gamma_tilde: x = " << x << " is a nonpositive integer";
        throw DomainError(os.str());
    }
}

double product_term(double x, double k) {
    return std::log(std::abs(1.0 + x / k)) - x / k;
}

} // namespace

GammaTildeValue log_gamma_tilde(double x, double tol) {
    require_not_nonpositive_integer(x);
    if (!(tol > 0.0)) throw ArgumentError("log_gamma_tilde: tol must be positive");

    GammaTildeValue out;
    out.x = x;
    if (x > 0.0) {
        out.sign = 1;
    } else {
        long long negatives = static_cast<long long>(std::floor(-x)); // factors 1+x/k < 0
        out.sign = ((negatives % 2 == 0) ? 1 : -1) * -1;              // extra -1 from 1/x
    }

    double acc = -std::log(std::abs(x)) + x * M_LN2;
    // pairs (2j-1, 2j): signs +,- in the exponent (-1)^{k+1}
    long j = 0;
    long j_min = 8 + 2 * static_cast<long>(std::ceil(std::abs(x)));
    const long j_cap = 200000000L;
    double bound = std::numeric_limits<double>::infinity();
    while (true) {
        ++j;
        double pair = product_term(x, 2.0 * j - 1.0) - product_term(x, 2.0 * j);
        acc += pair;
        if (j >= j_min) {
            bound = 0.5 * std::abs(pair) * static_cast<double>(j);
            if (bound < tol) break;
        }
        if (j > j_cap) throw ConvergenceError("log_gamma_tilde: pair sum did not converge");
    }
    out.log_abs = acc;
    out.truncation_terms = 2 * j;
    out.est_error = 1.5 * bound + 4e-16 * std::abs(acc);
    return out;
}

double recurrence_residual(double x, int n, double tol) {
    if (!(x > 0.0)) throw ArgumentError("recurrence_residual: x must be positive");
    if (n < 1) throw ArgumentError("recurrence_residual: n must be positive");
    double lhs = log_gamma_tilde(x + n, tol).log_abs;
    double rhs;
    if (n % 2 == 0) {
        rhs = log_gamma_tilde(x, tol).log_abs;
        for (int k = n - 2; k >= 0; k -= 2) {
            rhs += std::log(x + k) - std::log(x + k + 1);
        }
    } else {
        rhs = log_gamma_tilde(x + 1, tol).log_abs;
        for (int k = n - 2; k >= 1; k -= 2) {
            rhs += std::log(x + k) - std::log(x + k + 1);
        }
    }
    return std::abs(std::expm1(lhs - rhs));
}

double distribution_residual(double x, int n, double tol) {
    if (n < 1 || n % 2 == 0) {
        throw ArgumentError("distribution_residual: n must be a positive odd integer");
    }
    GammaTildeValue lhs = log_gamma_tilde(n * x, tol);
    double log_sum = -0.5 * std::log(static_cast<double>(n));
    int sign_product = 1;
    double sgn = 1.0;
    for (int j = 0; j < n; ++j) {
        GammaTildeValue v = log_gamma_tilde(x + static_cast<double>(j) / n, tol);
        log_sum += sgn * v.log_abs;
        sign_product *= v.sign; // each factor enters with exponent +-1
        sgn = -sgn;
    }
    if (sign_product != lhs.sign) return std::numeric_limits<double>::infinity();
    return std::abs(lhs.log_abs - log_sum);
}

double double_factorial(long long n) {
    double out = 1.0;
    for (long long k = n; k >= 2; k -= 2) out *= static_cast<double>(k);
    return out;
}

namespace {

std::once_flag g_const_once;
double g_log_gt1 = 0.0; // log Gamma~(1)
double g_log_gt2 = 0.0; // log Gamma~(2)

void init_constants() {
    g_log_gt1 = log_gamma_tilde(1.0, 1e-12).log_abs;
    g_log_gt2 = log_gamma_tilde(2.0, 1e-12).log_abs;
}

} // namespace

BivariateFn gamma_invfn() {
    const double eval_tol = 1e-10;
    BivariateFn f;
    f.eval = [eval_tol](const Arg& x, const Arg& y) {
        std::call_once(g_const_once, init_constants);
        auto k = ratio_as_integer(x, y);
        if (k && *k <= 0) {
            long long m = -*k;
            double ratio = std::log(double_factorial(m - 1)) - std::log(double_factorial(m));
            if (m % 2 == 0) {
                return Complex(ratio + 0.5 * std::log(y.v) + g_log_gt2);
            }
            return Complex(ratio + g_log_gt1 - 1.5 * std::log(y.v));
        }
        GammaTildeValue v = log_gamma_tilde(x.v / y.v, eval_tol);
        return Complex(v.log_abs - 0.5 * std::log(y.v));
    };
    f.dx = [](const Arg& x, const Arg& y) {
        auto k = ratio_as_integer(x, y);
        if (k && *k <= 0) {
            throw DomainError("gamma_invfn: derivative undefined on the branch set");
        }
        return Complex(zeta::digamma_tilde(x.v / y.v, 1e-11) / y.v);
    };
    f.special_branch = [](const Arg& x, const Arg& y) {
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

} // namespace altinv::gammat

#pragma once

// Test-only oracles, deliberately independent of the library's own
// algorithms: the Euler polynomials come from dividing the power series
// 2 e^{xt} / (e^t + 1) rather than the triangular recurrence, and the
// eta values from raw partial sums with repeated averaging.

#include <gmpxx.h>

#include <vector>

namespace oracles {

using Poly = std::vector<mpq_class>; // coefficients in x, ascending

// E_0..E_max via power-series division: write 2 e^{xt} = (e^t + 1) * sum
// c_k(x) t^k and solve for the c_k; then E_m = m! c_m.
inline std::vector<Poly> euler_polys_from_generating_function(unsigned max) {
    mpz_class fact = 1;
    std::vector<mpq_class> inv_fact(2 * max + 2);
    for (unsigned k = 0; k < inv_fact.size(); ++k) {
        if (k > 0) fact *= k;
        inv_fact[k] = mpq_class(1) / mpq_class(fact);
    }
    // numerator n_k(x) = 2 x^k / k!, denominator d_0 = 2, d_k = 1/k!
    std::vector<Poly> c(max + 1);
    for (unsigned k = 0; k <= max; ++k) {
        Poly nk(k + 1, mpq_class(0));
        nk[k] = 2 * inv_fact[k];
        // subtract sum_{j<k} c_j d_{k-j}
        for (unsigned j = 0; j < k; ++j) {
            mpq_class d = inv_fact[k - j];
            for (std::size_t i = 0; i < c[j].size(); ++i) nk[i] -= c[j][i] * d;
        }
        for (auto& q : nk) q /= 2; // divide by d_0
        c[k] = std::move(nk);
    }
    std::vector<Poly> e(max + 1);
    mpz_class mfact = 1;
    for (unsigned m = 0; m <= max; ++m) {
        if (m > 0) mfact *= m;
        Poly em = c[m];
        for (auto& q : em) q *= mpq_class(mfact);
        e[m] = std::move(em);
    }
    return e;
}

// sum_{n>=1} (-1)^{n+1} / n^p by partial sums plus repeated averaging
// (each averaging pass gains roughly one order in 1/N).
inline double alternating_power_sum(int p, int terms = 4000, int averaging = 6) {
    std::vector<double> s(terms);
    double acc = 0.0;
    double sign = 1.0;
    for (int n = 1; n <= terms; ++n) {
        acc += sign / std::pow(static_cast<double>(n), p);
        sign = -sign;
        s[n - 1] = acc;
    }
    std::vector<double> v(s.end() - 64, s.end());
    for (int round = 0; round < averaging; ++round) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
        v.pop_back();
    }
    return v.back();
}

} // namespace oracles

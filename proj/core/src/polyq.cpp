#include "altinv/polyq.hpp"

#include <algorithm>

namespace altinv {

void poly_trim(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_is_zero(const PolyQ& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    poly_trim(out);
    return out;
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    poly_trim(out);
    return out;
}

PolyQ poly_scale(const PolyQ& a, const Rational& s) {
    if (s == 0) return {};
    PolyQ out = a;
    for (Rational& c : out) c *= s;
    return out;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

PolyQ poly_compose_affine(const PolyQ& p, const Rational& a, const Rational& b) {
    // Horner: result = (((c_m) (ax+b) + c_{m-1}) (ax+b) + ...) + c_0
    PolyQ lin = {b, a};
    PolyQ out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        out = poly_mul(out, lin);
        if (out.empty()) out.push_back(*it);
        else out[0] += *it;
    }
    poly_trim(out);
    return out;
}

PolyQ poly_shift_degree(const PolyQ& p, std::size_t k) {
    if (p.empty()) return {};
    PolyQ out(p.size() + k, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i + k] = p[i];
    return out;
}

PolyQ poly_derivative(const PolyQ& p) {
    if (p.size() <= 1) return {};
    PolyQ out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rational(static_cast<long>(i));
    poly_trim(out);
    return out;
}

PolyQ poly_antiderivative(const PolyQ& p) {
    if (p.empty()) return {};
    PolyQ out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] = p[i] / Rational(static_cast<long>(i + 1));
    }
    poly_trim(out);
    return out;
}

Rational poly_eval(const PolyQ& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_eval(const PolyQ& p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Rational poly_definite_integral(const PolyQ& p, const Rational& lo, const Rational& hi) {
    PolyQ anti = poly_antiderivative(p);
    return poly_eval(anti, hi) - poly_eval(anti, lo);
}

} // namespace altinv

#include "altinv/special.hpp"

#include <cmath>

namespace altinv {

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
namespace {
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};
} // namespace

Complex gamma_fn(Complex z) {
    if (std::abs(z.imag()) < 1e-14) {
        double re = z.real();
        if (re <= 0.0 && near_integer(re)) {
            throw DomainError("gamma_fn: pole at nonpositive integer");
        }
    }
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Complex s = std::sin(M_PI * z);
        return M_PI / (s * gamma_fn(1.0 - z));
    }
    Complex zm = z - 1.0;
    Complex acc(kLanczos[0]);
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (zm + static_cast<double>(k));
    Complex t = zm + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, zm + 0.5) * std::exp(-t) * acc;
}

double gamma_fn(double x) { return gamma_fn(Complex(x)).real(); }

Complex cpow(Complex base, Complex e) {
    if (base == Complex(0.0)) {
        if (e.real() > 0.0) return Complex(0.0);
        throw DomainError("cpow: zero base with nonpositive exponent");
    }
    return std::exp(e * std::log(base));
}

std::optional<Complex> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.empty()) return std::nullopt;
    auto parse_real = [](const std::string& t) -> std::optional<double> {
        if (t.empty()) return std::nullopt;
        try {
            std::size_t used = 0;
            double v = std::stod(t, &used);
            if (used != t.size()) return std::nullopt;
            return v;
        } catch (...) {
            return std::nullopt;
        }
    };
    if (s.back() != 'i' && s.back() != 'I') {
        auto v = parse_real(s);
        if (!v) return std::nullopt;
        return Complex(*v);
    }
    s.pop_back(); // drop i
    // split at the last +/- that is not a leading sign or exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary: "i", "-i", "2.5i"
        if (s.empty() || s == "+") return Complex(0.0, 1.0);
        if (s == "-") return Complex(0.0, -1.0);
        auto v = parse_real(s);
        if (!v) return std::nullopt;
        return Complex(0.0, *v);
    }
    auto re = parse_real(s.substr(0, split));
    std::string imtxt = s.substr(split);
    std::optional<double> im;
    if (imtxt == "+") im = 1.0;
    else if (imtxt == "-") im = -1.0;
    else im = parse_real(imtxt);
    if (!re || !im) return std::nullopt;
    return Complex(*re, *im);
}

} // namespace altinv

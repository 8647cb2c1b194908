#include "altinv/rational.hpp"

#include <cctype>

namespace altinv {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string s = text;
    // strip surrounding whitespace
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::nullopt;
    s = s.substr(b, e - b + 1);

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        try {
            Rational r(num + "/" + den, 10); // explicit base: no octal auto-detect
            if (r.get_den() == 0) return std::nullopt;
            r.canonicalize();
            return r;
        } catch (...) {
            return std::nullopt;
        }
    }

    // integer or plain decimal
    std::string digits;
    long frac_digits = -1; // -1: no decimal point seen yet
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    bool any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (frac_digits >= 0) return std::nullopt;
            frac_digits = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (frac_digits >= 0) ++frac_digits;
            any = true;
        } else {
            return std::nullopt; // exponents etc. are not exact literals
        }
    }
    if (!any) return std::nullopt;
    Integer num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    Integer den = 1;
    if (frac_digits > 0) {
        Integer ten = 10;
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(frac_digits));
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace altinv

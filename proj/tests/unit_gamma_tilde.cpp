#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altinv/gamma_tilde.hpp"
#include "altinv/invariance.hpp"
#include "altinv/zeta.hpp"

#include <cmath>

using namespace altinv;
using namespace altinv::gammat;

TEST_CASE("product self-consistency across tolerances") {
    for (double x : {0.35, 1.0, 2.6, -0.6, -3.4}) {
        GammaTildeValue a = log_gamma_tilde(x, 1e-7);
        GammaTildeValue b = log_gamma_tilde(x, 1e-12);
        CHECK(std::abs(a.log_abs - b.log_abs) <= a.est_error + b.est_error);
        CHECK(a.sign == b.sign);
        CHECK(b.truncation_terms > a.truncation_terms);
    }
}

TEST_CASE("sign pattern") {
    CHECK(log_gamma_tilde(0.7, 1e-10).sign == 1);
    CHECK(log_gamma_tilde(3.2, 1e-10).sign == 1);
    CHECK(log_gamma_tilde(-0.5, 1e-10).sign == -1); // single negative factor 1/x
    CHECK(log_gamma_tilde(-1.5, 1e-10).sign == 1);
    CHECK(log_gamma_tilde(-2.5, 1e-10).sign == -1);
}

TEST_CASE("nonpositive integers are excluded") {
    CHECK_THROWS_AS(log_gamma_tilde(0.0, 1e-10), DomainError);
    CHECK_THROWS_AS(log_gamma_tilde(-2.0, 1e-10), DomainError);
    CHECK_THROWS_AS(log_gamma_tilde(-1.0 + 1e-12, 1e-10), DomainError);
    CHECK_NOTHROW(log_gamma_tilde(-1.5, 1e-10));
}

TEST_CASE("log-derivative equals the attached digamma") {
    double h = 1e-4;
    for (double x : {0.5, 1.0, 1.5, 2.3}) {
        auto lg = [&](double u) { return log_gamma_tilde(u, 1e-12).log_abs; };
        double fd = (-lg(x + 2 * h) + 8 * lg(x + h) - 8 * lg(x - h) + lg(x - 2 * h)) / (12 * h);
        CHECK(std::abs(fd - zeta::digamma_tilde(x, 1e-12)) <= 1e-7);
    }
}

TEST_CASE("recurrence ladder") {
    SUBCASE("n = 1 is exact") { CHECK(recurrence_residual(0.7, 1, 1e-11) == 0.0); }
    SUBCASE("two-step recurrence") { CHECK(recurrence_residual(0.7, 2, 1e-11) <= 1e-9); }
    SUBCASE("odd anchor") { CHECK(recurrence_residual(1.2, 3, 1e-11) <= 1e-9); }
    SUBCASE("ladder depth") {
        for (int n = 1; n <= 6; ++n) {
            for (double x : {0.3, 0.7, 1.2}) {
                CHECK(recurrence_residual(x, n, 1e-11) <= 1e-9);
            }
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(recurrence_residual(-0.5, 2, 1e-11), ArgumentError);
        CHECK_THROWS_AS(recurrence_residual(0.5, 0, 1e-11), ArgumentError);
    }
}

TEST_CASE("odd-modulus distribution identity") {
    CHECK(distribution_residual(0.4, 1, 1e-11) == 0.0);
    CHECK(distribution_residual(0.4, 3, 1e-11) <= 1e-8);
    CHECK(distribution_residual(0.26, 5, 1e-11) <= 1e-8);
    CHECK(distribution_residual(1.1, 5, 1e-11) <= 1e-8);
    CHECK_THROWS_AS(distribution_residual(0.4, 2, 1e-11), ArgumentError);
}

TEST_CASE("double factorial convention") {
    CHECK(double_factorial(-1) == 1.0);
    CHECK(double_factorial(0) == 1.0);
    CHECK(double_factorial(1) == 1.0);
    CHECK(double_factorial(5) == 15.0);
    CHECK(double_factorial(6) == 48.0);
}

TEST_CASE("log-gamma member") {
    auto f = gamma_invfn();
    SUBCASE("generic point uses the product") {
        double expected = log_gamma_tilde(0.3 / 2.0, 1e-10).log_abs - 0.5 * std::log(2.0);
        CHECK(f(0.3, 2.0).real() == doctest::Approx(expected).epsilon(1e-9));
    }
    SUBCASE("branch value at ratio zero") {
        // log( (-1)!!/0!! * sqrt(y) * G~(2) ) = log G~(2) at y = 1
        double expected = log_gamma_tilde(2.0, 1e-12).log_abs;
        CHECK(f.eval(Arg(Rational(0)), Arg(Rational(1))).real() ==
              doctest::Approx(expected).epsilon(1e-10));
    }
    SUBCASE("invariance at a generic point") {
        CHECK(invariance_residual(f, Arg(*parse_rational("0.3")), Arg(Rational(1)), 3).residual <=
              1e-8);
    }
    SUBCASE("invariance through the branch set") {
        for (int n : {3, 5, 7}) {
            CHECK(invariance_residual(f, Arg(Rational(-2)), Arg(Rational(1)), n).residual <=
                  1e-7);
            CHECK(invariance_residual(f, Arg(Rational(-1)), Arg(Rational(1)), n).residual <=
                  1e-7);
        }
    }
    SUBCASE("branch points are marked") {
        CHECK(f.is_special(Arg(Rational(0)), Arg(Rational(1))));
        CHECK(f.is_special(Arg(Rational(-3)), Arg(Rational(1))));
        CHECK(!f.is_special(Arg(Rational(1, 2)), Arg(Rational(1))));
    }
}

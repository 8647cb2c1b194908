#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altinv/builtins.hpp"
#include "altinv/combinators.hpp"
#include "altinv/convolution.hpp"
#include "altinv/euler.hpp"
#include "altinv/rational.hpp"
#include "altinv/special.hpp"
#include "altinv/zeta.hpp"

#include <cmath>

using namespace altinv;
using namespace altinv::conv;

static quad::QuadratureConfig cfg;

TEST_CASE("constants convolve to 2x - y") {
    auto one = constant_fn(Complex(1.0));
    for (double y : {0.5, 1.0, 2.0}) {
        for (double x : {-0.8, 0.25, 0.9, 2.7}) { // x outside (0, y] exercises orientation
            auto v = convolve_at(one, one, x, y, cfg);
            CHECK(std::abs(v.value.real() - (2.0 * x - y)) <= 1e-12);
        }
    }
    // 2x - y is itself a member
    auto f = convolve(one, one, cfg);
    CHECK(invariance_residual(f, Arg(0.3), Arg(1.0), 5).residual <= 1e-12);
}

TEST_CASE("zero operand annihilates") {
    auto g = builtins::make_builtin("expfrac:a=2");
    auto v = convolve_at(g, constant_fn(Complex(0.0)), 0.4, 1.0, cfg);
    CHECK(v.value == Complex(0.0));
}

TEST_CASE("normalized polynomial members convolve by degree addition") {
    SUBCASE("reference value at x = 1/4") {
        // (yE_1/(2 1!)) * (yE_1/(2 1!)) at (1/4, 1) = E_3(1/4)/(2 3!)
        auto e1 = translate_scale(euler::euler_invfn(1), 0.5, Arg(0.0), Arg(1.0));
        auto v = convolve_at(e1, e1, 0.25, 1.0, cfg);
        double expected = to_double(euler::euler_eval(3, Rational(1, 4))) / 12.0;
        CHECK(std::abs(v.value.real() - expected) <= 1e-12);
    }
    SUBCASE("residual operation") {
        CHECK(euler_convolution_numeric_residual(1, 1, 0.25, 1.0, cfg) <= 1e-10);
        CHECK(euler_convolution_numeric_residual(3, 2, 0.8, 2.0, cfg) <= 1e-10);
        CHECK(euler_convolution_numeric_residual(2, 2, -0.5, 1.0, cfg) <= 1e-9);
        CHECK(euler_convolution_numeric_residual(2, 3, 2.5, 2.0, cfg) <= 1e-9);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(euler_convolution_numeric_residual(0, 1, 0.3, 1.0, cfg), ArgumentError);
    }
}

TEST_CASE("quadrature matches the exact polynomial route") {
    // polynomial integrands of total degree <= 2*panel_order - 1 are
    // integrated exactly up to roundoff
    for (auto [m, n] : {std::pair<unsigned, unsigned>{1, 1}, {2, 3}, {4, 4}}) {
        for (double x : {0.3, 0.75}) {
            CHECK(euler_convolution_numeric_residual(m, n, x, 1.0, cfg) <= 1e-12);
        }
    }
}

TEST_CASE("bilinearity in the left operand") {
    auto g = builtins::make_builtin("expfrac:a=2");
    auto h = euler::euler_invfn(2);
    auto g3 = translate_scale(g, 3.0, Arg(0.0), Arg(1.0));
    for (double x : {0.2, 0.9}) {
        Complex a = convolve_at(g3, h, x, 1.0, cfg).value;
        Complex b = convolve_at(g, h, x, 1.0, cfg).value;
        CHECK(std::abs(a - 3.0 * b) <= 1e-10);
    }
}

TEST_CASE("closure reports") {
    std::vector<GridPoint> grid;
    for (double x : {0.3, 0.9})
        for (int n : {1, 3}) grid.push_back({Arg(x), Arg(1.0), n});

    SUBCASE("constant pair") {
        auto one = constant_fn(Complex(1.0));
        auto rep = convolution_closure_report(one, one, grid, cfg, 1e-8);
        CHECK(rep.passed);
    }
    SUBCASE("normalized linear pair") {
        auto e1 = translate_scale(euler::euler_invfn(1), 0.5, Arg(0.0), Arg(1.0));
        auto rep = convolution_closure_report(e1, e1, grid, cfg, 1e-8);
        CHECK(rep.passed);
    }
    SUBCASE("polynomial against zeta member") {
        auto e2 = translate_scale(euler::euler_invfn(2), 0.25, Arg(0.0), Arg(1.0));
        auto z = zeta::zeta_invfn(Complex(-1.5));
        auto rep = convolution_closure_report(e2, z, grid, cfg, 1e-6);
        CHECK(rep.passed);
    }
}

TEST_CASE("closure holds pairwise for three registered members on the default grid") {
    std::vector<GridPoint> grid;
    for (const Arg& x : default_grid_xs())
        for (const Arg& y : default_grid_ys())
            for (int n : default_grid_ns()) grid.push_back({x, y, n});
    const char* ids[] = {"const:1", "euler:m=1", "zeta:s=-1.5"};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            auto g = builtins::make_builtin(ids[i]);
            auto h = builtins::make_builtin(ids[j]);
            auto rep = convolution_closure_report(g, h, grid, cfg, 1e-6);
            INFO("pair ", ids[i], " * ", ids[j]);
            CHECK(rep.passed);
            CHECK(rep.num_skipped == 0);
        }
    }
}

TEST_CASE("zeta convolution identity") {
    CHECK(zeta::zeta_convolution_identity_residual(2.0, 2.0, 0.4, 1.0, 1e-8) <= 1e-6);
    CHECK(zeta::zeta_convolution_identity_residual(1.5, 2.5, 0.7, 1.0, 1e-8) <= 1e-6);
    CHECK_THROWS_AS(zeta::zeta_convolution_identity_residual(0.9, 2.0, 0.4, 1.0, 1e-8),
                    ArgumentError);
}

TEST_CASE("beta integral sanity for the gamma plumbing") {
    for (auto [a, b] : {std::pair<double, double>{2.0, 2.0}, {1.5, 2.5}, {3.0, 1.2}}) {
        auto f = [a, b](double t) {
            return Complex(std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0));
        };
        auto r = quad::integrate(f, 0.0, 1.0, cfg, {0.0, 1.0});
        double exact = gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
        CHECK(std::abs(r.value.real() - exact) <= 1e-10);
    }
}

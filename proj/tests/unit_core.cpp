#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altinv/builtins.hpp"
#include "altinv/euler.hpp"
#include "altinv/invariance.hpp"

using namespace altinv;

TEST_CASE("rational parsing") {
    CHECK(to_string(*parse_rational("1/3")) == "1/3");
    CHECK(to_string(*parse_rational("-1.7")) == "-17/10");
    CHECK(to_string(*parse_rational("0.9")) == "9/10");
    CHECK(to_string(*parse_rational("12")) == "12");
    CHECK(!parse_rational("1e-3").has_value());
    CHECK(!parse_rational("abc").has_value());
    CHECK(!parse_rational("1/0").has_value());
}

TEST_CASE("arg exactness propagation") {
    Arg a(*parse_rational("1/3"));
    Arg b(*parse_rational("2/3"));
    Arg c = a + b;
    REQUIRE(c.is_exact());
    CHECK(*c.exact == 1);
    Arg d = a + Arg(0.5); // inexact operand poisons exactness
    CHECK(!d.is_exact());
    CHECK(*as_integer(c) == 1);
    CHECK(!as_integer(a).has_value());
    // detection policy on floats
    CHECK(*as_integer(Arg(3.0 + 4e-10)) == 3);
    CHECK(!as_integer(Arg(3.0 + 1e-6)).has_value());
}

TEST_CASE("floor split") {
    FloorSplit s = floor_split(Arg(*parse_rational("-7/2")));
    CHECK(s.floor == -4);
    CHECK(!s.floor_odd);
    CHECK(to_string(*s.frac.exact) == "1/2");
    FloorSplit u = floor_split(Arg(*parse_rational("-5/2")));
    CHECK(u.floor == -3);
    CHECK(u.floor_odd);
    FloorSplit t = floor_split(Arg(2.0 + 2e-10));
    CHECK(t.floor == 2);
    CHECK(t.snapped);
    CHECK(t.frac.v == 0.0);
}

TEST_CASE("invariance residual: constants collapse") {
    auto one = constant_fn(Complex(1.0));
    auto r = invariance_residual(one, Arg(0.3), Arg(1.0), 5);
    CHECK(r.residual == 0.0);
    CHECK(r.lhs == Complex(1.0));
}

TEST_CASE("invariance residual: linear polynomial member is exact") {
    // y E_1(x/y) = x - y/2
    auto f = euler::euler_invfn(1);
    auto r = invariance_residual(f, Arg(*parse_rational("0.4")), Arg(Rational(1)), 3);
    CHECK(r.residual == 0.0);
}

TEST_CASE("invariance residual: f(x,y)=x is not a member") {
    auto f = coordinate_fn();
    auto r = invariance_residual(f, Arg(1.0), Arg(1.0), 3);
    CHECK(r.lhs == Complex(2.0)); // 1 - 2 + 3
    CHECK(r.rhs == Complex(1.0));
    CHECK(r.residual == doctest::Approx(1.0));
}

TEST_CASE("invariance residual argument validation") {
    auto one = constant_fn(Complex(1.0));
    CHECK_THROWS_AS(invariance_residual(one, Arg(0.0), Arg(1.0), 2), ArgumentError);
    CHECK_THROWS_AS(invariance_residual(one, Arg(0.0), Arg(1.0), 0), ArgumentError);
    CHECK_THROWS_AS(invariance_residual(one, Arg(0.0), Arg(1.0), -3), ArgumentError);
    CHECK_THROWS_AS(invariance_residual(one, Arg(0.0), Arg(-1.0), 3), ArgumentError);
}

TEST_CASE("check_invariance over grids") {
    SUBCASE("geometric member passes") {
        auto f = builtins::make_builtin("expfrac:a=2");
        auto rep = check_invariance(f, {Arg(0.1), Arg(0.9)}, {Arg(1.0)}, {1, 3, 5}, 1e-10);
        CHECK(rep.passed);
        CHECK(rep.entries.size() == 6);
    }
    SUBCASE("zero function passes with zero residual") {
        auto rep =
            check_invariance(constant_fn(Complex(0.0)), {Arg(0.5)}, {Arg(1.0)}, {1, 3}, 1e-15);
        CHECK(rep.passed);
        CHECK(rep.max_residual == 0.0);
    }
    SUBCASE("negative control fails") {
        auto rep = check_invariance(coordinate_fn(), {Arg(1.0)}, {Arg(1.0)}, {3}, 1e-10);
        CHECK(!rep.passed);
        CHECK(rep.max_residual == doctest::Approx(1.0));
    }
    SUBCASE("empty grid is rejected") {
        CHECK_THROWS_AS(check_invariance(coordinate_fn(), {}, {Arg(1.0)}, {3}, 1e-10),
                        ArgumentError);
    }
    SUBCASE("entries are sorted by (x, y, n)") {
        auto rep = check_invariance(constant_fn(Complex(1.0)), {Arg(0.9), Arg(0.1)},
                                    {Arg(2.0), Arg(1.0)}, {3, 1}, 1e-10);
        for (std::size_t i = 1; i < rep.entries.size(); ++i) {
            const auto& a = rep.entries[i - 1];
            const auto& b = rep.entries[i];
            bool ordered = a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.n < b.n)));
            CHECK(ordered);
        }
    }
}

TEST_CASE("skips are recorded for excluded points") {
    auto f = builtins::make_builtin("zeta:s=2"); // excludes x/y in Z_{<=0}
    auto rep = check_invariance(f, {Arg(Rational(-2))}, {Arg(Rational(1))}, {1, 3}, 1e-8);
    CHECK(rep.num_skipped == 2);
    for (const auto& e : rep.entries) {
        CHECK(e.skipped);
        CHECK(!e.skip_reason.empty());
    }
}

TEST_CASE("cross symmetry") {
    auto f = euler::euler_invfn(1);
    SUBCASE("m == n vanishes identically") {
        CHECK(cross_symmetry_residual(f, Arg(0.7), Arg(1.3), 5, 5) == 0.0);
    }
    SUBCASE("odd pair on a polynomial member") {
        CHECK(cross_symmetry_residual(f, Arg(*parse_rational("0.2")), Arg(Rational(1)), 3, 5) <=
              1e-12);
    }
    SUBCASE("n = 1 reduces to the invariance residual") {
        auto direct = invariance_residual(f, Arg(0.2), Arg(1.0), 3).residual;
        CHECK(cross_symmetry_residual(f, Arg(0.2), Arg(1.0), 3, 1) ==
              doctest::Approx(direct).epsilon(1e-12));
    }
    SUBCASE("even modulus rejected") {
        CHECK_THROWS_AS(cross_symmetry_residual(f, Arg(0.2), Arg(1.0), 2, 3), ArgumentError);
    }
}

TEST_CASE("boundary characterization probe") {
    SUBCASE("constant") {
        CHECK(boundary_characterization_residual(constant_fn(Complex(3.0)), Arg(0.1), Arg(1.0),
                                                 1e-6) == 0.0);
    }
    SUBCASE("linear member: both sides approach 2x") {
        auto f = euler::euler_invfn(1);
        CHECK(boundary_characterization_residual(f, Arg(0.3), Arg(1.0), 1e-6) <= 2e-6);
    }
    SUBCASE("geometric member approaches a^x") {
        auto f = builtins::make_builtin("expfrac:a=2");
        CHECK(boundary_characterization_residual(f, Arg(0.3), Arg(1.0), 1e-3) <= 1e-3);
    }
    SUBCASE("bad a_small") {
        CHECK_THROWS_AS(
            boundary_characterization_residual(constant_fn(Complex(1.0)), Arg(0.1), Arg(1.0), 2.0),
            ArgumentError);
    }
}

TEST_CASE("default grid shape") {
    CHECK(default_grid_xs().size() == 7);
    CHECK(default_grid_ys().size() == 3);
    CHECK(default_grid_ns() == std::vector<int>{1, 3, 5, 7});
    for (const Arg& x : default_grid_xs()) CHECK(x.is_exact());
}

TEST_CASE("report is identical across thread counts") {
    auto f = builtins::make_builtin("expfrac:a=2");
    auto run = [&] {
        return check_invariance(f, default_grid_xs(), default_grid_ys(), default_grid_ns(),
                                1e-10);
    };
    setenv("ALTINV_THREADS", "1", 1);
    auto serial = run();
    setenv("ALTINV_THREADS", "4", 1);
    auto parallel = run();
    unsetenv("ALTINV_THREADS");
    REQUIRE(serial.entries.size() == parallel.entries.size());
    for (std::size_t i = 0; i < serial.entries.size(); ++i) {
        CHECK(serial.entries[i].x == parallel.entries[i].x);
        CHECK(serial.entries[i].n == parallel.entries[i].n);
        CHECK(serial.entries[i].lhs == parallel.entries[i].lhs);
        CHECK(serial.entries[i].residual == parallel.entries[i].residual);
    }
}

#include "altinv/invariance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace altinv {

namespace detail {

static unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ALTINV_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = std::min<std::size_t>(thread_cap(), count);
    if (workers <= 1 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace detail

static void require_odd_modulus(int n) {
    if (n < 1 || n % 2 == 0) {
        std::ostringstream os;
        os << "modulus n must be a positive odd integer, got " << n;
        throw ArgumentError(os.str());
    }
}

// Checks admissibility of one evaluation point; throws DomainError with a
// reason usable as a skip message.
static void require_admissible(const BivariateFn& f, const Arg& x, const Arg& y) {
    if (f.is_excluded(x, y)) {
        std::ostringstream os;
        os << "excluded point (" << x.v << ", " << y.v << ")";
        throw DomainError(os.str());
    }
    if (f.is_special(x, y) && !(x.is_exact() && y.is_exact())) {
        std::ostringstream os;
        os << "branch-sensitive point (" << x.v << ", " << y.v << ") without exact input";
        throw DomainError(os.str());
    }
}

ResidualTriple invariance_residual(const BivariateFn& f, const Arg& x, const Arg& y, int n) {
    require_odd_modulus(n);
    if (!(y.v > 0.0)) throw ArgumentError("invariance_residual: y must be positive");

    Arg ny = y * Arg(n);
    require_admissible(f, x, y);
    for (int r = 0; r < n; ++r) {
        require_admissible(f, x + Arg(r) * y, ny);
    }

    if (f.eval_exact && x.is_exact() && y.is_exact()) {
        // exact cancellation path for members with rational values
        Rational lhs_r(0);
        bool all_exact = true;
        int sgn = 1;
        for (int r = 0; r < n && all_exact; ++r) {
            auto v = f.eval_exact(x + Arg(r) * y, ny);
            if (!v) {
                all_exact = false;
                break;
            }
            lhs_r += sgn > 0 ? *v : Rational(-*v);
            sgn = -sgn;
        }
        if (all_exact) {
            if (auto rhs_r = f.eval_exact(x, y)) {
                Rational diff = lhs_r - *rhs_r;
                return {Complex(to_double(lhs_r)), Complex(to_double(*rhs_r)),
                        std::abs(to_double(diff))};
            }
        }
    }

    Complex lhs(0.0);
    double sign = 1.0;
    for (int r = 0; r < n; ++r) {
        lhs += sign * f.eval(x + Arg(r) * y, ny);
        sign = -sign;
    }
    Complex rhs = f.eval(x, y);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

InvarianceReport check_invariance(const BivariateFn& f,
                                  std::vector<Arg> xs,
                                  std::vector<Arg> ys,
                                  std::vector<int> ns,
                                  double tol) {
    if (xs.empty() || ys.empty() || ns.empty()) {
        throw ArgumentError("check_invariance: empty grid");
    }
    std::sort(xs.begin(), xs.end(), [](const Arg& a, const Arg& b) { return a.v < b.v; });
    std::sort(ys.begin(), ys.end(), [](const Arg& a, const Arg& b) { return a.v < b.v; });
    std::sort(ns.begin(), ns.end());
    std::vector<GridPoint> grid;
    grid.reserve(xs.size() * ys.size() * ns.size());
    for (const Arg& x : xs)
        for (const Arg& y : ys)
            for (int n : ns) grid.push_back({x, y, n});
    return check_invariance(f, std::move(grid), tol);
}

InvarianceReport check_invariance(const BivariateFn& f, std::vector<GridPoint> grid, double tol) {
    if (grid.empty()) throw ArgumentError("check_invariance: empty grid");
    if (!(tol > 0.0)) throw ArgumentError("check_invariance: tol must be positive");
    for (const GridPoint& g : grid) require_odd_modulus(g.n);

    std::stable_sort(grid.begin(), grid.end(), [](const GridPoint& a, const GridPoint& b) {
        if (a.x.v != b.x.v) return a.x.v < b.x.v;
        if (a.y.v != b.y.v) return a.y.v < b.y.v;
        return a.n < b.n;
    });

    InvarianceReport report;
    report.tolerance = tol;
    report.entries.resize(grid.size());

    detail::parallel_for_index(grid.size(), [&](std::size_t i) {
        const GridPoint& g = grid[i];
        InvarianceEntry& e = report.entries[i];
        e.x = g.x.v;
        e.y = g.y.v;
        e.n = g.n;
        try {
            ResidualTriple t = invariance_residual(f, g.x, g.y, g.n);
            e.lhs = t.lhs;
            e.rhs = t.rhs;
            e.residual = t.residual;
        } catch (const DomainError& err) {
            e.skipped = true;
            e.skip_reason = err.what();
        }
    });

    for (const InvarianceEntry& e : report.entries) {
        if (e.skipped) {
            ++report.num_skipped;
        } else {
            report.max_residual = std::max(report.max_residual, e.residual);
        }
    }
    report.passed = report.max_residual <= tol;
    return report;
}

double cross_symmetry_residual(const BivariateFn& f, const Arg& x, const Arg& y, int m, int n) {
    require_odd_modulus(m);
    require_odd_modulus(n);
    Arg ny = y * Arg(n);
    Arg my = y * Arg(m);
    Complex a(0.0), b(0.0);
    double sign = 1.0;
    for (int r = 0; r < n; ++r) {
        Arg xr = x + Arg(r * m) * y;
        require_admissible(f, xr, ny);
        a += sign * f.eval(xr, ny);
        sign = -sign;
    }
    sign = 1.0;
    for (int r = 0; r < m; ++r) {
        Arg xr = x + Arg(r * n) * y;
        require_admissible(f, xr, my);
        b += sign * f.eval(xr, my);
        sign = -sign;
    }
    return std::abs(a - b);
}

double boundary_characterization_residual(const BivariateFn& f, const Arg& x, const Arg& y,
                                          double a_small) {
    if (!(a_small > 0.0) || !(a_small < y.v)) {
        throw ArgumentError("boundary_characterization_residual: need 0 < a_small < y");
    }
    Arg a(a_small);
    require_admissible(f, x + y, y);
    require_admissible(f, x, y);
    require_admissible(f, x + a, a);
    require_admissible(f, x, a);
    Complex big = f.eval(x + y, y) + f.eval(x, y);
    Complex small = f.eval(x + a, a) + f.eval(x, a);
    return std::abs(big - small);
}

static Arg exact_decimal(const char* s) {
    auto r = parse_rational(s);
    return Arg(*r);
}

std::vector<Arg> default_grid_xs() {
    return {exact_decimal("-1.7"), exact_decimal("-0.4"), exact_decimal("0.3"),
            exact_decimal("0.5"),  exact_decimal("0.9"),  exact_decimal("1.6"),
            exact_decimal("3.2")};
}

std::vector<Arg> default_grid_ys() {
    return {exact_decimal("0.5"), exact_decimal("1"), exact_decimal("2")};
}

std::vector<int> default_grid_ns() { return {1, 3, 5, 7}; }

} // namespace altinv

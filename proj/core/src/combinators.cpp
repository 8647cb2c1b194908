#include "altinv/combinators.hpp"

#include <cmath>

namespace altinv {

BivariateFn translate_scale(const BivariateFn& f, double a, const Arg& b, const Arg& c) {
    if (!(c.v > 0.0)) throw ArgumentError("translate_scale: c must be positive");
    BivariateFn out;
    out.eval = [f, a, b, c](const Arg& x, const Arg& y) {
        return a * f.eval(b + c * x, c * y);
    };
    if (f.dx) {
        out.dx = [f, a, b, c](const Arg& x, const Arg& y) {
            return a * c.v * f.dx(b + c * x, c * y);
        };
    }
    if (f.excluded) {
        out.excluded = [f, b, c](const Arg& x, const Arg& y) {
            return f.excluded(b + c * x, c * y);
        };
    }
    if (f.special_branch) {
        out.special_branch = [f, b, c](const Arg& x, const Arg& y) {
            return f.special_branch(b + c * x, c * y);
        };
    }
    if (f.branch_points_in) {
        out.branch_points_in = [f, b, c](double y, double lo, double hi) {
            std::vector<double> pts = f.branch_points_in(c.v * y, b.v + c.v * lo, b.v + c.v * hi);
            for (double& p : pts) p = (p - b.v) / c.v;
            return pts;
        };
    }
    return out;
}

// True when (x, y) is within distance h (in x) of an excluded or
// branch-sensitive point of f.
static bool near_branch(const BivariateFn& f, const Arg& x, const Arg& y, double h) {
    if (f.is_excluded(x, y) || f.is_special(x, y)) return true;
    if (f.branch_points_in) {
        auto pts = f.branch_points_in(y.v, x.v - h, x.v + h);
        if (!pts.empty()) return true;
    }
    return false;
}

BivariateFn partial_x(const BivariateFn& f) {
    BivariateFn out;
    // the derivative inherits f's inadmissible set; branch values of f are
    // not differentiable points
    out.excluded = [f](const Arg& x, const Arg& y) {
        return f.is_excluded(x, y) || f.is_special(x, y);
    };
    out.branch_points_in = f.branch_points_in;

    if (f.dx) {
        out.eval = f.dx;
        return out;
    }
    out.eval = [f](const Arg& x, const Arg& y) {
        double h = std::max(1e-5, 1e-5 * std::abs(x.v));
        if (near_branch(f, x, y, 2.0 * h)) {
            throw DomainError("partial_x: finite-difference stencil crosses a branch point");
        }
        auto stencil = [&](double step) {
            Complex fp2 = f.eval(Arg(x.v + 2.0 * step), y);
            Complex fp1 = f.eval(Arg(x.v + step), y);
            Complex fm1 = f.eval(Arg(x.v - step), y);
            Complex fm2 = f.eval(Arg(x.v - 2.0 * step), y);
            return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * step);
        };
        // one Richardson step on the O(h^4) stencil
        Complex d_h = stencil(h);
        Complex d_h2 = stencil(h / 2.0);
        return (16.0 * d_h2 - d_h) / 15.0;
    };
    return out;
}

BivariateFn reflect(const BivariateFn& f) {
    BivariateFn out;
    out.eval = [f](const Arg& x, const Arg& y) { return f.eval(y - x, y); };
    if (f.dx) {
        out.dx = [f](const Arg& x, const Arg& y) { return -f.dx(y - x, y); };
    }
    if (f.excluded) {
        out.excluded = [f](const Arg& x, const Arg& y) { return f.excluded(y - x, y); };
    }
    if (f.special_branch) {
        out.special_branch = [f](const Arg& x, const Arg& y) {
            return f.special_branch(y - x, y);
        };
    }
    if (f.branch_points_in) {
        out.branch_points_in = [f](double y, double lo, double hi) {
            std::vector<double> pts = f.branch_points_in(y, y - hi, y - lo);
            for (double& p : pts) p = y - p;
            return pts;
        };
    }
    return out;
}

static BivariateFn component_part(const BivariateFn& f, bool real) {
    BivariateFn out;
    out.eval = [f, real](const Arg& x, const Arg& y) {
        Complex v = f.eval(x, y);
        return Complex(real ? v.real() : v.imag());
    };
    if (f.dx) {
        out.dx = [f, real](const Arg& x, const Arg& y) {
            Complex v = f.dx(x, y);
            return Complex(real ? v.real() : v.imag());
        };
    }
    out.excluded = f.excluded;
    out.special_branch = f.special_branch;
    out.branch_points_in = f.branch_points_in;
    return out;
}

BivariateFn real_part(const BivariateFn& f) { return component_part(f, true); }
BivariateFn imag_part(const BivariateFn& f) { return component_part(f, false); }

std::pair<BivariateFn, BivariateFn> sign_fractional_lift(const BivariateFn& f, const Arg& t) {
    BivariateFn f1;
    auto wrap = [f, t](const Arg& x, const Arg& y) {
        FloorSplit s = floor_split((t + x) / y);
        Arg xw = (s.frac.exact && *s.frac.exact == 0) ? Arg(Rational(0)) : y * s.frac;
        if (f.is_excluded(xw, y)) {
            throw DomainError("sign_fractional_lift: wrapped point is excluded");
        }
        if (f.is_special(xw, y) && !(xw.is_exact() && y.is_exact())) {
            throw DomainError(
                "sign_fractional_lift: wrapped point is branch-sensitive without exact input");
        }
        struct Wrapped {
            Arg x;
            double sign;
        };
        return Wrapped{xw, s.floor_odd ? -1.0 : 1.0};
    };
    f1.eval = [f, wrap](const Arg& x, const Arg& y) {
        auto w = wrap(x, y);
        return w.sign * f.eval(w.x, y);
    };
    if (f.dx) {
        f1.dx = [f, wrap](const Arg& x, const Arg& y) {
            auto w = wrap(x, y);
            return w.sign * f.dx(w.x, y);
        };
    }
    // branch-sensitive on the lattice (t+x)/y integer, and wherever f is
    // after wrapping
    f1.special_branch = [f, t](const Arg& x, const Arg& y) {
        Arg u = (t + x) / y;
        if (as_integer(u)) return true;
        FloorSplit s = floor_split(u);
        Arg xw = y * s.frac;
        return f.is_special(xw, y) || f.is_excluded(xw, y);
    };
    f1.branch_points_in = [t](double y, double lo, double hi) {
        std::vector<double> pts;
        double k0 = std::ceil((t.v + lo) / y);
        for (double k = k0; k * y - t.v <= hi; k += 1.0) pts.push_back(k * y - t.v);
        return pts;
    };
    BivariateFn f2 = reflect(f1);
    return {std::move(f1), std::move(f2)};
}

std::pair<BivariateFn, BivariateFn> odd_fourier_series(std::function<double(double)> h,
                                                       int terms) {
    if (terms <= 0) throw ArgumentError("odd_fourier_series: terms must be positive");
    auto make = [h, terms](bool cosine) {
        BivariateFn out;
        out.eval = [h, terms, cosine](const Arg& x, const Arg& y) {
            double acc = 0.0;
            for (int m = 0; m < terms; ++m) {
                double odd = 2.0 * m + 1.0;
                double w = h(odd / y.v);
                double phase = M_PI * odd * x.v / y.v;
                acc += w * (cosine ? std::cos(phase) : std::sin(phase));
            }
            return Complex(acc / y.v);
        };
        out.dx = [h, terms, cosine](const Arg& x, const Arg& y) {
            double acc = 0.0;
            for (int m = 0; m < terms; ++m) {
                double odd = 2.0 * m + 1.0;
                double w = h(odd / y.v) * M_PI * odd / y.v;
                double phase = M_PI * odd * x.v / y.v;
                acc += w * (cosine ? -std::sin(phase) : std::cos(phase));
            }
            return Complex(acc / y.v);
        };
        return out;
    };
    return {make(true), make(false)};
}

double odd_fourier_geometric_tail(double r, double y, int terms) {
    if (!(r > 0.0 && r < 1.0)) throw ArgumentError("odd_fourier_geometric_tail: need 0 < r < 1");
    return std::pow(r, (2.0 * terms + 1.0) / y) / ((1.0 - std::pow(r, 2.0 / y)) * y);
}

} // namespace altinv

#include "altinv/builtins.hpp"

#include "altinv/euler.hpp"
#include "altinv/gamma_tilde.hpp"
#include "altinv/special.hpp"
#include "altinv/zeta.hpp"

#include <cmath>
#include <sstream>

namespace altinv::builtins {

namespace {

const std::vector<std::string>& positional_params(const std::string& name) {
    static const std::map<std::string, std::vector<std::string>> kOrder = {
        {"euler", {"m"}},         {"zeta", {"s"}},
        {"parity", {"a"}},        {"expfrac", {"a"}},
        {"trig-expfrac", {"r", "theta"}}, {"geom", {"r"}},
        {"const", {"c"}},         {"gamma-log", {}},
        {"log-tan", {}},          {"csc", {}},
        {"xcoord", {}},
    };
    auto it = kOrder.find(name);
    if (it == kOrder.end()) {
        throw ArgumentError("unknown builtin family: " + name);
    }
    return it->second;
}

std::string find_param(const BuiltinId& id, const std::string& key) {
    for (const auto& [k, v] : id.params) {
        if (k == key) return v;
    }
    throw ArgumentError("builtin " + id.name + ": missing parameter " + key);
}

Arg arg_param(const BuiltinId& id, const std::string& key) {
    std::string raw = find_param(id, key);
    if (auto r = parse_rational(raw)) return Arg(*r);
    try {
        std::size_t used = 0;
        double v = std::stod(raw, &used);
        if (used == raw.size()) return Arg(v);
    } catch (...) {
    }
    throw ArgumentError("builtin " + id.name + ": bad numeric parameter " + key + "=" + raw);
}

double double_param(const BuiltinId& id, const std::string& key) {
    return arg_param(id, key).v;
}

long long int_param(const BuiltinId& id, const std::string& key) {
    Arg a = arg_param(id, key);
    auto k = as_integer(a);
    if (!k) throw ArgumentError("builtin " + id.name + ": parameter " + key + " must be integer");
    return *k;
}

Complex complex_param(const BuiltinId& id, const std::string& key) {
    std::string raw = find_param(id, key);
    auto v = parse_complex(raw);
    if (!v) throw ArgumentError("builtin " + id.name + ": bad complex parameter " + key);
    return *v;
}

// lattice enumerator x = base + k*y, k over Z intersected with [lo, hi]
std::vector<double> lattice_points(double base, double y, double lo, double hi) {
    std::vector<double> pts;
    double k0 = std::ceil((lo - base) / y);
    for (double k = k0; base + k * y <= hi; k += 1.0) pts.push_back(base + k * y);
    return pts;
}

BivariateFn make_log_tan() {
    BivariateFn f;
    f.eval = [](const Arg& x, const Arg& y) {
        auto k = ratio_as_integer(x, y);
        if (k) {
            double parity = (*k % 2 == 0) ? 1.0 : -1.0;
            return Complex(-parity * std::log(y.v));
        }
        return Complex(std::log(std::abs(std::tan(0.5 * M_PI * x.v / y.v))));
    };
    f.dx = [](const Arg& x, const Arg& y) {
        if (ratio_as_integer(x, y)) {
            throw DomainError("log-tan: derivative undefined on the integer lattice");
        }
        return Complex(M_PI / y.v / std::sin(M_PI * x.v / y.v));
    };
    f.special_branch = [](const Arg& x, const Arg& y) {
        return ratio_as_integer(x, y).has_value();
    };
    f.branch_points_in = [](double y, double lo, double hi) {
        return lattice_points(0.0, y, lo, hi);
    };
    return f;
}

BivariateFn make_csc() {
    BivariateFn f;
    f.eval = [](const Arg& x, const Arg& y) {
        if (ratio_as_integer(x, y)) return Complex(0.0);
        return Complex(1.0 / (y.v * std::sin(M_PI * x.v / y.v)));
    };
    f.dx = [](const Arg& x, const Arg& y) {
        if (ratio_as_integer(x, y)) {
            throw DomainError("csc: derivative undefined on the integer lattice");
        }
        double u = M_PI * x.v / y.v;
        return Complex(-M_PI / (y.v * y.v) * std::cos(u) / (std::sin(u) * std::sin(u)));
    };
    f.special_branch = [](const Arg& x, const Arg& y) {
        return ratio_as_integer(x, y).has_value();
    };
    f.branch_points_in = [](double y, double lo, double hi) {
        return lattice_points(0.0, y, lo, hi);
    };
    return f;
}

BivariateFn make_parity(const Arg& a) {
    BivariateFn f;
    f.eval = [a](const Arg& x, const Arg& y) {
        auto k = as_integer((a - x) / y);
        if (!k) return Complex(0.0);
        return Complex((*k % 2 == 0) ? 1.0 : -1.0);
    };
    f.dx = [a](const Arg& x, const Arg& y) {
        if (as_integer((a - x) / y)) {
            throw DomainError("parity: derivative undefined on the lattice");
        }
        return Complex(0.0);
    };
    f.special_branch = [a](const Arg& x, const Arg& y) {
        return as_integer((a - x) / y).has_value();
    };
    f.branch_points_in = [a](double y, double lo, double hi) {
        return lattice_points(a.v, y, lo, hi); // {a - k y} = {a + k y} as a set
    };
    return f;
}

BivariateFn make_expfrac(double a) {
    if (!(a > 0.0) || a == 1.0) throw ArgumentError("expfrac: need a > 0, a != 1");
    double L = std::log(a);
    auto eval = [L](const Arg& x, const Arg& y) {
        double yl = y.v * L;
        if (yl > 50.0) {
            return Complex(std::exp((x.v - y.v) * L) / (1.0 + std::exp(-yl)));
        }
        return Complex(std::exp(x.v * L) / (std::exp(yl) + 1.0));
    };
    BivariateFn f;
    f.eval = eval;
    f.dx = [L, eval](const Arg& x, const Arg& y) { return L * eval(x, y); };
    return f;
}

BivariateFn make_trig_expfrac(double r, double theta) {
    if (!(r > 0.0) || r == 1.0) throw ArgumentError("trig-expfrac: need r > 0, r != 1");
    Complex w(std::log(r), theta); // log of the base r e^{i theta}
    auto eval = [w](const Arg& x, const Arg& y) {
        if (y.v * w.real() > 50.0) {
            return std::exp((x.v - y.v) * w) / (1.0 + std::exp(-y.v * w));
        }
        return std::exp(x.v * w) / (std::exp(y.v * w) + 1.0);
    };
    BivariateFn f;
    f.eval = eval;
    f.dx = [w, eval](const Arg& x, const Arg& y) { return w * eval(x, y); };
    return f;
}

BivariateFn make_geom(double r) {
    if (!(r > 0.0 && r < 1.0)) throw ArgumentError("geom: need 0 < r < 1");
    double L = std::log(r);
    BivariateFn f;
    f.eval = [L](const Arg& x, const Arg& y) {
        Complex u = std::exp(Complex(L / y.v, M_PI * x.v / y.v));
        return u / (y.v * (1.0 - u * u));
    };
    f.dx = [L](const Arg& x, const Arg& y) {
        Complex u = std::exp(Complex(L / y.v, M_PI * x.v / y.v));
        Complex one_mu2 = 1.0 - u * u;
        return Complex(0.0, M_PI / y.v) * u * (1.0 + u * u) / (y.v * one_mu2 * one_mu2);
    };
    return f;
}

} // namespace

BuiltinId parse_builtin_id(const std::string& text) {
    BuiltinId id;
    auto colon = text.find(':');
    id.name = text.substr(0, colon);
    if (id.name.empty()) throw ArgumentError("empty builtin id");
    const auto& order = positional_params(id.name);
    if (colon == std::string::npos) {
        if (!order.empty()) {
            throw ArgumentError("builtin " + id.name + ": parameters required");
        }
        return id;
    }
    std::string rest = text.substr(colon + 1);
    std::size_t pos_index = 0;
    std::stringstream ss(rest);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        auto eq = piece.find('=');
        if (eq == std::string::npos) {
            if (pos_index >= order.size()) {
                throw ArgumentError("builtin " + id.name + ": too many positional parameters");
            }
            id.params.emplace_back(order[pos_index++], piece);
        } else {
            id.params.emplace_back(piece.substr(0, eq), piece.substr(eq + 1));
        }
    }
    return id;
}

std::string to_string(const BuiltinId& id) {
    std::string out = id.name;
    for (std::size_t i = 0; i < id.params.size(); ++i) {
        out += (i == 0 ? ":" : ",");
        out += id.params[i].first + "=" + id.params[i].second;
    }
    return out;
}

BivariateFn make_builtin(const BuiltinId& id) {
    if (id.name == "euler") {
        long long m = int_param(id, "m");
        if (m < 0) throw ArgumentError("euler: m must be nonnegative");
        return euler::euler_invfn(static_cast<unsigned>(m));
    }
    if (id.name == "zeta") return zeta::zeta_invfn(complex_param(id, "s"));
    if (id.name == "gamma-log") return gammat::gamma_invfn();
    if (id.name == "log-tan") return make_log_tan();
    if (id.name == "csc") return make_csc();
    if (id.name == "parity") return make_parity(arg_param(id, "a"));
    if (id.name == "expfrac") return make_expfrac(double_param(id, "a"));
    if (id.name == "trig-expfrac") {
        return make_trig_expfrac(double_param(id, "r"), double_param(id, "theta"));
    }
    if (id.name == "geom") return make_geom(double_param(id, "r"));
    if (id.name == "const") return constant_fn(complex_param(id, "c"));
    if (id.name == "xcoord") return coordinate_fn();
    throw ArgumentError("unknown builtin family: " + id.name);
}

BivariateFn make_builtin(const std::string& id_text) {
    return make_builtin(parse_builtin_id(id_text));
}

std::vector<BuiltinId> default_registry() {
    std::vector<BuiltinId> out;
    for (const char* text :
         {"euler:m=1", "euler:m=2", "euler:m=3", "euler:m=4", "zeta:s=2", "zeta:s=-1.5",
          "gamma-log", "log-tan", "csc", "parity:a=0", "expfrac:a=2", "expfrac:a=1/2",
          "trig-expfrac:r=2,theta=0.5", "geom:r=0.5", "const:c=1"}) {
        out.push_back(parse_builtin_id(text));
    }
    return out;
}

double default_tolerance(const BuiltinId& id) {
    if (id.name == "zeta" || id.name == "gamma-log") return 1e-8;
    return 1e-12;
}

std::vector<GridPoint> default_registry_grid() {
    std::vector<GridPoint> grid;
    for (const Arg& x : default_grid_xs())
        for (const Arg& y : default_grid_ys())
            for (int n : default_grid_ns()) grid.push_back({x, y, n});
    const std::pair<int, int> branch_pairs[] = {{1, 1}, {-2, 1}, {3, 2}};
    for (auto [px, py] : branch_pairs)
        for (int n : default_grid_ns())
            grid.push_back({Arg(Rational(px)), Arg(Rational(py)), n});
    return grid;
}

std::map<std::string, InvarianceReport> registry_verify_all(const std::vector<GridPoint>& grid,
                                                            double tol) {
    if (grid.empty()) throw ArgumentError("registry_verify_all: empty grid");
    std::map<std::string, InvarianceReport> out;
    for (const BuiltinId& id : default_registry()) {
        out.emplace(to_string(id), check_invariance(make_builtin(id), grid, tol));
    }
    return out;
}

} // namespace altinv::builtins

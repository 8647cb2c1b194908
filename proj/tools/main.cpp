#include "suites.hpp"

#include "altinv/builtins.hpp"
#include "altinv/combinators.hpp"
#include "altinv/convolution.hpp"
#include "altinv/euler.hpp"
#include "altinv/gamma_tilde.hpp"
#include "altinv/special.hpp"
#include "altinv/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace altinv;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitUsage = 64;

Arg parse_arg_or_throw(const std::string& text, const std::string& what) {
    if (auto r = parse_rational(text)) return Arg(*r);
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size()) return Arg(v);
    } catch (...) {
    }
    throw ArgumentError("bad numeric value for " + what + ": " + text);
}

Complex parse_complex_or_throw(const std::string& text, const std::string& what) {
    if (auto v = parse_complex(text)) return *v;
    throw ArgumentError("bad complex value for " + what + ": " + text);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<GridPoint> load_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open grid file " + path);
    json doc = json::parse(in);
    if (!doc.is_array()) throw ArgumentError("grid file must hold a JSON array");
    std::vector<GridPoint> grid;
    for (const auto& row : doc) {
        GridPoint p;
        auto field = [&](const char* key) -> Arg {
            const auto& v = row.at(key);
            if (v.is_string()) return parse_arg_or_throw(v.get<std::string>(), key);
            if (v.is_number_integer()) return Arg(Rational(v.get<long>()));
            return Arg(v.get<double>());
        };
        p.x = field("x");
        p.y = field("y");
        p.n = row.at("n").get<int>();
        grid.push_back(std::move(p));
    }
    return grid;
}

void emit_report(const cli::ReportDocument& doc, const std::string& format) {
    if (format == "csv") {
        std::cout << doc.to_csv();
    } else {
        std::cout << doc.to_json().dump(2) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"alternating invariant function toolkit"};
    app.require_subcommand(1);

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->require_subcommand(1);

    std::string s_text, x_text = "1", y_text = "1", regime_text = "auto", id_text;
    double tol = 1e-12;
    long euler_m = 0;

    auto* ez = eval->add_subcommand("zeta", "alternating Hurwitz zeta");
    ez->add_option("--s", s_text, "exponent s (real or a+bi)")->required();
    ez->add_option("--x", x_text, "argument x (decimal or p/q)");
    ez->add_option("--regime", regime_text, "series|fourier|negint|auto");
    ez->add_option("--tol", tol, "target tolerance");
    ez->callback([&] {
        zeta::ZetaParams p;
        p.s = parse_complex_or_throw(s_text, "--s");
        p.x = Complex(parse_arg_or_throw(x_text, "--x").v);
        p.tol = tol;
        if (regime_text == "series") p.regime = zeta::Regime::series;
        else if (regime_text == "fourier") p.regime = zeta::Regime::fourier;
        else if (regime_text == "negint") p.regime = zeta::Regime::negint;
        else if (regime_text == "auto") p.regime = zeta::Regime::auto_;
        else throw ArgumentError("unknown regime " + regime_text);
        zeta::ZetaValue v = zeta::zeta_e_ex(p);
        json out;
        out["value"] = v.value.real();
        if (v.value.imag() != 0.0) out["value_im"] = v.value.imag();
        out["regime"] = zeta::regime_name(v.used);
        out["est_error"] = v.est_error;
        std::cout << out.dump(2) << "\n";
    });

    auto* ee = eval->add_subcommand("euler", "Euler polynomial E_m(x)");
    ee->add_option("--m", euler_m, "degree")->required();
    ee->add_option("--x", x_text, "argument (decimal or p/q)")->required();
    ee->callback([&] {
        if (euler_m < 0) throw ArgumentError("--m must be nonnegative");
        Arg x = parse_arg_or_throw(x_text, "--x");
        json out;
        if (x.exact) {
            Rational v = euler::euler_eval(static_cast<unsigned>(euler_m), *x.exact);
            out["value"] = to_double(v);
            out["exact"] = to_string(v);
        } else {
            out["value"] = euler::euler_eval(static_cast<unsigned>(euler_m), x.v);
        }
        std::cout << out.dump(2) << "\n";
    });

    auto* eg = eval->add_subcommand("gamma-tilde", "Gamma function attached to zeta_e");
    eg->add_option("--x", x_text, "argument")->required();
    eg->add_option("--tol", tol, "target tolerance");
    eg->callback([&] {
        gammat::GammaTildeValue v =
            gammat::log_gamma_tilde(parse_arg_or_throw(x_text, "--x").v, tol);
        json out;
        out["log_abs"] = v.log_abs;
        out["sign"] = v.sign;
        out["est_error"] = v.est_error;
        out["terms"] = v.truncation_terms;
        std::cout << out.dump(2) << "\n";
    });

    auto* eb = eval->add_subcommand("builtin", "registered member by id");
    eb->add_option("--id", id_text, "builtin id, e.g. expfrac:a=2")->required();
    eb->add_option("--x", x_text, "x (decimal or p/q)")->required();
    eb->add_option("--y", y_text, "y (decimal or p/q)")->required();
    eb->callback([&] {
        BivariateFn f = builtins::make_builtin(id_text);
        Complex v = f.eval(parse_arg_or_throw(x_text, "--x"), parse_arg_or_throw(y_text, "--y"));
        json out;
        out["value"] = v.real();
        if (v.imag() != 0.0) out["value_im"] = v.imag();
        std::cout << out.dump(2) << "\n";
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    std::string suite;
    std::string format = "json";
    std::string grid_file;
    cli::VerifyOptions vopt;
    double verify_tol = 0.0;
    verify->add_option("suite", suite,
                       "euler-identities|zeta-identities|gamma-identities|invariance-all|"
                       "convolution-theorems")
        ->required();
    verify->add_option("--tol", verify_tol, "override tolerance");
    verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--grid-file", grid_file, "JSON list of {x,y,n} (rational strings ok)");
    verify->add_option("--seed", vopt.seed, "seed for rational sampling");
    verify->add_option("--alpha", vopt.alpha, "alpha for convolution-theorems");
    verify->add_option("--beta", vopt.beta, "beta for convolution-theorems");

    // ---- convolve ----
    auto* cv = app.add_subcommand("convolve", "convolution of two members");
    cv->set_help_flag("--help", "print help"); // frees -h for the operand
    std::string g_text, h_text;
    std::vector<std::string> cx_texts;
    double cy = 1.0;
    double conv_tol = 1e-10;
    bool euler_normalized = false;
    cv->add_option("--g", g_text, "first builtin id")->required();
    cv->add_option("--h", h_text, "second builtin id")->required();
    cv->add_option("--y", cy, "slice y > 0")->required();
    cv->add_option("--x", cx_texts, "x values (repeatable)")->required();
    cv->add_option("--tol", conv_tol, "absolute quadrature tolerance");
    cv->add_flag("--euler-normalized", euler_normalized,
                 "scale euler:m operands by 1/(2 m!) so degrees add");

    // ---- list ----
    auto* ls = app.add_subcommand("list", "list registered builtins");
    std::string what = "builtins";
    ls->add_option("what", what)->check(CLI::IsMember({"builtins"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) {
        vopt.tol = verify_tol;
        if (!grid_file.empty()) vopt.grid = load_grid_file(grid_file);
        cli::ReportDocument doc;
        if (suite == "euler-identities") doc = cli::suite_euler_identities(vopt);
        else if (suite == "zeta-identities") doc = cli::suite_zeta_identities(vopt);
        else if (suite == "gamma-identities") doc = cli::suite_gamma_identities(vopt);
        else if (suite == "invariance-all") doc = cli::suite_invariance_all(vopt);
        else if (suite == "convolution-theorems") doc = cli::suite_convolution_theorems(vopt);
        else throw ArgumentError("unknown suite " + suite);
        std::string cmdline;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) cmdline += " ";
            cmdline += argv[i];
        }
        doc.command = cmdline;
        emit_report(doc, format);
        return doc.all_passed() ? 0 : kExitVerifyFailed;
    }

    if (cv->parsed()) {
        quad::QuadratureConfig cfg;
        cfg.abs_tol = conv_tol;
        BivariateFn g = builtins::make_builtin(g_text);
        BivariateFn h = builtins::make_builtin(h_text);
        if (euler_normalized) {
            auto scale_if_euler = [](const std::string& id_text, BivariateFn f) {
                auto id = builtins::parse_builtin_id(id_text);
                if (id.name != "euler") return f;
                long m = 0;
                for (auto& [k, v] : id.params)
                    if (k == "m") m = std::stol(v);
                double s = 0.5 / factorial(static_cast<unsigned long>(m)).get_d();
                return translate_scale(f, s, Arg(0.0), Arg(1.0));
            };
            g = scale_if_euler(g_text, g);
            h = scale_if_euler(h_text, h);
        }
        std::printf("%-24s %-24s %-24s %s\n", "x", "value_re", "value_im", "est_error");
        for (const std::string& xt : cx_texts) {
            double x = parse_arg_or_throw(xt, "--x").v;
            conv::ConvolveValue v = conv::convolve_at(g, h, x, cy, cfg);
            std::printf("%-24s %-24s %-24s %s\n", fmt17(x).c_str(),
                        fmt17(v.value.real()).c_str(), fmt17(v.value.imag()).c_str(),
                        fmt17(v.est_error).c_str());
        }
        return 0;
    }

    if (ls->parsed()) {
        for (const auto& id : builtins::default_registry()) {
            std::cout << builtins::to_string(id) << "\n";
        }
        return 0;
    }

    return 0; // eval handled by callbacks
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const altinv::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const altinv::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const altinv::ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const altinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

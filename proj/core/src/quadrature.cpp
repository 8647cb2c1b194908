#include "altinv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace altinv::quad {

namespace {

std::mutex g_rule_mutex;
std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_rules;

// Newton iteration on the Legendre recurrence.
std::pair<std::vector<double>, std::vector<double>> build_rule(int n) {
    std::vector<double> x(n), w(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return {x, w};
}

struct Panel {
    double lo, hi;
    int depth;
};

Complex panel_value(const std::function<Complex(double)>& f, double lo, double hi,
                    const std::vector<double>& nodes, const std::vector<double>& weights) {
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    Complex acc(0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        acc += weights[i] * f(mid + half * nodes[i]);
    }
    return half * acc;
}

} // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
    if (order < 2) throw ArgumentError("gauss_legendre: order must be >= 2");
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = g_rules.find(order);
    if (it == g_rules.end()) it = g_rules.emplace(order, build_rule(order)).first;
    return it->second;
}

IntegralResult integrate(const std::function<Complex(double)>& f, double lo, double hi,
                         const QuadratureConfig& cfg, std::vector<double> split_hints) {
    if (cfg.panel_order < 4) throw ArgumentError("integrate: panel_order must be >= 4");
    if (lo == hi) return {Complex(0.0), 0.0, 0};
    double orient = 1.0;
    if (lo > hi) {
        std::swap(lo, hi);
        orient = -1.0;
    }
    const double width = hi - lo;

    auto margin_of = [&](double h) {
        return cfg.branch_margin * std::max({cfg.branch_scale, 1.0, std::abs(h)});
    };

    IntegralResult out;

    // Initial panel boundaries: interval ends plus interior hints, with a
    // thin sliver excised around every hint so quadrature nodes stay clear
    // of the integrand's branch-detection snap radius. The sliver mass is
    // put back as a rectangle estimate from probes just outside it (exact
    // to O(d^2) for integrands bounded at the hint) and its magnitude is
    // charged to est_error.
    std::vector<std::pair<double, double>> shrunk = {{lo, hi}};
    std::vector<double> hinted_edges;
    Complex sliver_value(0.0);
    {
        std::vector<double> hs = split_hints;
        std::sort(hs.begin(), hs.end());
        hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
        for (double h : hs) {
            double d = margin_of(h);
            if (h + d <= lo || h - d >= hi) continue;
            std::vector<std::pair<double, double>> next;
            for (auto [a, b] : shrunk) {
                if (h - d <= a && h + d >= b) continue; // fully swallowed
                if (h + d <= a || h - d >= b) {
                    next.emplace_back(a, b);
                    continue;
                }
                if (h - d > a) next.emplace_back(a, h - d);
                if (h + d < b) next.emplace_back(h + d, b);
            }
            shrunk = std::move(next);
            if (h - d > lo && h - d < hi) hinted_edges.push_back(h - d);
            if (h + d > lo && h + d < hi) hinted_edges.push_back(h + d);
            double left_w = h - std::max(lo, h - d);
            double right_w = std::min(hi, h + d) - h;
            auto probe = [&](double t, double w) {
                if (w <= 0.0) return;
                try {
                    Complex v = f(t);
                    sliver_value += w * v;
                    out.est_error += 2.0 * w * std::abs(v);
                } catch (const Error&) {
                    out.est_error += w; // unknown magnitude near the point
                }
            };
            probe(h - 1.5 * d, left_w);
            probe(h + 1.5 * d, right_w);
        }
        for (double h : hs) hinted_edges.push_back(h);
    }

    auto touches_hint = [&](double p) {
        for (double h : hinted_edges) {
            if (std::abs(p - h) <= 1e-12 * std::max(1.0, std::abs(p))) return true;
        }
        return false;
    };

    // geometric pre-split (ratio 1/4) toward hinted panel ends, stopping
    // once subpanels reach the excision scale
    std::vector<Panel> work;
    for (auto [a, b] : shrunk) {
        bool left = touches_hint(a), right = touches_hint(b);
        std::vector<double> cuts = {a, b};
        double w = b - a;
        double floor_w = 4.0 * std::max(margin_of(a), margin_of(b));
        for (int l = 1; l <= 12; ++l) {
            double step = w * std::pow(0.25, l);
            if (step < floor_w) break;
            if (left) cuts.push_back(a + step);
            if (right) cuts.push_back(b - step);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            if (cuts[j + 1] > cuts[j]) work.push_back({cuts[j], cuts[j + 1], 0});
        }
    }

    const auto& [nodes, weights] = gauss_legendre(cfg.panel_order);

    // deterministic ordering: process panels sorted by position, summing
    // accepted values left to right
    std::sort(work.begin(), work.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });

    std::vector<std::pair<double, Complex>> accepted; // (lo, value)
    std::vector<Panel> stack(work.rbegin(), work.rend());
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        Complex whole = panel_value(f, p.lo, p.hi, nodes, weights);
        double mid = 0.5 * (p.lo + p.hi);
        Complex l = panel_value(f, p.lo, mid, nodes, weights);
        Complex r = panel_value(f, mid, p.hi, nodes, weights);
        Complex refined = l + r;
        double err = std::abs(whole - refined);
        double local_tol =
            std::max(cfg.abs_tol * (p.hi - p.lo) / width, cfg.rel_tol * std::abs(refined));
        if (err <= local_tol || (p.hi - p.lo) < 1e-15 * width) {
            accepted.emplace_back(p.lo, refined);
            out.est_error += err;
            ++out.panels;
            continue;
        }
        if (p.depth >= cfg.max_refinements) {
            throw QuadratureError("integrate: refinement budget exhausted");
        }
        stack.push_back({mid, p.hi, p.depth + 1});
        stack.push_back({p.lo, mid, p.depth + 1});
    }
    std::sort(accepted.begin(), accepted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Complex total = sliver_value;
    for (const auto& [pos, v] : accepted) total += v;
    out.value = orient * total;
    return out;
}

} // namespace altinv::quad

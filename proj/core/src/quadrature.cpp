#include "polymer/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "polymer/error.hpp"

namespace polymer {

QuadratureRule gauss_legendre(int n) {
    if (n < 1 || n > 2000) throw ConfigError("gauss_legendre: n must be in [1, 2000]");
    QuadratureRule r;
    r.nodes.assign(n, 0.0);
    r.weights.assign(n, 0.0);
    r.lo = -1.0;
    r.hi = 1.0;
    r.panels = 1;
    r.per_panel = n;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess for the i-th largest root, then Newton.
        const double th = std::numbers::pi * (i + 0.75) / (n + 0.5);
        double x = (1.0 - (n - 1.0) / (8.0 * n * n * n)) * std::cos(th);
        double dp = 0.0;
        for (int it = 0; it < 30; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 3e-16) break;
        }
        // Recompute derivative at the converged root.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

QuadratureRule map_rule(const QuadratureRule& rule, double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) throw ConfigError("map_rule: need finite lo < hi");
    QuadratureRule out = rule;
    const double s = (hi - lo) / (rule.hi - rule.lo);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        out.nodes[i] = lo + (rule.nodes[i] - rule.lo) * s;
        out.weights[i] = rule.weights[i] * s;
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

QuadratureRule legendre_on(int n, double lo, double hi) { return map_rule(gauss_legendre(n), lo, hi); }

QuadratureRule composite_rule(double lo, double hi, double width, int per_panel) {
    if (!(lo < hi) || !(width > 0)) throw ConfigError("composite_rule: need lo < hi and width > 0");
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width - 1e-9)));
    const auto base = gauss_legendre(per_panel);
    QuadratureRule r;
    r.lo = lo;
    r.hi = hi;
    r.panels = panels;
    r.per_panel = per_panel;
    r.nodes.reserve(static_cast<std::size_t>(panels) * per_panel);
    r.weights.reserve(r.nodes.capacity());
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * h;
        for (int i = 0; i < per_panel; ++i) {
            r.nodes.push_back(a + 0.5 * h * (base.nodes[i] + 1.0));
            r.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return r;
}

QuadratureRule resample(const QuadratureRule& rule, int per_panel) {
    if (rule.panels <= 1) return legendre_on(per_panel, rule.lo, rule.hi);
    return composite_rule(rule.lo, rule.hi, (rule.hi - rule.lo) / rule.panels, per_panel);
}

TruncationSpec choose_truncation(const DecayDescriptor& d, double tol, double pad) {
    if (!(tol > 0.0 && tol <= 1e-2)) throw ConfigError("choose_truncation: tol must be in (0, 1e-2]");
    if (!(d.rate > 0.0)) throw ConfigError("choose_truncation: envelope does not decay");
    if (!(pad >= 0.0)) throw ConfigError("choose_truncation: pad must be >= 0");
    // log env(x) = growth*x - rate*(x+shift)^{3/2}; concave in x for x > -shift.
    auto logenv = [&](double x) {
        const double y = std::max(0.0, x + d.shift);
        return d.growth * x - d.rate * y * std::sqrt(y);
    };
    // Stationary point: growth = 1.5 rate sqrt(x+shift).
    double xs = d.lo;
    if (d.growth > 0) xs = std::max(d.lo, std::pow(d.growth / (1.5 * d.rate), 2) - d.shift);
    const double peak = logenv(xs);
    const double target = peak + std::log(tol);
    double a = xs, b = std::max(xs, 0.0) + 1.0;
    while (logenv(b) > target) b = a + 2.0 * (b - a);
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        (logenv(m) > target ? a : b) = m;
    }
    return {d.lo, b + pad, d.rate, pad};
}

}  // namespace polymer

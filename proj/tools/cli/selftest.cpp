#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <polymer/airy.hpp>
#include <polymer/kernels.hpp>
#include <polymer/quadrature.hpp>
#include <polymer/tails.hpp>

#include "cli/commands.hpp"

namespace polymer::cli {
namespace {

// Golden values from the independent oracles in tests/oracles.
constexpr double kAi0 = 0.355028053887817239;
constexpr double kAip0 = -0.258819403792806798;
constexpr double kFgue0 = 0.96937282835526;
constexpr double kFgoe0 = 0.83190806620295;

std::string sci(double v) { return format_double(v, 3); }

SelfCheck bound(std::string name, double err, double tol) {
    return {std::move(name), err <= tol, "err " + sci(err) + " <= " + sci(tol)};
}

SelfCheck airy_origin() {
    const double e = std::max(std::abs(ai(0.0) - kAi0), std::abs(aip(0.0) - kAip0));
    return bound("airy_origin", e, 1e-15);
}

SelfCheck gauss_legendre_exactness() {
    const auto r = gauss_legendre(12);
    double worst = 0.0;
    for (int k = 0; k <= 23; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
        const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
        worst = std::max(worst, std::abs(s - exact) / std::max(1.0, exact));
    }
    return bound("gauss_legendre_exactness", worst, 1e-12);
}

SelfCheck airy_kernel_closed_form() {
    double worst = 0.0;
    for (double x : {-3.0, -0.4, 0.0, 1.1, 4.0})
        for (double y : {-2.5, 0.0, 0.05, 2.0})
            worst = std::max(worst, std::abs(k_airy(x, y) - k_airy_quadrature(x, y)));
    return bound("airy_kernel_closed_form", worst, 1e-12);
}

SelfCheck airy_convolution_grid() {
    double worst = 0.0;
    for (double a : {-5.0, -2.5, 0.0, 2.5, 5.0})
        for (double b : {-5.0, -2.5, 0.0, 2.5, 5.0}) worst = std::max(worst, airy_convolution_check(a, b));
    return bound("airy_convolution_grid", worst, 1e-8);
}

SelfCheck tw_pinned() {
    const double e = std::max(std::abs(f_gue(0.0).value - kFgue0), std::abs(f_goe(0.0).value - kFgoe0));
    return bound("tw_pinned_values", e, 1e-9);
}

SelfCheck q_idempotence() {
    const ReflectionSpec q{0.3, 0.8};
    const KernelFn k = airy_kernel();
    const KernelFn once = apply_q_left(q, k);
    const KernelFn twice = apply_q_left(q, once);
    double worst = 0.0;
    for (double x : {0.95, 1.2, 2.0, 3.5})
        for (double y : {-1.0, 0.0, 1.5}) worst = std::max(worst, std::abs(twice.eval(x, y) - once.eval(x, y)));
    return bound("q_idempotence", worst, 1e-9);
}

SelfCheck joint_routes(const std::vector<double>& ts, const std::vector<double>& ms, const std::string& name) {
    double worst = 0.0;
    for (double m : ms) {
        const JointSlice slice(m, NumericsConfig{});
        for (double t : ts) worst = std::max(worst, std::abs(slice.density(t) - slice.density_det_difference(t)));
    }
    return bound(name, worst, 1e-8);
}

// Exhaustive maximum over all 2^N up/down paths from the origin.
std::vector<std::int64_t> brute_force_last_row(const std::vector<std::vector<int>>& w) {
    const int n = static_cast<int>(w.size()) - 1;
    std::vector<std::int64_t> best(static_cast<std::size_t>(n + 1), std::numeric_limits<std::int64_t>::min());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::int64_t sum = w[0][0];
        int ups = 0;
        for (int i = 1; i <= n; ++i) {
            ups += (mask >> (i - 1)) & 1u;
            sum += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(ups)];
        }
        auto& b = best[static_cast<std::size_t>(ups)];
        b = std::max(b, sum);
    }
    return best;
}

SelfCheck lpp_exhaustive() {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            LppConfig cfg;
            cfg.n_steps = n;
            cfg.seed = seed;
            const auto w = sample_weights(cfg, 0);
            if (solve_triangle(w).last_row != brute_force_last_row(w))
                return {"lpp_exhaustive_paths", false, "mismatch at N = " + std::to_string(n)};
        }
    }
    return {"lpp_exhaustive_paths", true, "N <= 10, 3 seeds"};
}

SelfCheck lpp_determinism() {
    LppConfig cfg;
    cfg.n_steps = 7;
    cfg.samples = 500;
    cfg.seed = 11;
    const auto a = simulate(cfg), b = simulate(cfg);
    if (a.raw_endpoints != b.raw_endpoints) return {"lpp_determinism_parity", false, "runs differ"};
    for (int e : a.raw_endpoints)
        if (std::abs(e) > 7 || (e + 7) % 2 != 0) return {"lpp_determinism_parity", false, "parity violated"};
    return {"lpp_determinism_parity", true, "N = 7, 500 samples"};
}

SelfCheck sup_law() {
    double worst = 0.0;
    for (double a : {-0.5, 0.0, 0.5})
        worst = std::max(worst, std::abs(one_sided_sup_cdf(3.0, a).value - f_goe(std::cbrt(4.0) * a).value));
    return bound("sup_law_vs_goe", worst, 2e-4);
}

SelfCheck sup_point_routes() {
    const double sc = joint_sup_point_cdf(1, 1, 4, 4, {}, SupPointRoute::scalar).value;
    const double mx = joint_sup_point_cdf(1, 1, 4, 4, {}, SupPointRoute::matrix).value;
    return bound("sup_point_route_agreement", std::abs(sc - mx), 1e-6);
}

SelfCheck moments() {
    const MomentReport m = endpoint_moments();
    const bool ok = std::abs(m.variance - 0.2409) <= 5e-4 && std::abs(m.excess_kurtosis + 0.2374) <= 1e-3 &&
                    std::abs(m.total_mass - 1.0) <= 1e-4 && std::abs(m.odd_moment_1) <= 1e-6 &&
                    std::abs(m.odd_moment_3) <= 1e-6;
    return {"endpoint_moments", ok,
            "variance " + format_double(m.variance, 6) + ", excess kurtosis " + format_double(m.excess_kurtosis, 6)};
}

SelfCheck semigroup_identity() {
    const double e = std::abs(semigroup_composition(0.5, 0.5, 0.0, 0.0) - semigroup_kernel(1.0, 0.0, 0.0));
    return bound("semigroup_composition", e, 1e-8);
}

SelfCheck tail_sandwich() {
    const EndpointModel model;
    std::vector<TailRecord> recs;
    bool lower_ok = true;
    for (double t : {1.2, 1.6, 2.0, 2.4}) {
        recs.push_back(make_tail_record(t, endpoint_tail(model, t).prob, 1.0, 2.0, 10.7));
        lower_ok = lower_ok && recs.back().prob >= recs.back().lower_env;
    }
    const double c = fit_upper_constant(recs, 2.0);
    const double cubic = fit_decay(recs).cubic_coeff;
    const bool ok = lower_ok && c <= 1e3 && cubic >= 0.9 && cubic <= 1.8;
    return {"tail_sandwich", ok, "c " + sci(c) + ", cubic " + format_double(cubic, 5)};
}

SelfCheck stationarity() {
    const double a = two_time_cdf(0.0, 0.3, 1.0, -0.2).value;
    const double b = two_time_cdf(5.0, 0.3, 6.0, -0.2).value;
    return bound("two_time_stationarity", std::abs(a - b), 1e-8);
}

}  // namespace

std::vector<SelfCheck> run_selftest(const std::string& level) {
    using Check = std::pair<const char*, std::function<SelfCheck()>>;
    std::vector<Check> checks = {
        {"airy_origin", airy_origin},
        {"gauss_legendre_exactness", gauss_legendre_exactness},
        {"airy_kernel_closed_form", airy_kernel_closed_form},
        {"airy_convolution_grid", airy_convolution_grid},
        {"tw_pinned_values", tw_pinned},
        {"q_idempotence", q_idempotence},
        {"joint_routes_origin", [] { return joint_routes({0.0}, {0.0}, "joint_routes_origin"); }},
        {"lpp_exhaustive_paths", lpp_exhaustive},
        {"lpp_determinism_parity", lpp_determinism},
    };
    if (level == "full") {
        checks.push_back({"joint_routes_grid",
                          [] { return joint_routes({0.0, 0.5, 1.0}, {-1.0, 0.0, 1.0}, "joint_routes_grid"); }});
        checks.push_back({"sup_law_vs_goe", sup_law});
        checks.push_back({"sup_point_route_agreement", sup_point_routes});
        checks.push_back({"endpoint_moments", moments});
        checks.push_back({"semigroup_composition", semigroup_identity});
        checks.push_back({"tail_sandwich", tail_sandwich});
        checks.push_back({"two_time_stationarity", stationarity});
    }
    std::vector<SelfCheck> out;
    for (const auto& [name, fn] : checks) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("threw: ") + e.what()});
        }
    }
    return out;
}

}  // namespace polymer::cli

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <polymer/error.hpp>
#include <polymer/tails.hpp>

namespace polymer::cli {
namespace {

void echo_numerics(Envelope& env, const NumericsConfig& cfg) {
    env.echo("quad_n", std::int64_t{cfg.quad_n});
    env.echo("tol", cfg.tol);
    env.echo("trunc_pad", cfg.trunc_pad);
    env.echo("m_lo", cfg.m_lo);
    env.echo("m_hi", cfg.m_hi);
}

std::string grid_text(const Grid& g) {
    return format_double(g.lo, 17) + ":" + format_double(g.hi, 17) + ":" + std::to_string(g.count);
}

void note_unconverged(Envelope& env, const std::string& what) {
    env.warn(what + " did not reach the requested tolerance");
    env.exit_code = 3;
}

double parse_number(const std::string& s, const std::string& spec) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("grid '" + spec + "': cannot parse '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw ConfigError("grid '" + spec + "': cannot parse '" + s + "'");
    return v;
}

}  // namespace

std::vector<double> Grid::points() const {
    std::vector<double> p(static_cast<std::size_t>(count));
    if (count == 1) {
        p[0] = lo;
        return p;
    }
    for (int i = 0; i < count; ++i) p[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    p.back() = hi;
    return p;
}

Grid parse_grid(const std::string& spec) {
    const auto a = spec.find(':');
    const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos || spec.find(':', b + 1) != std::string::npos)
        throw ConfigError("grid '" + spec + "': expected lo:hi:count");
    Grid g;
    g.lo = parse_number(spec.substr(0, a), spec);
    g.hi = parse_number(spec.substr(a + 1, b - a - 1), spec);
    const double n = parse_number(spec.substr(b + 1), spec);
    if (n < 1 || n != std::floor(n) || n > 1e6) throw ConfigError("grid '" + spec + "': count must be an integer >= 1");
    g.count = static_cast<int>(n);
    if (g.count > 1 && !(g.hi > g.lo)) throw ConfigError("grid '" + spec + "': need hi > lo when count > 1");
    return g;
}

Envelope cmd_tw(const std::string& kind, const Grid& grid, const NumericsConfig& cfg) {
    if (kind != "gue" && kind != "goe") throw ConfigError("tw: kind must be gue or goe");
    cfg.validate();
    Envelope env;
    env.command = "tw " + kind;
    env.echo("grid", grid_text(grid));
    echo_numerics(env, cfg);
    env.columns = {"x", "F", "converged", "delta"};
    bool all = true;
    for (double x : grid.points()) {
        const DetResult r = kind == "gue" ? f_gue(x, cfg) : f_goe(x, cfg);
        env.rows.push_back({x, r.value, r.converged, r.delta});
        if (!r.converged) all = false;
        if (r.value < -10 * cfg.tol || r.value > 1 + 10 * cfg.tol)
            env.warn("value outside [0, 1] at x = " + format_double(x, 17));
    }
    if (!all) note_unconverged(env, "tw " + kind);
    return env;
}

Envelope cmd_endpoint_density(const Grid& grid, const NumericsConfig& cfg) {
    cfg.validate();
    Envelope env;
    env.command = "endpoint density";
    env.echo("grid", grid_text(grid));
    echo_numerics(env, cfg);
    env.columns = {"t", "f_end", "converged"};
    const auto tab = endpoint_density_table(grid.points(), cfg);
    bool all = true;
    for (std::size_t i = 0; i < tab.t_nodes.size(); ++i) {
        env.rows.push_back({tab.t_nodes[i], tab.values[i], static_cast<bool>(tab.converged[i])});
        all = all && tab.converged[i];
    }
    if (!all) note_unconverged(env, "endpoint density");
    return env;
}

Envelope cmd_endpoint_tail(const std::vector<double>& ts, std::optional<double> c, double c32, double kappa,
                           const NumericsConfig& cfg) {
    cfg.validate();
    if (ts.empty()) throw ConfigError("endpoint tail: no t values");
    for (double t : ts)
        if (!(t > 0)) throw ConfigError("endpoint tail: t must be positive");
    const EndpointModel model(cfg);
    std::vector<TailEstimate> est;
    for (double t : ts) est.push_back(endpoint_tail(model, t));

    double cc = 1.0;
    if (c) {
        cc = *c;
    } else {
        std::vector<TailRecord> fit;
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (est[i].resolved) fit.push_back(make_tail_record(ts[i], est[i].prob, 1.0, c32, kappa));
        if (!fit.empty()) cc = fit_upper_constant(fit, c32);
    }

    Envelope env;
    env.command = "endpoint tail";
    env.echo("c", cc);
    env.echo("c_fitted", !c.has_value());
    env.echo("c32", c32);
    env.echo("kappa", kappa);
    echo_numerics(env, cfg);
    env.columns = {"t", "prob", "log_prob", "upper_env", "lower_env", "resolved"};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const TailRecord r = make_tail_record(ts[i], est[i].prob, cc, c32, kappa);
        env.rows.push_back({r.t, r.prob, r.log_prob, r.upper_env, r.lower_env, est[i].resolved});
        if (!est[i].resolved) env.warn("tail at t = " + format_double(ts[i], 17) + " is below the resolution floor");
    }
    return env;
}

Envelope cmd_endpoint_moments(double t_max, const NumericsConfig& cfg) {
    cfg.validate();
    Envelope env;
    env.command = "endpoint moments";
    env.echo("t_max", t_max);
    echo_numerics(env, cfg);
    const MomentReport m = endpoint_moments(cfg, t_max);
    env.columns = {"total_mass", "variance", "excess_kurtosis", "odd_moment_1", "odd_moment_3", "outside_mass"};
    env.rows.push_back({m.total_mass, m.variance, m.excess_kurtosis, m.odd_moment_1, m.odd_moment_3, m.outside_mass});
    return env;
}

Envelope cmd_endpoint_joint(const Grid& t_grid, const Grid& m_grid, const NumericsConfig& cfg) {
    cfg.validate();
    Envelope env;
    env.command = "endpoint joint";
    env.echo("t_grid", grid_text(t_grid));
    env.echo("m_grid", grid_text(m_grid));
    echo_numerics(env, cfg);
    env.columns = {"t", "m", "f", "converged"};
    const auto tab = joint_density_table(t_grid.points(), m_grid.points(), cfg);
    bool all = true;
    for (std::size_t i = 0; i < tab.t_nodes.size(); ++i) {
        for (std::size_t j = 0; j < tab.m_nodes.size(); ++j) {
            const std::size_t k = i * tab.m_nodes.size() + j;
            env.rows.push_back({tab.t_nodes[i], tab.m_nodes[j], tab.values[k], static_cast<bool>(tab.converged[k])});
            all = all && tab.converged[k];
        }
    }
    if (!all) note_unconverged(env, "endpoint joint");
    return env;
}

Envelope cmd_twotime_sup_point(double t, double s, double a, double b, const std::string& route,
                               const NumericsConfig& cfg) {
    if (route != "scalar" && route != "matrix" && route != "both")
        throw ConfigError("twotime: route must be scalar, matrix or both");
    cfg.validate();
    Envelope env;
    env.command = "twotime";
    env.echo("route", route);
    echo_numerics(env, cfg);
    if (route == "both") {
        const DetResult sc = joint_sup_point_cdf(t, s, a, b, cfg, SupPointRoute::scalar);
        const DetResult mx = joint_sup_point_cdf(t, s, a, b, cfg, SupPointRoute::matrix);
        const bool ok = sc.converged && mx.converged;
        env.columns = {"t", "s", "a", "b", "scalar", "matrix", "discrepancy", "converged"};
        env.rows.push_back({t, s, a, b, sc.value, mx.value, std::abs(sc.value - mx.value), ok});
        if (!ok) note_unconverged(env, "twotime");
    } else {
        const DetResult r =
            joint_sup_point_cdf(t, s, a, b, cfg, route == "scalar" ? SupPointRoute::scalar : SupPointRoute::matrix);
        env.columns = {"t", "s", "a", "b", route, "delta", "converged"};
        env.rows.push_back({t, s, a, b, r.value, r.delta, r.converged});
        if (!r.converged) note_unconverged(env, "twotime");
    }
    return env;
}

Envelope cmd_twotime_points(double t0, double x0, double t1, double x1, const std::vector<double>& shifts,
                            const NumericsConfig& cfg) {
    cfg.validate();
    Envelope env;
    env.command = "twotime";
    env.echo("route", std::string("points"));
    echo_numerics(env, cfg);
    env.columns = {"t0", "x0", "t1", "x1", "F", "delta", "converged"};
    bool all = true;
    for (double sh : shifts) {
        const DetResult r = two_time_cdf(t0 + sh, x0, t1 + sh, x1, cfg);
        env.rows.push_back({t0 + sh, x0, t1 + sh, x1, r.value, r.delta, r.converged});
        all = all && r.converged;
    }
    if (!all) note_unconverged(env, "twotime");
    return env;
}

Envelope cmd_lpp(const LppConfig& lpp, std::optional<double> scale, bool raw, const NumericsConfig& cfg) {
    lpp.validate();
    cfg.validate();
    const EmpiricalDist sim = simulate(lpp);
    for (std::size_t i = 0; i < sim.raw_endpoints.size(); ++i) {
        const int e = sim.raw_endpoints[i];
        if (std::abs(e) > lpp.n_steps || ((e - lpp.n_steps) % 2) != 0)
            throw DomainError("lpp: sample " + std::to_string(i) + " violates the parity or range invariant");
    }
    const EmpiricalDist dist = rescale(sim, scale);

    Envelope env;
    env.command = "lpp";
    env.echo("n_steps", std::int64_t{lpp.n_steps});
    env.echo("q", lpp.q);
    env.echo("samples", std::int64_t{lpp.samples});
    env.echo("seed", std::to_string(lpp.seed));
    env.echo("scale", scale ? Cell{*scale} : Cell{std::string("auto")});
    if (raw) {
        env.columns = {"sample_index", "endpoint", "passage_time"};
        for (std::size_t i = 0; i < dist.raw_endpoints.size(); ++i)
            env.rows.push_back({static_cast<std::int64_t>(i), std::int64_t{dist.raw_endpoints[i]}, dist.passage_times[i]});
        return env;
    }
    echo_numerics(env, cfg);

    const double n = static_cast<double>(dist.rescaled.size());
    const double mean = std::accumulate(dist.rescaled.begin(), dist.rescaled.end(), 0.0) / n;
    double var = 0.0;
    for (double v : dist.rescaled) var += (v - mean) * (v - mean);
    var /= n;

    const EndpointModel model(cfg);
    const CdfTable table = endpoint_cdf_table(model);
    const double ks = ks_distance(dist, table);

    env.columns = {"n_steps", "q", "samples", "seed", "scale_used", "mean", "variance", "ks"};
    env.rows.push_back({std::int64_t{lpp.n_steps}, lpp.q, std::int64_t{lpp.samples}, std::to_string(lpp.seed),
                        dist.scale_used, mean, var, ks});
    return env;
}

Envelope cmd_selftest(const std::string& level) {
    if (level != "quick" && level != "full") throw ConfigError("selftest: level must be quick or full");
    Envelope env;
    env.command = "selftest " + level;
    env.columns = {"check", "passed", "detail"};
    bool all = true;
    for (const auto& c : run_selftest(level)) {
        env.rows.push_back({c.name, c.passed, c.detail});
        if (!c.passed) {
            all = false;
            env.warn("failed: " + c.name);
        }
    }
    if (!all) env.exit_code = 1;
    return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Endpoint distribution of directed polymers: Fredholm determinants and LPP simulation",
                 "polymer-endpoint"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    NumericsConfig cfg;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "Write output to this file instead of stdout");
    app.add_option("--quad-n", cfg.quad_n, "Quadrature points per interval");
    app.add_option("--tol", cfg.tol, "Determinant refinement tolerance");
    app.add_option("--pad", cfg.trunc_pad, "Truncation padding of half-line domains");
    app.add_option("--m-lo", cfg.m_lo, "Lower end of the m-window for endpoint densities");
    app.add_option("--m-hi", cfg.m_hi, "Upper end of the m-window for endpoint densities");

    auto* tw = app.add_subcommand("tw", "Tracy-Widom GUE or GOE distribution function on a grid");
    std::string tw_kind, tw_grid;
    tw->add_option("kind", tw_kind, "gue or goe")->required()->check(CLI::IsMember({"gue", "goe"}));
    tw->add_option("--grid", tw_grid, "lo:hi:count")->required();

    auto* ep = app.add_subcommand("endpoint", "Endpoint density, tail, moments or joint density");
    std::string ep_kind, ep_grid = "-2:2:9", ep_tgrid = "0:1:3", ep_mgrid = "-1:1:3";
    std::vector<double> ep_ts{1.2, 1.6, 2.0, 2.4};
    std::optional<double> ep_c;
    double ep_c32 = 2.0, ep_kappa = 10.7, ep_tmax = 4.0;
    ep->add_option("kind", ep_kind, "density, tail, moments or joint")
        ->required()
        ->check(CLI::IsMember({"density", "tail", "moments", "joint"}));
    ep->add_option("--grid", ep_grid, "t grid for density, lo:hi:count");
    ep->add_option("--t", ep_ts, "Tail points");
    ep->add_option("--c", ep_c, "Upper envelope constant (fitted when absent)");
    ep->add_option("--c32", ep_c32, "Coefficient of t^{3/2} in the upper envelope");
    ep->add_option("--kappa", ep_kappa, "Lower envelope rate");
    ep->add_option("--t-max", ep_tmax, "Moment integration half-width");
    ep->add_option("--t-grid", ep_tgrid, "t grid for joint");
    ep->add_option("--m-grid", ep_mgrid, "m grid for joint");

    auto* tt = app.add_subcommand("twotime", "Sup/point joint law, or two-time Airy2 distribution");
    double tt_t = 1.0, tt_s = 1.0, tt_a = 4.0, tt_b = 4.0;
    std::string tt_route = "both";
    std::optional<double> t0, x0, t1, x1;
    std::vector<double> shifts{0.0};
    tt->add_option("--t", tt_t, "Sup window end");
    tt->add_option("--s", tt_s, "Gap to the point time");
    tt->add_option("--a", tt_a, "Sup level");
    tt->add_option("--b", tt_b, "Point level");
    tt->add_option("--route", tt_route, "scalar, matrix or both")->check(CLI::IsMember({"scalar", "matrix", "both"}));
    tt->add_option("--t0", t0, "First time");
    tt->add_option("--x0", x0, "First level");
    tt->add_option("--t1", t1, "Second time");
    tt->add_option("--x1", x1, "Second level");
    tt->add_option("--shift", shifts, "Time shifts applied to (t0, t1); one row each");

    auto* lp = app.add_subcommand("lpp", "Geometric last passage percolation endpoints");
    LppConfig lcfg;
    std::optional<double> lscale;
    bool lraw = false;
    lp->add_option("--n", lcfg.n_steps, "Path length N");
    lp->add_option("--q", lcfg.q, "Geometric parameter");
    lp->add_option("--samples", lcfg.samples, "Number of samples");
    lp->add_option("--seed", lcfg.seed, "PRNG seed");
    lp->add_option("--scale", lscale, "Fixed rescaling constant (variance-calibrated when absent)");
    lp->add_flag("--raw", lraw, "Emit per-sample rows (sample_index, endpoint, passage_time)");

    auto* st = app.add_subcommand("selftest", "Run built-in invariant checks");
    std::string st_level = "quick";
    st->add_option("level", st_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    for (auto* sub : {tw, ep, tt, lp, st}) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Envelope env;
    try {
        if (*tw) {
            env = cmd_tw(tw_kind, parse_grid(tw_grid), cfg);
        } else if (*ep) {
            if (ep_kind == "density")
                env = cmd_endpoint_density(parse_grid(ep_grid), cfg);
            else if (ep_kind == "tail")
                env = cmd_endpoint_tail(ep_ts, ep_c, ep_c32, ep_kappa, cfg);
            else if (ep_kind == "moments")
                env = cmd_endpoint_moments(ep_tmax, cfg);
            else
                env = cmd_endpoint_joint(parse_grid(ep_tgrid), parse_grid(ep_mgrid), cfg);
        } else if (*tt) {
            const bool any = t0 || x0 || t1 || x1;
            if (any) {
                if (!(t0 && x0 && t1 && x1)) throw ConfigError("twotime: --t0 --x0 --t1 --x1 go together");
                env = cmd_twotime_points(*t0, *x0, *t1, *x1, shifts, cfg);
            } else {
                env = cmd_twotime_sup_point(tt_t, tt_s, tt_a, tt_b, tt_route, cfg);
            }
        } else if (*lp) {
            env = cmd_lpp(lcfg, lscale, lraw, cfg);
        } else {
            env = cmd_selftest(st_level);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    for (const auto& w : env.warnings) err << "warning: " << w << "\n";
    const std::string text = format == "json" ? render_json(env) : render_csv(env);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << out_path << "\n";
            return 2;
        }
        f << text;
        if (!f) {
            err << "error: write to " << out_path << " failed\n";
            return 2;
        }
    }
    return env.exit_code;
}

}  // namespace polymer::cli

#include "polymer/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polymer/error.hpp"
#include "polymer/kernels.hpp"
#include "polymer/parallel.hpp"

namespace polymer {
namespace {

const double kCbrt2 = std::cbrt(2.0);
const double kCbrt4 = std::cbrt(4.0);

QuadratureRule goe_rule(double big_m, const NumericsConfig& cfg, int n) {
    return legendre_on(n, 0.0, std::max(0.0, -big_m) + cfg.trunc_pad);
}

Vector sqrt_weights(const QuadratureRule& r) {
    Vector s(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) s[static_cast<Eigen::Index>(i)] = std::sqrt(r.weights[i]);
    return s;
}

Vector psi_samples(double t, double m, const QuadratureRule& r) {
    Vector v(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) v[static_cast<Eigen::Index>(i)] = psi(t, m, kCbrt2 * r.nodes[i]);
    return v;
}

}  // namespace

void NumericsConfig::validate() const {
    if (quad_n < 20) throw ConfigError("quad_n must be >= 20");
    if (!(tol > 0.0 && tol <= 1e-2)) throw ConfigError("tol must be in (0, 1e-2]");
    if (!(trunc_pad > 0.0)) throw ConfigError("trunc_pad must be positive");
    if (!(m_lo < m_hi)) throw ConfigError("m_window needs lo < hi");
}

DetResult f_gue(double s, const NumericsConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(s)) throw DomainError("f_gue: non-finite argument");
    const auto rule = legendre_on(cfg.quad_n, s, std::max(s, 0.0) + cfg.trunc_pad);
    return det_fredholm(airy_kernel(), rule, cfg.tol);
}

DetResult f_goe(double m, const NumericsConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(m)) throw DomainError("f_goe: non-finite argument");
    return det_fredholm(b_kernel(m), goe_rule(m, cfg, cfg.quad_n), cfg.tol);
}

JointSlice::JointSlice(double m, const NumericsConfig& cfg)
    : m_(m), op_(b_kernel(kCbrt4 * m), goe_rule(kCbrt4 * m, cfg, cfg.quad_n)), sqrtw_(sqrt_weights(op_.rule())) {}

double JointSlice::density(double t) const {
    const Vector u = psi_samples(t, m_, op_.rule());
    const Vector v = psi_samples(-t, m_, op_.rule());
    return kCbrt2 * op_.rank_one_trace(u, v) * op_.det();
}

double JointSlice::density_det_difference(double t) const {
    const Vector u = sqrtw_.cwiseProduct(psi_samples(t, m_, op_.rule()));
    const Vector v = sqrtw_.cwiseProduct(psi_samples(-t, m_, op_.rule()));
    const Matrix w = op_.weighted() - kCbrt2 * u * v.transpose();
    return det_identity_minus(w).value - op_.det();
}

double joint_density(double t, double m, const NumericsConfig& cfg, JointRoute route) {
    cfg.validate();
    if (!std::isfinite(t) || !std::isfinite(m)) throw DomainError("joint_density: non-finite argument");
    JointSlice slice(m, cfg);
    return route == JointRoute::trace ? slice.density(t) : slice.density_det_difference(t);
}

EndpointModel::EndpointModel(const NumericsConfig& cfg) : cfg_(cfg) {
    cfg.validate();
    const auto mr = composite_rule(cfg.m_lo, cfg.m_hi, 1.0, 12);
    mw_ = mr.weights;
    std::vector<std::unique_ptr<JointSlice>> tmp(mr.size());
    parallel_for(mr.size(), [&](std::size_t i) { tmp[i] = std::make_unique<JointSlice>(mr.nodes[i], cfg); });
    slices_.reserve(mr.size());
    for (auto& p : tmp) slices_.push_back(std::move(*p));
    // The window must hold all of the m-mass at the requested tolerance.
    const double edge = std::abs(slices_.front().density(0.0)) + std::abs(slices_.back().density(0.0));
    if (edge > cfg.tol)
        throw ConfigError("m_window too small: joint density at the window edges is " + std::to_string(edge));
}

double EndpointModel::density(double t) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < slices_.size(); ++i) acc += mw_[i] * slices_[i].density(t);
    return acc;
}

double EndpointModel::tail(double t) const {
    const double t0 = std::abs(t);
    const double end = std::max(5.0, t0 + 2.0);
    const auto r = composite_rule(t0, end, 0.25, 12);
    std::vector<double> f(r.size());
    parallel_for(r.size(), [&](std::size_t i) { f[i] = density(r.nodes[i]); });
    double acc = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) acc += r.weights[i] * f[i];
    return 2.0 * acc;
}

double endpoint_density(double t, const NumericsConfig& cfg) { return EndpointModel(cfg).density(t); }

MomentReport endpoint_moments(const EndpointModel& model, double t_max) {
    if (!(t_max >= 3.0)) throw ConfigError("endpoint_moments: t_max must be >= 3");
    const auto r = composite_rule(-t_max, t_max, 0.25, 12);
    std::vector<double> f(r.size());
    parallel_for(r.size(), [&](std::size_t i) { f[i] = model.density(r.nodes[i]); });
    double m0 = 0, m1 = 0, m2 = 0, m3 = 0, m4 = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double t = r.nodes[i], w = r.weights[i] * f[i];
        m0 += w;
        m1 += w * t;
        m2 += w * t * t;
        m3 += w * t * t * t;
        m4 += w * t * t * t * t;
    }
    const double mean = m1 / m0;
    const double var = m2 / m0 - mean * mean;
    const double c4 = m4 / m0 - 4 * mean * m3 / m0 + 6 * mean * mean * m2 / m0 - 3 * mean * mean * mean * mean;
    MomentReport rep{};
    rep.total_mass = m0;
    rep.variance = var;
    rep.excess_kurtosis = c4 / (var * var) - 3.0;
    rep.odd_moment_1 = m1;
    rep.odd_moment_3 = m3;
    rep.outside_mass = model.tail(t_max);
    return rep;
}

MomentReport endpoint_moments(const NumericsConfig& cfg, double t_max) {
    return endpoint_moments(EndpointModel(cfg), t_max);
}

TailEstimate endpoint_tail(const EndpointModel& model, double t) {
    if (!std::isfinite(t)) throw DomainError("endpoint_tail: non-finite argument");
    const double p = model.tail(t);
    return {p, p >= 1e-14};
}

TailEstimate endpoint_tail(double t, const NumericsConfig& cfg) { return endpoint_tail(EndpointModel(cfg), t); }

DensityTable endpoint_density_table(const std::vector<double>& ts, const NumericsConfig& cfg) {
    DensityTable tab;
    tab.config = cfg;
    tab.t_nodes = ts;
    NumericsConfig half = cfg;
    half.quad_n = std::max(20, cfg.quad_n / 2);
    const EndpointModel fine(cfg), coarse(half);
    tab.values.resize(ts.size());
    std::vector<char> ok(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        tab.values[i] = fine.density(ts[i]);
        ok[i] = std::abs(tab.values[i] - coarse.density(ts[i])) <= 10.0 * cfg.tol;
    });
    tab.converged.assign(ok.begin(), ok.end());
    return tab;
}

DensityTable joint_density_table(const std::vector<double>& ts, const std::vector<double>& ms,
                                 const NumericsConfig& cfg) {
    cfg.validate();
    DensityTable tab;
    tab.config = cfg;
    tab.t_nodes = ts;
    tab.m_nodes = ms;
    tab.values.assign(ts.size() * ms.size(), 0.0);
    std::vector<char> ok(ts.size() * ms.size());
    NumericsConfig half = cfg;
    half.quad_n = std::max(20, cfg.quad_n / 2);
    parallel_for(ms.size(), [&](std::size_t j) {
        const JointSlice fine(ms[j], cfg), coarse(ms[j], half);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double v = fine.density(ts[i]);
            tab.values[i * ms.size() + j] = v;
            ok[i * ms.size() + j] = std::abs(v - coarse.density(ts[i])) <= 10.0 * cfg.tol;
        }
    });
    tab.converged.assign(ok.begin(), ok.end());
    return tab;
}

double CdfTable::operator()(double v) const {
    if (v <= x.front()) return cdf.front();
    if (v >= x.back()) return cdf.back();
    const auto it = std::upper_bound(x.begin(), x.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double h = x[i + 1] - x[i];
    const double s = (v - x[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * cdf[i] + h10 * h * pdf[i] + h01 * cdf[i + 1] + h11 * h * pdf[i + 1];
}

CdfTable endpoint_cdf_table(const EndpointModel& model, double t_max, int intervals) {
    if (!(t_max > 0) || intervals < 1) throw ConfigError("endpoint_cdf_table: bad range");
    const double h = t_max / intervals;
    const auto base = gauss_legendre(8);
    // Half-line nodes, their densities, and per-interval integrals.
    std::vector<double> knots(static_cast<std::size_t>(intervals) + 1), fk(knots.size()), seg(static_cast<std::size_t>(intervals));
    for (std::size_t i = 0; i < knots.size(); ++i) knots[i] = h * static_cast<double>(i);
    parallel_for(knots.size(), [&](std::size_t i) { fk[i] = model.density(knots[i]); });
    parallel_for(seg.size(), [&](std::size_t i) {
        double acc = 0;
        for (std::size_t k = 0; k < base.size(); ++k)
            acc += 0.5 * h * base.weights[k] * model.density(knots[i] + 0.5 * h * (base.nodes[k] + 1.0));
        seg[i] = acc;
    });
    CdfTable tab;
    const std::size_t n = knots.size();
    tab.x.resize(2 * n - 1);
    tab.cdf.resize(2 * n - 1);
    tab.pdf.resize(2 * n - 1);
    // Center at index n-1; symmetric extension F(-t) = 1 - F(t).
    double acc = 0.5;
    tab.x[n - 1] = 0.0;
    tab.cdf[n - 1] = 0.5;
    tab.pdf[n - 1] = fk[0];
    for (std::size_t i = 1; i < n; ++i) {
        acc += seg[i - 1];
        tab.x[n - 1 + i] = knots[i];
        tab.cdf[n - 1 + i] = acc;
        tab.pdf[n - 1 + i] = fk[i];
        tab.x[n - 1 - i] = -knots[i];
        tab.cdf[n - 1 - i] = 1.0 - acc;
        tab.pdf[n - 1 - i] = fk[i];
    }
    return tab;
}

DetResult one_sided_sup_cdf(double t, double a, const NumericsConfig& cfg) {
    cfg.validate();
    if (!(t > 0) || !std::isfinite(a)) throw ConfigError("one_sided_sup_cdf: need t > 0 and finite a");
    const auto rule = legendre_on(cfg.quad_n, 0.0, std::max(0.0, -2.0 * a) + cfg.trunc_pad + 4.0);
    return det_fredholm(sup_reduced_kernel(t, a), rule, cfg.tol);
}

DetResult joint_sup_point_cdf(double t, double s, double a, double b, const NumericsConfig& cfg,
                              SupPointRoute route) {
    cfg.validate();
    if (!(t > 0) || !(s > 0)) throw ConfigError("joint_sup_point_cdf: need t > 0 and s > 0");
    const double len = cfg.trunc_pad + 4.0;
    if (route == SupPointRoute::scalar) {
        const double lo_a = std::max(0.0, -2.0 * a);
        return det_fredholm(sup_point_reduced_kernel(t, s, a, b), legendre_on(cfg.quad_n, 0.0, lo_a + len), cfg.tol);
    }
    const auto q = q_composed_kernels(a, t, s, b, true);
    const auto r = legendre_on(cfg.quad_n, 0.0, len);
    return det_block2(q.kernel, {r, r}, cfg.tol);
}

DetResult two_time_cdf(double t0, double x0, double t1, double x1, const NumericsConfig& cfg) {
    cfg.validate();
    if (!(t1 > t0)) throw ConfigError("two_time_cdf: need t0 < t1");
    const double gap = t1 - t0;
    if (gap < 0.05) throw ConfigError("two_time_cdf: time gap must be >= 0.05");
    if (!std::isfinite(x0) || !std::isfinite(x1)) throw DomainError("two_time_cdf: non-finite level");
    BlockKernel bk;
    const double xs[2] = {x0, x1};
    bk.entries[0][0] = airy_kernel(x0);
    bk.entries[1][1] = airy_kernel(x1);
    // (t0 row, t1 column): -e^{-gap H}(I - K_Ai); (t1 row, t0 column): e^{gap H} K_Ai.
    bk.entries[0][1].block = [=](const std::vector<double>& us, const std::vector<double>& vs) {
        std::vector<double> a(us), b(vs);
        for (auto& v : a) v += xs[0];
        for (auto& v : b) v += xs[1];
        return Matrix(-semigroup_matrix(-gap, a, b));
    };
    bk.entries[1][0].block = [=](const std::vector<double>& us, const std::vector<double>& vs) {
        std::vector<double> a(us), b(vs);
        for (auto& v : a) v += xs[1];
        for (auto& v : b) v += xs[0];
        return semigroup_matrix(gap, a, b);
    };
    const auto r0 = legendre_on(cfg.quad_n, 0.0, std::max(x0, 0.0) - x0 + cfg.trunc_pad);
    const auto r1 = legendre_on(cfg.quad_n, 0.0, std::max(x1, 0.0) - x1 + cfg.trunc_pad);
    return det_block2(bk, {r0, r1}, cfg.tol);
}

}  // namespace polymer

#include "polymer/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "polymer/airy.hpp"
#include "polymer/error.hpp"

namespace polymer {
namespace {

constexpr double kDiagBand = 0.1;  // |x - y| below this uses the series branch
constexpr int kDiagTerms = 24;

const double kCbrtHalf = std::cbrt(0.5);

double zeta_pos(double x) { return x > 0 ? (2.0 / 3.0) * x * std::sqrt(x) : 0.0; }

double phi(double x) { return std::sqrt(1.0 + x * x); }

// Panel rule for l-integrals of products of two shifted Airy functions.
QuadratureRule lambda_rule(double lo, double hi) { return composite_rule(lo, hi, 0.5, 16); }

// Upper l-cutoff for int_0^inf e^{g l} Ai(x+l) Ai(y+l) dl given the smaller shift.
double lambda_cutoff(double growth, double min_shift) {
    DecayDescriptor d;
    d.lo = 0.0;
    d.growth = growth;
    d.rate = 4.0 / 3.0;
    d.shift = min_shift;
    // Oscillatory region l < -min_shift carries no decay; the envelope starts after it.
    const double start = std::max(0.0, -min_shift);
    d.lo = start;
    return choose_truncation(d, 1e-18, 2.0).hi;
}

// e^{sH}K (s > 0) or e^{-sH}K (s < 0) restricted to l >= 0: int_0^inf e^{-s l} Ai Ai dl,
// returned relative to e^{-zeta(x+) - zeta(y+)}.
Scaled half_line_scaled(double s, double x, double y) {
    const double zx = zeta_pos(x), zy = zeta_pos(y);
    const double cut = lambda_cutoff(std::max(0.0, -s), std::min(x, y));
    const auto r = lambda_rule(0.0, cut);
    double acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double l = r.nodes[k];
        double as, aps, za, bs, bps, zb;
        airy_pair_scaled(x + l, as, aps, za);
        airy_pair_scaled(y + l, bs, bps, zb);
        acc += r.weights[k] * as * bs * std::exp(-s * l - za - zb + zx + zy);
    }
    return {acc, -zx - zy};
}

// int_{-inf}^0 e^{s l} Ai(x+l) Ai(y+l) dl, s > 0, by direct quadrature.
double lower_half_direct(double s, double x, double y) {
    const double lo = -40.0 / s - 2.0;
    const auto r = lambda_rule(lo, 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double l = r.nodes[k];
        acc += r.weights[k] * std::exp(s * l) * ai(x + l) * ai(y + l);
    }
    return acc;
}

bool use_direct_lower(double s, double x, double y) {
    const double mx = std::max(x, y);
    return mx < 0.0 && s * (-mx) > 3.0;
}

// Taylor coefficients of the scaled Airy function about m.
void airy_taylor_scaled(double m, double* c, int n, double& zeta) {
    double as, aps;
    airy_pair_scaled(m, as, aps, zeta);
    c[0] = as;
    c[1] = aps;
    if (n > 2) c[2] = 0.5 * m * c[0];
    for (int k = 1; k + 2 < n; ++k) c[k + 2] = (m * c[k] + c[k - 1]) / ((k + 1.0) * (k + 2.0));
}

}  // namespace

double Scaled::value() const { return mant * std::exp(expo); }
double Scaled::times_exp(double c) const { return mant == 0.0 ? 0.0 : mant * std::exp(expo + c); }

Scaled k_airy_scaled(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("k_airy: non-finite argument");
    if (std::abs(x - y) >= kDiagBand) {
        double ax, apx, zx, ay, apy, zy;
        airy_pair_scaled(x, ax, apx, zx);
        airy_pair_scaled(y, ay, apy, zy);
        return {(ax * apy - apx * ay) / (x - y), -zx - zy};
    }
    // N(d) = f(d) f'(-d) - f'(d) f(-d) with f(h) = Ai(m + h); K = N / (2d).
    const double m = 0.5 * (x + y);
    const double d = 0.5 * (x - y);
    double c[kDiagTerms + 2];
    double zm;
    airy_taylor_scaled(m, c, kDiagTerms + 2, zm);
    double sum = 0.0;
    double dp = 1.0;
    const double d2 = d * d;
    for (int n = 1; n <= kDiagTerms; n += 2) {
        double e = 0.0;
        for (int j = 0; j <= n; ++j) {
            const int k = n - j;
            const double sgn = (k % 2 == 0) ? 2.0 : -2.0;
            e += sgn * c[j] * (k + 1.0) * c[k + 1];
        }
        sum += 0.5 * e * dp;
        dp *= d2;
    }
    return {sum, -2.0 * zm};
}

double k_airy(double x, double y) {
    // Evaluate in a fixed argument order so K(x, y) == K(y, x) bitwise.
    if (x < y) std::swap(x, y);
    return k_airy_scaled(x, y).value();
}

double k_airy_quadrature(double x, double y) {
    const double cut = std::max(0.0, -std::min(x, y)) + 20.0;
    const auto r = lambda_rule(0.0, cut);
    double acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) acc += r.weights[k] * ai(x + r.nodes[k]) * ai(y + r.nodes[k]);
    return acc;
}

KernelFn airy_kernel(double shift) {
    KernelFn k;
    k.eval = [shift](double x, double y) { return k_airy(x + shift, y + shift); };
    return k;
}

double b_shift(double m, double x, double y) { return ai(x + y + m); }

KernelFn b_kernel(double m) {
    KernelFn k;
    k.eval = [m](double x, double y) { return ai(x + y + m); };
    return k;
}

double heat_kernel_log(double s, double x, double y) {
    if (!(s > 0)) throw ConfigError("heat_kernel: s must be positive");
    const double d = x - y;
    return -0.5 * std::log(4.0 * std::numbers::pi * s) - d * d / (4.0 * s) - 0.5 * s * (x + y) + s * s * s / 12.0;
}

double heat_kernel(double s, double x, double y) { return std::exp(heat_kernel_log(s, x, y)); }

double semigroup_kernel(double s, double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("semigroup_kernel: non-finite argument");
    if (s == 0.0) throw ConfigError("semigroup_kernel: s must be nonzero");
    if (x < y) std::swap(x, y);
    if (s > 0) return half_line_scaled(s, x, y).value();
    const double t = -s;
    if (use_direct_lower(t, x, y)) return lower_half_direct(t, x, y);
    return heat_kernel(t, x, y) - half_line_scaled(-t, x, y).value();
}

double semigroup_quadrature(double s, double x, double y) {
    if (s == 0.0) throw ConfigError("semigroup_quadrature: s must be nonzero");
    if (s < 0) return lower_half_direct(-s, x, y);
    const double cut = std::max(0.0, -std::min(x, y)) + 24.0;
    const auto r = composite_rule(0.0, cut, 0.25, 16);
    double acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double l = r.nodes[k];
        acc += r.weights[k] * std::exp(-s * l) * ai(x + l) * ai(y + l);
    }
    return acc;
}

KernelFn semigroup(double s) {
    if (s == 0.0) throw ConfigError("semigroup: s must be nonzero");
    KernelFn k;
    k.eval = [s](double x, double y) { return semigroup_kernel(s, x, y); };
    k.block = [s](const std::vector<double>& xs, const std::vector<double>& ys) {
        return semigroup_matrix(s, xs, ys);
    };
    return k;
}

Matrix semigroup_matrix(double s, const std::vector<double>& xs, const std::vector<double>& ys,
                        const std::vector<double>& wx_in, const std::vector<double>& wy_in) {
    if (s == 0.0) throw ConfigError("semigroup_matrix: s must be nonzero");
    const auto nx = static_cast<Eigen::Index>(xs.size());
    const auto ny = static_cast<Eigen::Index>(ys.size());
    std::vector<double> wx = wx_in.empty() ? std::vector<double>(xs.size(), 0.0) : wx_in;
    std::vector<double> wy = wy_in.empty() ? std::vector<double>(ys.size(), 0.0) : wy_in;
    if (wx.size() != xs.size() || wy.size() != ys.size()) throw ConfigError("semigroup_matrix: weight length mismatch");
    if (xs.empty() || ys.empty()) return Matrix(nx, ny);

    double mn = std::min(*std::min_element(xs.begin(), xs.end()), *std::min_element(ys.begin(), ys.end()));
    // Half-line part int_0^inf e^{-sigma l} Ai Ai dl with sigma = s (s > 0) or s (< 0, growth).
    const double sigma = s;
    const double cut = lambda_cutoff(std::max(0.0, -sigma), mn);
    const auto r = lambda_rule(0.0, cut);
    const auto nl = static_cast<Eigen::Index>(r.size());
    auto fill = [&](const std::vector<double>& pts, Matrix& a, std::vector<double>& rho) {
        a.resize(static_cast<Eigen::Index>(pts.size()), nl);
        rho.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            rho[i] = zeta_pos(pts[i]);
            for (Eigen::Index k = 0; k < nl; ++k) {
                double as, aps, z;
                airy_pair_scaled(pts[i] + r.nodes[static_cast<std::size_t>(k)], as, aps, z);
                a(static_cast<Eigen::Index>(i), k) = as * std::exp(rho[i] - z);
            }
        }
    };
    Matrix ax, ay;
    std::vector<double> rx, ry;
    fill(xs, ax, rx);
    fill(ys, ay, ry);
    Vector w(nl);
    for (Eigen::Index k = 0; k < nl; ++k)
        w[k] = r.weights[static_cast<std::size_t>(k)] * std::exp(-sigma * r.nodes[static_cast<std::size_t>(k)]);
    const Matrix core = ax * w.asDiagonal() * ay.transpose();

    Matrix out(nx, ny);
    for (Eigen::Index j = 0; j < ny; ++j) {
        for (Eigen::Index i = 0; i < nx; ++i) {
            const auto iu = static_cast<std::size_t>(i), ju = static_cast<std::size_t>(j);
            const double c = wx[iu] + wy[ju];
            const double half = core(i, j) == 0.0 ? 0.0 : core(i, j) * std::exp(c - rx[iu] - ry[ju]);
            if (s > 0) {
                out(i, j) = half;
            } else {
                const double t = -s;
                if (use_direct_lower(t, xs[iu], ys[ju]))
                    out(i, j) = lower_half_direct(t, xs[iu], ys[ju]) * std::exp(c);
                else
                    out(i, j) = std::exp(heat_kernel_log(t, xs[iu], ys[ju]) + c) - half;
            }
        }
    }
    return out;
}

namespace {

using cplx = std::complex<double>;

constexpr int kAsymTerms = 16;

std::array<double, kAsymTerms> airy_u_coeffs() {
    std::array<double, kAsymTerms> u{};
    u[0] = 1.0;
    for (int k = 1; k < kAsymTerms; ++k)
        u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
    return u;
}

// e^{-i zeta(Z)} [Ai(-u) - i Bi(-u)] with u = Z - l, zeta(Z) = (2/3) Z^{3/2}, |u| >= 30.
// The phase difference is formed without cancellation so large Z keeps full accuracy.
cplx reduced_w(cplx big_z, double l) {
    static const auto uk = airy_u_coeffs();
    const cplx u = big_z - l;
    const cplx u32 = u * std::sqrt(u);
    const cplx z32 = big_z * std::sqrt(big_z);
    const cplx zeta = (2.0 / 3.0) * u32;
    cplx sum = 0.0, term = 1.0;
    const cplx step = cplx(0.0, -1.0) / zeta;
    for (int k = 0; k < kAsymTerms; ++k) {
        sum += uk[static_cast<std::size_t>(k)] * term;
        term *= step;
    }
    const cplx dphase = (2.0 / 3.0) * (-3.0 * big_z * big_z * l + 3.0 * big_z * l * l - l * l * l) / (u32 + z32);
    return sum * std::exp(cplx(0.0, 1.0) * (dphase - std::numbers::pi / 4)) /
           (std::sqrt(std::numbers::pi) * std::pow(u, 0.25));
}

// e^{-i zeta(Z)} int_0^lmax e^{-a l} Ai(x + l) [Ai - i Bi](-(Z - l)) dl; its real part
// times e^{i zeta(Z)} is S_a(x, -Z) for real Z.
cplx reduced_transform(double a, double x, double lmax, cplx big_z) {
    const double h = std::min(0.25, 4.0 / std::sqrt(std::abs(big_z)));
    const auto r = composite_rule(0.0, lmax, h, 16);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double l = r.nodes[k];
        acc += r.weights[k] * exp_times_ai(-a * l, x + l) * reduced_w(big_z, l);
    }
    return acc;
}

}  // namespace

double semigroup_composition(double a, double b, double x, double y) {
    if (!(a > 0) || !(b > 0)) throw ConfigError("semigroup_composition: need a, b > 0");
    if (!(std::abs(x) <= 5.0) || !(std::abs(y) <= 5.0)) throw ConfigError("semigroup_composition: need |x|, |y| <= 5");
    const double lmax = 31.0;
    const double z1 = lmax + 40.0;

    const auto zr = composite_rule(-z1, 14.0, 0.25, 16);
    const Matrix left = semigroup_matrix(a, {x}, zr.nodes);
    const Matrix right = semigroup_matrix(b, zr.nodes, {y});
    double direct = 0.0;
    for (std::size_t j = 0; j < zr.size(); ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        direct += zr.weights[j] * left(0, jj) * right(jj, 0);
    }

    // z < -z1. Non-oscillating half on Z = z1 / v^2; the e^{2i zeta} half along Z = z1 + i r.
    constexpr int kTailNodes = 24;
    const auto vr = legendre_on(kTailNodes, 0.0, 1.0);
    double smooth = 0.0;
    for (std::size_t k = 0; k < vr.size(); ++k) {
        const double v = vr.nodes[k];
        const double big_z = z1 / (v * v);
        const cplx ta = reduced_transform(a, x, lmax, big_z);
        const cplx tb = a == b && x == y ? ta : reduced_transform(b, y, lmax, big_z);
        smooth += vr.weights[k] * 2.0 * z1 / (v * v * v) * 0.5 * std::real(ta * std::conj(tb));
    }
    const auto rr = legendre_on(kTailNodes, 0.0, 30.0 / std::sqrt(z1));
    double osc = 0.0;
    for (std::size_t k = 0; k < rr.size(); ++k) {
        const cplx big_z(z1, rr.nodes[k]);
        const cplx ta = reduced_transform(a, x, lmax, big_z);
        const cplx tb = a == b && x == y ? ta : reduced_transform(b, y, lmax, big_z);
        const cplx phase = std::exp(cplx(0.0, 4.0 / 3.0) * big_z * std::sqrt(big_z));
        osc += rr.weights[k] * 0.5 * std::real(cplx(0.0, 1.0) * ta * tb * phase);
    }
    return direct + smooth + osc;
}

double extended_kernel(double t, double xi, double tp, double xip) {
    if (t == tp) return k_airy(xi, xip);
    if (t > tp) return semigroup_kernel(t - tp, xi, xip);
    return -semigroup_kernel(-(tp - t), xi, xip);
}

double psi(double t, double m, double x) {
    const double z = x + m + t * t;
    double as, aps, zeta;
    airy_pair_scaled(z, as, aps, zeta);
    const double v = t * as + aps;
    return v == 0.0 ? 0.0 : 2.0 * v * std::exp(x * t - zeta);
}

PsiVector psi_vector(double t, double m, const QuadratureRule& rule) {
    PsiVector p{t, m, {}};
    p.samples.resize(rule.size());
    const double c = std::cbrt(2.0);
    for (std::size_t i = 0; i < rule.size(); ++i) p.samples[i] = psi(t, m, c * rule.nodes[i]);
    return p;
}

double ReflectionSpec::weight(double x) const { return std::exp(2.0 * t * (x - edge())); }

KernelFn apply_q_left(const ReflectionSpec& q, const KernelFn& k) {
    KernelFn out;
    out.eval = [q, k](double x, double y) {
        if (x < q.edge()) return 0.0;
        return k.eval(x, y) + q.weight(x) * k.eval(q.mirror(x), y);
    };
    return out;
}

QComposed q_composed_kernels(double a, double t, double s, double b, bool reflection) {
    if (!(t > 0) || !(s > 0)) throw ConfigError("q_composed_kernels: need t > 0 and s > 0");
    const double c1 = a + t * t;
    const double c2 = b + (t + s) * (t + s);
    QComposed q;
    q.c1 = c1;
    q.c2 = c2;
    auto& e = q.kernel.entries;

    e[0][0].eval = [=](double u, double v) {
        const double x = c1 + u, y = c1 + v;
        double val = (x >= y ? k_airy_scaled(x, y) : k_airy_scaled(y, x)).times_exp(2.0 * t * (y - x));
        if (reflection) {
            const double xr = 2.0 * c1 - x;
            val += (xr >= y ? k_airy_scaled(xr, y) : k_airy_scaled(y, xr)).times_exp(2.0 * t * (y - c1));
        }
        return phi(y) / phi(x) * val;
    };
    e[1][1].eval = [=](double u, double v) {
        const double x = c2 + u, y = c2 + v;
        return phi(y) / phi(x) * (x >= y ? k_airy_scaled(x, y) : k_airy_scaled(y, x)).times_exp(2.0 * t * (y - x));
    };
    e[0][1].block = [=](const std::vector<double>& us, const std::vector<double>& vs) {
        std::vector<double> xs(us.size()), ys(vs.size()), wx(us.size()), wy(vs.size());
        for (std::size_t i = 0; i < us.size(); ++i) {
            xs[i] = c1 + us[i];
            wx[i] = -2.0 * t * xs[i];
        }
        for (std::size_t j = 0; j < vs.size(); ++j) {
            ys[j] = c2 + vs[j];
            wy[j] = 2.0 * t * ys[j];
        }
        Matrix m = semigroup_matrix(-s, xs, ys, wx, wy);
        if (reflection) {
            std::vector<double> xr(us.size()), wr(us.size(), -2.0 * t * c1);
            for (std::size_t i = 0; i < us.size(); ++i) xr[i] = 2.0 * c1 - xs[i];
            m += semigroup_matrix(-s, xr, ys, wr, wy);
        }
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                m(i, j) *= -phi(ys[static_cast<std::size_t>(j)]) / phi(xs[static_cast<std::size_t>(i)]);
        return m;
    };
    e[0][1].eval = [blk = e[0][1].block](double u, double v) { return blk({u}, {v})(0, 0); };
    e[1][0].block = [=](const std::vector<double>& us, const std::vector<double>& vs) {
        std::vector<double> xs(us.size()), ys(vs.size()), wx(us.size()), wy(vs.size());
        for (std::size_t i = 0; i < us.size(); ++i) {
            xs[i] = c2 + us[i];
            wx[i] = -2.0 * t * xs[i];
        }
        for (std::size_t j = 0; j < vs.size(); ++j) {
            ys[j] = c1 + vs[j];
            wy[j] = 2.0 * t * ys[j];
        }
        Matrix m = semigroup_matrix(s, xs, ys, wx, wy);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                m(i, j) *= phi(ys[static_cast<std::size_t>(j)]) / phi(xs[static_cast<std::size_t>(i)]);
        return m;
    };
    e[1][0].eval = [blk = e[1][0].block](double u, double v) { return blk({u}, {v})(0, 0); };
    return q;
}

namespace {

// e^{t(l - m)} K_Ai(l + c, m + c) + 2^{-1/3} Ai(2^{-1/3}(l + m + 2a))
//   - int_0^W e^{t(l - m) - 2tw} Ai(l + c - w) Ai(c + w + m) dw,  c = a + t^2.
Matrix sup_reduced_matrix(double t, double a, const std::vector<double>& ls, const std::vector<double>& ms) {
    const double c = a + t * t;
    const auto nl = static_cast<Eigen::Index>(ls.size());
    const auto nm = static_cast<Eigen::Index>(ms.size());
    const auto wr = composite_rule(0.0, 30.0, 2.5, 10);
    const auto nw = static_cast<Eigen::Index>(wr.size());
    Matrix left(nl, nw), right(nw, nm);
    for (Eigen::Index k = 0; k < nw; ++k) {
        const double w = wr.nodes[static_cast<std::size_t>(k)];
        for (Eigen::Index i = 0; i < nl; ++i)
            left(i, k) = exp_times_ai(t * ls[static_cast<std::size_t>(i)] - 2.0 * t * w, ls[static_cast<std::size_t>(i)] + c - w);
        for (Eigen::Index j = 0; j < nm; ++j)
            right(k, j) = wr.weights[static_cast<std::size_t>(k)] *
                          exp_times_ai(-t * ms[static_cast<std::size_t>(j)], c + w + ms[static_cast<std::size_t>(j)]);
    }
    Matrix out = -(left * right);
    for (Eigen::Index j = 0; j < nm; ++j) {
        const double m = ms[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < nl; ++i) {
            const double l = ls[static_cast<std::size_t>(i)];
            const double x = l + c, y = m + c;
            out(i, j) += (x >= y ? k_airy_scaled(x, y) : k_airy_scaled(y, x)).times_exp(t * (l - m));
            out(i, j) += kCbrtHalf * ai(kCbrtHalf * (l + m + 2.0 * a));
        }
    }
    return out;
}

// T3 - T2 part of the sup/point kernel, see sup_point_reduced_kernel.
Matrix point_correction_matrix(double t, double s, double a, double b, const std::vector<double>& ls,
                               const std::vector<double>& ms) {
    const double c1 = a + t * t;
    const double c2 = b + (t + s) * (t + s);
    const double ts = t + s;
    const auto nl = static_cast<Eigen::Index>(ls.size());
    const auto nm = static_cast<Eigen::Index>(ms.size());
    const auto zr = composite_rule(c1, c1 + 30.0, 2.5, 10);
    const auto yr = composite_rule(c2, c2 + 30.0, 2.5, 10);
    const auto nz = static_cast<Eigen::Index>(zr.size());
    const auto ny = static_cast<Eigen::Index>(yr.size());
    // H(z, y) = h_s(z, y) + e^{2t(z - c1)} h_s(2c1 - z, y)
    Matrix h(nz, ny);
    for (Eigen::Index j = 0; j < ny; ++j)
        for (Eigen::Index i = 0; i < nz; ++i) {
            const double z = zr.nodes[static_cast<std::size_t>(i)], y = yr.nodes[static_cast<std::size_t>(j)];
            h(i, j) = std::exp(heat_kernel_log(s, z, y)) + std::exp(heat_kernel_log(s, 2.0 * c1 - z, y) + 2.0 * t * (z - c1));
        }
    Matrix lz(nl, nz);
    for (Eigen::Index k = 0; k < nz; ++k)
        for (Eigen::Index i = 0; i < nl; ++i) {
            const double l = ls[static_cast<std::size_t>(i)];
            lz(i, k) = zr.weights[static_cast<std::size_t>(k)] * exp_times_ai(t * l, l + zr.nodes[static_cast<std::size_t>(k)]);
        }
    Matrix ry(ny, nm);
    for (Eigen::Index j = 0; j < nm; ++j)
        for (Eigen::Index k = 0; k < ny; ++k) {
            const double m = ms[static_cast<std::size_t>(j)];
            ry(k, j) = yr.weights[static_cast<std::size_t>(k)] * exp_times_ai(-ts * m, yr.nodes[static_cast<std::size_t>(k)] + m);
        }
    Matrix out = -(lz * h * ry);
    for (Eigen::Index j = 0; j < nm; ++j) {
        const double m = ms[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < nl; ++i) {
            const double l = ls[static_cast<std::size_t>(i)];
            const double x = l + c2, y = m + c2;
            out(i, j) += (x >= y ? k_airy_scaled(x, y) : k_airy_scaled(y, x)).times_exp(ts * (l - m));
        }
    }
    return out;
}

}  // namespace

KernelFn sup_reduced_kernel(double t, double a) {
    if (!(t > 0)) throw ConfigError("sup_reduced_kernel: t must be positive");
    KernelFn k;
    k.block = [t, a](const std::vector<double>& ls, const std::vector<double>& ms) {
        return sup_reduced_matrix(t, a, ls, ms);
    };
    k.eval = [t, a](double l, double m) { return sup_reduced_matrix(t, a, {l}, {m})(0, 0); };
    return k;
}

KernelFn sup_point_reduced_kernel(double t, double s, double a, double b) {
    if (!(t > 0) || !(s > 0)) throw ConfigError("sup_point_reduced_kernel: need t > 0 and s > 0");
    KernelFn k;
    k.block = [=](const std::vector<double>& ls, const std::vector<double>& ms) {
        return Matrix(sup_reduced_matrix(t, a, ls, ms) + point_correction_matrix(t, s, a, b, ls, ms));
    };
    k.eval = [blk = k.block](double l, double m) { return blk({l}, {m})(0, 0); };
    return k;
}

}  // namespace polymer

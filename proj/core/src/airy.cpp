#include "polymer/airy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <quadmath.h>

#include "polymer/error.hpp"
#include "polymer/quadrature.hpp"

namespace polymer {
namespace {

constexpr double kAnchorLo = -12.0;
constexpr double kAnchorHi = 10.0;
constexpr double kAnchorStep = 0.5;
constexpr int kAnchorCount = 45;  // (hi - lo) / step + 1
constexpr int kTaylorTerms = 40;

struct Anchor {
    double ai;
    double aip;
};

// Maclaurin series from the ODE recurrence a_{k+3} = a_k / ((k+2)(k+3)),
// summed in binary128 so the cancellation near x = +10 (about e^{42}) still
// leaves ~16 correct digits.
Anchor maclaurin_quad(double xd) {
    const __float128 ai0 = 0.355028053887817239260063186004183176Q;
    const __float128 aip0 = -0.258819403792806798405183560189203963Q;
    const __float128 x = xd;
    // a[k] for k = 0, 1, 2 then march.
    __float128 a0 = ai0, a1 = aip0, a2 = 0;
    __float128 sum = a0 + a1 * x;
    __float128 dsum = a1;
    __float128 xp = x;  // x^{k-1} for the term about to be added at k
    int k = 2;
    __float128 ak = a2;
    __float128 prev3[3] = {a0, a1, a2};
    for (; k < 2000; ++k) {
        if (k >= 3) {
            ak = prev3[0] / (static_cast<__float128>(k - 1) * k);
            prev3[0] = prev3[1];
            prev3[1] = prev3[2];
            prev3[2] = ak;
        }
        const __float128 dterm = k * ak * xp;
        xp *= x;
        const __float128 term = ak * xp;
        sum += term;
        dsum += dterm;
        if (k > 20 && k % 3 == 1 && fabsq(term) < 1e-40Q && fabsq(dterm) < 1e-40Q) break;
    }
    return {static_cast<double>(sum), static_cast<double>(dsum)};
}

const std::array<Anchor, kAnchorCount>& anchors() {
    static const std::array<Anchor, kAnchorCount> table = [] {
        std::array<Anchor, kAnchorCount> t{};
        for (int i = 0; i < kAnchorCount; ++i) t[i] = maclaurin_quad(kAnchorLo + kAnchorStep * i);
        return t;
    }();
    return table;
}

// Local Taylor expansion of the Airy ODE about x0: (k+1)(k+2) c_{k+2} = x0 c_k + c_{k-1}.
void taylor(double x, double& ai, double& aip) {
    const auto& tab = anchors();
    int i = static_cast<int>(std::lround((x - kAnchorLo) / kAnchorStep));
    if (i < 0) i = 0;
    if (i >= kAnchorCount) i = kAnchorCount - 1;
    const double x0 = kAnchorLo + kAnchorStep * i;
    const double h = x - x0;
    double c[kTaylorTerms + 1];
    c[0] = tab[i].ai;
    c[1] = tab[i].aip;
    c[2] = 0.5 * x0 * c[0];
    for (int k = 1; k + 2 <= kTaylorTerms; ++k) c[k + 2] = (x0 * c[k] + c[k - 1]) / ((k + 1.0) * (k + 2.0));
    double s = c[kTaylorTerms];
    double ds = kTaylorTerms * c[kTaylorTerms];
    for (int k = kTaylorTerms - 1; k >= 1; --k) {
        s = s * h + c[k];
        ds = ds * h + k * c[k];
    }
    ai = s * h + c[0];
    aip = ds;
}

// u_k, v_k of the standard large-argument expansions.
struct AsymCoeffs {
    static constexpr int n = 60;
    double u[n];
    double v[n];
    AsymCoeffs() {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 1; k < n; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
            v[k] = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u[k];
        }
    }
};

const AsymCoeffs& asym() {
    static const AsymCoeffs c;
    return c;
}

// x > kAnchorHi: scaled values (times e^{zeta}).
void asym_positive(double x, double& ai_s, double& aip_s) {
    const auto& c = asym();
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double su = 0, sv = 0, p = 1.0;
    double last = 1e300;
    for (int k = 0; k < AsymCoeffs::n; ++k) {
        const double tu = c.u[k] * p;
        if (std::abs(tu) > last) break;  // divergent tail
        last = std::abs(tu);
        const double sign = (k & 1) ? -1.0 : 1.0;
        su += sign * tu;
        sv += sign * c.v[k] * p;
        if (last < 1e-18) break;
        p /= zeta;
    }
    const double x14 = std::sqrt(std::sqrt(x));
    const double pref = 0.5 / std::sqrt(std::numbers::pi);
    ai_s = pref / x14 * su;
    aip_s = -pref * x14 * sv;
}

// (2/3) z^{3/2} - pi/4 reduced modulo 2 pi. The rounding errors of the square
// root and the products are carried with fma so the phase stays accurate to a
// few ulp of pi even when zeta is in the thousands.
double reduced_phase(double z) {
    const double s = std::sqrt(z);
    const double s_lo = std::fma(-s, s, z) / (2.0 * s);
    const double p = z * s;
    const double p_lo = std::fma(z, s, -p) + z * s_lo;
    constexpr double c_hi = 2.0 / 3.0;
    constexpr double c_lo = 3.700743415417188e-17;
    const double q = c_hi * p;
    const double q_lo = std::fma(c_hi, p, -q) + c_hi * p_lo + c_lo * p;
    constexpr double two_pi_hi = 6.283185307179586;
    constexpr double two_pi_lo = 2.4492935982947064e-16;
    const double k = std::nearbyint(q / two_pi_hi);
    const double r = std::fma(-k, two_pi_hi, q);
    return (r - k * two_pi_lo + q_lo) - 0.25 * std::numbers::pi;
}

// x < kAnchorLo: modulus/phase form.
void asym_negative(double x, double& ai, double& aip) {
    const auto& c = asym();
    const double z = -x;
    const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
    double ue = 0, uo = 0, ve = 0, vo = 0;
    double p = 1.0;
    double last = 1e300;
    for (int k = 0; k < AsymCoeffs::n; ++k) {
        const double tu = c.u[k] * p;
        if (std::abs(tu) > last) break;
        last = std::abs(tu);
        const int j = k / 2;
        const double sign = (j & 1) ? -1.0 : 1.0;
        if (k & 1) {
            uo += sign * tu;
            vo += sign * c.v[k] * p;
        } else {
            ue += sign * tu;
            ve += sign * c.v[k] * p;
        }
        if (last < 1e-18) break;
        p /= zeta;
    }
    const double th = reduced_phase(z);
    const double cs = std::cos(th), sn = std::sin(th);
    const double z14 = std::sqrt(std::sqrt(z));
    const double rp = 1.0 / std::sqrt(std::numbers::pi);
    ai = rp / z14 * (cs * ue + sn * uo);
    aip = rp * z14 * (sn * ve - cs * vo);
}

void check_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("airy: non-finite argument");
}

}  // namespace

void airy_pair_scaled(double x, double& ai_s, double& aip_s, double& zeta) {
    check_finite(x);
    if (x > kAnchorHi) {
        zeta = (2.0 / 3.0) * x * std::sqrt(x);
        asym_positive(x, ai_s, aip_s);
        return;
    }
    double a, ap;
    if (x < kAnchorLo - 0.25) {
        asym_negative(x, a, ap);
    } else {
        taylor(x, a, ap);
    }
    if (x > 0) {
        zeta = (2.0 / 3.0) * x * std::sqrt(x);
        const double e = std::exp(zeta);
        ai_s = a * e;
        aip_s = ap * e;
    } else {
        zeta = 0.0;
        ai_s = a;
        aip_s = ap;
    }
}

void airy_pair(double x, double& ai, double& aip) {
    check_finite(x);
    if (x > kAnchorHi) {
        double s, sp, zeta;
        airy_pair_scaled(x, s, sp, zeta);
        const double e = std::exp(-zeta);
        ai = s * e;
        aip = sp * e;
        return;
    }
    if (x < kAnchorLo - 0.25) {
        asym_negative(x, ai, aip);
    } else {
        taylor(x, ai, aip);
    }
}

AiryValue airy_ai(double x) {
    double s, sp, zeta;
    airy_pair_scaled(x, s, sp, zeta);
    return {s * std::exp(-zeta), s};
}

AiryValue airy_ai_prime(double x) {
    double s, sp, zeta;
    airy_pair_scaled(x, s, sp, zeta);
    return {sp * std::exp(-zeta), sp};
}

double exp_times_ai(double c, double x) {
    double s, sp, zeta;
    airy_pair_scaled(x, s, sp, zeta);
    return s * std::exp(c - zeta);
}

double exp_times_aip(double c, double x) {
    double s, sp, zeta;
    airy_pair_scaled(x, s, sp, zeta);
    return sp * std::exp(c - zeta);
}

double airy_convolution_check(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("airy_convolution_check: non-finite argument");
    // Ai(a+u) is negligible for a+u > 18, Ai(b-u) for b-u > 18.
    const double lo = b - 18.0;
    const double hi = 18.0 - a;
    const auto rule = composite_rule(lo, hi, 0.5, 20);
    double s = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        s += rule.weights[i] * ai(a + u) * ai(b - u);
    }
    const double c = std::cbrt(0.5);
    return std::abs(s - c * ai(c * (a + b)));
}

}  // namespace polymer

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include <polymer/error.hpp>
#include <polymer/quadrature.hpp>

#include "generators.hpp"

using namespace polymer;

namespace {

double integrate(const QuadratureRule& r, double (*f)(double)) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

double smooth(double x) { return std::exp(-x * x) * std::cos(3.0 * x) + 1.0 / (5.0 + x); }

}  // namespace

TEST(GaussLegendre, OnePoint) {
    const auto r = gauss_legendre(1);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.nodes[0], 0.0);
    EXPECT_DOUBLE_EQ(r.weights[0], 2.0);
}

TEST(GaussLegendre, TwoPoints) {
    const auto r = gauss_legendre(2);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
    EXPECT_NEAR(r.weights[1], 1.0, 1e-15);
}

TEST(GaussLegendre, Exponential40) {
    const double v = integrate(gauss_legendre(40), [](double x) { return std::exp(x); });
    EXPECT_NEAR(v, std::exp(1.0) - std::exp(-1.0), 1e-14);
}

TEST(GaussLegendre, RuleInvariants) {
    prop::for_all(60, 21, [](prop::Gen& g, std::ostringstream& note) {
        const int n = g.integer(1, 400);
        const double lo = g.uniform(-50.0, 50.0);
        const double hi = lo + g.uniform(1e-3, 100.0);
        const auto r = legendre_on(n, lo, hi);
        note << "n = " << n << " on (" << lo << ", " << hi << ")";
        if (static_cast<int>(r.size()) != n) return false;
        double sum = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!(r.weights[i] > 0.0)) return false;
            if (!(r.nodes[i] > lo && r.nodes[i] < hi)) return false;
            if (i > 0 && !(r.nodes[i] > r.nodes[i - 1])) return false;
            sum += r.weights[i];
        }
        return std::abs(sum - (hi - lo)) <= 1e-13 * (hi - lo);
    });
}

TEST(GaussLegendre, PolynomialExactness) {
    for (int n : {1, 2, 3, 5, 8, 13, 20}) {
        const auto r = gauss_legendre(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
            const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            EXPECT_LE(std::abs(s - exact), 1e-12 * std::max(1.0, exact)) << "n = " << n << ", k = " << k;
        }
    }
}

TEST(GaussLegendre, RangeChecks) {
    EXPECT_THROW(gauss_legendre(0), ConfigError);
    EXPECT_THROW(gauss_legendre(2001), ConfigError);
    EXPECT_NO_THROW(gauss_legendre(2000));
}

TEST(GaussLegendre, DoublingSmokeTest) {
    const double a = integrate(legendre_on(20, -1.0, 1.5), smooth);
    const double b = integrate(legendre_on(40, -1.0, 1.5), smooth);
    EXPECT_LE(std::abs(a - b), 1e-12);
}

TEST(MapRule, IdentityOnReferenceInterval) {
    const auto r = gauss_legendre(7);
    const auto m = map_rule(r, -1.0, 1.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_DOUBLE_EQ(m.nodes[i], r.nodes[i]);
        EXPECT_DOUBLE_EQ(m.weights[i], r.weights[i]);
    }
}

TEST(MapRule, TwoPointToZeroTwo) {
    const auto m = map_rule(gauss_legendre(2), 0.0, 2.0);
    EXPECT_NEAR(m.nodes[0], 1.0 - 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(m.nodes[1], 1.0 + 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(m.weights[0], 1.0, 1e-15);
    EXPECT_NEAR(m.weights[1], 1.0, 1e-15);
    EXPECT_EQ(m.lo, 0.0);
    EXPECT_EQ(m.hi, 2.0);
}

TEST(MapRule, Quadratic) {
    const double v = integrate(legendre_on(20, 0.0, 5.0), [](double x) { return x * x; });
    EXPECT_NEAR(v, 125.0 / 3.0, 1e-12);
}

TEST(MapRule, RejectsBadInterval) {
    EXPECT_THROW(map_rule(gauss_legendre(3), 1.0, 1.0), ConfigError);
    EXPECT_THROW(map_rule(gauss_legendre(3), 2.0, 1.0), ConfigError);
    EXPECT_THROW(map_rule(gauss_legendre(3), 0.0, INFINITY), ConfigError);
}

TEST(CompositeRule, LayoutAndResample) {
    const auto r = composite_rule(-3.0, 7.0, 1.0, 12);
    EXPECT_EQ(r.panels, 10);
    EXPECT_EQ(r.per_panel, 12);
    EXPECT_EQ(r.size(), 120u);
    const double w = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
    EXPECT_NEAR(w, 10.0, 1e-13);
    const auto h = resample(r, 6);
    EXPECT_EQ(h.panels, 10);
    EXPECT_EQ(h.size(), 60u);
    EXPECT_NEAR(integrate(r, smooth), integrate(legendre_on(200, -3.0, 7.0), smooth), 1e-13);
    EXPECT_THROW(composite_rule(1.0, 0.0, 0.5, 4), ConfigError);
}

TEST(Truncation, AiryEnvelopeCutoff) {
    // (4/3) x^{3/2} = 14 ln 10
    const double expected = std::pow(14.0 * std::log(10.0) * 0.75, 2.0 / 3.0);
    const auto t = choose_truncation({}, 1e-14);
    EXPECT_NEAR(t.hi, expected, 1e-9);
    EXPECT_EQ(t.lo, 0.0);
    EXPECT_EQ(t.pad, 0.0);
}

TEST(Truncation, StationaryPointWithGrowth) {
    const double tt = 2.0;
    DecayDescriptor d;
    d.growth = 2.0 * tt;
    const double pad = 3.0;
    const auto r = choose_truncation(d, 1e-14, pad);
    // 4x - (4/3) x^{3/2} peaks at x = (c/2)^2 = 4.
    EXPECT_GE(r.hi, (d.growth / 2.0) * (d.growth / 2.0) + pad);
    EXPECT_GE(r.hi, 16.0 + pad);
}

TEST(Truncation, MonotoneInTolerance) {
    EXPECT_LT(choose_truncation({}, 1e-6).hi, choose_truncation({}, 1e-14).hi);
    prop::for_all(100, 22, [](prop::Gen& g, std::ostringstream& note) {
        DecayDescriptor d;
        d.growth = g.uniform(0.0, 8.0);
        d.rate = g.uniform(0.3, 2.0);
        d.shift = g.uniform(0.0, 5.0);
        const double t1 = std::pow(10.0, g.uniform(-15.0, -2.0));
        const double t2 = t1 * std::pow(10.0, -g.uniform(0.5, 5.0));
        note << "growth " << d.growth << " rate " << d.rate << " tol " << t1 << " vs " << t2;
        return choose_truncation(d, t2).hi > choose_truncation(d, t1).hi;
    });
}

TEST(Truncation, RejectsBadInput) {
    EXPECT_THROW(choose_truncation({}, 0.0), ConfigError);
    EXPECT_THROW(choose_truncation({}, 0.1), ConfigError);
    DecayDescriptor flat;
    flat.rate = 0.0;
    EXPECT_THROW(choose_truncation(flat, 1e-10), ConfigError);
    EXPECT_THROW(choose_truncation({}, 1e-10, -1.0), ConfigError);
}

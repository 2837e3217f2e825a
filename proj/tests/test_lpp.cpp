#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include <polymer/error.hpp>
#include <polymer/lpp.hpp>

#include "generators.hpp"
#include "golden.hpp"

using namespace polymer;

namespace {

using Triangle = std::vector<std::vector<int>>;

Triangle random_triangle(prop::Gen& g, int n, int max_w) {
    Triangle w(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k) w[static_cast<std::size_t>(i)].push_back(g.integer(0, max_w));
    return w;
}

// Max path weight ending at each k, by enumerating all 2^N up/down paths.
std::vector<std::int64_t> brute_force(const Triangle& w) {
    const int n = static_cast<int>(w.size()) - 1;
    std::vector<std::int64_t> best(static_cast<std::size_t>(n) + 1, std::numeric_limits<std::int64_t>::min());
    for (std::uint32_t path = 0; path < (1u << n); ++path) {
        std::int64_t sum = w[0][0];
        int k = 0;
        for (int i = 1; i <= n; ++i) {
            k += (path >> (i - 1)) & 1u;
            sum += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        best[static_cast<std::size_t>(k)] = std::max(best[static_cast<std::size_t>(k)], sum);
    }
    return best;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

CdfTable normal_table() {
    CdfTable t;
    for (int i = 0; i <= 400; ++i) {
        const double x = -5.0 + 0.025 * i;
        t.x.push_back(x);
        t.cdf.push_back(normal_cdf(x));
        t.pdf.push_back(std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI));
    }
    return t;
}

double inverse(const CdfTable& t, double u) {
    double lo = t.lo(), hi = t.hi();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (t(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

EmpiricalDist with_rescaled(std::vector<double> xs) {
    EmpiricalDist d;
    d.rescaled = std::move(xs);
    return d;
}

double left_fraction(double q, std::int64_t samples, std::uint64_t seed) {
    LppConfig cfg;
    cfg.n_steps = 1;
    cfg.q = q;
    cfg.samples = samples;
    cfg.seed = seed;
    const auto d = simulate(cfg);
    return static_cast<double>(std::count(d.raw_endpoints.begin(), d.raw_endpoints.end(), -1)) / samples;
}

}  // namespace

TEST(LppConfig, Validation) {
    LppConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.q = 0.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.q = 1.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.n_steps = 0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.samples = 0;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(LppConfig, SiteBudget) {
    LppConfig cfg;
    cfg.n_steps = 100000;
    cfg.samples = 10001;
    EXPECT_THROW(simulate(cfg), ConfigError);
    cfg.samples = 10000;
    EXPECT_NO_THROW(cfg.validate());
}

TEST(SiteWeights, GeometricMarginal) {
    for (double q : {0.5, 0.3, 0.8}) {
        LppConfig cfg;
        cfg.q = q;
        cfg.seed = 99;
        const int n = 200000;
        int zeros = 0;
        double sum = 0.0;
        for (int s = 0; s < n; ++s) {
            const int w = site_weight(cfg, s / 8, 7, s % 8);
            zeros += (w == 0);
            sum += w;
        }
        const double p0 = static_cast<double>(zeros) / n;
        EXPECT_NEAR(p0, q, 4.0 * std::sqrt(q * (1 - q) / n)) << q;
        const double mean = (1 - q) / q, sd = std::sqrt(1 - q) / q;
        EXPECT_NEAR(sum / n, mean, 4.0 * sd / std::sqrt(n)) << q;
    }
}

TEST(SiteWeights, TriangleMatchesPointwise) {
    LppConfig cfg;
    cfg.n_steps = 12;
    cfg.q = 0.35;
    cfg.seed = 5;
    const auto w = sample_weights(cfg, 3);
    ASSERT_EQ(w.size(), 13u);
    for (int i = 0; i <= 12; ++i) {
        ASSERT_EQ(w[static_cast<std::size_t>(i)].size(), static_cast<std::size_t>(i) + 1);
        for (int k = 0; k <= i; ++k) EXPECT_EQ(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], site_weight(cfg, 3, i, k));
    }
}

TEST(SolveTriangle, MatchesExhaustiveEnumeration) {
    prop::for_all(50, 71, [](prop::Gen& g, std::ostringstream& note) {
        for (int n = 1; n <= 12; ++n) {
            const auto w = random_triangle(g, n, g.integer(1, 6));
            const auto sol = solve_triangle(w);
            const auto ref = brute_force(w);
            const auto it = std::max_element(ref.begin(), ref.end());
            const int endpoint = 2 * static_cast<int>(it - ref.begin()) - n;
            if (sol.last_row != ref || sol.endpoint != endpoint || sol.passage_time != *it) {
                note << "n " << n << " endpoint " << sol.endpoint << " vs " << endpoint;
                return false;
            }
        }
        return true;
    });
}

TEST(SolveTriangle, RejectsMalformed) {
    EXPECT_THROW(solve_triangle({}), ConfigError);
    EXPECT_THROW(solve_triangle({{1}, {1, 2, 3}}), ConfigError);
}

TEST(SolveTriangle, MirrorSymmetry) {
    prop::for_all(200, 72, [](prop::Gen& g, std::ostringstream& note) {
        const int n = g.integer(1, 30);
        auto w = random_triangle(g, n, 4);
        const auto a = solve_triangle(w);
        for (auto& row : w) std::reverse(row.begin(), row.end());
        const auto b = solve_triangle(w);
        auto rev = b.last_row;
        std::reverse(rev.begin(), rev.end());
        // Leftmost argmax of the mirror is minus the rightmost argmax of the original.
        const auto last = std::find(a.last_row.rbegin(), a.last_row.rend(), a.passage_time);
        const int rightmost = 2 * static_cast<int>(a.last_row.rend() - last - 1) - n;
        note << "n " << n;
        return rev == a.last_row && b.passage_time == a.passage_time && b.endpoint == -rightmost;
    });
}

TEST(SolveTriangle, MonotoneCoupling) {
    prop::for_all(200, 73, [](prop::Gen& g, std::ostringstream& note) {
        const int n = g.integer(1, 40);
        auto w = random_triangle(g, n, 5);
        const auto a = solve_triangle(w);
        for (auto& row : w)
            for (int& v : row) ++v;
        const auto b = solve_triangle(w);
        note << "n " << n;
        for (std::size_t k = 0; k < a.last_row.size(); ++k)
            if (b.last_row[k] != a.last_row[k] + n + 1) return false;
        return b.endpoint == a.endpoint && b.passage_time == a.passage_time + n + 1;
    });
}

TEST(Simulate, AgreesWithExplicitTriangle) {
    for (double q : {0.5, 0.3}) {
        LppConfig cfg;
        cfg.n_steps = 40;
        cfg.q = q;
        cfg.samples = 64;
        cfg.seed = 11;
        const auto d = simulate(cfg);
        for (std::int64_t s = 0; s < cfg.samples; ++s) {
            const auto sol = solve_triangle(sample_weights(cfg, s));
            EXPECT_EQ(d.raw_endpoints[static_cast<std::size_t>(s)], sol.endpoint) << s;
            EXPECT_EQ(d.passage_times[static_cast<std::size_t>(s)], sol.passage_time) << s;
        }
    }
}

TEST(Simulate, Deterministic) {
    LppConfig cfg;
    cfg.n_steps = 50;
    cfg.samples = 500;
    cfg.seed = 2024;
    const auto a = simulate(cfg), b = simulate(cfg);
    EXPECT_EQ(a.raw_endpoints, b.raw_endpoints);
    EXPECT_EQ(a.passage_times, b.passage_times);
    cfg.seed = 2025;
    EXPECT_NE(simulate(cfg).raw_endpoints, a.raw_endpoints);
}

TEST(Simulate, PrefixStableInSampleCount) {
    LppConfig cfg;
    cfg.n_steps = 30;
    cfg.samples = 100;
    const auto a = simulate(cfg);
    cfg.samples = 300;
    const auto b = simulate(cfg);
    EXPECT_TRUE(std::equal(a.raw_endpoints.begin(), a.raw_endpoints.end(), b.raw_endpoints.begin()));
}

TEST(Simulate, EndpointParityAndRange) {
    for (int n : {7, 8}) {
        LppConfig cfg;
        cfg.n_steps = n;
        cfg.samples = 2000;
        const auto d = simulate(cfg);
        for (int y : d.raw_endpoints) {
            EXPECT_EQ(((y + n) % 2 + 2) % 2, 0) << y;
            EXPECT_LE(std::abs(y), n);
        }
        EXPECT_EQ(d.n_steps, n);
        EXPECT_EQ(d.q, 0.5);
    }
}

TEST(Simulate, SingleStepLaw) {
    const std::int64_t n = 100000;
    const double p_half = left_fraction(0.5, n, 7);
    EXPECT_NEAR(p_half, golden::kLppN1LeftHalf, 4.0 * std::sqrt(golden::kLppN1LeftHalf * (1 - golden::kLppN1LeftHalf) / n));
    const double p_3 = left_fraction(0.3, n, 8);
    EXPECT_NEAR(p_3, golden::kLppN1LeftPoint3, 4.0 * std::sqrt(golden::kLppN1LeftPoint3 * (1 - golden::kLppN1LeftPoint3) / n));
}

TEST(Rescale, ManualScale) {
    LppConfig cfg;
    cfg.n_steps = 64;
    cfg.samples = 200;
    const auto d = rescale(simulate(cfg), 1.0);
    EXPECT_EQ(d.scale_used, 1.0);
    for (std::size_t i = 0; i < d.raw_endpoints.size(); ++i) EXPECT_NEAR(d.rescaled[i], d.raw_endpoints[i] / 16.0, 1e-14);
    EXPECT_THROW(rescale(d, 0.0), ConfigError);
    EXPECT_THROW(rescale(EmpiricalDist{}), ConfigError);
}

TEST(Rescale, AutoCalibratesVariance) {
    LppConfig cfg;
    cfg.n_steps = 100;
    cfg.samples = 3000;
    const auto d = rescale(simulate(cfg));
    double mean = 0.0, var = 0.0;
    for (double x : d.rescaled) mean += x;
    mean /= static_cast<double>(d.rescaled.size());
    for (double x : d.rescaled) var += (x - mean) * (x - mean);
    var /= static_cast<double>(d.rescaled.size());
    EXPECT_NEAR(var, kEndpointVariance, 1e-12);
    EXPECT_GT(d.scale_used, 0.0);
}

TEST(Rescale, DegenerateSampleRejected) {
    EmpiricalDist d;
    d.n_steps = 4;
    d.raw_endpoints = {2, 2, 2};
    EXPECT_THROW(rescale(d), ConfigError);
    EXPECT_NO_THROW(rescale(d, 1.0));
}

TEST(KsDistance, SingleSample) {
    const auto t = normal_table();
    EXPECT_NEAR(ks_distance(with_rescaled({0.0}), t), 0.5, 1e-6);
    EXPECT_NEAR(ks_distance(with_rescaled({-1.0}), t), 1.0 - normal_cdf(-1.0), 1e-6);
}

TEST(KsDistance, StratifiedInverseCdf) {
    const auto t = normal_table();
    const int n = 2000;
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(inverse(t, (i + 0.5) / n));
    EXPECT_NEAR(ks_distance(with_rescaled(xs), t), 0.5 / n, 1e-9);
}

TEST(KsDistance, RandomInverseCdf) {
    const auto t = normal_table();
    prop::Gen g(74);
    std::vector<double> xs;
    for (int i = 0; i < 10000; ++i) xs.push_back(inverse(t, g.uniform(1e-6, 1 - 1e-6)));
    EXPECT_LT(ks_distance(with_rescaled(xs), t), 0.02);
    for (double& x : xs) x += 0.5;
    EXPECT_GT(ks_distance(with_rescaled(xs), t), 0.15);
}

TEST(KsDistance, TiesUseBothLimits) {
    const auto t = normal_table();
    EXPECT_NEAR(ks_distance(with_rescaled({0.0, 0.0, 0.0, 0.0}), t), 0.5, 1e-6);
}

TEST(KsDistance, RangeMismatch) {
    const auto t = normal_table();
    EXPECT_THROW(ks_distance(with_rescaled({0.0, -6.0}), t), ConfigError);
    EXPECT_THROW(ks_distance(with_rescaled({7.0}), t), ConfigError);
    EXPECT_THROW(ks_distance(EmpiricalDist{}, t), ConfigError);
}

TEST(LppCsv, HeaderAndRows) {
    LppConfig cfg;
    cfg.n_steps = 5;
    cfg.samples = 3;
    const auto d = simulate(cfg);
    std::ostringstream os;
    write_lpp_csv(os, d);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "sample_index,endpoint,passage_time");
    for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_TRUE(std::getline(is, line));
        std::ostringstream want;
        want << i << ',' << d.raw_endpoints[i] << ',' << d.passage_times[i];
        EXPECT_EQ(line, want.str());
    }
    EXPECT_FALSE(std::getline(is, line));
}

#include "polymer/lpp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>

#include "polymer/error.hpp"
#include "polymer/parallel.hpp"

namespace polymer {
namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t row_key(std::uint64_t seed, std::int64_t sample, int i) {
    std::uint64_t h = mix64(seed + kGamma);
    h = mix64(h ^ (static_cast<std::uint64_t>(sample) + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ (static_cast<std::uint64_t>(i) + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

// Thresholds floor((1-q)^k 2^64); w = #{k >= 1 : u < T_k}.
struct GeometricTable {
    std::vector<std::uint64_t> thr;
    bool half = false;  // q = 1/2: T_k = 2^{64-k}, so w = countl_zero(u)

    explicit GeometricTable(double q) {
        half = (q == 0.5);
        long double p = 1.0L;
        const long double r = 1.0L - static_cast<long double>(q);
        for (;;) {
            p *= r;
            const long double v = std::ldexp(p, 64);
            if (v < 1.0L) break;
            thr.push_back(v >= 18446744073709551615.0L ? ~0ULL : static_cast<std::uint64_t>(v));
        }
    }

    int max_value() const { return half ? 64 : static_cast<int>(thr.size()); }

    int operator()(std::uint64_t u) const {
        if (half) return std::countl_zero(u);
        int w = 0;
        while (w < static_cast<int>(thr.size()) && u < thr[static_cast<std::size_t>(w)]) ++w;
        return w;
    }
};

}  // namespace

void LppConfig::validate() const {
    if (n_steps < 1) throw ConfigError("lpp: n_steps must be >= 1");
    if (samples < 1) throw ConfigError("lpp: samples must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("lpp: q must be in (0, 1)");
    if (static_cast<double>(n_steps) * static_cast<double>(samples) > kLppSiteBudget)
        throw ConfigError("lpp: n_steps * samples exceeds the 1e9 site budget");
    const GeometricTable g(q);
    if (static_cast<double>(g.max_value()) * (n_steps + 1.0) >= 2147483647.0)
        throw ConfigError("lpp: q too small for 32-bit passage times at this n_steps");
}

int site_weight(const LppConfig& cfg, std::int64_t sample, int i, int k) {
    const GeometricTable g(cfg.q);
    return g(mix64(row_key(cfg.seed, sample, i) + kGamma * (static_cast<std::uint64_t>(k) + 1)));
}

std::vector<std::vector<int>> sample_weights(const LppConfig& cfg, std::int64_t sample) {
    const GeometricTable g(cfg.q);
    std::vector<std::vector<int>> w(static_cast<std::size_t>(cfg.n_steps) + 1);
    for (int i = 0; i <= cfg.n_steps; ++i) {
        const std::uint64_t key = row_key(cfg.seed, sample, i);
        auto& row = w[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(i) + 1);
        for (int k = 0; k <= i; ++k) row[static_cast<std::size_t>(k)] = g(mix64(key + kGamma * (static_cast<std::uint64_t>(k) + 1)));
    }
    return w;
}

LppSolution solve_triangle(const std::vector<std::vector<int>>& weights) {
    if (weights.empty()) throw ConfigError("solve_triangle: empty weights");
    std::vector<std::int64_t> prev{weights[0].at(0)}, cur;
    for (std::size_t i = 1; i < weights.size(); ++i) {
        if (weights[i].size() != i + 1) throw ConfigError("solve_triangle: row i must have i+1 entries");
        cur.assign(i + 1, 0);
        for (std::size_t k = 0; k <= i; ++k) {
            std::int64_t best = std::numeric_limits<std::int64_t>::min();
            if (k >= 1) best = prev[k - 1];
            if (k < i) best = std::max(best, prev[k]);
            cur[k] = weights[i][k] + best;
        }
        prev.swap(cur);
    }
    const auto it = std::max_element(prev.begin(), prev.end());  // first maximum
    const int n = static_cast<int>(weights.size()) - 1;
    return {prev, 2 * static_cast<int>(it - prev.begin()) - n, *it};
}

EmpiricalDist simulate(const LppConfig& cfg) {
    cfg.validate();
    const GeometricTable g(cfg.q);
    const int n = cfg.n_steps;
    EmpiricalDist d;
    d.n_steps = n;
    d.q = cfg.q;
    d.seed = cfg.seed;
    d.raw_endpoints.assign(static_cast<std::size_t>(cfg.samples), 0);
    d.passage_times.assign(static_cast<std::size_t>(cfg.samples), 0);
    parallel_for(static_cast<std::size_t>(cfg.samples), [&](std::size_t s) {
        std::vector<std::int32_t> a(static_cast<std::size_t>(n) + 2), b(static_cast<std::size_t>(n) + 2);
        std::vector<std::int32_t> w(static_cast<std::size_t>(n) + 1);
        const auto sample = static_cast<std::int64_t>(s);
        a[0] = g(mix64(row_key(cfg.seed, sample, 0) + kGamma));
        for (int i = 1; i <= n; ++i) {
            const std::uint64_t key = row_key(cfg.seed, sample, i);
            std::int32_t* wp = w.data();
            if (g.half) {
                for (int k = 0; k <= i; ++k)
                    wp[k] = std::countl_zero(mix64(key + kGamma * (static_cast<std::uint64_t>(k) + 1)));
            } else {
                for (int k = 0; k <= i; ++k) wp[k] = g(mix64(key + kGamma * (static_cast<std::uint64_t>(k) + 1)));
            }
            const std::int32_t* p = a.data();
            std::int32_t* c = b.data();
            c[0] = wp[0] + p[0];
            for (int k = 1; k < i; ++k) c[k] = wp[k] + std::max(p[k - 1], p[k]);
            c[i] = wp[i] + p[i - 1];
            a.swap(b);
        }
        int best = 0;
        for (int k = 1; k <= n; ++k)
            if (a[static_cast<std::size_t>(k)] > a[static_cast<std::size_t>(best)]) best = k;
        d.raw_endpoints[s] = 2 * best - n;
        d.passage_times[s] = a[static_cast<std::size_t>(best)];
    });
    return d;
}

EmpiricalDist rescale(const EmpiricalDist& dist, std::optional<double> scale, double target_variance) {
    if (dist.raw_endpoints.empty()) throw ConfigError("rescale: no samples");
    EmpiricalDist out = dist;
    const double n23 = std::cbrt(static_cast<double>(dist.n_steps) * dist.n_steps);
    double sc;
    if (scale) {
        if (!(*scale > 0)) throw ConfigError("rescale: scale must be positive");
        sc = *scale;
    } else {
        double mean = 0.0;
        for (int v : dist.raw_endpoints) mean += v;
        mean /= static_cast<double>(dist.raw_endpoints.size());
        double var = 0.0;
        for (int v : dist.raw_endpoints) var += (v - mean) * (v - mean);
        var /= static_cast<double>(dist.raw_endpoints.size());
        if (!(var > 0.0)) throw ConfigError("rescale: calibration needs a sample with nonzero variance");
        sc = std::sqrt(var / (n23 * n23 * target_variance));
    }
    out.scale_used = sc;
    out.rescaled.resize(dist.raw_endpoints.size());
    for (std::size_t i = 0; i < dist.raw_endpoints.size(); ++i) out.rescaled[i] = dist.raw_endpoints[i] / (sc * n23);
    return out;
}

double ks_distance(const EmpiricalDist& dist, const CdfTable& cdf) {
    if (dist.rescaled.empty()) throw ConfigError("ks_distance: no rescaled samples");
    std::vector<double> x = dist.rescaled;
    std::sort(x.begin(), x.end());
    const double tail_lo = cdf.cdf.front(), tail_hi = 1.0 - cdf.cdf.back();
    if ((x.front() < cdf.lo() && tail_lo > 1e-9) || (x.back() > cdf.hi() && tail_hi > 1e-9))
        throw ConfigError("ks_distance: samples fall outside the CDF table range");
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    std::size_t i = 0;
    while (i < x.size()) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i]) ++j;
        const double f = cdf(x[i]);
        d = std::max({d, std::abs(static_cast<double>(j) / n - f), std::abs(static_cast<double>(i) / n - f)});
        i = j;
    }
    return d;
}

void write_lpp_csv(std::ostream& os, const EmpiricalDist& dist) {
    os << "sample_index,endpoint,passage_time\n";
    for (std::size_t i = 0; i < dist.raw_endpoints.size(); ++i)
        os << i << ',' << dist.raw_endpoints[i] << ',' << dist.passage_times[i] << '\n';
}

}  // namespace polymer

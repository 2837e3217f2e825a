#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "polymer/distributions.hpp"

namespace polymer {

struct LppConfig {
    int n_steps = 100;
    double q = 0.5;  // P(w = k) = q (1-q)^k
    std::int64_t samples = 1000;
    std::uint64_t seed = 1;

    void validate() const;
};

struct EmpiricalDist {
    std::vector<int> raw_endpoints;             // T_N, leftmost argmax
    std::vector<std::int64_t> passage_times;    // L(N) = max_y L(N, y)
    std::vector<double> rescaled;
    double scale_used = 0.0;
    int n_steps = 0;
    double q = 0.0;
    std::uint64_t seed = 0;
};

// Lattice-site budget for one simulate() call: n_steps * samples.
inline constexpr double kLppSiteBudget = 1e9;

// Weight at step i, site j = 2k - i (0 <= k <= i) of a sample. Counter-based:
// one splitmix64 stream per (seed, sample, i), position k along the row.
int site_weight(const LppConfig& cfg, std::int64_t sample, int i, int k);

// weights[i][k] for 0 <= i <= n_steps, 0 <= k <= i.
std::vector<std::vector<int>> sample_weights(const LppConfig& cfg, std::int64_t sample);

struct LppSolution {
    std::vector<std::int64_t> last_row;  // L(N, 2k - N)
    int endpoint;                        // leftmost argmax, as y = 2k - N
    std::int64_t passage_time;
};

// DP over an explicit weight triangle.
LppSolution solve_triangle(const std::vector<std::vector<int>>& weights);

EmpiricalDist simulate(const LppConfig& cfg);

// Divides raw endpoints by scale * N^{2/3}. Without a scale, it is chosen so the
// rescaled sample variance equals target_variance.
EmpiricalDist rescale(const EmpiricalDist& dist, std::optional<double> scale = std::nullopt,
                      double target_variance = kEndpointVariance);

// sup |F_n - F| over the sample, using both one-sided limits of F_n at ties.
double ks_distance(const EmpiricalDist& dist, const CdfTable& cdf);

void write_lpp_csv(std::ostream& os, const EmpiricalDist& dist);

}  // namespace polymer

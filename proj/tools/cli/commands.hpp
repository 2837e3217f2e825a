#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <polymer/distributions.hpp>
#include <polymer/lpp.hpp>

#include "cli/envelope.hpp"

namespace polymer::cli {

// "lo:hi:count", count >= 1; count == 1 yields lo alone.
struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;
    std::vector<double> points() const;
};
Grid parse_grid(const std::string& spec);

Envelope cmd_tw(const std::string& kind, const Grid& grid, const NumericsConfig& cfg);

Envelope cmd_endpoint_density(const Grid& grid, const NumericsConfig& cfg);
// Without c, the smallest constant covering every resolved row is fitted.
Envelope cmd_endpoint_tail(const std::vector<double>& ts, std::optional<double> c, double c32, double kappa,
                           const NumericsConfig& cfg);
Envelope cmd_endpoint_moments(double t_max, const NumericsConfig& cfg);
Envelope cmd_endpoint_joint(const Grid& t_grid, const Grid& m_grid, const NumericsConfig& cfg);

// route: scalar, matrix or both.
Envelope cmd_twotime_sup_point(double t, double s, double a, double b, const std::string& route,
                               const NumericsConfig& cfg);
// One row per time shift, at (t0 + shift, x0, t1 + shift, x1).
Envelope cmd_twotime_points(double t0, double x0, double t1, double x1, const std::vector<double>& shifts,
                            const NumericsConfig& cfg);

// raw = true replaces the summary row by one row per sample.
Envelope cmd_lpp(const LppConfig& lpp, std::optional<double> scale, bool raw, const NumericsConfig& cfg);

struct SelfCheck {
    std::string name;
    bool passed;
    std::string detail;
};
std::vector<SelfCheck> run_selftest(const std::string& level);
Envelope cmd_selftest(const std::string& level);

// Full command line (without argv[0]). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymer::cli

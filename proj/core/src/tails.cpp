#include "polymer/tails.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <Eigen/Dense>

#include "polymer/error.hpp"

namespace polymer {

double log_upper_envelope(double t, double c, double c32) {
    if (!(t > 0) || !(c > 0)) throw ConfigError("upper_envelope: need t > 0 and c > 0");
    return std::log(c) - (4.0 / 3.0) * t * t * t + 2.0 * t * t + c32 * t * std::sqrt(t);
}

double upper_envelope(double t, double c, double c32) { return std::exp(log_upper_envelope(t, c, c32)); }

double log_lower_envelope(double t, double kappa) {
    if (!(kappa > 32.0 / 3.0)) throw ConfigError("lower_envelope: kappa must exceed 32/3");
    if (!(t >= 0)) throw ConfigError("lower_envelope: t must be >= 0");
    return -kappa * t * t * t;
}

double lower_envelope(double t, double kappa) { return std::exp(log_lower_envelope(t, kappa)); }

double gue_right_tail_asymptotic(double s) {
    if (!(s >= 4.0)) throw ConfigError("gue_right_tail_asymptotic: s must be >= 4");
    return std::exp(-1.5 * std::log(s) - (4.0 / 3.0) * s * std::sqrt(s));
}

double goe_right_tail_asymptotic(double m) {
    if (!(m >= 4.0)) throw ConfigError("goe_right_tail_asymptotic: m must be >= 4");
    return std::exp(-1.5 * std::log(m) - (4.0 / 3.0) * m * std::sqrt(m));
}

TailRecord make_tail_record(double t, double prob, double c, double c32, double kappa) {
    if (!(prob > 0.0 && prob <= 1.0)) throw ConfigError("tail record: prob must be in (0, 1]");
    return {t, prob, std::log(prob), upper_envelope(t, c, c32), lower_envelope(t, kappa)};
}

DecayFit fit_decay(const std::vector<TailRecord>& records) {
    if (records.size() < 4) throw ConfigError("fit_decay: need at least 4 records");
    std::set<double> ts;
    for (const auto& r : records) {
        if (!(r.t > 0)) throw ConfigError("fit_decay: t must be positive");
        if (!(r.prob > 1e-13)) throw ConfigError("fit_decay: prob below 1e-13");
        ts.insert(r.t);
    }
    if (ts.size() != records.size()) throw ConfigError("fit_decay: t values must be distinct");
    const auto n = static_cast<Eigen::Index>(records.size());
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = records[static_cast<std::size_t>(i)].t;
        a(i, 0) = t * t * t;
        a(i, 1) = t * t;
        a(i, 2) = 1.0;
        y[i] = -records[static_cast<std::size_t>(i)].log_prob;
    }
    const auto qr = a.colPivHouseholderQr();
    if (qr.rank() < 3) throw ConfigError("fit_decay: degenerate design matrix");
    const Eigen::VectorXd beta = qr.solve(y);
    const double rms = std::sqrt((a * beta - y).squaredNorm() / static_cast<double>(n));
    return {beta[0], beta[1], beta[2], rms, *ts.begin(), *ts.rbegin()};
}

double fit_upper_constant(const std::vector<TailRecord>& records, double c32) {
    if (records.empty()) throw ConfigError("fit_upper_constant: no records");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : records) best = std::max(best, r.log_prob - log_upper_envelope(r.t, 1.0, c32));
    return std::exp(best);
}

}  // namespace polymer

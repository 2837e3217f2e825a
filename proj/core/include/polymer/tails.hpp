#pragma once

#include <vector>

namespace polymer {

struct TailRecord {
    double t;
    double prob;
    double log_prob;
    double upper_env;
    double lower_env;
};

struct DecayFit {
    double cubic_coeff;
    double quadratic_coeff;
    double intercept;
    double residual;  // RMS of the least-squares fit of -log p
    double t_lo;
    double t_hi;
};

// c * exp(-(4/3)t^3 + 2t^2 + c32 t^{3/2})
double upper_envelope(double t, double c, double c32);
double log_upper_envelope(double t, double c, double c32);

// exp(-kappa t^3), kappa > 32/3
double lower_envelope(double t, double kappa);
double log_lower_envelope(double t, double kappa);

// s^{-3/2} exp(-(4/3) s^{3/2}), s >= 4 (shape only, unit constant)
double gue_right_tail_asymptotic(double s);
// m^{-3/2} exp(-(4/3) m^{3/2}), m >= 4 (shape only, unit constant)
double goe_right_tail_asymptotic(double m);

TailRecord make_tail_record(double t, double prob, double c, double c32, double kappa);

// Least squares of -log p on (t^3, t^2, 1).
DecayFit fit_decay(const std::vector<TailRecord>& records);

// Smallest c with prob <= upper_envelope(t, c, c32) for every record.
double fit_upper_constant(const std::vector<TailRecord>& records, double c32);

}  // namespace polymer

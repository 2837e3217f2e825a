#pragma once

#include <memory>
#include <vector>

#include "polymer/fredholm.hpp"
#include "polymer/quadrature.hpp"

namespace polymer {

struct NumericsConfig {
    int quad_n = 80;
    double tol = 1e-10;
    double trunc_pad = 20.0;
    double m_lo = -8.0;
    double m_hi = 25.0;

    void validate() const;
};

// Endpoint variance used to calibrate LPP rescaling.
inline constexpr double kEndpointVariance = 0.2409;

enum class JointRoute { trace, det_difference };
enum class SupPointRoute { scalar, matrix };

DetResult f_gue(double s, const NumericsConfig& cfg = {});
DetResult f_goe(double m, const NumericsConfig& cfg = {});

// One m-slice of the joint density: B_{4^{1/3} m} on [0, hi] factored once.
class JointSlice {
public:
    JointSlice(double m, const NumericsConfig& cfg);

    double m() const { return m_; }
    double f_goe() const { return op_.det(); }
    double density(double t) const;
    double density_det_difference(double t) const;

private:
    double m_;
    NystromOperator op_;
    Vector sqrtw_;
};

double joint_density(double t, double m, const NumericsConfig& cfg = {}, JointRoute route = JointRoute::trace);

// f_end(t) = int f(t, m) dm over the m-window. Holds one slice per m node.
class EndpointModel {
public:
    explicit EndpointModel(const NumericsConfig& cfg = {});

    double density(double t) const;
    // 2 * int_t^inf f_end
    double tail(double t) const;
    const NumericsConfig& config() const { return cfg_; }

private:
    NumericsConfig cfg_;
    std::vector<double> mw_;
    std::vector<JointSlice> slices_;
};

double endpoint_density(double t, const NumericsConfig& cfg = {});

struct MomentReport {
    double total_mass;
    double variance;
    double excess_kurtosis;
    double odd_moment_1;
    double odd_moment_3;
    double outside_mass;  // 2 int_{t_max}^inf f_end, already excluded from the moments
};

MomentReport endpoint_moments(const NumericsConfig& cfg = {}, double t_max = 4.0);
MomentReport endpoint_moments(const EndpointModel& model, double t_max = 4.0);

struct TailEstimate {
    double prob;
    bool resolved;  // false when prob < 1e-14
};

TailEstimate endpoint_tail(double t, const NumericsConfig& cfg = {});
TailEstimate endpoint_tail(const EndpointModel& model, double t);

struct DensityTable {
    std::vector<double> t_nodes;
    std::vector<double> m_nodes;  // empty for f_end tables
    std::vector<double> values;   // row-major (t, m) when m_nodes is set
    std::vector<bool> converged;
    NumericsConfig config;
};

// f_end on the given points; a point is converged when the value at half the
// quadrature size differs by at most 10 tol.
DensityTable endpoint_density_table(const std::vector<double>& ts, const NumericsConfig& cfg = {});
DensityTable joint_density_table(const std::vector<double>& ts, const std::vector<double>& ms,
                                 const NumericsConfig& cfg = {});

// Model CDF of the endpoint with cubic Hermite interpolation between nodes.
struct CdfTable {
    std::vector<double> x;
    std::vector<double> cdf;
    std::vector<double> pdf;

    double operator()(double v) const;
    double lo() const { return x.front(); }
    double hi() const { return x.back(); }
};

CdfTable endpoint_cdf_table(const EndpointModel& model, double t_max = 4.0, int intervals = 80);

DetResult one_sided_sup_cdf(double t, double a, const NumericsConfig& cfg = {});

DetResult joint_sup_point_cdf(double t, double s, double a, double b, const NumericsConfig& cfg = {},
                              SupPointRoute route = SupPointRoute::scalar);

DetResult two_time_cdf(double t0, double x0, double t1, double x1, const NumericsConfig& cfg = {});

}  // namespace polymer

#pragma once

#include <cstddef>
#include <vector>

namespace polymer {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double lo = -1.0;
    double hi = 1.0;
    // Number of equal panels and Gauss-Legendre points per panel. A plain
    // rule has panels == 1.
    int panels = 1;
    int per_panel = 0;

    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule on (-1, 1), 1 <= n <= 2000.
QuadratureRule gauss_legendre(int n);

// Affine image of a rule on (rule.lo, rule.hi) onto (lo, hi).
QuadratureRule map_rule(const QuadratureRule& rule, double lo, double hi);

// n-point Gauss-Legendre rule on (lo, hi).
QuadratureRule legendre_on(int n, double lo, double hi);

// Equal panels of width at most `width`, `per_panel` points each.
QuadratureRule composite_rule(double lo, double hi, double width, int per_panel);

// Same panel layout with a different number of points per panel.
QuadratureRule resample(const QuadratureRule& rule, int per_panel);

// Envelope exp(growth*x - rate*(x + shift)^{3/2}) on [lo, inf), x + shift >= 0.
// rate = 4/3 is the Airy-squared decay, 2/3 the single-Airy decay.
struct DecayDescriptor {
    double lo = 0.0;
    double growth = 0.0;
    double rate = 4.0 / 3.0;
    double shift = 0.0;
};

struct TruncationSpec {
    double lo;
    double hi;
    double decay_rate_hint;
    double pad;
};

// Smallest hi beyond the envelope maximum where env(hi) <= tol * max env,
// plus pad. tol in (0, 1e-2].
TruncationSpec choose_truncation(const DecayDescriptor& decay, double tol, double pad = 0.0);

}  // namespace polymer

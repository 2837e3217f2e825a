#pragma once

#include <vector>

#include "polymer/fredholm.hpp"
#include "polymer/quadrature.hpp"

namespace polymer {

// mant * e^{expo}; lets exponential weights be combined before exponentiation.
struct Scaled {
    double mant;
    double expo;
    double value() const;
    double times_exp(double c) const;
};

// Airy kernel K_Ai(x, y) = int_0^inf Ai(x+l) Ai(y+l) dl, closed form with a
// Taylor-expanded near-diagonal branch.
double k_airy(double x, double y);
Scaled k_airy_scaled(double x, double y);
// The defining integral by panel quadrature (reference implementation).
double k_airy_quadrature(double x, double y);
// K_Ai(x + shift, y + shift)
KernelFn airy_kernel(double shift = 0.0);

// B_m(x, y) = Ai(x + y + m)
double b_shift(double m, double x, double y);
KernelFn b_kernel(double m);

// e^{-sH}(x, y) for s > 0: int_R e^{s l} Ai(x+l) Ai(y+l) dl in closed form.
double heat_kernel(double s, double x, double y);
double heat_kernel_log(double s, double x, double y);

// s > 0: e^{sH} K_Ai, int_0^inf e^{-s l} Ai Ai dl.
// s < 0: e^{-|s|H} (I - K_Ai), int_{-inf}^0 e^{|s| l} Ai Ai dl.
double semigroup_kernel(double s, double x, double y);
// Both variants by direct quadrature of the l-integral (reference implementation).
double semigroup_quadrature(double s, double x, double y);
KernelFn semigroup(double s);
// int_R S_a(x, z) S_b(z, y) dz for S_s = e^{sH}K_Ai, a, b > 0, |x|, |y| <= 5.
// Panel quadrature in z on [-z1, 14]; the slowly decaying part beyond -z1 is
// integrated through the large-argument expansion of Ai - i Bi.
double semigroup_composition(double a, double b, double x, double y);
// Bulk form; entry (i, j) is the kernel at (xs[i], ys[j]) times e^{wx[i] + wy[j]}.
// Empty weight vectors mean zero exponents.
Matrix semigroup_matrix(double s, const std::vector<double>& xs, const std::vector<double>& ys,
                        const std::vector<double>& wx = {}, const std::vector<double>& wy = {});

// Extended Airy kernel between times t and tp.
double extended_kernel(double t, double xi, double tp, double xip);

// psi_{t,m}(x) = 2 e^{xt} [t Ai(x+m+t^2) + Ai'(x+m+t^2)]
double psi(double t, double m, double x);

struct PsiVector {
    double t;
    double m;
    std::vector<double> samples;  // psi_{t,m}(2^{1/3} x_i)
};
PsiVector psi_vector(double t, double m, const QuadratureRule& rule);

// f -> e^{2t(x - c)} f(2c - x) with c = a + t^2, and Q = P_c (I + that).
struct ReflectionSpec {
    double a;
    double t;
    double edge() const { return a + t * t; }
    double weight(double x) const;       // e^{2t(x - c)}
    double mirror(double x) const { return 2.0 * edge() - x; }
};

// Q applied in the first variable of a kernel: (Q K)(x, y).
KernelFn apply_q_left(const ReflectionSpec& q, const KernelFn& k);

// The four entries of the 2x2 matrix kernel for the sup/point law, each
// conjugated by G f(x) = e^{-2tx} (1+x^2)^{-1/2} f(x). Variables are local:
// block row/column 0 uses x = c1 + u, block 1 uses x = c2 + u, u >= 0, with
// c1 = a + t^2 and c2 = b + (t+s)^2. With reflection = false, Q becomes P_1.
struct QComposed {
    BlockKernel kernel;
    double c1;
    double c2;
};
QComposed q_composed_kernels(double a, double t, double s, double b, bool reflection = true);

// Kernel on L^2[0, inf) whose Fredholm determinant is
// P(A2(x) - x^2 <= a for all x <= t).
KernelFn sup_reduced_kernel(double t, double a);

// Kernel on L^2[0, inf) for the scalar route of the joint law of the sup over
// x <= t (level a) and the point value at t + s (level b).
KernelFn sup_point_reduced_kernel(double t, double s, double a, double b);

}  // namespace polymer

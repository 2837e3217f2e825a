#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "polymer/quadrature.hpp"

namespace polymer {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct KernelFn {
    // Pointwise kernel K(x, y).
    std::function<double(double, double)> eval;
    // Optional bulk evaluator returning [K(xs[i], ys[j])]; used instead of
    // eval when set (kernels defined through inner integrals are cheaper in bulk).
    std::function<Matrix(const std::vector<double>&, const std::vector<double>&)> block;

    Matrix matrix(const std::vector<double>& xs, const std::vector<double>& ys) const;
};

struct DetResult {
    double value = 1.0;
    int n_coarse = 0;
    int n_fine = 0;
    double delta = 0.0;
    bool converged = true;
    // 1 - value, computed from the trace series log det(I-K) = -sum tr(K^k)/k
    // when the discretized kernel is small, so tiny complements keep their
    // relative accuracy.
    double complement = 0.0;
};

// [sqrt(w_i w_j) K(x_i, x_j)]
Matrix nystrom_matrix(const KernelFn& k, const QuadratureRule& rule);

// det(I - W) and 1 - det(I - W) for an already weighted matrix.
struct MatrixDet {
    double value;
    double complement;
    int n;
};
MatrixDet det_identity_minus(const Matrix& w);

// I - W factored once; reused for several right-hand sides.
class NystromOperator {
public:
    NystromOperator(const KernelFn& k, const QuadratureRule& rule);
    NystromOperator(Matrix weighted, QuadratureRule rule);

    double det() const { return det_; }
    const QuadratureRule& rule() const { return rule_; }
    const Matrix& weighted() const { return w_; }

    // Node values of (I - K)^{-1} u.
    Vector resolvent(const Vector& u) const;
    // sum_i w_i v_i [(I - K)^{-1} u]_i
    double rank_one_trace(const Vector& u, const Vector& v) const;

private:
    void factor();

    QuadratureRule rule_;
    Matrix w_;
    Vector sqrtw_;
    Eigen::PartialPivLU<Matrix> lu_;
    double det_ = 1.0;
};

DetResult det_fredholm(const KernelFn& k, const QuadratureRule& rule, double tol);

std::vector<double> resolvent_apply(const KernelFn& k, const QuadratureRule& rule, const std::vector<double>& u);

double rank_one_trace(const KernelFn& k, const std::vector<double>& u, const std::vector<double>& v,
                      const QuadratureRule& rule);

// entries[r][c] maps the column domain c to the row domain r.
struct BlockKernel {
    std::array<std::array<KernelFn, 2>, 2> entries;
};

Matrix block_nystrom_matrix(const BlockKernel& bk, const std::array<QuadratureRule, 2>& rules);

DetResult det_block2(const BlockKernel& bk, const std::array<QuadratureRule, 2>& rules, double tol);

double hs_norm(const KernelFn& k, const QuadratureRule& rule);

// Refinement driver shared by the determinant routines: evaluates at the
// rule's resolution and at half the points per panel; if they differ by more
// than tol, once more at double resolution.
DetResult refine_det(const std::function<MatrixDet(int per_panel)>& at, int per_panel, double tol);

}  // namespace polymer

#include "polymer/fredholm.hpp"

#include <cmath>
#include <sstream>

#include "polymer/error.hpp"
#include "polymer/parallel.hpp"

namespace polymer {
namespace {

Vector sqrt_weights(const QuadratureRule& r) {
    Vector s(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) s[static_cast<Eigen::Index>(i)] = std::sqrt(r.weights[i]);
    return s;
}

void require_finite(const Matrix& m, const std::vector<double>& xs, const std::vector<double>& ys) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j))) {
                std::ostringstream os;
                os.precision(17);
                os << "kernel entry not finite at (x, y) = (" << xs[static_cast<std::size_t>(i)] << ", "
                   << ys[static_cast<std::size_t>(j)] << ")";
                throw DomainError(os.str());
            }
}

}  // namespace

Matrix KernelFn::matrix(const std::vector<double>& xs, const std::vector<double>& ys) const {
    Matrix m;
    if (block) {
        m = block(xs, ys);
    } else {
        if (!eval) throw ConfigError("KernelFn without evaluator");
        m.resize(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
        parallel_for(xs.size(), [&](std::size_t i) {
            for (std::size_t j = 0; j < ys.size(); ++j)
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval(xs[i], ys[j]);
        });
    }
    require_finite(m, xs, ys);
    return m;
}

Matrix nystrom_matrix(const KernelFn& k, const QuadratureRule& rule) {
    const Vector s = sqrt_weights(rule);
    return s.asDiagonal() * k.matrix(rule.nodes, rule.nodes) * s.asDiagonal();
}

MatrixDet det_identity_minus(const Matrix& w) {
    const Eigen::Index n = w.rows();
    Matrix a = Matrix::Identity(n, n) - w;
    Eigen::PartialPivLU<Matrix> lu(a);
    const double value = lu.determinant();
    if (!std::isfinite(value)) throw SingularError("determinant is not finite");
    double comp = 1.0 - value;
    const double hs = w.norm();
    if (hs < 0.5) {
        // log det(I - W) = -sum_k tr(W^k) / k
        double logdet = 0.0;
        Matrix p = w;
        double bound = hs;
        for (int k = 1; k <= 200; ++k) {
            logdet -= p.trace() / k;
            bound *= hs;
            if (bound / (k + 1) < 1e-18 * std::max(std::abs(logdet), 1e-300)) break;
            if (bound < 1e-300) break;
            p = p * w;
        }
        comp = -std::expm1(logdet);
    }
    return {value, comp, static_cast<int>(n)};
}

NystromOperator::NystromOperator(const KernelFn& k, const QuadratureRule& rule)
    : rule_(rule), w_(nystrom_matrix(k, rule)) {
    factor();
}

NystromOperator::NystromOperator(Matrix weighted, QuadratureRule rule) : rule_(std::move(rule)), w_(std::move(weighted)) {
    factor();
}

void NystromOperator::factor() {
    sqrtw_ = sqrt_weights(rule_);
    const Eigen::Index n = w_.rows();
    lu_.compute(Matrix::Identity(n, n) - w_);
    det_ = lu_.determinant();
    if (!(std::abs(det_) > 0.0) || !std::isfinite(det_)) throw SingularError("I - K is singular on the grid");
}

Vector NystromOperator::resolvent(const Vector& u) const {
    const Vector y = lu_.solve(sqrtw_.cwiseProduct(u));
    return y.cwiseQuotient(sqrtw_);
}

double NystromOperator::rank_one_trace(const Vector& u, const Vector& v) const {
    const Vector y = lu_.solve(sqrtw_.cwiseProduct(u));
    return sqrtw_.cwiseProduct(v).dot(y);
}

DetResult refine_det(const std::function<MatrixDet(int)>& at, int per_panel, double tol) {
    if (!(tol > 0.0 && tol <= 1e-2)) throw ConfigError("tol must be in (0, 1e-2]");
    if (per_panel < 2) throw ConfigError("need at least 2 points per panel");
    const MatrixDet fine = at(per_panel);
    const MatrixDet coarse = at(per_panel / 2);
    DetResult r;
    r.value = fine.value;
    r.complement = fine.complement;
    r.n_fine = fine.n;
    r.n_coarse = coarse.n;
    r.delta = std::abs(fine.value - coarse.value);
    r.converged = r.delta <= tol;
    if (!r.converged) {
        const MatrixDet finer = at(per_panel * 2);
        r.value = finer.value;
        r.complement = finer.complement;
        r.n_coarse = fine.n;
        r.n_fine = finer.n;
        r.delta = std::abs(finer.value - fine.value);
        r.converged = r.delta <= tol;
    }
    return r;
}

DetResult det_fredholm(const KernelFn& k, const QuadratureRule& rule, double tol) {
    return refine_det([&](int p) { return det_identity_minus(nystrom_matrix(k, resample(rule, p))); },
                      rule.per_panel, tol);
}

std::vector<double> resolvent_apply(const KernelFn& k, const QuadratureRule& rule, const std::vector<double>& u) {
    if (u.size() != rule.size()) throw ConfigError("resolvent_apply: vector length does not match rule");
    NystromOperator op(k, rule);
    const Vector r = op.resolvent(Eigen::Map<const Vector>(u.data(), static_cast<Eigen::Index>(u.size())));
    return {r.data(), r.data() + r.size()};
}

double rank_one_trace(const KernelFn& k, const std::vector<double>& u, const std::vector<double>& v,
                      const QuadratureRule& rule) {
    if (u.size() != rule.size() || v.size() != rule.size())
        throw ConfigError("rank_one_trace: vector length does not match rule");
    NystromOperator op(k, rule);
    return op.rank_one_trace(Eigen::Map<const Vector>(u.data(), static_cast<Eigen::Index>(u.size())),
                             Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())));
}

Matrix block_nystrom_matrix(const BlockKernel& bk, const std::array<QuadratureRule, 2>& rules) {
    const auto n0 = static_cast<Eigen::Index>(rules[0].size());
    const auto n1 = static_cast<Eigen::Index>(rules[1].size());
    Matrix m(n0 + n1, n0 + n1);
    const Eigen::Index off[2] = {0, n0};
    const Eigen::Index len[2] = {n0, n1};
    const Vector s[2] = {sqrt_weights(rules[0]), sqrt_weights(rules[1])};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.block(off[r], off[c], len[r], len[c]) =
                s[r].asDiagonal() * bk.entries[r][c].matrix(rules[r].nodes, rules[c].nodes) * s[c].asDiagonal();
    return m;
}

DetResult det_block2(const BlockKernel& bk, const std::array<QuadratureRule, 2>& rules, double tol) {
    if (rules[0].per_panel != rules[1].per_panel)
        throw ConfigError("det_block2: both rules must use the same points per panel");
    return refine_det(
        [&](int p) {
            const std::array<QuadratureRule, 2> rs = {resample(rules[0], p), resample(rules[1], p)};
            return det_identity_minus(block_nystrom_matrix(bk, rs));
        },
        rules[0].per_panel, tol);
}

double hs_norm(const KernelFn& k, const QuadratureRule& rule) { return nystrom_matrix(k, rule).norm(); }

}  // namespace polymer

#include "exem/svr.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace exem {

void validate(const SvrHyperParams& h) {
    validate(h.kernel);
    if (!(h.lambda > 0.0) || !std::isfinite(h.lambda)) {
        throw std::invalid_argument("SvrHyperParams: lambda must be finite and > 0");
    }
    if (!(h.nu > 0.0 && h.nu <= 1.0)) {
        throw std::invalid_argument("SvrHyperParams: nu must lie in (0, 1]");
    }
}

namespace {

constexpr double kTau = 1e-12;  // floor for curvature of a working pair

// SMO over the 2S-variable box form of the nu-SVR dual. Variables 0..S-1
// ("up" block) carry +1 into beta, variables S..2S-1 ("down" block) carry
// -1. Working pairs stay within one block, which preserves both block sums
// at lambda*nu/2 and hence the equality constraint sum(beta) = 0 and the
// tube budget sum(alpha + alpha') = lambda*nu throughout.
class NuSvrSolver {
public:
    NuSvrSolver(const Matrix& gram, const Vector& targets, double box, double block_sum,
                const SvrSolverOptions& opts)
        : k_(gram),
          z_(targets),
          s_(targets.size()),
          box_(box),
          opts_(opts),
          alpha_(Vector::Zero(2 * targets.size())),
          grad_(2 * targets.size()) {
        // Seed each block with block_sum mass, front-filled at the box bound.
        double remaining = block_sum;
        for (Index c = 0; c < s_; ++c) {
            const double a = std::min(remaining, box_);
            alpha_[c] = a;
            alpha_[c + s_] = a;
            remaining -= a;
        }
        // beta starts at 0, so the gradient is just the linear term.
        grad_.head(s_) = -z_;
        grad_.tail(s_) = z_;
    }

    void solve() {
        long iter = 0;
        while (iter < opts_.max_iter) {
            Index i = 0, j = 0;
            if (!select_working_pair(i, j)) return;  // KKT satisfied
            step(i, j);
            ++iter;
        }
        Index i = 0, j = 0;
        if (!select_working_pair(i, j)) return;
        std::ostringstream msg;
        msg << "train_nu_svr: no convergence after " << opts_.max_iter
            << " iterations, KKT gap " << violation_;
        throw std::runtime_error(msg.str());
    }

    Vector beta() const { return alpha_.head(s_) - alpha_.tail(s_); }
    Vector alpha_sum() const { return alpha_.head(s_) + alpha_.tail(s_); }
    long iterations() const { return iterations_; }
    double last_violation() const { return violation_; }

    // Bias and tube width from the stationarity of free variables; bound
    // midpoints stand in for an empty free set. For a free up-block variable
    // the gradient equals -(bias + epsilon), for a free down-block variable
    // it equals bias - epsilon.
    void recover_bias_epsilon(double& bias, double& epsilon) const {
        const double r1 = block_multiplier(0);
        const double r2 = block_multiplier(s_);
        bias = -(r1 - r2) / 2.0;
        epsilon = std::max(0.0, -(r1 + r2) / 2.0);
    }

private:
    double block_multiplier(Index offset) const {
        double sum_free = 0.0;
        Index n_free = 0;
        double ub = std::numeric_limits<double>::infinity();
        double lb = -std::numeric_limits<double>::infinity();
        for (Index c = 0; c < s_; ++c) {
            const double a = alpha_[offset + c];
            const double g = grad_[offset + c];
            if (a >= box_) {
                lb = std::max(lb, g);
            } else if (a <= 0.0) {
                ub = std::min(ub, g);
            } else {
                sum_free += g;
                ++n_free;
            }
        }
        if (n_free > 0) return sum_free / double(n_free);
        if (std::isinf(ub)) return std::isinf(lb) ? 0.0 : lb;
        if (std::isinf(lb)) return ub;
        return (ub + lb) / 2.0;
    }

    // Most-violating pair within either block; lowest index wins ties, the
    // up block wins a tie between blocks.
    bool select_working_pair(Index& out_i, Index& out_j) {
        double best_viol = -std::numeric_limits<double>::infinity();
        for (Index block = 0; block < 2; ++block) {
            const Index off = block * s_;
            double max_up = -std::numeric_limits<double>::infinity();
            double max_low = -std::numeric_limits<double>::infinity();
            Index arg_up = -1, arg_low = -1;
            for (Index c = 0; c < s_; ++c) {
                const double a = alpha_[off + c];
                // ascent direction for a minimization gradient: -grad for the
                // variable that grows, +grad for the one that shrinks
                if (a < box_ && -grad_[off + c] > max_up) {
                    max_up = -grad_[off + c];
                    arg_up = off + c;
                }
                if (a > 0.0 && grad_[off + c] > max_low) {
                    max_low = grad_[off + c];
                    arg_low = off + c;
                }
            }
            if (arg_up < 0 || arg_low < 0) continue;
            const double viol = max_up + max_low;
            if (viol > best_viol) {
                best_viol = viol;
                out_i = arg_up;
                out_j = arg_low;
            }
        }
        violation_ = best_viol;
        return best_viol >= opts_.tol;
    }

    double kernel_at(Index a, Index b) const { return k_(a % s_, b % s_); }

    void step(Index i, Index j) {
        // Two-variable subproblem with alpha_i + alpha_j fixed (same block).
        double quad = kernel_at(i, i) + kernel_at(j, j) - 2.0 * kernel_at(i, j);
        if (quad <= 0.0) quad = kTau;
        const double old_i = alpha_[i];
        const double old_j = alpha_[j];
        const double pair_sum = old_i + old_j;
        double delta = (grad_[i] - grad_[j]) / quad;

        double new_i = old_i - delta;
        double new_j = old_j + delta;
        if (pair_sum > box_) {
            if (new_i > box_) {
                new_i = box_;
                new_j = pair_sum - box_;
            } else if (new_j > box_) {
                new_j = box_;
                new_i = pair_sum - box_;
            }
        } else {
            if (new_j < 0.0) {
                new_j = 0.0;
                new_i = pair_sum;
            } else if (new_i < 0.0) {
                new_i = 0.0;
                new_j = pair_sum;
            }
        }
        alpha_[i] = new_i;
        alpha_[j] = new_j;

        const double di = new_i - old_i;
        const double dj = new_j - old_j;
        // Q(t, u) = sign(t) sign(u) K(t mod S, u mod S)
        const double sign_i = i < s_ ? 1.0 : -1.0;
        const double sign_j = j < s_ ? 1.0 : -1.0;
        const auto ki = k_.col(i % s_);
        const auto kj = k_.col(j % s_);
        grad_.head(s_) += (sign_i * di) * ki + (sign_j * dj) * kj;
        grad_.tail(s_) -= (sign_i * di) * ki + (sign_j * dj) * kj;
        ++iterations_;
    }

    const Matrix& k_;
    const Vector& z_;
    Index s_;
    double box_;
    SvrSolverOptions opts_;
    Vector alpha_;
    Vector grad_;
    long iterations_ = 0;
    double violation_ = 0.0;
};

SvrModel finish_model(const std::shared_ptr<const Matrix>& points, const Matrix& gram,
                      const Vector& targets, const SvrHyperParams& hyper,
                      const NuSvrSolver& solver, const SvrSolverOptions& opts,
                      SvrTrainInfo* info) {
    SvrModel model;
    model.train_points = points;
    model.beta = solver.beta();
    model.kernel = hyper.kernel;
    solver.recover_bias_epsilon(model.bias, model.epsilon);

    if (info) {
        info->iterations = solver.iterations();
        info->kkt_violation = solver.last_violation();
        info->alpha_sum = solver.alpha_sum();
        Vector residuals = gram * model.beta + Vector::Constant(targets.size(), model.bias) - targets;
        // thresholds scaled to the solver tolerance: free support vectors sit
        // on the tube edge only up to the KKT gap
        const double sv_eps = 1e-10 * hyper.lambda / double(targets.size());
        const double err_slack = 1e-9 + 10.0 * opts.tol;
        info->support_vectors = (info->alpha_sum.array() > sv_eps).count();
        info->margin_errors = (residuals.array().abs() > model.epsilon + err_slack).count();
    }
    return model;
}

}  // namespace

SvrModel train_nu_svr_gram(const std::shared_ptr<const Matrix>& points, const Matrix& gram,
                           const Vector& targets, const SvrHyperParams& hyper,
                           const SvrSolverOptions& opts, SvrTrainInfo* info) {
    validate(hyper);
    if (!points) throw std::invalid_argument("train_nu_svr: null training points");
    const Index s = points->rows();
    if (s < 2) throw std::invalid_argument("train_nu_svr: need at least 2 training points");
    if (targets.size() != s) throw std::invalid_argument("train_nu_svr: targets/points mismatch");
    if (gram.rows() != s || gram.cols() != s) {
        throw std::invalid_argument("train_nu_svr: gram matrix shape mismatch");
    }
    require_finite(targets, "train_nu_svr targets");
    require_finite(*points, "train_nu_svr points");

    const double box = hyper.lambda / double(s);
    const double block_sum = hyper.lambda * hyper.nu / 2.0;
    NuSvrSolver solver(gram, targets, box, block_sum, opts);
    solver.solve();
    return finish_model(points, gram, targets, hyper, solver, opts, info);
}

SvrModel train_nu_svr(const std::shared_ptr<const Matrix>& points, const Vector& targets,
                      const SvrHyperParams& hyper, const SvrSolverOptions& opts,
                      SvrTrainInfo* info) {
    if (!points) throw std::invalid_argument("train_nu_svr: null training points");
    return train_nu_svr_gram(points, gram_matrix(*points, hyper.kernel), targets, hyper, opts,
                             info);
}

SvrModel train_nu_svr(const Matrix& points, const Vector& targets, const SvrHyperParams& hyper,
                      const SvrSolverOptions& opts, SvrTrainInfo* info) {
    return train_nu_svr(std::make_shared<const Matrix>(points), targets, hyper, opts, info);
}

double svr_predict(const SvrModel& model, const Vector& a) {
    if (!model.train_points) throw std::invalid_argument("svr_predict: empty model");
    if (a.size() != model.train_points->cols()) {
        throw std::invalid_argument("svr_predict: input dimension mismatch");
    }
    return model.beta.dot(kernel_column(*model.train_points, a, model.kernel)) + model.bias;
}

Vector svr_predict_rows(const SvrModel& model, const Matrix& rows) {
    if (!model.train_points) throw std::invalid_argument("svr_predict: empty model");
    if (rows.cols() != model.train_points->cols()) {
        throw std::invalid_argument("svr_predict: input dimension mismatch");
    }
    Vector out(rows.rows());
    for (Index r = 0; r < rows.rows(); ++r) {
        out[r] = model.beta.dot(kernel_column(*model.train_points, rows.row(r), model.kernel)) +
                 model.bias;
    }
    return out;
}

double dual_objective(const SvrModel& model, const Matrix& points, const Vector& targets) {
    if (points.rows() != model.beta.size() || targets.size() != model.beta.size()) {
        throw std::invalid_argument("dual_objective: shape mismatch");
    }
    Matrix k = gram_matrix(points, model.kernel);
    return -0.5 * model.beta.dot(k * model.beta) + model.beta.dot(targets);
}

}  // namespace exem

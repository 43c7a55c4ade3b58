#pragma once

#include "exem/kernel.hpp"
#include "exem/types.hpp"

#include <memory>

namespace exem {

/// Hyper-parameters of one nu-SVR problem. `lambda` plays the usual C role
/// with per-sample box bound lambda/S; `nu` in (0, 1] trades tube width
/// against the fraction of support vectors.
struct SvrHyperParams {
    double lambda = 1.0;
    double nu = 0.5;
    KernelParams kernel;
};

void validate(const SvrHyperParams& h);

/// One trained regressor: f(a) = sum_c beta[c] * k(train_points.row(c), a) + bias.
struct SvrModel {
    std::shared_ptr<const Matrix> train_points;  // S x dim_a
    Vector beta;                                 // length S, sums to zero
    double bias = 0.0;
    double epsilon = 0.0;  // tube half-width recovered at the optimum
    KernelParams kernel;
};

struct SvrSolverOptions {
    double tol = 1e-3;              // KKT violation tolerance
    long max_iter = 10'000'000;     // coordinate-pair steps before giving up
};

/// Solver diagnostics, filled on request by train_nu_svr.
struct SvrTrainInfo {
    long iterations = 0;
    double kkt_violation = 0.0;   // max violating-pair gap at exit
    Index support_vectors = 0;    // points with alpha + alpha' > 0
    Index margin_errors = 0;      // points with |residual| > epsilon
    Vector alpha_sum;             // per-point alpha + alpha'
};

/// Trains one nu-SVR by SMO on the dual
///   max  -1/2 sum_ij beta_i beta_j K_ij + sum_i beta_i target_i
///   s.t. sum_i beta_i = 0,  beta_i = alpha_i - alpha'_i,
///        0 <= alpha_i, alpha'_i <= lambda/S,  sum_i (alpha_i + alpha'_i) <= lambda*nu.
/// Throws std::runtime_error with the final KKT gap if max_iter is exhausted.
SvrModel train_nu_svr(const std::shared_ptr<const Matrix>& points, const Vector& targets,
                      const SvrHyperParams& hyper, const SvrSolverOptions& opts = {},
                      SvrTrainInfo* info = nullptr);

SvrModel train_nu_svr(const Matrix& points, const Vector& targets, const SvrHyperParams& hyper,
                      const SvrSolverOptions& opts = {}, SvrTrainInfo* info = nullptr);

/// Same solver with a caller-supplied Gram matrix of `points`, so several
/// regressors over the same points can share one kernel evaluation.
SvrModel train_nu_svr_gram(const std::shared_ptr<const Matrix>& points, const Matrix& gram,
                           const Vector& targets, const SvrHyperParams& hyper,
                           const SvrSolverOptions& opts = {}, SvrTrainInfo* info = nullptr);

double svr_predict(const SvrModel& model, const Vector& a);

/// Row-wise prediction over a matrix of inputs.
Vector svr_predict_rows(const SvrModel& model, const Matrix& rows);

/// Evaluates -1/2 beta' K beta + beta' targets for the model's coefficients
/// over the given points. Test instrumentation for solver checks.
double dual_objective(const SvrModel& model, const Matrix& points, const Vector& targets);

}  // namespace exem

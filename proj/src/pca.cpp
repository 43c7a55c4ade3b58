#include "exem/pca.hpp"

#include "exem/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace exem {

namespace {

// Flip each row so its largest-magnitude entry is positive; first occurrence
// wins on magnitude ties. Keeps fitted models reproducible across runs.
void fix_signs(Matrix& rows) {
    for (Index i = 0; i < rows.rows(); ++i) {
        Index arg = 0;
        double best = -1.0;
        for (Index j = 0; j < rows.cols(); ++j) {
            const double mag = std::abs(rows(i, j));
            if (mag > best) {
                best = mag;
                arg = j;
            }
        }
        if (rows(i, arg) < 0.0) rows.row(i) = -rows.row(i);
    }
}

}  // namespace

PcaModel fit_pca(const Matrix& x, Index d) {
    require_finite(x, "fit_pca input");
    const Index n = x.rows();
    const Index dim = x.cols();
    if (n < 2) throw std::invalid_argument("fit_pca: need at least 2 rows");
    if (d < 1 || d > std::min(n - 1, dim)) {
        std::ostringstream msg;
        msg << "fit_pca: d=" << d << " out of range [1, " << std::min(n - 1, dim) << "]";
        throw std::invalid_argument(msg.str());
    }

    PcaModel model;
    model.mean = column_mean(x);
    Matrix centered = x.rowwise() - model.mean.transpose();

    Matrix directions(d, dim);  // rows = principal directions
    Vector eigenvalues(d);

    if (n >= dim) {
        Matrix cov = centered.transpose() * centered / double(n - 1);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("fit_pca: eigensolver failed to converge");
        }
        // Eigen returns eigenvalues ascending; take the top d from the back.
        for (Index k = 0; k < d; ++k) {
            const Index src = dim - 1 - k;
            eigenvalues[k] = std::max(0.0, solver.eigenvalues()[src]);
            directions.row(k) = solver.eigenvectors().col(src).transpose();
        }
    } else {
        // N < D: same spectrum via the N x N Gram matrix. An eigenpair
        // (lambda, u) of X X^T / (n-1) maps to the covariance eigenvector
        // X^T u, normalized.
        Matrix gram = centered * centered.transpose() / double(n - 1);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("fit_pca: eigensolver failed to converge");
        }
        for (Index k = 0; k < d; ++k) {
            const Index src = n - 1 - k;
            const double lambda = std::max(0.0, solver.eigenvalues()[src]);
            eigenvalues[k] = lambda;
            Vector dir = centered.transpose() * solver.eigenvectors().col(src);
            const double norm = dir.norm();
            if (norm > 0.0) {
                directions.row(k) = dir.transpose() / norm;
            } else {
                // zero-variance direction; pick any unit vector orthogonal to
                // the rows found so far
                Vector candidate = Vector::Zero(dim);
                for (Index j = 0; j < dim; ++j) {
                    candidate.setZero();
                    candidate[j] = 1.0;
                    for (Index r = 0; r < k; ++r) {
                        candidate -= directions.row(r).dot(candidate) * directions.row(r).transpose();
                    }
                    if (candidate.norm() > 0.5) break;
                }
                directions.row(k) = candidate.transpose() / candidate.norm();
            }
        }
    }

    fix_signs(directions);
    model.projection = std::move(directions);
    model.eigenvalues = std::move(eigenvalues);
    return model;
}

Matrix project(const PcaModel& model, const Matrix& x) {
    if (x.cols() != model.mean.size()) {
        std::ostringstream msg;
        msg << "project: expected " << model.mean.size() << " columns, got " << x.cols();
        throw std::invalid_argument(msg.str());
    }
    return (x.rowwise() - model.mean.transpose()) * model.projection.transpose();
}

}  // namespace exem

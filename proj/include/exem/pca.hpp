#pragma once

#include "exem/types.hpp"

namespace exem {

/// Affine projection fitted on training features: rows of `projection` are
/// the top-d principal directions of the sample covariance.
struct PcaModel {
    Vector mean;         // length D
    Matrix projection;   // d x D, orthonormal rows
    Vector eigenvalues;  // length d, non-negative, non-increasing
};

/// Fits a d-dimensional PCA on the rows of x (N x D). Requires N >= 2 and
/// 1 <= d <= min(N-1, D). Uses the D x D covariance eigendecomposition, or
/// the N x N Gram matrix when N < D. Each eigenvector's sign is fixed so its
/// largest-magnitude entry is positive.
PcaModel fit_pca(const Matrix& x, Index d);

/// Projects rows: row n of the result is projection * (x_n - mean).
Matrix project(const PcaModel& model, const Matrix& x);

}  // namespace exem

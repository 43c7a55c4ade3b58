#pragma once

#include "exem/types.hpp"

namespace exem {

/// RBF kernel parameters: k(a, b) = exp(-gamma * ||a - b||^2).
struct KernelParams {
    double gamma = 1.0;
};

void validate(const KernelParams& p);

double rbf_kernel(const Vector& a, const Vector& b, const KernelParams& p);

/// Kernel values k(points.row(c), a) for all rows c.
Vector kernel_column(const Matrix& points, const Vector& a, const KernelParams& p);

/// Symmetric PSD Gram matrix of the rows of `points`.
Matrix gram_matrix(const Matrix& points, const KernelParams& p);

/// 1 / median^2 of pairwise row distances; the conventional default RBF
/// bandwidth when none is supplied. Requires at least two distinct rows.
double median_heuristic_gamma(const Matrix& points);

}  // namespace exem

#include "exem/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace exem {

void validate(const KernelParams& p) {
    if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) {
        throw std::invalid_argument("KernelParams: gamma must be finite and > 0");
    }
}

double rbf_kernel(const Vector& a, const Vector& b, const KernelParams& p) {
    validate(p);
    require_same_length(a, b, "rbf_kernel");
    return std::exp(-p.gamma * (a - b).squaredNorm());
}

Vector kernel_column(const Matrix& points, const Vector& a, const KernelParams& p) {
    validate(p);
    if (points.cols() != a.size()) {
        throw std::invalid_argument("kernel_column: point dimension mismatch");
    }
    Vector sq = (points.rowwise() - a.transpose()).rowwise().squaredNorm();
    return (-p.gamma * sq.array()).exp();
}

Matrix gram_matrix(const Matrix& points, const KernelParams& p) {
    validate(p);
    if (points.rows() < 1) throw std::invalid_argument("gram_matrix: need at least one point");
    const Index n = points.rows();
    Vector sq_norms = points.rowwise().squaredNorm();
    // ||a-b||^2 = ||a||^2 + ||b||^2 - 2 a.b, clamped against rounding
    Matrix sq_dist = (sq_norms.replicate(1, n) + sq_norms.transpose().replicate(n, 1) -
                      2.0 * points * points.transpose())
                         .cwiseMax(0.0);
    Matrix g = (-p.gamma * sq_dist.array()).exp();
    g.diagonal().setOnes();
    return 0.5 * (g + g.transpose());  // exact symmetry
}

double median_heuristic_gamma(const Matrix& points) {
    const Index n = points.rows();
    if (n < 2) throw std::invalid_argument("median_heuristic_gamma: need at least two rows");
    std::vector<double> sq;
    sq.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            sq.push_back((points.row(i) - points.row(j)).squaredNorm());
        }
    }
    std::sort(sq.begin(), sq.end());
    const std::size_t m = sq.size();
    double median_sq = (m % 2 == 1) ? sq[m / 2] : 0.5 * (sq[m / 2 - 1] + sq[m / 2]);
    if (median_sq <= 0.0) {
        throw std::invalid_argument("median_heuristic_gamma: all rows coincide");
    }
    return 1.0 / median_sq;
}

}  // namespace exem

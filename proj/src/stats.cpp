#include "exem/stats.hpp"

#include <cmath>
#include <sstream>

namespace exem {

double euclidean_dist(const Vector& u, const Vector& v) {
    require_same_length(u, v, "euclidean_dist");
    return (u - v).norm();
}

double weighted_euclidean_dist(const Vector& u, const Vector& v, const Vector& inv_scale) {
    require_same_length(u, v, "weighted_euclidean_dist");
    require_same_length(u, inv_scale, "weighted_euclidean_dist (inv_scale)");
    if ((inv_scale.array() <= 0.0).any()) {
        throw std::invalid_argument("weighted_euclidean_dist: inv_scale entries must be > 0");
    }
    return ((u - v).array() * inv_scale.array()).matrix().norm();
}

Vector column_mean(const Matrix& m) {
    if (m.rows() < 1) throw std::invalid_argument("column_mean: empty matrix");
    return m.colwise().mean();
}

Vector column_std(const Matrix& m, Index ddof) {
    if (m.rows() <= ddof) {
        std::ostringstream msg;
        msg << "column_std: need rows > ddof (" << m.rows() << " <= " << ddof << ")";
        throw std::invalid_argument(msg.str());
    }
    Matrix centered = m.rowwise() - m.colwise().mean();
    Vector var = centered.array().square().colwise().sum() / double(m.rows() - ddof);
    return var.array().sqrt();
}

}  // namespace exem

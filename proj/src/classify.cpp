#include "exem/classify.hpp"

#include "exem/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace exem {

namespace {

void check_classifier(const NnClassifier& c) {
    validate(c.exemplars);
    if (c.exemplars.class_ids.empty()) {
        throw std::invalid_argument("NnClassifier: empty exemplar table");
    }
    if (c.mode == NnMode::standardized) {
        if (c.sigma.size() != c.exemplars.exemplars.cols()) {
            throw std::invalid_argument("NnClassifier: sigma length != exemplar dimension");
        }
        if ((c.sigma.array() <= 0.0).any()) {
            throw std::invalid_argument("NnClassifier: sigma entries must be > 0");
        }
    }
}

// Squared distances from a query to every exemplar row; squared vs plain is
// argmin- and ranking-equivalent, so the square root is never taken.
Vector squared_distances(const NnClassifier& c, const Vector& z_row) {
    check_classifier(c);
    if (z_row.size() != c.exemplars.exemplars.cols()) {
        throw std::invalid_argument("classify: query dimension mismatch");
    }
    const Matrix& ex = c.exemplars.exemplars;
    if (c.mode == NnMode::standardized) {
        Matrix diff = ex.rowwise() - z_row.transpose();
        return (diff * c.sigma.cwiseInverse().asDiagonal()).rowwise().squaredNorm();
    }
    return (ex.rowwise() - z_row.transpose()).rowwise().squaredNorm();
}

}  // namespace

NnClassifier make_nn_classifier(ExemplarTable exemplars) {
    NnClassifier c{std::move(exemplars), NnMode::plain, Vector()};
    check_classifier(c);
    return c;
}

NnClassifier make_nn_classifier(ExemplarTable exemplars, Vector sigma) {
    NnClassifier c{std::move(exemplars), NnMode::standardized, std::move(sigma)};
    check_classifier(c);
    return c;
}

Vector intra_class_std(const Matrix& z, const std::vector<ClassId>& labels) {
    if (z.rows() == 0 || labels.empty()) {
        throw std::invalid_argument("intra_class_std: empty input");
    }
    if (static_cast<Index>(labels.size()) != z.rows()) {
        throw std::invalid_argument("intra_class_std: label count != rows");
    }
    std::map<ClassId, std::vector<Index>> groups;
    for (Index i = 0; i < z.rows(); ++i) groups[labels[i]].push_back(i);

    Vector mean_std = Vector::Zero(z.cols());
    for (const auto& [id, rows] : groups) {
        if (rows.size() < 2) continue;  // single-row class contributes zero spread
        Matrix block(static_cast<Index>(rows.size()), z.cols());
        for (std::size_t r = 0; r < rows.size(); ++r) block.row(static_cast<Index>(r)) = z.row(rows[r]);
        mean_std += column_std(block, 0);
    }
    mean_std /= double(groups.size());

    // Clamp so constant dimensions or singleton classes cannot produce a
    // zero divisor in the standardized distance.
    double nonzero_sum = 0.0;
    Index nonzero_count = 0;
    for (Index j = 0; j < mean_std.size(); ++j) {
        if (mean_std[j] > 0.0) {
            nonzero_sum += mean_std[j];
            ++nonzero_count;
        }
    }
    const double floor = 1e-6 * (nonzero_count > 0 ? nonzero_sum / double(nonzero_count) : 1.0);
    return mean_std.cwiseMax(floor > 0.0 ? floor : 1e-6);
}

ClassId classify_1nn(const NnClassifier& c, const Vector& z_row) {
    const Vector d = squared_distances(c, z_row);
    Index best = 0;
    for (Index i = 1; i < d.size(); ++i) {
        if (d[i] < d[best] ||
            (d[i] == d[best] && c.exemplars.class_ids[i] < c.exemplars.class_ids[best])) {
            best = i;
        }
    }
    return c.exemplars.class_ids[best];
}

std::vector<ClassId> classify_topk(const NnClassifier& c, const Vector& z_row, Index k) {
    const Vector d = squared_distances(c, z_row);
    const Index n = d.size();
    if (k < 1 || k > n) throw std::invalid_argument("classify_topk: k out of range");

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (d[a] != d[b]) return d[a] < d[b];
        return c.exemplars.class_ids[a] < c.exemplars.class_ids[b];
    });

    std::vector<ClassId> out;
    out.reserve(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) out.push_back(c.exemplars.class_ids[order[static_cast<std::size_t>(i)]]);
    return out;
}

Matrix exemplar_similarity(const ExemplarTable& targets, const ExemplarTable& bases,
                           double scale) {
    validate(targets);
    validate(bases);
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("exemplar_similarity: scale must be > 0");
    }
    if (targets.exemplars.cols() != bases.exemplars.cols()) {
        throw std::invalid_argument("exemplar_similarity: dimension mismatch between tables");
    }
    const Index nt = targets.exemplars.rows();
    const Index nb = bases.exemplars.rows();
    Matrix sim(nt, nb);
    for (Index c = 0; c < nt; ++c) {
        Vector sq = (bases.exemplars.rowwise() - targets.exemplars.row(c)).rowwise().squaredNorm();
        // shift by the row minimum before exponentiating; softmax is
        // invariant to the shift and stays away from underflow
        Vector shifted = -scale * (sq.array() - sq.minCoeff());
        Vector ex = shifted.array().exp();
        sim.row(c) = ex.transpose() / ex.sum();
    }
    return sim;
}

Matrix export_improved_semantics(const ExemplarPredictor& p, const Matrix& a) {
    return predict_exemplar_matrix(p, a);
}

}  // namespace exem

#include "exem/exemplar.hpp"

#include "exem/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace exem {

void validate(const ExemplarTable& t) {
    if (static_cast<Index>(t.class_ids.size()) != t.exemplars.rows()) {
        throw std::invalid_argument("ExemplarTable: id count != exemplar rows");
    }
    std::set<ClassId> unique(t.class_ids.begin(), t.class_ids.end());
    if (unique.size() != t.class_ids.size()) {
        throw std::invalid_argument("ExemplarTable: duplicate class ids");
    }
}

Matrix normalize_semantics(const Matrix& a) {
    require_finite(a, "normalize_semantics input");
    Matrix out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        const double norm = a.row(i).norm();
        if (norm == 0.0) {
            std::ostringstream msg;
            msg << "normalize_semantics: zero row at class index " << i;
            throw std::invalid_argument(msg.str());
        }
        out.row(i) = a.row(i) / norm;
    }
    return out;
}

ExemplarTable compute_exemplars(const Matrix& z, const std::vector<ClassId>& labels) {
    if (z.rows() == 0 || labels.empty()) {
        throw std::invalid_argument("compute_exemplars: empty input");
    }
    if (static_cast<Index>(labels.size()) != z.rows()) {
        throw std::invalid_argument("compute_exemplars: label count != rows");
    }
    std::map<ClassId, std::pair<Vector, Index>> groups;  // sum, count; key order = ascending id
    for (Index i = 0; i < z.rows(); ++i) {
        auto [it, inserted] = groups.try_emplace(labels[i], Vector::Zero(z.cols()), 0);
        it->second.first += z.row(i).transpose();
        it->second.second += 1;
    }

    ExemplarTable table;
    table.exemplars.resize(static_cast<Index>(groups.size()), z.cols());
    Index row = 0;
    for (const auto& [id, sum_count] : groups) {
        table.class_ids.push_back(id);
        table.exemplars.row(row) = sum_count.first.transpose() / double(sum_count.second);
        ++row;
    }
    return table;
}

ExemplarPredictor train_predictor(const Matrix& a_seen, const ExemplarTable& table,
                                  const SvrHyperParams& hyper, const SvrSolverOptions& opts) {
    validate(table);
    validate(hyper);
    if (a_seen.rows() != table.exemplars.rows()) {
        throw std::invalid_argument("train_predictor: semantic rows != exemplar rows");
    }
    require_finite(a_seen, "train_predictor semantics");
    require_finite(table.exemplars, "train_predictor exemplars");

    auto points = std::make_shared<const Matrix>(a_seen);
    const Matrix gram = gram_matrix(*points, hyper.kernel);
    const Index d = table.exemplars.cols();

    ExemplarPredictor predictor;
    predictor.hyper = hyper;
    predictor.semantic_dim = a_seen.cols();
    predictor.models.resize(static_cast<std::size_t>(d));

    // One independent regressor per exemplar dimension; all share the Gram.
    std::vector<std::string> failures(static_cast<std::size_t>(d));
    parallel_for(static_cast<std::size_t>(d), [&](std::size_t j) {
        try {
            Vector targets = table.exemplars.col(static_cast<Index>(j));
            predictor.models[j] = train_nu_svr_gram(points, gram, targets, hyper, opts);
        } catch (const std::exception& e) {
            failures[j] = e.what();
        }
    });
    for (std::size_t j = 0; j < failures.size(); ++j) {
        if (!failures[j].empty()) {
            std::ostringstream msg;
            msg << "train_predictor: dimension " << j << ": " << failures[j];
            throw std::runtime_error(msg.str());
        }
    }
    return predictor;
}

Matrix predict_exemplar_matrix(const ExemplarPredictor& p, const Matrix& a) {
    if (p.models.empty()) throw std::invalid_argument("predict_exemplars: empty predictor");
    if (a.cols() != p.semantic_dim) {
        std::ostringstream msg;
        msg << "predict_exemplars: expected " << p.semantic_dim << " semantic dims, got "
            << a.cols();
        throw std::invalid_argument(msg.str());
    }
    require_finite(a, "predict_exemplars input");

    const Matrix& points = *p.models.front().train_points;
    const Index d = p.output_dim();
    Matrix out(a.rows(), d);
    parallel_for(static_cast<std::size_t>(a.rows()), [&](std::size_t u) {
        const Index row = static_cast<Index>(u);
        Vector k = kernel_column(points, a.row(row), p.models.front().kernel);
        for (Index j = 0; j < d; ++j) {
            out(row, j) = p.models[static_cast<std::size_t>(j)].beta.dot(k) +
                          p.models[static_cast<std::size_t>(j)].bias;
        }
    });
    return out;
}

ExemplarTable predict_exemplars(const ExemplarPredictor& p, const Matrix& a_unseen,
                                const std::vector<ClassId>& ids) {
    if (static_cast<Index>(ids.size()) != a_unseen.rows()) {
        throw std::invalid_argument("predict_exemplars: id count != semantic rows");
    }
    ExemplarTable table;
    table.class_ids = ids;
    table.exemplars = predict_exemplar_matrix(p, a_unseen);
    validate(table);
    return table;
}

}  // namespace exem

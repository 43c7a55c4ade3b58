#pragma once

#include "exem/svr.hpp"
#include "exem/types.hpp"

#include <vector>

namespace exem {

/// Per-class exemplar coordinates; row i belongs to class_ids[i].
/// compute_exemplars and predict_exemplars keep class_ids unique; tables
/// produced by compute_exemplars are sorted ascending by id.
struct ExemplarTable {
    std::vector<ClassId> class_ids;
    Matrix exemplars;  // #classes x d
};

void validate(const ExemplarTable& t);

/// The learned map from semantic space to exemplar space: d independent
/// regressors sharing one kernel parameterization and training-point matrix.
struct ExemplarPredictor {
    std::vector<SvrModel> models;  // one per exemplar dimension
    SvrHyperParams hyper;
    Index semantic_dim = 0;

    Index output_dim() const { return static_cast<Index>(models.size()); }
};

/// Scales every row to unit L2 norm. A zero row is a domain error naming the
/// offending row index.
Matrix normalize_semantics(const Matrix& a);

/// Class exemplars as the mean of the (already projected) rows of each class.
/// Output rows are ordered by ascending class id.
ExemplarTable compute_exemplars(const Matrix& z, const std::vector<ClassId>& labels);

/// Trains one regressor per exemplar dimension. Row c of a_seen must be the
/// semantic representation of table.class_ids[c].
ExemplarPredictor train_predictor(const Matrix& a_seen, const ExemplarTable& table,
                                  const SvrHyperParams& hyper, const SvrSolverOptions& opts = {});

/// Predicted exemplar coordinates, one row per row of `a`.
Matrix predict_exemplar_matrix(const ExemplarPredictor& p, const Matrix& a);

/// Predicted exemplars for novel classes with the given ids.
ExemplarTable predict_exemplars(const ExemplarPredictor& p, const Matrix& a_unseen,
                                const std::vector<ClassId>& ids);

}  // namespace exem

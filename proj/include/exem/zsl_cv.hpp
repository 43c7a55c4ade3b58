#pragma once

#include "exem/classify.hpp"
#include "exem/exemplar.hpp"
#include "exem/pca.hpp"
#include "exem/svr.hpp"
#include "exem/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace exem {

enum class CvObjective { per_class_accuracy, flat_hit_at_k };

/// One grid point of the hyper-parameter search.
struct HyperPoint {
    Index d = 0;  // PCA dimension; 0 = min(500, N-1, D)
    double lambda = 1.0;
    double nu = 0.5;
    double gamma = 1.0;
    double scale = 1.0;  // similarity-export scale, recorded for audit
};

struct CvConfig {
    int n_folds = 5;
    std::vector<Index> ds{0};
    std::vector<double> lambdas;
    std::vector<double> nus;
    std::vector<double> gammas;
    std::vector<double> scales{1.0};
    std::uint64_t seed = 0;
    CvObjective objective = CvObjective::per_class_accuracy;
    Index objective_k = 1;         // K for flat_hit_at_k
    NnMode mode = NnMode::plain;   // classifier used inside folds
    SvrSolverOptions solver;
};

void validate(const CvConfig& cfg, Index n_classes);

/// Conventional default grids when the caller supplies none:
/// lambda in 2^-3..2^10, nu in {0.25, 0.5, 0.75, 1.0}, gamma in 2^-5..2^5
/// scaled by the median heuristic of the semantic rows.
CvConfig default_cv_config(const Matrix& semantics);

/// Seen-class data handed to the cross-validation driver. semantics rows are
/// keyed by semantic_ids and must cover every label.
struct CvData {
    Matrix features;
    std::vector<ClassId> labels;
    Matrix semantics;
    std::vector<ClassId> semantic_ids;
};

/// Shuffles the classes with the seeded generator and splits them into
/// n_folds disjoint sets whose sizes differ by at most one.
std::vector<std::vector<ClassId>> make_class_folds(const std::vector<ClassId>& classes,
                                                   int n_folds, std::uint64_t seed);

/// The models fitted on the in-fold classes of one simulated zero-shot trial.
struct FoldModel {
    PcaModel pca;
    ExemplarPredictor predictor;
    Vector sigma;  // intra-class spread of the projected training data
};

/// Fits PCA, exemplars and the predictor on the training classes only.
FoldModel fit_fold(const CvData& data, const std::vector<ClassId>& train_classes,
                   const HyperPoint& hyper, const CvConfig& cfg);

/// Classifies held-out-class samples within the held-out label space and
/// returns the configured objective.
double score_fold(const FoldModel& model, const CvData& data,
                  const std::vector<ClassId>& heldout_classes, const CvConfig& cfg);

/// One simulated zero-shot trial: fit on train classes, score on held-out.
double evaluate_fold(const CvData& data, const std::vector<ClassId>& train_classes,
                     const std::vector<ClassId>& heldout_classes, const HyperPoint& hyper,
                     const CvConfig& cfg);

struct CvResultRow {
    HyperPoint hyper;
    int fold = 0;
    double objective = 0.0;
};

struct CvResult {
    HyperPoint best;
    double best_mean = 0.0;
    std::vector<CvResultRow> table;  // one row per (grid point, fold)
};

/// Mean objective over folds for every grid point; returns the argmax with
/// ties resolved by earliest grid order. Grid order is the nested loop
/// d > lambda > nu > gamma > scale, each in the order given.
CvResult grid_search(const CvData& data, const CvConfig& cfg);

/// CSV audit table: one row per (grid point, fold) with all hyper-parameters.
void write_cv_table_csv(const CvResult& result, std::ostream& out);

}  // namespace exem

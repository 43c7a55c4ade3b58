#pragma once

#include "exem/classify.hpp"
#include "exem/dataio.hpp"
#include "exem/eval.hpp"

#include <string>
#include <vector>

namespace exem {

struct PipelineOptions {
    Index d = 0;          // 0 = min(500, N_seen - 1, D)
    double lambda = 1.0;
    double nu = 0.5;
    double gamma = 0.0;   // 0 = median heuristic over seen semantics
    NnMode mode = NnMode::plain;
    std::vector<Index> ks{1, 2, 5, 10, 20};
    std::uint64_t seed = 0;  // recorded in the report
    SvrSolverOptions solver;
};

struct PipelineResult {
    EvalReport report;
    PcaModel pca;
    ExemplarPredictor predictor;
    ExemplarTable predicted_exemplars;
    std::vector<std::vector<ClassId>> ranked_predictions;
    std::vector<ClassId> test_truth;
    Index d = 0;
    double gamma = 0.0;  // the value actually used
};

/// The full zero-shot run: normalize semantics, fit PCA on seen-class rows,
/// project, average per-class exemplars, train the regressors, predict
/// unseen exemplars, classify every unseen-class sample and score it.
PipelineResult run_pipeline(const DatasetBundle& bundle, const PipelineOptions& opts);

/// Report as a JSON document; metric values rounded to 4 decimals.
std::string report_to_json(const PipelineResult& result, const PipelineOptions& opts);

}  // namespace exem

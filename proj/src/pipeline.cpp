#include "exem/pipeline.hpp"

#include "exem/stats.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace exem {

namespace {

using nlohmann::json;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

// Rows of `semantics` for the requested ids, in the given order.
Matrix semantic_rows(const Matrix& semantics, const std::vector<ClassId>& semantic_ids,
                     const std::vector<ClassId>& wanted) {
    std::map<ClassId, Index> index;
    for (Index i = 0; i < static_cast<Index>(semantic_ids.size()); ++i) {
        index[semantic_ids[static_cast<std::size_t>(i)]] = i;
    }
    Matrix out(static_cast<Index>(wanted.size()), semantics.cols());
    for (std::size_t i = 0; i < wanted.size(); ++i) {
        auto it = index.find(wanted[i]);
        if (it == index.end()) {
            throw std::invalid_argument("pipeline: no semantic row for class '" + wanted[i] + "'");
        }
        out.row(static_cast<Index>(i)) = semantics.row(it->second);
    }
    return out;
}

}  // namespace

PipelineResult run_pipeline(const DatasetBundle& bundle, const PipelineOptions& opts) {
    validate(bundle);
    if (bundle.seen.empty() || bundle.unseen.empty()) {
        throw std::invalid_argument("pipeline: need non-empty seen and unseen class lists");
    }

    const Matrix semantics = normalize_semantics(bundle.semantics);

    // split rows into seen-class training data and unseen-class test data
    std::set<ClassId> seen_set(bundle.seen.begin(), bundle.seen.end());
    std::set<ClassId> unseen_set(bundle.unseen.begin(), bundle.unseen.end());
    std::vector<Index> train_rows, test_rows;
    for (Index i = 0; i < bundle.features.rows(); ++i) {
        const ClassId& label = bundle.labels[static_cast<std::size_t>(i)];
        if (seen_set.count(label)) {
            train_rows.push_back(i);
        } else if (unseen_set.count(label)) {
            test_rows.push_back(i);
        }
    }
    if (train_rows.size() < 2) throw std::invalid_argument("pipeline: too few seen-class samples");
    if (test_rows.empty()) throw std::invalid_argument("pipeline: no unseen-class samples");

    Matrix x_train(static_cast<Index>(train_rows.size()), bundle.features.cols());
    std::vector<ClassId> y_train;
    y_train.reserve(train_rows.size());
    for (std::size_t r = 0; r < train_rows.size(); ++r) {
        x_train.row(static_cast<Index>(r)) = bundle.features.row(train_rows[r]);
        y_train.push_back(bundle.labels[static_cast<std::size_t>(train_rows[r])]);
    }

    PipelineResult result;

    Index d = opts.d;
    const Index d_cap = std::min(x_train.rows() - 1, x_train.cols());
    if (d <= 0) d = std::min<Index>(500, d_cap);
    if (d > d_cap) {
        throw std::invalid_argument("pipeline: d exceeds min(N_seen - 1, D)");
    }
    result.d = d;

    result.pca = fit_pca(x_train, d);
    Matrix z_train = project(result.pca, x_train);
    ExemplarTable seen_exemplars = compute_exemplars(z_train, y_train);

    Matrix a_seen = semantic_rows(semantics, bundle.semantic_ids, seen_exemplars.class_ids);
    result.gamma = opts.gamma > 0.0 ? opts.gamma : median_heuristic_gamma(a_seen);

    SvrHyperParams hyper{opts.lambda, opts.nu, KernelParams{result.gamma}};
    result.predictor = train_predictor(a_seen, seen_exemplars, hyper, opts.solver);

    std::vector<ClassId> unseen_sorted = bundle.unseen;
    std::sort(unseen_sorted.begin(), unseen_sorted.end());
    Matrix a_unseen = semantic_rows(semantics, bundle.semantic_ids, unseen_sorted);
    result.predicted_exemplars = predict_exemplars(result.predictor, a_unseen, unseen_sorted);

    NnClassifier classifier =
        opts.mode == NnMode::standardized
            ? make_nn_classifier(result.predicted_exemplars, intra_class_std(z_train, y_train))
            : make_nn_classifier(result.predicted_exemplars);

    Matrix x_test(static_cast<Index>(test_rows.size()), bundle.features.cols());
    result.test_truth.reserve(test_rows.size());
    for (std::size_t r = 0; r < test_rows.size(); ++r) {
        x_test.row(static_cast<Index>(r)) = bundle.features.row(test_rows[r]);
        result.test_truth.push_back(bundle.labels[static_cast<std::size_t>(test_rows[r])]);
    }
    Matrix z_test = project(result.pca, x_test);

    const Index n_unseen = static_cast<Index>(unseen_sorted.size());
    std::vector<Index> ks;
    for (Index k : opts.ks) {
        if (k >= 1 && k <= n_unseen) ks.push_back(k);
    }
    if (ks.empty()) ks.push_back(1);
    const Index k_max = *std::max_element(ks.begin(), ks.end());

    result.ranked_predictions.reserve(test_rows.size());
    for (Index i = 0; i < z_test.rows(); ++i) {
        result.ranked_predictions.push_back(classify_topk(classifier, z_test.row(i), k_max));
    }

    const HierarchyGraph* graph = bundle.hierarchy ? &*bundle.hierarchy : nullptr;
    result.report =
        evaluate(result.ranked_predictions, result.test_truth, ks, graph, unseen_sorted);
    return result;
}

std::string report_to_json(const PipelineResult& result, const PipelineOptions& opts) {
    json doc;
    doc["per_class_accuracy"] = round4(result.report.per_class_accuracy);
    doc["top1_accuracy"] = round4(result.report.top1_accuracy);
    json flat = json::object();
    for (const auto& [k, v] : result.report.flat_hit) flat[std::to_string(k)] = round4(v);
    doc["flat_hit"] = flat;
    if (!result.report.hier_precision.empty()) {
        json hp = json::object();
        for (const auto& [k, v] : result.report.hier_precision) hp[std::to_string(k)] = round4(v);
        doc["hier_precision"] = hp;
    }
    doc["counts"] = {{"test_samples", result.report.n_samples},
                     {"classes", result.report.n_classes}};
    doc["params"] = {{"d", result.d},
                     {"lambda", opts.lambda},
                     {"nu", opts.nu},
                     {"gamma", result.gamma},
                     {"mode", opts.mode == NnMode::standardized ? "1nn-scaled" : "1nn"},
                     {"seed", opts.seed}};
    return doc.dump(2) + "\n";
}

}  // namespace exem

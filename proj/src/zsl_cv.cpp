#include "exem/zsl_cv.hpp"

#include "exem/eval.hpp"
#include "exem/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace exem {

void validate(const CvConfig& cfg, Index n_classes) {
    if (cfg.n_folds < 2) throw std::invalid_argument("CvConfig: need n_folds >= 2");
    if (static_cast<Index>(cfg.n_folds) > n_classes) {
        throw std::invalid_argument("CvConfig: more folds than seen classes");
    }
    if (cfg.ds.empty() || cfg.lambdas.empty() || cfg.nus.empty() || cfg.gammas.empty() ||
        cfg.scales.empty()) {
        throw std::invalid_argument("CvConfig: every hyper-parameter grid must be non-empty");
    }
    if (cfg.objective == CvObjective::flat_hit_at_k && cfg.objective_k < 1) {
        throw std::invalid_argument("CvConfig: objective_k must be >= 1");
    }
}

CvConfig default_cv_config(const Matrix& semantics) {
    CvConfig cfg;
    for (int e = -3; e <= 10; ++e) cfg.lambdas.push_back(std::ldexp(1.0, e));
    cfg.nus = {0.25, 0.5, 0.75, 1.0};
    const double base = median_heuristic_gamma(semantics);
    for (int e = -5; e <= 5; ++e) cfg.gammas.push_back(std::ldexp(1.0, e) * base);
    return cfg;
}

std::vector<std::vector<ClassId>> make_class_folds(const std::vector<ClassId>& classes,
                                                   int n_folds, std::uint64_t seed) {
    if (n_folds < 2) throw std::invalid_argument("make_class_folds: need n_folds >= 2");
    if (static_cast<std::size_t>(n_folds) > classes.size()) {
        throw std::invalid_argument("make_class_folds: more folds than classes");
    }
    std::vector<ClassId> shuffled = classes;
    Rng rng(seed);
    rng.shuffle(shuffled);

    // first (n mod k) folds get the extra class
    const std::size_t n = shuffled.size();
    const std::size_t k = static_cast<std::size_t>(n_folds);
    std::vector<std::vector<ClassId>> folds(k);
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        std::size_t size = n / k + (f < n % k ? 1 : 0);
        folds[f].assign(shuffled.begin() + pos, shuffled.begin() + pos + size);
        pos += size;
    }
    return folds;
}

namespace {

struct ClassSubset {
    Matrix features;
    std::vector<ClassId> labels;
    Matrix semantics;
    std::vector<ClassId> semantic_ids;
};

ClassSubset restrict_to(const CvData& data, const std::vector<ClassId>& classes) {
    std::set<ClassId> keep(classes.begin(), classes.end());
    std::vector<Index> rows;
    for (Index i = 0; i < data.features.rows(); ++i) {
        if (keep.count(data.labels[static_cast<std::size_t>(i)])) rows.push_back(i);
    }
    ClassSubset subset;
    subset.features.resize(static_cast<Index>(rows.size()), data.features.cols());
    subset.labels.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        subset.features.row(static_cast<Index>(r)) = data.features.row(rows[r]);
        subset.labels.push_back(data.labels[static_cast<std::size_t>(rows[r])]);
    }

    std::map<ClassId, Index> sem_index;
    for (Index i = 0; i < static_cast<Index>(data.semantic_ids.size()); ++i) {
        sem_index[data.semantic_ids[static_cast<std::size_t>(i)]] = i;
    }
    std::vector<ClassId> ordered(keep.begin(), keep.end());  // ascending ids
    subset.semantics.resize(static_cast<Index>(ordered.size()), data.semantics.cols());
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        auto it = sem_index.find(ordered[i]);
        if (it == sem_index.end()) {
            throw std::invalid_argument("zsl_cv: no semantic row for class '" + ordered[i] + "'");
        }
        subset.semantics.row(static_cast<Index>(i)) = data.semantics.row(it->second);
        subset.semantic_ids.push_back(ordered[i]);
    }
    return subset;
}

}  // namespace

FoldModel fit_fold(const CvData& data, const std::vector<ClassId>& train_classes,
                   const HyperPoint& hyper, const CvConfig& cfg) {
    ClassSubset train = restrict_to(data, train_classes);
    if (train.features.rows() < 2) {
        throw std::invalid_argument("fit_fold: need at least 2 training samples");
    }

    // PCA refit on in-fold classes only, so no held-out information leaks in
    Index d = hyper.d;
    const Index d_cap = std::min(train.features.rows() - 1, train.features.cols());
    if (d <= 0) d = std::min<Index>(500, d_cap);
    d = std::min(d, d_cap);

    FoldModel model;
    model.pca = fit_pca(train.features, d);
    Matrix z = project(model.pca, train.features);
    ExemplarTable table = compute_exemplars(z, train.labels);
    model.sigma = intra_class_std(z, train.labels);

    SvrHyperParams svr_hyper{hyper.lambda, hyper.nu, KernelParams{hyper.gamma}};
    model.predictor = train_predictor(train.semantics, table, svr_hyper, cfg.solver);
    return model;
}

double score_fold(const FoldModel& model, const CvData& data,
                  const std::vector<ClassId>& heldout_classes, const CvConfig& cfg) {
    ClassSubset heldout = restrict_to(data, heldout_classes);
    if (heldout.features.rows() == 0) {
        throw std::invalid_argument("score_fold: held-out classes have no samples");
    }

    ExemplarTable predicted =
        predict_exemplars(model.predictor, heldout.semantics, heldout.semantic_ids);

    NnClassifier classifier = cfg.mode == NnMode::standardized
                                  ? make_nn_classifier(predicted, model.sigma)
                                  : make_nn_classifier(predicted);

    Matrix z_test = project(model.pca, heldout.features);
    const Index k_needed = cfg.objective == CvObjective::flat_hit_at_k
                               ? std::min<Index>(cfg.objective_k,
                                                 static_cast<Index>(predicted.class_ids.size()))
                               : 1;
    std::vector<std::vector<ClassId>> ranked;
    ranked.reserve(static_cast<std::size_t>(z_test.rows()));
    for (Index i = 0; i < z_test.rows(); ++i) {
        ranked.push_back(classify_topk(classifier, z_test.row(i), k_needed));
    }
    if (cfg.objective == CvObjective::flat_hit_at_k) {
        return flat_hit_at_k(ranked, heldout.labels, k_needed);
    }
    std::vector<ClassId> top1;
    top1.reserve(ranked.size());
    for (const auto& r : ranked) top1.push_back(r.front());
    return per_class_accuracy(top1, heldout.labels);
}

double evaluate_fold(const CvData& data, const std::vector<ClassId>& train_classes,
                     const std::vector<ClassId>& heldout_classes, const HyperPoint& hyper,
                     const CvConfig& cfg) {
    std::set<ClassId> train_set(train_classes.begin(), train_classes.end());
    for (const auto& c : heldout_classes) {
        if (train_set.count(c)) {
            throw std::invalid_argument("evaluate_fold: class '" + c +
                                        "' in both train and held-out sets");
        }
    }
    return score_fold(fit_fold(data, train_classes, hyper, cfg), data, heldout_classes, cfg);
}

CvResult grid_search(const CvData& data, const CvConfig& cfg) {
    std::set<ClassId> class_set(data.labels.begin(), data.labels.end());
    std::vector<ClassId> classes(class_set.begin(), class_set.end());
    validate(cfg, static_cast<Index>(classes.size()));

    const auto folds = make_class_folds(classes, cfg.n_folds, cfg.seed);

    std::vector<HyperPoint> grid;
    for (Index d : cfg.ds) {
        for (double lambda : cfg.lambdas) {
            for (double nu : cfg.nus) {
                for (double gamma : cfg.gammas) {
                    for (double scale : cfg.scales) {
                        grid.push_back(HyperPoint{d, lambda, nu, gamma, scale});
                    }
                }
            }
        }
    }

    CvResult result;
    result.best_mean = -1.0;
    for (const auto& point : grid) {
        double mean = 0.0;
        for (std::size_t f = 0; f < folds.size(); ++f) {
            std::vector<ClassId> train_classes;
            for (std::size_t g = 0; g < folds.size(); ++g) {
                if (g == f) continue;
                train_classes.insert(train_classes.end(), folds[g].begin(), folds[g].end());
            }
            const double objective = evaluate_fold(data, train_classes, folds[f], point, cfg);
            result.table.push_back(CvResultRow{point, static_cast<int>(f), objective});
            mean += objective;
        }
        mean /= double(folds.size());
        if (mean > result.best_mean) {
            result.best_mean = mean;
            result.best = point;
        }
    }
    return result;
}

void write_cv_table_csv(const CvResult& result, std::ostream& out) {
    out << "d,lambda,nu,gamma,scale,fold,objective\n";
    char buf[256];
    for (const auto& row : result.table) {
        std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g,%.17g,%.17g,%d,%.17g\n",
                      static_cast<long>(row.hyper.d), row.hyper.lambda, row.hyper.nu,
                      row.hyper.gamma, row.hyper.scale, row.fold, row.objective);
        out << buf;
    }
}

}  // namespace exem

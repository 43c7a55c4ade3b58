#include "exem/cli.hpp"

#include "exem/classify.hpp"
#include "exem/dataio.hpp"
#include "exem/pipeline.hpp"
#include "exem/synth.hpp"
#include "exem/zsl_cv.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace exem {

namespace {

using nlohmann::json;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

NnMode parse_mode(const std::string& mode) {
    if (mode == "1nn") return NnMode::plain;
    if (mode == "1nn-scaled") return NnMode::standardized;
    throw CLI::ValidationError("--mode", "expected '1nn' or '1nn-scaled', got '" + mode + "'");
}

json report_json(const EvalReport& report) {
    json doc;
    doc["per_class_accuracy"] = round4(report.per_class_accuracy);
    doc["top1_accuracy"] = round4(report.top1_accuracy);
    json flat = json::object();
    for (const auto& [k, v] : report.flat_hit) flat[std::to_string(k)] = round4(v);
    doc["flat_hit"] = flat;
    if (!report.hier_precision.empty()) {
        json hp = json::object();
        for (const auto& [k, v] : report.hier_precision) hp[std::to_string(k)] = round4(v);
        doc["hier_precision"] = hp;
    }
    doc["counts"] = {{"test_samples", report.n_samples}, {"classes", report.n_classes}};
    return doc;
}

struct SynthArgs {
    std::string out;
    SynthSpec spec;
    double anisotropy_span = 0.0;
    std::string format = "csv";
};

struct PcaArgs {
    std::string features, labels, seen, out, project_out;
    Index d = 0;
};

struct ExemplarArgs {
    std::string features, labels, pca, out, sigma_out;
};

struct TrainArgs {
    std::string semantics, exemplars, out;
    double lambda = 1.0, nu = 0.5, gamma = 0.0;
};

struct PredictArgs {
    std::string predictor, semantics, classes, out;
};

struct ClassifyArgs {
    std::string features, pca, exemplars, sigma, out;
    std::string mode = "1nn";
    Index k = 1;
};

struct EvalArgs {
    std::string ranked, truth, hierarchy, gt_lists, candidates;
    std::vector<Index> ks;
};

struct CvArgs {
    std::string features, labels, semantics, out_table;
    int folds = 5;
    std::vector<double> lambdas, nus, gammas, scales;
    std::vector<Index> ds;
    std::string objective = "per-class";
    Index objective_k = 1;
    std::string mode = "1nn";
    std::uint64_t seed = 0;
};

struct PipelineArgs {
    std::string data_dir, features, labels, semantics, seen, unseen, hierarchy;
    std::string predictor_out, exemplars_out;
    PipelineOptions opts;
    std::string mode = "1nn";
};

int run_synth(const SynthArgs& args, std::ostream& out) {
    SynthSpec spec = args.spec;
    if (args.anisotropy_span > 0.0) {
        // geometric ramp of per-dimension noise scales from 1 to the span
        Vector scales(spec.feature_dim);
        for (Index j = 0; j < spec.feature_dim; ++j) {
            const double t = spec.feature_dim > 1 ? double(j) / double(spec.feature_dim - 1) : 0.0;
            scales[j] = std::pow(args.anisotropy_span, t);
        }
        spec.anisotropy = scales;
    }
    SynthDataset data = generate(spec);
    save_bundle(data, args.out, args.format == "bin" ? MatrixFormat::bin : MatrixFormat::csv);
    json doc = {{"out", args.out},
                {"classes", spec.n_classes},
                {"seen", spec.n_seen},
                {"samples", data.features.rows()},
                {"feature_dim", spec.feature_dim},
                {"semantic_dim", spec.semantic_dim},
                {"seed", spec.seed}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_pca(const PcaArgs& args, std::ostream& out) {
    Matrix features = load_matrix(args.features);
    if (!args.labels.empty() && !args.seen.empty()) {
        const auto labels = load_class_list(args.labels);
        if (static_cast<Index>(labels.size()) != features.rows()) {
            throw std::runtime_error(args.labels + ": label count != feature rows");
        }
        const auto seen = load_class_list(args.seen);
        std::set<ClassId> keep(seen.begin(), seen.end());
        std::vector<Index> rows;
        for (Index i = 0; i < features.rows(); ++i) {
            if (keep.count(labels[static_cast<std::size_t>(i)])) rows.push_back(i);
        }
        Matrix restricted(static_cast<Index>(rows.size()), features.cols());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            restricted.row(static_cast<Index>(r)) = features.row(rows[r]);
        }
        features = std::move(restricted);
    }
    Index d = args.d;
    const Index cap = std::min(features.rows() - 1, features.cols());
    if (d <= 0) d = std::min<Index>(500, cap);
    PcaModel model = fit_pca(features, d);
    save_pca(model, args.out);
    if (!args.project_out.empty()) {
        save_matrix(project(model, features), args.project_out, MatrixFormat::csv);
    }
    json doc = {{"model", args.out},
                {"d", model.projection.rows()},
                {"input_dim", model.projection.cols()},
                {"rows", features.rows()},
                {"total_variance_kept", round4(model.eigenvalues.sum())}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_exemplars(const ExemplarArgs& args, std::ostream& out) {
    Matrix features = load_matrix(args.features);
    const auto labels = load_class_list(args.labels);
    if (static_cast<Index>(labels.size()) != features.rows()) {
        throw std::runtime_error(args.labels + ": label count != feature rows");
    }
    PcaModel model = load_pca(args.pca);
    Matrix z = project(model, features);
    ExemplarTable table = compute_exemplars(z, labels);
    save_exemplar_table(table, args.out);
    if (!args.sigma_out.empty()) save_vector(intra_class_std(z, labels), args.sigma_out);
    json doc = {{"out", args.out},
                {"classes", table.exemplars.rows()},
                {"d", table.exemplars.cols()}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_train(const TrainArgs& args, std::ostream& out) {
    auto [sem_ids, sem_raw] = load_id_matrix(args.semantics);
    const Matrix semantics = normalize_semantics(sem_raw);
    ExemplarTable table = load_exemplar_table(args.exemplars);

    // align semantic rows with the exemplar table's class order
    std::map<ClassId, Index> index;
    for (Index i = 0; i < static_cast<Index>(sem_ids.size()); ++i) index[sem_ids[i]] = i;
    Matrix a_seen(table.exemplars.rows(), semantics.cols());
    for (Index i = 0; i < table.exemplars.rows(); ++i) {
        auto it = index.find(table.class_ids[static_cast<std::size_t>(i)]);
        if (it == index.end()) {
            throw std::runtime_error(args.semantics + ": no semantic row for class '" +
                                     table.class_ids[static_cast<std::size_t>(i)] + "'");
        }
        a_seen.row(i) = semantics.row(it->second);
    }

    const double gamma = args.gamma > 0.0 ? args.gamma : median_heuristic_gamma(a_seen);
    SvrHyperParams hyper{args.lambda, args.nu, KernelParams{gamma}};
    ExemplarPredictor predictor = train_predictor(a_seen, table, hyper);
    save_predictor(predictor, args.out);
    json doc = {{"out", args.out},
                {"regressors", predictor.output_dim()},
                {"classes", table.exemplars.rows()},
                {"lambda", args.lambda},
                {"nu", args.nu},
                {"gamma", gamma}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_predict(const PredictArgs& args, std::ostream& out) {
    ExemplarPredictor predictor = load_predictor(args.predictor);
    auto [sem_ids, sem_raw] = load_id_matrix(args.semantics);
    const Matrix semantics = normalize_semantics(sem_raw);

    std::vector<ClassId> wanted = sem_ids;
    if (!args.classes.empty()) wanted = load_class_list(args.classes);
    std::sort(wanted.begin(), wanted.end());

    std::map<ClassId, Index> index;
    for (Index i = 0; i < static_cast<Index>(sem_ids.size()); ++i) index[sem_ids[i]] = i;
    Matrix a(static_cast<Index>(wanted.size()), semantics.cols());
    for (std::size_t i = 0; i < wanted.size(); ++i) {
        auto it = index.find(wanted[i]);
        if (it == index.end()) {
            throw std::runtime_error(args.semantics + ": no semantic row for class '" +
                                     wanted[i] + "'");
        }
        a.row(static_cast<Index>(i)) = semantics.row(it->second);
    }
    ExemplarTable table = predict_exemplars(predictor, a, wanted);
    save_exemplar_table(table, args.out);
    json doc = {{"out", args.out}, {"classes", table.exemplars.rows()}, {"d", table.exemplars.cols()}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_classify(const ClassifyArgs& args, std::ostream& out) {
    Matrix features = load_matrix(args.features);
    PcaModel model = load_pca(args.pca);
    ExemplarTable table = load_exemplar_table(args.exemplars);
    const NnMode mode = parse_mode(args.mode);

    NnClassifier classifier;
    if (mode == NnMode::standardized) {
        if (args.sigma.empty()) {
            throw std::runtime_error("classify: --sigma is required with --mode 1nn-scaled");
        }
        classifier = make_nn_classifier(std::move(table), load_vector(args.sigma));
    } else {
        classifier = make_nn_classifier(std::move(table));
    }

    Matrix z = project(model, features);
    const Index k =
        std::min<Index>(args.k, static_cast<Index>(classifier.exemplars.class_ids.size()));
    std::vector<std::vector<ClassId>> ranked;
    ranked.reserve(static_cast<std::size_t>(z.rows()));
    for (Index i = 0; i < z.rows(); ++i) {
        ranked.push_back(classify_topk(classifier, z.row(i), k));
    }
    save_ranked_predictions(ranked, args.out);
    json doc = {{"out", args.out}, {"samples", z.rows()}, {"k", k}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_eval(const EvalArgs& args, std::ostream& out) {
    const auto ranked = load_ranked_predictions(args.ranked);
    const auto truth = load_class_list(args.truth);
    if (ranked.empty()) throw std::runtime_error(args.ranked + ": no predictions");
    if (ranked.size() != truth.size()) {
        throw std::runtime_error("eval: prediction and truth counts differ");
    }

    Index min_len = static_cast<Index>(ranked.front().size());
    for (const auto& r : ranked) min_len = std::min(min_len, static_cast<Index>(r.size()));
    std::vector<Index> ks = args.ks;
    if (ks.empty()) {
        for (Index k : {1, 2, 5, 10, 20}) {
            if (k <= min_len) ks.push_back(k);
        }
        if (ks.empty()) ks.push_back(1);
    }

    EvalReport report;
    if (!args.gt_lists.empty()) {
        const GroundTruthLists lists = load_ground_truth_lists(args.gt_lists);
        report = evaluate(ranked, truth, ks);
        for (Index k : ks) {
            report.hier_precision[k] = hierarchical_precision_at_k(ranked, truth, k, lists);
        }
    } else if (!args.hierarchy.empty()) {
        const HierarchyGraph graph = load_hierarchy(args.hierarchy);
        std::vector<ClassId> candidates;
        if (!args.candidates.empty()) {
            candidates = load_class_list(args.candidates);
        } else {
            std::set<ClassId> ids(truth.begin(), truth.end());
            for (const auto& r : ranked) ids.insert(r.begin(), r.end());
            candidates.assign(ids.begin(), ids.end());
        }
        report = evaluate(ranked, truth, ks, &graph, candidates);
    } else {
        report = evaluate(ranked, truth, ks);
    }
    out << report_json(report).dump(2) << "\n";
    return 0;
}

int run_cv(const CvArgs& args, std::ostream& out) {
    CvData data;
    data.features = load_matrix(args.features);
    data.labels = load_class_list(args.labels);
    if (static_cast<Index>(data.labels.size()) != data.features.rows()) {
        throw std::runtime_error(args.labels + ": label count != feature rows");
    }
    auto [sem_ids, sem_raw] = load_id_matrix(args.semantics);
    data.semantics = normalize_semantics(sem_raw);
    data.semantic_ids = std::move(sem_ids);

    CvConfig cfg = default_cv_config(data.semantics);
    cfg.n_folds = args.folds;
    cfg.seed = args.seed;
    cfg.mode = parse_mode(args.mode);
    if (!args.lambdas.empty()) cfg.lambdas = args.lambdas;
    if (!args.nus.empty()) cfg.nus = args.nus;
    if (!args.gammas.empty()) cfg.gammas = args.gammas;
    if (!args.scales.empty()) cfg.scales = args.scales;
    if (!args.ds.empty()) cfg.ds = args.ds;
    if (args.objective == "flat-hit") {
        cfg.objective = CvObjective::flat_hit_at_k;
        cfg.objective_k = args.objective_k;
    } else if (args.objective != "per-class") {
        throw CLI::ValidationError("--objective", "expected 'per-class' or 'flat-hit'");
    }

    CvResult result = grid_search(data, cfg);
    if (!args.out_table.empty()) {
        std::ofstream table(args.out_table);
        if (!table) throw std::runtime_error(args.out_table + ": cannot open file for writing");
        write_cv_table_csv(result, table);
    }
    json doc = {{"best",
                 {{"d", result.best.d},
                  {"lambda", result.best.lambda},
                  {"nu", result.best.nu},
                  {"gamma", result.best.gamma},
                  {"scale", result.best.scale}}},
                {"best_mean_objective", round4(result.best_mean)},
                {"grid_rows", result.table.size()},
                {"folds", cfg.n_folds},
                {"seed", args.seed}};
    out << doc.dump(2) << "\n";
    return 0;
}

int run_pipeline_cmd(const PipelineArgs& args, std::ostream& out) {
    BundlePaths paths;
    if (!args.data_dir.empty()) {
        paths = bundle_paths(args.data_dir);
    } else {
        paths.features = args.features;
        paths.labels = args.labels;
        paths.semantics = args.semantics;
        paths.seen = args.seen;
        paths.unseen = args.unseen;
        if (!args.hierarchy.empty()) paths.hierarchy = args.hierarchy;
    }
    DatasetBundle bundle = load_bundle(paths);

    PipelineOptions opts = args.opts;
    opts.mode = parse_mode(args.mode);
    PipelineResult result = run_pipeline(bundle, opts);
    if (!args.predictor_out.empty()) save_predictor(result.predictor, args.predictor_out);
    if (!args.exemplars_out.empty()) {
        save_exemplar_table(result.predicted_exemplars, args.exemplars_out);
    }
    out << report_to_json(result, opts);
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"zero-shot classification via predicted visual exemplars"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "", "key=value config file; flags take precedence");

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset bundle");
    synth_cmd->add_option("--out", synth_args.out, "output directory")->required();
    synth_cmd->add_option("--classes", synth_args.spec.n_classes, "total number of classes");
    synth_cmd->add_option("--seen", synth_args.spec.n_seen, "number of seen classes");
    synth_cmd->add_option("--samples", synth_args.spec.samples_per_class, "samples per class");
    synth_cmd->add_option("--feature-dim", synth_args.spec.feature_dim, "visual feature dimension");
    synth_cmd->add_option("--semantic-dim", synth_args.spec.semantic_dim, "semantic dimension");
    synth_cmd->add_option("--map", synth_args.spec.map_kind, "semantic-to-center map")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, MapKind>{{"linear", MapKind::linear},
                                           {"rbf", MapKind::rbf_mixture}}));
    synth_cmd->add_option("--map-gamma", synth_args.spec.map_gamma, "bandwidth of the rbf map");
    synth_cmd->add_option("--noise", synth_args.spec.noise_sigma, "sample noise sigma");
    synth_cmd->add_option("--anisotropy-span", synth_args.anisotropy_span,
                          "largest/smallest per-dimension noise ratio (0 = isotropic)");
    synth_cmd->add_option("--seed", synth_args.spec.seed, "random seed");
    synth_cmd->add_option("--format", synth_args.format, "feature file format")
        ->check(CLI::IsMember({"csv", "bin"}));

    PcaArgs pca_args;
    auto* pca_cmd = app.add_subcommand("pca", "fit a PCA model on (seen-class) features");
    pca_cmd->add_option("--features", pca_args.features, "feature matrix file")->required();
    pca_cmd->add_option("--labels", pca_args.labels, "per-row labels (with --seen)");
    pca_cmd->add_option("--seen", pca_args.seen, "seen-class list to restrict rows");
    pca_cmd->add_option("--d", pca_args.d, "target dimension (0 = min(500, N-1, D))");
    pca_cmd->add_option("--out", pca_args.out, "output model file")->required();
    pca_cmd->add_option("--project-out", pca_args.project_out, "also write projected features");

    ExemplarArgs ex_args;
    auto* ex_cmd = app.add_subcommand("exemplars", "average projected features per class");
    ex_cmd->add_option("--features", ex_args.features, "feature matrix file")->required();
    ex_cmd->add_option("--labels", ex_args.labels, "per-row labels")->required();
    ex_cmd->add_option("--pca", ex_args.pca, "PCA model file")->required();
    ex_cmd->add_option("--out", ex_args.out, "output exemplar table csv")->required();
    ex_cmd->add_option("--sigma-out", ex_args.sigma_out,
                       "also write averaged intra-class stds (for 1nn-scaled)");

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand("train", "train the semantic-to-exemplar regressors");
    train_cmd->add_option("--semantics", train_args.semantics, "class_id,dim_* csv")->required();
    train_cmd->add_option("--exemplars", train_args.exemplars, "exemplar table csv")->required();
    train_cmd->add_option("--out", train_args.out, "output predictor file")->required();
    train_cmd->add_option("--lambda", train_args.lambda, "regularization weight");
    train_cmd->add_option("--nu", train_args.nu, "nu in (0, 1]");
    train_cmd->add_option("--gamma", train_args.gamma, "RBF bandwidth (0 = median heuristic)");

    PredictArgs predict_args;
    auto* predict_cmd = app.add_subcommand("predict", "predict exemplars for novel classes");
    predict_cmd->add_option("--predictor", predict_args.predictor, "predictor file")->required();
    predict_cmd->add_option("--semantics", predict_args.semantics, "class_id,dim_* csv")->required();
    predict_cmd->add_option("--classes", predict_args.classes,
                            "class list to predict (default: all semantic rows)");
    predict_cmd->add_option("--out", predict_args.out, "output exemplar table csv")->required();

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "rank exemplar classes for each sample");
    classify_cmd->add_option("--features", classify_args.features, "feature matrix file")->required();
    classify_cmd->add_option("--pca", classify_args.pca, "PCA model file")->required();
    classify_cmd->add_option("--exemplars", classify_args.exemplars, "exemplar table csv")->required();
    classify_cmd->add_option("--mode", classify_args.mode, "1nn | 1nn-scaled");
    classify_cmd->add_option("--sigma", classify_args.sigma, "sigma file for 1nn-scaled");
    classify_cmd->add_option("--k", classify_args.k, "ranking depth");
    classify_cmd->add_option("--out", classify_args.out, "output ranked predictions")->required();

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "score ranked predictions");
    eval_cmd->add_option("--ranked", eval_args.ranked, "ranked predictions file")->required();
    eval_cmd->add_option("--truth", eval_args.truth, "true labels file")->required();
    eval_cmd->add_option("--k", eval_args.ks, "K values (repeatable)");
    eval_cmd->add_option("--hierarchy", eval_args.hierarchy, "child<TAB>parent edge file");
    eval_cmd->add_option("--gt-lists", eval_args.gt_lists,
                         "precomputed ground-truth lists (overrides --hierarchy)");
    eval_cmd->add_option("--candidates", eval_args.candidates,
                         "candidate label space for hierarchy lists");

    CvArgs cv_args;
    auto* cv_cmd = app.add_subcommand("cv", "zero-shot cross-validated grid search");
    cv_cmd->add_option("--features", cv_args.features, "seen-class feature matrix")->required();
    cv_cmd->add_option("--labels", cv_args.labels, "per-row labels")->required();
    cv_cmd->add_option("--semantics", cv_args.semantics, "class_id,dim_* csv")->required();
    cv_cmd->add_option("--folds", cv_args.folds, "number of class folds");
    cv_cmd->add_option("--lambdas", cv_args.lambdas, "lambda grid");
    cv_cmd->add_option("--nus", cv_args.nus, "nu grid");
    cv_cmd->add_option("--gammas", cv_args.gammas, "gamma grid");
    cv_cmd->add_option("--scales", cv_args.scales, "similarity scale grid (audit only)");
    cv_cmd->add_option("--ds", cv_args.ds, "PCA dimension grid");
    cv_cmd->add_option("--objective", cv_args.objective, "per-class | flat-hit");
    cv_cmd->add_option("--objective-k", cv_args.objective_k, "K for flat-hit");
    cv_cmd->add_option("--mode", cv_args.mode, "1nn | 1nn-scaled");
    cv_cmd->add_option("--seed", cv_args.seed, "fold shuffle seed");
    cv_cmd->add_option("--out-table", cv_args.out_table, "write the full audit table csv");

    PipelineArgs pipe_args;
    auto* pipe_cmd = app.add_subcommand("pipeline", "full zero-shot run, JSON report to stdout");
    pipe_cmd->add_option("--data", pipe_args.data_dir, "bundle directory");
    pipe_cmd->add_option("--features", pipe_args.features, "feature matrix file");
    pipe_cmd->add_option("--labels", pipe_args.labels, "per-row labels");
    pipe_cmd->add_option("--semantics", pipe_args.semantics, "class_id,dim_* csv");
    pipe_cmd->add_option("--seen", pipe_args.seen, "seen class list");
    pipe_cmd->add_option("--unseen", pipe_args.unseen, "unseen class list");
    pipe_cmd->add_option("--hierarchy", pipe_args.hierarchy, "optional hierarchy edges");
    pipe_cmd->add_option("--d", pipe_args.opts.d, "PCA dimension (0 = min(500, N-1, D))");
    pipe_cmd->add_option("--lambda", pipe_args.opts.lambda, "regularization weight");
    pipe_cmd->add_option("--nu", pipe_args.opts.nu, "nu in (0, 1]");
    pipe_cmd->add_option("--gamma", pipe_args.opts.gamma, "RBF bandwidth (0 = median heuristic)");
    pipe_cmd->add_option("--mode", pipe_args.mode, "1nn | 1nn-scaled");
    pipe_cmd->add_option("--k", pipe_args.opts.ks, "report K values (repeatable)");
    pipe_cmd->add_option("--seed", pipe_args.opts.seed, "recorded in the report");
    pipe_cmd->add_option("--save-predictor", pipe_args.predictor_out, "also save the predictor");
    pipe_cmd->add_option("--save-exemplars", pipe_args.exemplars_out,
                         "also save predicted exemplars");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (synth_cmd->parsed()) return run_synth(synth_args, out);
        if (pca_cmd->parsed()) return run_pca(pca_args, out);
        if (ex_cmd->parsed()) return run_exemplars(ex_args, out);
        if (train_cmd->parsed()) return run_train(train_args, out);
        if (predict_cmd->parsed()) return run_predict(predict_args, out);
        if (classify_cmd->parsed()) return run_classify(classify_args, out);
        if (eval_cmd->parsed()) return run_eval(eval_args, out);
        if (cv_cmd->parsed()) return run_cv(cv_args, out);
        if (pipe_cmd->parsed()) return run_pipeline_cmd(pipe_args, out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n" << app.help();
    return 2;
}

}  // namespace exem

#pragma once

#include "exem/exemplar.hpp"
#include "exem/types.hpp"

#include <vector>

namespace exem {

enum class NnMode { plain, standardized };

/// Nearest-exemplar classifier. In standardized mode each dimension is
/// divided by sigma before distances are taken; distances are compared in
/// squared form, which leaves the argmin and the ranking unchanged.
struct NnClassifier {
    ExemplarTable exemplars;
    NnMode mode = NnMode::plain;
    Vector sigma;  // length d, entries > 0; used iff standardized
};

NnClassifier make_nn_classifier(ExemplarTable exemplars);
NnClassifier make_nn_classifier(ExemplarTable exemplars, Vector sigma);

/// Per-dimension spread for the standardized distance: the unweighted mean
/// over classes of each class's per-dimension std (ddof = 0), clamped from
/// below so singleton or constant classes cannot inject zeros.
Vector intra_class_std(const Matrix& z, const std::vector<ClassId>& labels);

/// Label of the nearest exemplar; ties broken by lowest class id.
ClassId classify_1nn(const NnClassifier& c, const Vector& z_row);

/// The k nearest exemplar classes by ascending distance, ties by class id.
std::vector<ClassId> classify_topk(const NnClassifier& c, const Vector& z_row, Index k);

/// Row-stochastic similarity between target and base exemplar tables:
/// row c, col r proportional to exp(-scale * ||target_c - base_r||^2).
Matrix exemplar_similarity(const ExemplarTable& targets, const ExemplarTable& bases, double scale);

/// Predicted exemplars as a plain matrix, for use as improved semantic
/// representations by downstream zero-shot frameworks.
Matrix export_improved_semantics(const ExemplarPredictor& p, const Matrix& a);

}  // namespace exem

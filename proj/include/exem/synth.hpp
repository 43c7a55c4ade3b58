#pragma once

#include "exem/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace exem {

enum class MapKind { linear, rbf_mixture };

/// Synthetic zero-shot dataset description. Semantic vectors are drawn on
/// the unit sphere, class centers are a smooth map of the semantics, and
/// samples are centers plus Gaussian noise (optionally anisotropic).
struct SynthSpec {
    Index n_classes = 10;
    Index n_seen = 8;
    Index samples_per_class = 20;
    Index feature_dim = 16;
    Index semantic_dim = 4;
    MapKind map_kind = MapKind::linear;
    double noise_sigma = 0.1;
    double map_gamma = 1.0;  // bandwidth of the rbf_mixture map
    std::optional<Vector> anisotropy;  // per-feature-dimension noise scales
    std::uint64_t seed = 0;
};

void validate(const SynthSpec& spec);

struct SynthDataset {
    Matrix features;                 // (n_classes * samples_per_class) x D
    std::vector<ClassId> labels;     // one per feature row
    std::vector<ClassId> class_ids;  // all classes, ascending
    Matrix semantics;                // n_classes x semantic_dim, unit rows
    Matrix true_centers;             // n_classes x D
    std::vector<ClassId> seen;
    std::vector<ClassId> unseen;
};

/// Deterministic given spec.seed: classes use substreams derived from the
/// master seed with splitmix64, so per-class generation order cannot change
/// the draws.
SynthDataset generate(const SynthSpec& spec);

/// Mean pairwise distance between the true centers of the given class rows;
/// the natural scale for choosing noise_sigma.
double mean_center_spacing(const Matrix& centers);

}  // namespace exem

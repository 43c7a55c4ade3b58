#include "exem/synth.hpp"

#include "exem/rng.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace exem {

void validate(const SynthSpec& spec) {
    if (spec.n_classes < 1 || spec.n_seen < 1 || spec.samples_per_class < 1 ||
        spec.feature_dim < 1 || spec.semantic_dim < 1) {
        throw std::invalid_argument("SynthSpec: all counts must be >= 1");
    }
    if (spec.n_seen >= spec.n_classes) {
        throw std::invalid_argument("SynthSpec: need n_seen < n_classes");
    }
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
        throw std::invalid_argument("SynthSpec: noise_sigma must be finite and >= 0");
    }
    if (!(spec.map_gamma > 0.0)) {
        throw std::invalid_argument("SynthSpec: map_gamma must be > 0");
    }
    if (spec.anisotropy) {
        if (spec.anisotropy->size() != spec.feature_dim) {
            throw std::invalid_argument("SynthSpec: anisotropy length != feature_dim");
        }
        if ((spec.anisotropy->array() <= 0.0).any()) {
            throw std::invalid_argument("SynthSpec: anisotropy entries must be > 0");
        }
    }
}

namespace {

ClassId class_name(Index c, Index n_classes) {
    std::size_t width = 1;
    for (Index v = n_classes - 1; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(c);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return "c" + digits;
}

Vector unit_sphere_row(Rng& rng, Index dim) {
    Vector v(dim);
    double norm_sq;
    do {
        for (Index j = 0; j < dim; ++j) v[j] = rng.normal();
        norm_sq = v.squaredNorm();
    } while (norm_sq == 0.0);
    return v / std::sqrt(norm_sq);
}

}  // namespace

SynthDataset generate(const SynthSpec& spec) {
    validate(spec);

    // independent substreams: one for the map, one for semantics, one per class
    std::uint64_t master = spec.seed;
    const std::uint64_t seed_map = splitmix64(master);
    const std::uint64_t seed_semantics = splitmix64(master);
    std::vector<std::uint64_t> class_seeds(static_cast<std::size_t>(spec.n_classes));
    for (auto& s : class_seeds) s = splitmix64(master);

    SynthDataset data;
    data.class_ids.reserve(static_cast<std::size_t>(spec.n_classes));
    for (Index c = 0; c < spec.n_classes; ++c) {
        data.class_ids.push_back(class_name(c, spec.n_classes));
    }
    data.seen.assign(data.class_ids.begin(), data.class_ids.begin() + spec.n_seen);
    data.unseen.assign(data.class_ids.begin() + spec.n_seen, data.class_ids.end());

    Rng rng_sem(seed_semantics);
    data.semantics.resize(spec.n_classes, spec.semantic_dim);
    for (Index c = 0; c < spec.n_classes; ++c) {
        data.semantics.row(c) = unit_sphere_row(rng_sem, spec.semantic_dim).transpose();
    }

    Rng rng_map(seed_map);
    data.true_centers.resize(spec.n_classes, spec.feature_dim);
    if (spec.map_kind == MapKind::linear) {
        Matrix w(spec.feature_dim, spec.semantic_dim);
        for (Index i = 0; i < w.rows(); ++i) {
            for (Index j = 0; j < w.cols(); ++j) w(i, j) = rng_map.normal();
        }
        data.true_centers = data.semantics * w.transpose();
    } else {
        // random RBF network over the semantic sphere
        const Index hidden = 2 * spec.semantic_dim + 2;
        Matrix units(hidden, spec.semantic_dim);
        for (Index h = 0; h < hidden; ++h) {
            units.row(h) = unit_sphere_row(rng_map, spec.semantic_dim).transpose();
        }
        Matrix weights(hidden, spec.feature_dim);
        for (Index i = 0; i < weights.rows(); ++i) {
            for (Index j = 0; j < weights.cols(); ++j) weights(i, j) = rng_map.normal();
        }
        for (Index c = 0; c < spec.n_classes; ++c) {
            Vector act(hidden);
            for (Index h = 0; h < hidden; ++h) {
                act[h] = std::exp(-spec.map_gamma *
                                  (data.semantics.row(c) - units.row(h)).squaredNorm());
            }
            data.true_centers.row(c) = act.transpose() * weights;
        }
    }

    const Index n_rows = spec.n_classes * spec.samples_per_class;
    data.features.resize(n_rows, spec.feature_dim);
    data.labels.reserve(static_cast<std::size_t>(n_rows));
    for (Index c = 0; c < spec.n_classes; ++c) {
        Rng rng_class(class_seeds[static_cast<std::size_t>(c)]);
        for (Index s = 0; s < spec.samples_per_class; ++s) {
            const Index row = c * spec.samples_per_class + s;
            for (Index j = 0; j < spec.feature_dim; ++j) {
                double noise = spec.noise_sigma * rng_class.normal();
                if (spec.anisotropy) noise *= (*spec.anisotropy)[j];
                data.features(row, j) = data.true_centers(c, j) + noise;
            }
            data.labels.push_back(data.class_ids[static_cast<std::size_t>(c)]);
        }
    }
    return data;
}

double mean_center_spacing(const Matrix& centers) {
    const Index n = centers.rows();
    if (n < 2) throw std::invalid_argument("mean_center_spacing: need at least two centers");
    double sum = 0.0;
    Index pairs = 0;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            sum += (centers.row(i) - centers.row(j)).norm();
            ++pairs;
        }
    }
    return sum / double(pairs);
}

}  // namespace exem

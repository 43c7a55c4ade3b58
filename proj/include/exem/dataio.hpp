#pragma once

#include "exem/eval.hpp"
#include "exem/exemplar.hpp"
#include "exem/pca.hpp"
#include "exem/synth.hpp"
#include "exem/types.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exem {

enum class MatrixFormat { csv, bin };

// File formats, all self-describing:
//   csv  header "dim_0,dim_1,...", one sample per line
//   bin  magic "EXEM", u32 version=1, u64 rows, u64 cols,
//        rows*cols little-endian f32, row-major, widened to f64 on load
// Semantics/exemplar tables are csv with a leading class_id column. Splits
// and labels are text with one class id per line; hierarchies are TSV
// child<TAB>parent edges.

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format);
/// Format sniffed from the file contents (bin magic) with csv as fallback.
Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const Matrix& m, const std::filesystem::path& path, MatrixFormat format);

std::vector<ClassId> load_class_list(const std::filesystem::path& path);
void save_class_list(const std::vector<ClassId>& ids, const std::filesystem::path& path);

/// csv with header "class_id,dim_0,...": per-class vectors keyed by id.
std::pair<std::vector<ClassId>, Matrix> load_id_matrix(const std::filesystem::path& path);
void save_id_matrix(const std::vector<ClassId>& ids, const Matrix& m,
                    const std::filesystem::path& path);

ExemplarTable load_exemplar_table(const std::filesystem::path& path);
void save_exemplar_table(const ExemplarTable& t, const std::filesystem::path& path);

HierarchyGraph load_hierarchy(const std::filesystem::path& path);
void save_hierarchy(const std::vector<std::pair<ClassId, ClassId>>& edges,
                    const std::filesystem::path& path);

/// Lines "class<TAB>k<TAB>comma-separated ids".
GroundTruthLists load_ground_truth_lists(const std::filesystem::path& path);

void save_pca(const PcaModel& m, const std::filesystem::path& path);
PcaModel load_pca(const std::filesystem::path& path);

/// Round-trips reproduce identical predictions: coefficients are stored as
/// 64-bit doubles.
void save_predictor(const ExemplarPredictor& p, const std::filesystem::path& path);
ExemplarPredictor load_predictor(const std::filesystem::path& path);

void save_vector(const Vector& v, const std::filesystem::path& path);
Vector load_vector(const std::filesystem::path& path);

/// Ranked per-sample predictions: one line per sample, comma-separated ids.
std::vector<std::vector<ClassId>> load_ranked_predictions(const std::filesystem::path& path);
void save_ranked_predictions(const std::vector<std::vector<ClassId>>& ranked,
                             const std::filesystem::path& path);

/// Everything one zero-shot run needs. Every label must have a semantic row
/// and the seen/unseen class lists must be disjoint.
struct DatasetBundle {
    Matrix features;
    std::vector<ClassId> labels;
    Matrix semantics;
    std::vector<ClassId> semantic_ids;
    std::vector<ClassId> seen;
    std::vector<ClassId> unseen;
    std::optional<HierarchyGraph> hierarchy;
};

void validate(const DatasetBundle& b);

struct BundlePaths {
    std::filesystem::path features;
    std::filesystem::path labels;
    std::filesystem::path semantics;
    std::filesystem::path seen;
    std::filesystem::path unseen;
    std::filesystem::path hierarchy;  // optional, empty = none
};

/// Conventional file names under a bundle directory, preferring features.bin
/// over features.csv when both exist.
BundlePaths bundle_paths(const std::filesystem::path& dir);

DatasetBundle load_bundle(const BundlePaths& paths);

/// Writes a synthetic dataset out as a bundle directory (features, labels,
/// semantics, splits, plus the true centers for reference).
void save_bundle(const SynthDataset& data, const std::filesystem::path& dir,
                 MatrixFormat features_format);

}  // namespace exem

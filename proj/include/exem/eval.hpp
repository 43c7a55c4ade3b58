#pragma once

#include "exem/types.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace exem {

/// Class taxonomy given as child->parent edges. Multiple parents are allowed
/// (WordNet is a DAG); hop distances are taken over the undirected graph.
class HierarchyGraph {
public:
    HierarchyGraph() = default;

    /// Nodes are the union of edge endpoints plus any extra declared nodes.
    /// Self-loops are rejected.
    static HierarchyGraph from_edges(const std::vector<std::pair<ClassId, ClassId>>& edges,
                                     const std::vector<ClassId>& extra_nodes = {});

    const std::vector<ClassId>& nodes() const { return nodes_; }
    bool contains(const ClassId& c) const { return index_.count(c) > 0; }
    std::size_t edge_count() const { return n_edges_; }

    /// Undirected hop distance from `from` to every node; -1 = unreachable.
    std::vector<int> hop_distances(const ClassId& from) const;

    /// Minimum hop distance to any of `sources` for every node; -1 = unreachable.
    std::vector<int> hop_distances_multi(const std::vector<ClassId>& sources) const;

    Index index_of(const ClassId& c) const;

private:
    std::vector<ClassId> nodes_;
    std::map<ClassId, Index> index_;
    std::vector<std::vector<Index>> adj_;
    std::size_t n_edges_ = 0;
};

/// Mean over classes of the within-class accuracy, so small classes weigh
/// the same as large ones.
double per_class_accuracy(const std::vector<ClassId>& preds, const std::vector<ClassId>& truth);

/// Fraction of samples whose true label appears in the first k entries of
/// their ranked prediction list.
double flat_hit_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
                     const std::vector<ClassId>& truth, Index k);

/// The k candidates nearest to `cls` by undirected hop distance, with `cls`
/// itself at distance 0. Ties break by ascending class id; candidates the
/// graph cannot reach pad the tail, also by ascending id.
std::vector<ClassId> ground_truth_list(const HierarchyGraph& h, const ClassId& cls, Index k,
                                       const std::vector<ClassId>& candidates);

/// Precomputed ground-truth lists keyed by (class, k), as loaded from file.
using GroundTruthLists = std::map<ClassId, std::map<Index, std::vector<ClassId>>>;

/// Mean over samples of |top-k predictions intersect ground-truth list of
/// the true class| / k, with the list derived from the hierarchy.
double hierarchical_precision_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
                                   const std::vector<ClassId>& truth, Index k,
                                   const HierarchyGraph& h,
                                   const std::vector<ClassId>& candidates);

/// Same metric with externally supplied ground-truth lists.
double hierarchical_precision_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
                                   const std::vector<ClassId>& truth, Index k,
                                   const GroundTruthLists& lists);

/// Candidates whose minimum undirected hop distance to any seen class is at
/// most max_hops.
std::set<ClassId> hop_subset(const HierarchyGraph& h, const std::set<ClassId>& seen,
                             const std::set<ClassId>& candidates, int max_hops);

struct EvalReport {
    double per_class_accuracy = 0.0;
    double top1_accuracy = 0.0;  // unnormalized per-sample variant
    std::map<Index, double> flat_hit;
    std::map<Index, double> hier_precision;  // empty when no hierarchy given
    Index n_samples = 0;
    Index n_classes = 0;
};

/// Computes all metrics for the given ranked predictions at each K in `ks`.
/// Hierarchy metrics are included when a graph is supplied.
EvalReport evaluate(const std::vector<std::vector<ClassId>>& ranked_preds,
                    const std::vector<ClassId>& truth, const std::vector<Index>& ks,
                    const HierarchyGraph* hierarchy = nullptr,
                    const std::vector<ClassId>& candidates = {});

}  // namespace exem

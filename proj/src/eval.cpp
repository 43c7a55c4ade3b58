#include "exem/eval.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

namespace exem {

HierarchyGraph HierarchyGraph::from_edges(const std::vector<std::pair<ClassId, ClassId>>& edges,
                                          const std::vector<ClassId>& extra_nodes) {
    HierarchyGraph g;
    auto add_node = [&g](const ClassId& c) -> Index {
        auto [it, inserted] = g.index_.try_emplace(c, static_cast<Index>(g.nodes_.size()));
        if (inserted) g.nodes_.push_back(c);
        return it->second;
    };
    for (const auto& c : extra_nodes) add_node(c);
    for (const auto& [child, parent] : edges) {
        if (child == parent) {
            throw std::invalid_argument("HierarchyGraph: self-loop at '" + child + "'");
        }
        add_node(child);
        add_node(parent);
    }
    g.adj_.resize(g.nodes_.size());
    for (const auto& [child, parent] : edges) {
        const Index a = g.index_.at(child);
        const Index b = g.index_.at(parent);
        g.adj_[static_cast<std::size_t>(a)].push_back(b);
        g.adj_[static_cast<std::size_t>(b)].push_back(a);
        ++g.n_edges_;
    }
    return g;
}

Index HierarchyGraph::index_of(const ClassId& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) {
        throw std::invalid_argument("HierarchyGraph: unknown class '" + c + "'");
    }
    return it->second;
}

std::vector<int> HierarchyGraph::hop_distances(const ClassId& from) const {
    return hop_distances_multi({from});
}

std::vector<int> HierarchyGraph::hop_distances_multi(const std::vector<ClassId>& sources) const {
    std::vector<int> dist(nodes_.size(), -1);
    std::deque<Index> queue;
    for (const auto& s : sources) {
        const Index i = index_of(s);
        if (dist[static_cast<std::size_t>(i)] != 0) {
            dist[static_cast<std::size_t>(i)] = 0;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const Index u = queue.front();
        queue.pop_front();
        for (Index v : adj_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

double per_class_accuracy(const std::vector<ClassId>& preds, const std::vector<ClassId>& truth) {
    if (truth.empty()) throw std::invalid_argument("per_class_accuracy: empty input");
    if (preds.size() != truth.size()) {
        throw std::invalid_argument("per_class_accuracy: prediction/truth length mismatch");
    }
    std::map<ClassId, std::pair<std::size_t, std::size_t>> per_class;  // correct, total
    for (std::size_t i = 0; i < truth.size(); ++i) {
        auto& [correct, total] = per_class[truth[i]];
        if (preds[i] == truth[i]) ++correct;
        ++total;
    }
    double sum = 0.0;
    for (const auto& [id, counts] : per_class) {
        sum += double(counts.first) / double(counts.second);
    }
    return sum / double(per_class.size());
}

double flat_hit_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
                     const std::vector<ClassId>& truth, Index k) {
    if (truth.empty()) throw std::invalid_argument("flat_hit_at_k: empty input");
    if (ranked_preds.size() != truth.size()) {
        throw std::invalid_argument("flat_hit_at_k: prediction/truth length mismatch");
    }
    if (k < 1) throw std::invalid_argument("flat_hit_at_k: k must be >= 1");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const auto& list = ranked_preds[i];
        if (static_cast<Index>(list.size()) < k) {
            std::ostringstream msg;
            msg << "flat_hit_at_k: ranked list " << i << " shorter than k=" << k;
            throw std::invalid_argument(msg.str());
        }
        for (Index j = 0; j < k; ++j) {
            if (list[static_cast<std::size_t>(j)] == truth[i]) {
                ++hits;
                break;
            }
        }
    }
    return double(hits) / double(truth.size());
}

std::vector<ClassId> ground_truth_list(const HierarchyGraph& h, const ClassId& cls, Index k,
                                       const std::vector<ClassId>& candidates) {
    if (k < 1) throw std::invalid_argument("ground_truth_list: k must be >= 1");
    if (k > static_cast<Index>(candidates.size())) {
        throw std::invalid_argument("ground_truth_list: k exceeds candidate count");
    }
    const std::vector<int> dist = h.hop_distances(cls);

    // reachable candidates ordered by (hops, id); unreachable pad the tail by id
    std::vector<std::pair<int, ClassId>> reachable;
    std::vector<ClassId> unreachable;
    for (const auto& c : candidates) {
        const int d = h.contains(c) ? dist[static_cast<std::size_t>(h.index_of(c))] : -1;
        if (d >= 0) {
            reachable.emplace_back(d, c);
        } else {
            unreachable.push_back(c);
        }
    }
    std::sort(reachable.begin(), reachable.end());
    std::sort(unreachable.begin(), unreachable.end());

    std::vector<ClassId> out;
    out.reserve(static_cast<std::size_t>(k));
    for (const auto& [d, c] : reachable) {
        if (static_cast<Index>(out.size()) == k) break;
        out.push_back(c);
    }
    for (const auto& c : unreachable) {
        if (static_cast<Index>(out.size()) == k) break;
        out.push_back(c);
    }
    return out;
}

namespace {

double hp_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
               const std::vector<ClassId>& truth, Index k,
               const std::function<std::vector<ClassId>(const ClassId&)>& gt_list) {
    if (truth.empty()) throw std::invalid_argument("hierarchical_precision_at_k: empty input");
    if (ranked_preds.size() != truth.size()) {
        throw std::invalid_argument("hierarchical_precision_at_k: length mismatch");
    }
    if (k < 1) throw std::invalid_argument("hierarchical_precision_at_k: k must be >= 1");

    std::map<ClassId, std::unordered_set<std::string>> gt_cache;
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const auto& list = ranked_preds[i];
        if (static_cast<Index>(list.size()) < k) {
            std::ostringstream msg;
            msg << "hierarchical_precision_at_k: ranked list " << i << " shorter than k=" << k;
            throw std::invalid_argument(msg.str());
        }
        auto it = gt_cache.find(truth[i]);
        if (it == gt_cache.end()) {
            const std::vector<ClassId> gt = gt_list(truth[i]);
            it = gt_cache.emplace(truth[i],
                                  std::unordered_set<std::string>(gt.begin(), gt.end()))
                     .first;
        }
        Index overlap = 0;
        for (Index j = 0; j < k; ++j) {
            if (it->second.count(list[static_cast<std::size_t>(j)])) ++overlap;
        }
        sum += double(overlap) / double(k);
    }
    return sum / double(truth.size());
}

}  // namespace

double hierarchical_precision_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
                                   const std::vector<ClassId>& truth, Index k,
                                   const HierarchyGraph& h,
                                   const std::vector<ClassId>& candidates) {
    return hp_at_k(ranked_preds, truth, k,
                   [&](const ClassId& cls) { return ground_truth_list(h, cls, k, candidates); });
}

double hierarchical_precision_at_k(const std::vector<std::vector<ClassId>>& ranked_preds,
                                   const std::vector<ClassId>& truth, Index k,
                                   const GroundTruthLists& lists) {
    return hp_at_k(ranked_preds, truth, k, [&](const ClassId& cls) {
        auto by_class = lists.find(cls);
        if (by_class == lists.end()) {
            throw std::invalid_argument("hierarchical_precision_at_k: no ground-truth list for '" +
                                        cls + "'");
        }
        auto by_k = by_class->second.find(k);
        if (by_k == by_class->second.end()) {
            std::ostringstream msg;
            msg << "hierarchical_precision_at_k: no ground-truth list for ('" << cls << "', k="
                << k << ")";
            throw std::invalid_argument(msg.str());
        }
        return by_k->second;
    });
}

std::set<ClassId> hop_subset(const HierarchyGraph& h, const std::set<ClassId>& seen,
                             const std::set<ClassId>& candidates, int max_hops) {
    if (max_hops < 0) throw std::invalid_argument("hop_subset: max_hops must be >= 0");
    if (seen.empty()) return {};
    const std::vector<int> dist =
        h.hop_distances_multi(std::vector<ClassId>(seen.begin(), seen.end()));
    std::set<ClassId> out;
    for (const auto& c : candidates) {
        if (!h.contains(c)) continue;
        const int d = dist[static_cast<std::size_t>(h.index_of(c))];
        if (d >= 0 && d <= max_hops) out.insert(c);
    }
    return out;
}

EvalReport evaluate(const std::vector<std::vector<ClassId>>& ranked_preds,
                    const std::vector<ClassId>& truth, const std::vector<Index>& ks,
                    const HierarchyGraph* hierarchy, const std::vector<ClassId>& candidates) {
    EvalReport report;
    report.n_samples = static_cast<Index>(truth.size());
    std::set<ClassId> classes(truth.begin(), truth.end());
    report.n_classes = static_cast<Index>(classes.size());

    std::vector<ClassId> top1;
    top1.reserve(truth.size());
    for (const auto& list : ranked_preds) {
        if (list.empty()) throw std::invalid_argument("evaluate: empty ranked list");
        top1.push_back(list.front());
    }
    report.per_class_accuracy = per_class_accuracy(top1, truth);
    report.top1_accuracy = flat_hit_at_k(ranked_preds, truth, 1);
    for (Index k : ks) {
        report.flat_hit[k] = flat_hit_at_k(ranked_preds, truth, k);
        if (hierarchy != nullptr) {
            report.hier_precision[k] =
                hierarchical_precision_at_k(ranked_preds, truth, k, *hierarchy, candidates);
        }
    }
    return report;
}

}  // namespace exem

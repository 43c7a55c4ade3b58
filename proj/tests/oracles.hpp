// Test-side reference implementations, kept deliberately naive and
// independent of the library code paths they check.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline double naive_euclidean(const Vector& u, const Vector& v) {
    double sum = 0.0;
    for (Index i = 0; i < u.size(); ++i) sum += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(sum);
}

inline double naive_weighted_euclidean(const Vector& u, const Vector& v, const Vector& w) {
    double sum = 0.0;
    for (Index i = 0; i < u.size(); ++i) {
        const double d = (u[i] - v[i]) * w[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

inline Vector naive_column_mean(const Matrix& m) {
    Vector out = Vector::Zero(m.cols());
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) out[j] += m(i, j);
        out[j] /= double(m.rows());
    }
    return out;
}

// two-pass variance
inline Vector naive_column_std(const Matrix& m, Index ddof) {
    const Vector mean = naive_column_mean(m);
    Vector out = Vector::Zero(m.cols());
    for (Index j = 0; j < m.cols(); ++j) {
        double acc = 0.0;
        for (Index i = 0; i < m.rows(); ++i) {
            acc += (m(i, j) - mean[j]) * (m(i, j) - mean[j]);
        }
        out[j] = std::sqrt(acc / double(m.rows() - ddof));
    }
    return out;
}

inline Matrix naive_matmul(const Matrix& a, const Matrix& b) {
    Matrix out = Matrix::Zero(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
            for (Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

inline std::map<std::string, Vector> group_by_mean(const Matrix& z,
                                                   const std::vector<std::string>& labels) {
    std::map<std::string, std::pair<Vector, int>> acc;
    for (Index i = 0; i < z.rows(); ++i) {
        auto [it, fresh] = acc.try_emplace(labels[i], Vector::Zero(z.cols()), 0);
        it->second.first += z.row(i).transpose();
        it->second.second += 1;
    }
    std::map<std::string, Vector> out;
    for (auto& [id, sum_count] : acc) out[id] = sum_count.first / double(sum_count.second);
    return out;
}

inline std::map<std::string, Vector> group_by_std0(const Matrix& z,
                                                   const std::vector<std::string>& labels) {
    std::map<std::string, std::vector<Index>> rows;
    for (Index i = 0; i < z.rows(); ++i) rows[labels[i]].push_back(i);
    std::map<std::string, Vector> out;
    for (auto& [id, idx] : rows) {
        Vector mean = Vector::Zero(z.cols());
        for (Index i : idx) mean += z.row(i).transpose();
        mean /= double(idx.size());
        Vector var = Vector::Zero(z.cols());
        for (Index i : idx) {
            var += (z.row(i).transpose() - mean).array().square().matrix();
        }
        var /= double(idx.size());
        out[id] = var.array().sqrt();
    }
    return out;
}

// ---------------------------------------------------------------------------
// projected-gradient ascent on the nu-SVR dual, via two capped-simplex blocks

inline Vector project_capped_simplex(const Vector& v, double cap, double total) {
    double lo = v.minCoeff() - cap;
    double hi = v.maxCoeff();
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double sum = (v.array() - mid).max(0.0).min(cap).sum();
        if (sum > total) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double tau = 0.5 * (lo + hi);
    return (v.array() - tau).max(0.0).min(cap);
}

struct PgSolution {
    Vector beta;
    double objective = 0.0;
    long iterations = 0;
};

// maximizes z'b - b'Kb/2 over b = au - ad with each block in the capped
// simplex {0 <= x <= lambda/S, sum x = lambda*nu/2}
inline PgSolution pg_nu_svr(const Matrix& k, const Vector& z, double lambda, double nu,
                            long max_iter = 1'000'000, double step = 1e-4) {
    const Index s = z.size();
    const double cap = lambda / double(s);
    const double total = lambda * nu / 2.0;
    Vector au = Vector::Constant(s, total / double(s));
    Vector ad = au;
    auto objective = [&](const Vector& b) { return z.dot(b) - 0.5 * b.dot(k * b); };

    double prev = -std::numeric_limits<double>::infinity();
    long it = 0;
    for (; it < max_iter; ++it) {
        const Vector beta = au - ad;
        const Vector g = z - k * beta;
        Vector au2 = project_capped_simplex(au + step * g, cap, total);
        Vector ad2 = project_capped_simplex(ad - step * g, cap, total);
        const double moved = std::max((au2 - au).cwiseAbs().maxCoeff(),
                                      (ad2 - ad).cwiseAbs().maxCoeff());
        au.swap(au2);
        ad.swap(ad2);
        if (moved < 1e-16) break;  // projected fixed point
        if (it % 1000 == 999) {
            const double obj = objective(au - ad);
            if (obj - prev < 1e-14 * (1.0 + std::abs(obj))) break;  // converged plateau
            prev = obj;
        }
    }
    PgSolution sol;
    sol.beta = au - ad;
    sol.objective = objective(sol.beta);
    sol.iterations = it;
    return sol;
}

// ---------------------------------------------------------------------------
// graph oracles on an explicit adjacency map

using EdgeList = std::vector<std::pair<std::string, std::string>>;

inline std::map<std::string, std::set<std::string>> undirected_adjacency(const EdgeList& edges) {
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
        adj[a];
        adj[b];
    }
    return adj;
}

inline std::map<std::string, int> bfs_hops(const EdgeList& edges,
                                           const std::vector<std::string>& sources) {
    const auto adj = undirected_adjacency(edges);
    std::map<std::string, int> dist;
    std::queue<std::string> queue;
    for (const auto& s : sources) {
        if (!dist.count(s)) {
            dist[s] = 0;
            queue.push(s);
        }
    }
    while (!queue.empty()) {
        const std::string u = queue.front();
        queue.pop();
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (const auto& v : it->second) {
            if (!dist.count(v)) {
                dist[v] = dist.at(u) + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

inline std::vector<std::string> gt_list_bfs(const EdgeList& edges, const std::string& cls,
                                            Index k, const std::vector<std::string>& candidates) {
    const auto dist = bfs_hops(edges, {cls});
    std::vector<std::pair<int, std::string>> reachable;
    std::vector<std::string> unreachable;
    for (const auto& c : candidates) {
        auto it = dist.find(c);
        if (it != dist.end()) {
            reachable.emplace_back(it->second, c);
        } else {
            unreachable.push_back(c);
        }
    }
    std::sort(reachable.begin(), reachable.end());
    std::sort(unreachable.begin(), unreachable.end());
    std::vector<std::string> out;
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

inline double hp_at_k_bruteforce(const EdgeList& edges,
                                 const std::vector<std::vector<std::string>>& ranked,
                                 const std::vector<std::string>& truth, Index k,
                                 const std::vector<std::string>& candidates) {
    double sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const auto gt = gt_list_bfs(edges, truth[i], k, candidates);
        const std::set<std::string> gt_set(gt.begin(), gt.end());
        Index overlap = 0;
        for (Index j = 0; j < k; ++j) {
            if (gt_set.count(ranked[i][static_cast<std::size_t>(j)])) ++overlap;
        }
        sum += double(overlap) / double(k);
    }
    return sum / double(truth.size());
}

// ---------------------------------------------------------------------------

inline std::size_t linear_scan_nearest(const Matrix& exemplars, const Vector& query,
                                       const std::vector<std::string>& ids,
                                       const Vector* inv_sigma = nullptr) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < exemplars.rows(); ++i) {
        double d = 0.0;
        for (Index j = 0; j < exemplars.cols(); ++j) {
            double diff = query[j] - exemplars(i, j);
            if (inv_sigma) diff *= (*inv_sigma)[j];
            d += diff * diff;
        }
        d = std::sqrt(d);
        if (d < best_d || (d == best_d && ids[static_cast<std::size_t>(i)] <
                                              ids[best])) {
            best_d = d;
            best = static_cast<std::size_t>(i);
        }
    }
    return best;
}

inline std::vector<std::string> full_sort_ranking(const Matrix& exemplars, const Vector& query,
                                                  const std::vector<std::string>& ids) {
    std::vector<std::pair<double, std::string>> order;
    for (Index i = 0; i < exemplars.rows(); ++i) {
        order.emplace_back(naive_euclidean(exemplars.row(i).transpose(), query),
                           ids[static_cast<std::size_t>(i)]);
    }
    std::sort(order.begin(), order.end());
    std::vector<std::string> out;
    for (const auto& [d, id] : order) out.push_back(id);
    return out;
}

inline Matrix naive_softmax_similarity(const Matrix& targets, const Matrix& bases, double scale,
                                       double shift = 0.0) {
    Matrix out(targets.rows(), bases.rows());
    for (Index c = 0; c < targets.rows(); ++c) {
        double denom = 0.0;
        for (Index r = 0; r < bases.rows(); ++r) {
            double sq = 0.0;
            for (Index j = 0; j < targets.cols(); ++j) {
                const double d = targets(c, j) - bases(r, j);
                sq += d * d;
            }
            out(c, r) = std::exp(-scale * (sq + shift));
            denom += out(c, r);
        }
        for (Index r = 0; r < bases.rows(); ++r) out(c, r) /= denom;
    }
    return out;
}

}  // namespace oracle

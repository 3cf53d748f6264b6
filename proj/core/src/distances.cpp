#include "phtk/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace phtk {

double linf_cost(DiagramPoint a, DiagramPoint b) noexcept {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(DiagramPoint p) noexcept { return (p.death - p.birth) / 2.0; }

MatchingInstance::MatchingInstance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    for (const auto& p : a.pairs()) {
        if (p.dimension != dim) continue;
        if (p.is_essential()) {
            left_essential_.push_back(p.birth);
        } else {
            left_.push_back({p.birth, p.death});
        }
    }
    for (const auto& p : b.pairs()) {
        if (p.dimension != dim) continue;
        if (p.is_essential()) {
            right_essential_.push_back(p.birth);
        } else {
            right_.push_back({p.birth, p.death});
        }
    }
    std::sort(left_essential_.begin(), left_essential_.end());
    std::sort(right_essential_.begin(), right_essential_.end());
}

double MatchingInstance::cost(std::size_t row, std::size_t col) const noexcept {
    const bool real_row = row < left_.size();
    const bool real_col = col < right_.size();
    if (real_row && real_col) return linf_cost(left_[row], right_[col]);
    if (real_row) return diagonal_cost(left_[row]);
    if (real_col) return diagonal_cost(right_[col]);
    return 0.0;
}

namespace {

/// Maximum bipartite matching on an n x n graph given as adjacency lists.
class HopcroftKarp {
public:
    explicit HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj)
        : adj_(adj), n_(adj.size()), match_left_(n_, kFree), match_right_(n_, kFree), dist_(n_) {}

    std::size_t run() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < n_; ++u) {
                if (match_left_[u] == kFree && dfs(u)) ++matched;
            }
        }
        return matched;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
    static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

    bool bfs() {
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < n_; ++u) {
            if (match_left_[u] == kFree) {
                dist_[u] = 0;
                q.push(u);
            } else {
                dist_[u] = kUnreached;
            }
        }
        bool found = false;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == kFree) {
                    found = true;
                } else if (dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kUnreached;
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::size_t n_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
};

bool has_perfect_matching(const MatchingInstance& inst, double threshold) {
    const std::size_t n = inst.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (inst.cost(r, c) <= threshold) adj[r].push_back(c);
        }
    }
    return HopcroftKarp(adj).run() == n;
}

double finite_bottleneck(const MatchingInstance& inst) {
    const std::size_t n = inst.size();
    if (n == 0) return 0.0;
    std::vector<double> candidates;
    candidates.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) candidates.push_back(inst.cost(r, c));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // the largest candidate is always feasible (complete graph)
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (has_perfect_matching(inst, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

// Floating-point sums depend on which optimal matching is found, so both
// argument orders must solve the very same instance to stay exactly symmetric.
MatchingInstance oriented(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    if (b.in_dimension(dim) < a.in_dimension(dim)) return MatchingInstance(b, a, dim);
    return MatchingInstance(a, b, dim);
}

// Hungarian method with row/column potentials, O(n^3).
double min_cost_assignment(const MatchingInstance& inst) {
    const std::size_t n = inst.size();
    if (n == 0) return 0.0;
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<bool> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = inst.cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j) total += inst.cost(p[j] - 1, j - 1);
    return total;
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    const MatchingInstance inst = oriented(a, b, dim);
    if (!inst.essentials_match()) return kInfinity;
    double worst = finite_bottleneck(inst);
    for (std::size_t i = 0; i < inst.left_essential().size(); ++i) {
        worst = std::max(worst, std::abs(inst.left_essential()[i] - inst.right_essential()[i]));
    }
    return worst;
}

double wasserstein_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
    const MatchingInstance inst = oriented(a, b, dim);
    if (!inst.essentials_match()) return kInfinity;
    double total = min_cost_assignment(inst);
    for (std::size_t i = 0; i < inst.left_essential().size(); ++i) {
        total += std::abs(inst.left_essential()[i] - inst.right_essential()[i]);
    }
    return total;
}

}  // namespace phtk

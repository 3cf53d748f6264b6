#include "phtk/simplex_index.hpp"

#include <algorithm>
#include <limits>

namespace phtk::detail {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
}

SimplexIndex::SimplexIndex(std::span<const Simplex> simplices, std::span<const std::uint32_t> positions) {
    int top = -1;
    for (const Simplex& s : simplices) {
        top = std::max(top, s.dimension());
        vertex_count_ = std::max<std::size_t>(vertex_count_, s.back() + std::size_t{1});
    }
    const std::size_t max_k = static_cast<std::size_t>(top + 1);

    // Pascal's triangle up to C(vertex_count, top + 1), saturating on overflow.
    binomial_.assign(max_k + 1, std::vector<Key>(vertex_count_ + 1, 0));
    for (std::size_t n = 0; n <= vertex_count_; ++n) binomial_[0][n] = 1;
    for (std::size_t k = 1; k <= max_k; ++k) {
        for (std::size_t n = 1; n <= vertex_count_; ++n) {
            const Key a = binomial_[k - 1][n - 1];
            const Key b = binomial_[k][n - 1];
            binomial_[k][n] = (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated : a + b;
        }
    }
    // Keys of k-simplices stay below C(vertex_count, k + 1).
    use_ranks_ = true;
    for (std::size_t k = 1; k <= max_k; ++k) {
        if (binomial_[k][vertex_count_] == kSaturated) use_ranks_ = false;
    }

    if (!use_ranks_) {
        for (std::size_t i = 0; i < simplices.size(); ++i) fallback_.emplace(simplices[i], positions[i]);
        return;
    }
    by_dimension_.resize(max_k);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const Simplex& s = simplices[i];
        by_dimension_[s.dimension()].push_back({rank(s.vertices(), s.size()), positions[i]});
    }
    for (auto& slots : by_dimension_) {
        std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.key < b.key; });
    }
}

SimplexIndex::Key SimplexIndex::rank(std::span<const VertexId> vertices, std::size_t skip) const {
    Key key = 0;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (j == skip) continue;
        key += binomial_[pos + 1][vertices[j]];
        ++pos;
    }
    return key;
}

std::optional<std::uint32_t> SimplexIndex::lookup(int dim, Key key) const {
    if (dim < 0 || static_cast<std::size_t>(dim) >= by_dimension_.size()) return std::nullopt;
    const auto& slots = by_dimension_[dim];
    auto it = std::lower_bound(slots.begin(), slots.end(), key, [](const Slot& s, Key k) { return s.key < k; });
    if (it == slots.end() || it->key != key) return std::nullopt;
    return it->position;
}

std::optional<std::uint32_t> SimplexIndex::find(const Simplex& s) const {
    if (!use_ranks_) {
        auto it = fallback_.find(s);
        if (it == fallback_.end()) return std::nullopt;
        return it->second;
    }
    if (s.back() >= vertex_count_) return std::nullopt;
    return lookup(s.dimension(), rank(s.vertices(), s.size()));
}

std::optional<std::uint32_t> SimplexIndex::find_facet(const Simplex& s, std::size_t i) const {
    if (!use_ranks_) return find(s.without(i));
    const VertexId top = i + 1 == s.size() ? s[s.size() - 2] : s.back();
    if (top >= vertex_count_) return std::nullopt;
    return lookup(s.dimension() - 1, rank(s.vertices(), i));
}

}  // namespace phtk::detail

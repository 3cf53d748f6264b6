#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "phtk/simplex.hpp"

namespace phtk::detail {

/// Maps simplices to caller-supplied positions.
///
/// Simplices are keyed by their rank in the combinatorial number system,
/// sum_i C(v_i, i + 1), kept in one sorted array per dimension. When the
/// vertex count makes those ranks overflow 64 bits an ordered map is used
/// instead.
class SimplexIndex {
public:
    SimplexIndex(std::span<const Simplex> simplices, std::span<const std::uint32_t> positions);

    std::optional<std::uint32_t> find(const Simplex& s) const;

    /// Position of the face of `s` missing its i-th vertex.
    std::optional<std::uint32_t> find_facet(const Simplex& s, std::size_t i) const;

private:
    using Key = std::uint64_t;
    struct Slot {
        Key key;
        std::uint32_t position;
    };

    Key rank(std::span<const VertexId> vertices, std::size_t skip) const;
    std::optional<std::uint32_t> lookup(int dim, Key key) const;

    std::size_t vertex_count_ = 0;
    bool use_ranks_ = true;
    std::vector<std::vector<Key>> binomial_;  // binomial_[k][n] = C(n, k)
    std::vector<std::vector<Slot>> by_dimension_;
    std::map<Simplex, std::uint32_t> fallback_;
};

}  // namespace phtk::detail

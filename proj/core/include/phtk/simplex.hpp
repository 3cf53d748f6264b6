#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace phtk {

using VertexId = std::uint32_t;

/// A non-empty set of vertex ids kept in strictly increasing order.
///
/// Any permutation of the same vertex set produces the same object. Ordering
/// is by dimension first and lexicographic vertex order second, which is the
/// canonical order used for boundary matrix rows and columns.
class Simplex {
public:
    using Storage = boost::container::small_vector<VertexId, 4>;

    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);
    explicit Simplex(Storage vertices);

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::span<const VertexId> vertices() const noexcept { return {vertices_.data(), vertices_.size()}; }
    VertexId operator[](std::size_t i) const noexcept { return vertices_[i]; }
    VertexId front() const noexcept { return vertices_.front(); }
    VertexId back() const noexcept { return vertices_.back(); }

    /// The face obtained by dropping the i-th vertex. Requires dimension() >= 1.
    Simplex without(std::size_t i) const;

    /// All (k-1)-faces, the i-th one missing vertex i.
    std::vector<Simplex> facets() const;

    /// True if every vertex of `face` is a vertex of this simplex.
    bool has_face(const Simplex& face) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Simplex& a, const Simplex& b) noexcept { return a.vertices_ == b.vertices_; }
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

private:
    Storage vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace phtk

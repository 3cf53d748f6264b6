#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "phtk/chain.hpp"
#include "phtk/complex.hpp"
#include "phtk/diagram.hpp"

namespace phtk {

/// Sparse matrix over GF(2) stored by columns; each column is the sorted set
/// of rows holding a one.
class BoundaryMatrixZ2 {
public:
    using Index = std::uint32_t;

    BoundaryMatrixZ2() = default;
    /// Entries listed twice in a column cancel. Throws InvalidOptions for a
    /// row index out of range.
    BoundaryMatrixZ2(std::size_t rows, std::vector<std::vector<Index>> columns);

    static BoundaryMatrixZ2 identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    std::span<const Index> column(std::size_t j) const noexcept { return columns_[j]; }
    bool at(std::size_t i, std::size_t j) const noexcept;

    friend bool operator==(const BoundaryMatrixZ2&, const BoundaryMatrixZ2&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Index>> columns_;
};

/// Sum of the (k-1)-faces of `simplex`; the empty chain for a vertex.
Chain boundary_of_simplex(const Simplex& simplex);

/// GF(2) sum of the boundaries of the chain's simplices.
Chain boundary_of_chain(const Chain& chain);

/// delta_k with rows indexed by the (k-1)-simplices and columns by the
/// k-simplices of `complex`, both in canonical order. Dimensions without
/// simplices give an empty matrix. Throws InvalidComplex if a face is missing.
BoundaryMatrixZ2 build_boundary_matrix(const SimplicialComplex& complex, int k);

/// Rank over GF(2) by left-to-right elimination on bit-packed columns.
/// Memory is rows * cols / 8 bytes.
std::size_t rank_z2(const BoundaryMatrixZ2& m);

/// beta_k = (n_k - rank delta_k) - rank delta_{k+1} for k = 0..max_k, with
/// delta_0 = 0 (unreduced homology).
BettiNumbers betti_numbers(const SimplicialComplex& complex, int max_k);

bool is_cycle(const Chain& chain);

/// True iff a + b is the boundary of some (k+1)-chain of `complex`.
/// Throws NotACycle, DimensionMismatch, or InvalidComplex when a chain uses a
/// simplex outside the complex.
bool are_homologous(const Chain& a, const Chain& b, const SimplicialComplex& complex);

}  // namespace phtk

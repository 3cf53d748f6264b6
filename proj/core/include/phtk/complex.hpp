#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "phtk/simplex.hpp"

namespace phtk {

/// A finite set of simplices stored in canonical order.
///
/// Construction only deduplicates and sorts; closure under faces is checked
/// separately by validate_complex() so that broken inputs can be diagnosed
/// instead of rejected.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<Simplex> simplices);

    /// Every simplex in `generators` together with all of its faces.
    static SimplicialComplex closure(std::span<const Simplex> generators);

    std::span<const Simplex> simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    bool empty() const noexcept { return simplices_.empty(); }

    /// Highest simplex dimension, -1 for the empty complex.
    int dimension() const noexcept;

    /// The k-simplices, contiguous and in lexicographic order.
    std::span<const Simplex> of_dimension(int k) const noexcept;
    std::size_t count(int k) const noexcept { return of_dimension(k).size(); }

    /// Position of `s` within of_dimension(s.dimension()).
    std::optional<std::size_t> index_of(const Simplex& s) const noexcept;
    bool contains(const Simplex& s) const noexcept { return index_of(s).has_value(); }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Simplex> simplices_;
};

struct ComplexViolation {
    Simplex simplex;
    Simplex missing_face;

    friend bool operator==(const ComplexViolation&, const ComplexViolation&) = default;
};

/// Lists every (simplex, missing non-empty proper face) pair. Empty iff the
/// set is closed under taking faces, which also guarantees that each vertex
/// used anywhere is present as a 0-simplex.
std::vector<ComplexViolation> validate_complex(const SimplicialComplex& complex);

}  // namespace phtk

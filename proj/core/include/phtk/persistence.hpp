#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phtk/diagram.hpp"
#include "phtk/filtration.hpp"

namespace phtk {

/// Boundary matrix of a whole filtration over GF(2): column j lists the
/// filtration positions of the facets of entry j. Stored in compressed
/// column form.
class FiltrationBoundaryMatrix {
public:
    using Index = std::uint32_t;

    static FiltrationBoundaryMatrix from_filtration(const Filtration& filtration);

    /// Accepts any order of entries as long as every facet precedes its
    /// coface and scales never decrease; throws InvalidFiltration otherwise.
    static FiltrationBoundaryMatrix from_entries(std::span<const FiltrationEntry> entries);

    std::size_t size() const noexcept { return dims_.size(); }
    int dimension(std::size_t j) const noexcept { return dims_[j]; }
    std::span<const Index> column(std::size_t j) const noexcept {
        return {rows_.data() + offsets_[j], rows_.data() + offsets_[j + 1]};
    }

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<Index> rows_;
    std::vector<int> dims_;
};

struct ReduceOptions {
    /// Process dimensions top-down and skip columns already known to reduce
    /// to zero because they were paired as a birth.
    bool clearing = true;
};

struct IndexPair {
    FiltrationBoundaryMatrix::Index birth;
    FiltrationBoundaryMatrix::Index death;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct ReductionResult {
    /// Sorted by death index. Every index is a birth or a death at most once.
    std::vector<IndexPair> pairs;
    /// Zero columns never paired with a later death, in increasing order.
    std::vector<FiltrationBoundaryMatrix::Index> essential;

    std::optional<FiltrationBoundaryMatrix::Index> birth_of(FiltrationBoundaryMatrix::Index death) const;
};

/// Standard column reduction: a column's lowest one is cancelled with the
/// earlier reduced column owning the same lowest row until it is unique or
/// the column vanishes.
ReductionResult reduce(const FiltrationBoundaryMatrix& matrix, ReduceOptions options = {});
ReductionResult reduce(const Filtration& filtration, ReduceOptions options = {});

/// Maps index pairs to (dimension, birth scale, death scale). Pairs above
/// `max_homology_dimension` are dropped, as are zero-persistence pairs when
/// `drop_zero` is set.
PersistenceDiagram pairs_to_diagram(const ReductionResult& result, std::span<const FiltrationEntry> entries,
                                    int max_homology_dimension, bool drop_zero = true);
PersistenceDiagram pairs_to_diagram(const ReductionResult& result, const Filtration& filtration,
                                    bool drop_zero = true);

/// reduce() followed by pairs_to_diagram().
PersistenceDiagram compute_persistence(const Filtration& filtration, ReduceOptions options = {},
                                       bool drop_zero = true);

/// beta_k(s) = number of dimension-k pairs with birth <= s < death, for
/// k = 0..diagram.max_dimension().
BettiNumbers betti_at_scale(const PersistenceDiagram& diagram, double s);

/// Pairs with death - birth >= min_persistence; essential classes always stay.
PersistenceDiagram significant_features(const PersistenceDiagram& diagram, double min_persistence);

/// Number of pairs per dimension, 0..diagram.max_dimension().
BettiNumbers feature_counts(const PersistenceDiagram& diagram);

}  // namespace phtk

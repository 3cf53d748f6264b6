#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "phtk/simplex.hpp"

namespace phtk {

class DistanceMatrix;
struct RipsParams;
class Filtration;
Filtration build_rips(const DistanceMatrix& distances, const RipsParams& params);

struct FiltrationEntry {
    Simplex simplex;
    double scale;

    friend bool operator==(const FiltrationEntry&, const FiltrationEntry&) = default;
};

/// Strict filtration order: scale, then dimension, then lexicographic vertices.
bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) noexcept;

/// A nested sequence of simplicial complexes, flattened into (simplex, scale)
/// entries in filtration order. Every face of an entry appears earlier with a
/// scale no larger than the entry's own, so each prefix is a complex.
class Filtration {
public:
    Filtration() = default;

    /// Sorts `entries` into filtration order and validates them. Throws
    /// InvalidFiltration on duplicates, missing faces, a face entering later
    /// than its coface or a non-finite scale.
    ///
    /// `max_homology_dimension` caps the dimensions reported by persistence;
    /// it defaults to the top simplex dimension. Filtrations truncated at a
    /// skeleton should pass one less than their top dimension.
    static Filtration from_entries(std::vector<FiltrationEntry> entries,
                                   std::optional<int> max_homology_dimension = std::nullopt);

    std::span<const FiltrationEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const FiltrationEntry& operator[](std::size_t i) const noexcept { return entries_[i]; }

    /// Highest simplex dimension, -1 when empty.
    int dimension() const noexcept { return dimension_; }
    int max_homology_dimension() const noexcept { return max_homology_dimension_; }

    /// Distinct scales in increasing order.
    std::vector<double> scales() const;

    /// Number of entries with scale <= s.
    std::size_t prefix_length(double s) const noexcept;

private:
    friend Filtration build_rips(const DistanceMatrix&, const RipsParams&);
    Filtration(std::vector<FiltrationEntry> sorted_entries, int dimension, int max_homology_dimension);

    std::vector<FiltrationEntry> entries_;
    int dimension_ = -1;
    int max_homology_dimension_ = -1;
};

}  // namespace phtk

#include "phtk/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phtk/errors.hpp"
#include "phtk/simplex_index.hpp"

namespace phtk {

bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) noexcept {
    if (a.scale != b.scale) return a.scale < b.scale;
    return a.simplex < b.simplex;
}

Filtration::Filtration(std::vector<FiltrationEntry> sorted_entries, int dimension, int max_homology_dimension)
    : entries_(std::move(sorted_entries)), dimension_(dimension), max_homology_dimension_(max_homology_dimension) {}

Filtration Filtration::from_entries(std::vector<FiltrationEntry> entries, std::optional<int> max_homology_dimension) {
    int dim = -1;
    for (const auto& e : entries) {
        if (!std::isfinite(e.scale)) throw InvalidFiltration("non-finite scale for " + e.simplex.to_string());
        dim = std::max(dim, e.simplex.dimension());
    }
    std::sort(entries.begin(), entries.end(), filtration_less);

    std::vector<Simplex> simplices;
    simplices.reserve(entries.size());
    for (const auto& e : entries) simplices.push_back(e.simplex);
    {
        std::vector<Simplex> sorted = simplices;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw InvalidFiltration("duplicate simplex " + dup->to_string());
    }

    std::vector<std::uint32_t> positions(entries.size());
    std::iota(positions.begin(), positions.end(), 0u);
    const detail::SimplexIndex index(simplices, positions);
    for (const auto& e : entries) {
        if (e.simplex.dimension() == 0) continue;
        for (std::size_t i = 0; i < e.simplex.size(); ++i) {
            auto pos = index.find_facet(e.simplex, i);
            if (!pos) {
                throw InvalidFiltration("face " + e.simplex.without(i).to_string() + " of " +
                                        e.simplex.to_string() + " is missing");
            }
            if (entries[*pos].scale > e.scale) {
                throw InvalidFiltration("face " + e.simplex.without(i).to_string() + " enters after " +
                                        e.simplex.to_string());
            }
        }
    }

    const int homology_dim = max_homology_dimension.value_or(dim);
    return Filtration(std::move(entries), dim, homology_dim);
}

std::vector<double> Filtration::scales() const {
    std::vector<double> out;
    for (const auto& e : entries_) {
        if (out.empty() || out.back() != e.scale) out.push_back(e.scale);
    }
    return out;
}

std::size_t Filtration::prefix_length(double s) const noexcept {
    auto it = std::partition_point(entries_.begin(), entries_.end(),
                                   [s](const FiltrationEntry& e) { return e.scale <= s; });
    return static_cast<std::size_t>(it - entries_.begin());
}

}  // namespace phtk

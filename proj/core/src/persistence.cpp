#include "phtk/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numeric>

#include "phtk/errors.hpp"
#include "phtk/simplex_index.hpp"

namespace phtk {

using Index = FiltrationBoundaryMatrix::Index;

FiltrationBoundaryMatrix FiltrationBoundaryMatrix::from_filtration(const Filtration& filtration) {
    return from_entries(filtration.entries());
}

FiltrationBoundaryMatrix FiltrationBoundaryMatrix::from_entries(std::span<const FiltrationEntry> entries) {
    if (entries.size() >= std::numeric_limits<Index>::max()) throw InvalidFiltration("filtration too large");

    std::vector<Simplex> simplices;
    simplices.reserve(entries.size());
    for (const auto& e : entries) simplices.push_back(e.simplex);
    std::vector<Index> positions(entries.size());
    std::iota(positions.begin(), positions.end(), Index{0});
    const detail::SimplexIndex index(simplices, positions);

    FiltrationBoundaryMatrix m;
    m.dims_.reserve(entries.size());
    m.offsets_.reserve(entries.size() + 1);
    for (std::size_t j = 0; j < entries.size(); ++j) {
        const Simplex& s = entries[j].simplex;
        if (j > 0 && entries[j].scale < entries[j - 1].scale) {
            throw InvalidFiltration("scales decrease at position " + std::to_string(j));
        }
        const std::size_t first = m.rows_.size();
        if (s.dimension() > 0) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto pos = index.find_facet(s, i);
                if (!pos || *pos >= j) {
                    throw InvalidFiltration("face " + s.without(i).to_string() + " does not precede " +
                                            s.to_string());
                }
                m.rows_.push_back(*pos);
            }
            std::sort(m.rows_.begin() + static_cast<std::ptrdiff_t>(first), m.rows_.end());
        }
        m.offsets_.push_back(m.rows_.size());
        m.dims_.push_back(s.dimension());
    }
    return m;
}

std::optional<Index> ReductionResult::birth_of(Index death) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), death,
                               [](const IndexPair& p, Index d) { return p.death < d; });
    if (it == pairs.end() || it->death != death) return std::nullopt;
    return it->birth;
}

ReductionResult reduce(const FiltrationBoundaryMatrix& matrix, ReduceOptions options) {
    const std::size_t n = matrix.size();
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    // pivot_slot[row] = slot in `reduced` of the column whose lowest one is row
    std::vector<std::uint32_t> pivot_slot(n, kNone);
    std::vector<std::vector<Index>> reduced;
    std::vector<bool> cleared(n, false);
    ReductionResult result;

    std::vector<Index> work;
    std::vector<Index> scratch;
    auto reduce_column = [&](std::size_t j) {
        if (cleared[j]) return;
        const auto col = matrix.column(j);
        work.assign(col.begin(), col.end());
        while (!work.empty()) {
            const std::uint32_t slot = pivot_slot[work.back()];
            if (slot == kNone) break;
            const auto& other = reduced[slot];
            scratch.clear();
            std::set_symmetric_difference(work.begin(), work.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            work.swap(scratch);
        }
        if (work.empty()) return;
        const Index low = work.back();
        pivot_slot[low] = static_cast<std::uint32_t>(reduced.size());
        reduced.push_back(work);
        result.pairs.push_back({low, static_cast<Index>(j)});
        if (options.clearing) cleared[low] = true;
    };

    if (options.clearing) {
        int top = 0;
        for (std::size_t j = 0; j < n; ++j) top = std::max(top, matrix.dimension(j));
        std::vector<std::vector<Index>> by_dim(static_cast<std::size_t>(top) + 1);
        for (std::size_t j = 0; j < n; ++j) by_dim[matrix.dimension(j)].push_back(static_cast<Index>(j));
        for (int d = top; d >= 1; --d) {
            for (Index j : by_dim[d]) reduce_column(j);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) reduce_column(j);
    }

    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const IndexPair& a, const IndexPair& b) { return a.death < b.death; });
    std::vector<bool> paired(n, false);
    for (const auto& p : result.pairs) paired[p.birth] = paired[p.death] = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!paired[j]) result.essential.push_back(static_cast<Index>(j));
    }
    return result;
}

ReductionResult reduce(const Filtration& filtration, ReduceOptions options) {
    return reduce(FiltrationBoundaryMatrix::from_filtration(filtration), options);
}

PersistenceDiagram pairs_to_diagram(const ReductionResult& result, std::span<const FiltrationEntry> entries,
                                    int max_homology_dimension, bool drop_zero) {
    std::vector<PersistencePair> pairs;
    for (const auto& p : result.pairs) {
        const int dim = entries[p.birth].simplex.dimension();
        if (dim > max_homology_dimension) continue;
        const double birth = entries[p.birth].scale;
        const double death = entries[p.death].scale;
        if (drop_zero && birth == death) continue;
        pairs.push_back({dim, birth, death});
    }
    for (Index e : result.essential) {
        const int dim = entries[e].simplex.dimension();
        if (dim > max_homology_dimension) continue;
        pairs.push_back({dim, entries[e].scale, kInfinity});
    }
    return PersistenceDiagram(std::move(pairs), max_homology_dimension);
}

PersistenceDiagram pairs_to_diagram(const ReductionResult& result, const Filtration& filtration, bool drop_zero) {
    return pairs_to_diagram(result, filtration.entries(), filtration.max_homology_dimension(), drop_zero);
}

PersistenceDiagram compute_persistence(const Filtration& filtration, ReduceOptions options, bool drop_zero) {
    return pairs_to_diagram(reduce(filtration, options), filtration, drop_zero);
}

BettiNumbers betti_at_scale(const PersistenceDiagram& diagram, double s) {
    if (std::isnan(s) || s < 0.0) throw InvalidOptions("scale must be non-negative");
    BettiNumbers out;
    if (diagram.max_dimension() < 0) return out;
    out.values.assign(static_cast<std::size_t>(diagram.max_dimension()) + 1, 0);
    for (const auto& p : diagram.pairs()) {
        if (p.birth <= s && s < p.death) ++out.values[p.dimension];
    }
    return out;
}

PersistenceDiagram significant_features(const PersistenceDiagram& diagram, double min_persistence) {
    if (std::isnan(min_persistence) || min_persistence < 0.0) {
        throw InvalidOptions("minimum persistence must be non-negative");
    }
    std::vector<PersistencePair> kept;
    for (const auto& p : diagram.pairs()) {
        if (p.is_essential() || p.persistence() >= min_persistence) kept.push_back(p);
    }
    return PersistenceDiagram(std::move(kept), diagram.max_dimension());
}

BettiNumbers feature_counts(const PersistenceDiagram& diagram) {
    BettiNumbers out;
    if (diagram.max_dimension() < 0) return out;
    out.values.assign(static_cast<std::size_t>(diagram.max_dimension()) + 1, 0);
    for (const auto& p : diagram.pairs()) ++out.values[p.dimension];
    return out;
}

}  // namespace phtk

#include "phtk/diagram.hpp"

#include <algorithm>
#include <cmath>

#include "phtk/errors.hpp"

namespace phtk {

PersistenceDiagram::PersistenceDiagram(std::vector<PersistencePair> pairs, int max_dimension)
    : pairs_(std::move(pairs)), max_dimension_(max_dimension) {
    for (const auto& p : pairs_) {
        if (p.dimension < 0) throw InvalidOptions("negative homology dimension");
        if (std::isnan(p.birth) || std::isnan(p.death) || !std::isfinite(p.birth)) {
            throw InvalidOptions("birth must be finite and death must not be NaN");
        }
        if (p.death < p.birth) throw InvalidOptions("death precedes birth");
        max_dimension_ = std::max(max_dimension_, p.dimension);
    }
    std::sort(pairs_.begin(), pairs_.end());
}

std::vector<PersistencePair> PersistenceDiagram::in_dimension(int k) const {
    std::vector<PersistencePair> out;
    for (const auto& p : pairs_) {
        if (p.dimension == k) out.push_back(p);
    }
    return out;
}

std::size_t PersistenceDiagram::count(int k) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(pairs_.begin(), pairs_.end(), [k](const auto& p) { return p.dimension == k; }));
}

std::size_t PersistenceDiagram::essential_count(int k) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        pairs_.begin(), pairs_.end(), [k](const auto& p) { return p.dimension == k && p.is_essential(); }));
}

double PersistenceDiagram::max_finite_value() const noexcept {
    double best = 0.0;
    for (const auto& p : pairs_) {
        best = std::max(best, p.birth);
        if (!p.is_essential()) best = std::max(best, p.death);
    }
    return best;
}

}  // namespace phtk

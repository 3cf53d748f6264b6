#include "phtk/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace phtk {

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
    std::sort(simplices_.begin(), simplices_.end());
    simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
}

SimplicialComplex SimplicialComplex::closure(std::span<const Simplex> generators) {
    std::unordered_set<Simplex, SimplexHash> seen;
    std::vector<Simplex> stack(generators.begin(), generators.end());
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(s).second) continue;
        for (auto& f : s.facets()) {
            if (!seen.contains(f)) stack.push_back(std::move(f));
        }
    }
    return SimplicialComplex(std::vector<Simplex>(seen.begin(), seen.end()));
}

int SimplicialComplex::dimension() const noexcept {
    return simplices_.empty() ? -1 : simplices_.back().dimension();
}

std::span<const Simplex> SimplicialComplex::of_dimension(int k) const noexcept {
    auto lo = std::partition_point(simplices_.begin(), simplices_.end(),
                                   [k](const Simplex& s) { return s.dimension() < k; });
    auto hi = std::partition_point(lo, simplices_.end(), [k](const Simplex& s) { return s.dimension() <= k; });
    return {lo, hi};
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const noexcept {
    auto layer = of_dimension(s.dimension());
    auto it = std::lower_bound(layer.begin(), layer.end(), s);
    if (it == layer.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - layer.begin());
}

std::vector<ComplexViolation> validate_complex(const SimplicialComplex& complex) {
    std::vector<ComplexViolation> out;
    for (const Simplex& s : complex.simplices()) {
        const std::size_t n = s.size();
        if (n < 2) continue;
        // every non-empty proper subset, enumerated as bit masks
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        std::vector<std::pair<Simplex, std::uint64_t>> missing;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            Simplex::Storage verts;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) verts.push_back(s[i]);
            }
            Simplex face(std::move(verts));
            if (!complex.contains(face)) missing.emplace_back(std::move(face), mask);
        }
        std::sort(missing.begin(), missing.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [face, mask] : missing) out.push_back({s, std::move(face)});
    }
    return out;
}

}  // namespace phtk

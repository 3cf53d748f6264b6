#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace phtk {

/// Death value of a class that never dies.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
    int dimension;
    double birth;
    double death;

    bool is_essential() const noexcept { return death == kInfinity; }
    double persistence() const noexcept { return death - birth; }

    friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
    friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Multiset of persistence pairs, kept sorted by (dimension, birth, death).
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;

    /// `max_dimension` is the highest homology dimension the diagram speaks
    /// for; by default the highest dimension among `pairs`. Throws
    /// InvalidOptions when a death precedes its birth.
    explicit PersistenceDiagram(std::vector<PersistencePair> pairs, int max_dimension = -1);

    std::span<const PersistencePair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    int max_dimension() const noexcept { return max_dimension_; }

    std::vector<PersistencePair> in_dimension(int k) const;
    std::size_t count(int k) const noexcept;
    std::size_t essential_count(int k) const noexcept;

    /// Largest finite value (birth or death) in the diagram, 0 if none.
    double max_finite_value() const noexcept;

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
    std::vector<PersistencePair> pairs_;
    int max_dimension_ = -1;
};

/// beta_0, beta_1, ..., one entry per dimension.
struct BettiNumbers {
    std::vector<std::size_t> values;

    std::size_t size() const noexcept { return values.size(); }
    std::size_t operator[](std::size_t k) const noexcept { return k < values.size() ? values[k] : 0; }

    friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

}  // namespace phtk

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phtk/diagram.hpp"

namespace phtk {

struct DiagramPoint {
    double birth;
    double death;
};

/// L-infinity distance in the (birth, death) plane.
double linf_cost(DiagramPoint a, DiagramPoint b) noexcept;

/// Distance to the nearest point of the diagonal, (death - birth) / 2.
double diagonal_cost(DiagramPoint p) noexcept;

/// The finite points of two diagrams in one dimension, augmented with
/// diagonal slots so that every partial matching becomes a perfect matching
/// of a square cost matrix.
///
/// Rows are the points of A followed by |B| diagonal slots, columns the points
/// of B followed by |A| diagonal slots. A point may use any diagonal slot at
/// its diagonal cost; two slots match at zero cost.
class MatchingInstance {
public:
    MatchingInstance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

    std::span<const DiagramPoint> left() const noexcept { return left_; }
    std::span<const DiagramPoint> right() const noexcept { return right_; }
    /// Births of essential classes, sorted.
    std::span<const double> left_essential() const noexcept { return left_essential_; }
    std::span<const double> right_essential() const noexcept { return right_essential_; }

    bool essentials_match() const noexcept { return left_essential_.size() == right_essential_.size(); }

    /// Side length of the augmented cost matrix.
    std::size_t size() const noexcept { return left_.size() + right_.size(); }
    double cost(std::size_t row, std::size_t col) const noexcept;

private:
    std::vector<DiagramPoint> left_;
    std::vector<DiagramPoint> right_;
    std::vector<double> left_essential_;
    std::vector<double> right_essential_;
};

/// Smallest achievable maximum cost over perfect matchings of the augmented
/// instance, found by binary search over the realised cost values with a
/// Hopcroft-Karp feasibility test. Essential classes are matched to each
/// other by birth; differing essential counts give kInfinity.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

/// Minimum total L-infinity cost (q = 1) of a perfect matching of the
/// augmented instance, solved exactly with the Hungarian method. Essential
/// classes contribute the sum of their birth differences.
double wasserstein_distance(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim);

}  // namespace phtk

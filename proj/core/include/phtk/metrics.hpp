#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "phtk/distance_matrix.hpp"
#include "phtk/point_cloud.hpp"

namespace phtk {

/// Euclidean distances between all rows of `cloud`. Each unordered pair is
/// evaluated once, so the result is exactly symmetric with a zero diagonal.
DistanceMatrix pairwise_distances(const PointCloud& cloud);

enum class MetricAxiom { Identity, Positivity, Symmetry, Triangle };

std::string_view to_string(MetricAxiom axiom) noexcept;

/// For Triangle, `via` is the intermediate point j in d(i,k) <= d(i,j) + d(j,k);
/// otherwise it equals `j`.
struct MetricViolation {
    MetricAxiom axiom;
    std::size_t i;
    std::size_t j;
    std::size_t via;

    friend bool operator==(const MetricViolation&, const MetricViolation&) = default;
};

inline constexpr double kTriangleTolerance = 1e-9;

/// Identity, positivity and symmetry are checked exactly; the triangle
/// inequality with kTriangleTolerance. Cubic in the matrix size.
std::vector<MetricViolation> validate_metric(const DistanceMatrix& m);

std::string describe(const MetricViolation& v, const DistanceMatrix& m);

/// Headerless row-major CSV of the matrix.
std::string write_distance_csv(const DistanceMatrix& m);

/// Parses a headerless square CSV matrix. Throws NonNumeric or NotSquare.
DistanceMatrix load_distance_csv(std::string_view text);

}  // namespace phtk

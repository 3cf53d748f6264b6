#pragma once

#include <string>
#include <string_view>

#include "phtk/complex.hpp"
#include "phtk/diagram.hpp"
#include "phtk/distance_matrix.hpp"
#include "phtk/filtration.hpp"

namespace phtk {

/// How a user-facing scale maps to an edge length. Filtrations and diagrams
/// always use edge lengths (diameter convention); a radius r admits edges of
/// length up to 2r.
enum class ScaleConvention { Diameter, Radius };

double to_diameter(double scale, ScaleConvention convention) noexcept;
ScaleConvention parse_scale_convention(std::string_view name);

struct RipsParams {
    /// Highest homology dimension of interest. Simplices up to dimension
    /// max_dimension + 1 are generated so that its classes can die.
    int max_dimension = 1;
    /// Longest admissible edge; edges of exactly this length are included.
    double threshold = kInfinity;
};

/// Vietoris-Rips filtration of `distances`: vertices at scale 0, every clique
/// of pairwise distance <= threshold at the length of its longest edge.
///
/// Throws DimensionTooLarge when max_dimension + 1 >= number of points and
/// InvalidOptions for a negative dimension or threshold.
Filtration build_rips(const DistanceMatrix& distances, const RipsParams& params);

/// The subcomplex of simplices entering at scale <= s.
SimplicialComplex complex_at_scale(const Filtration& filtration, double s);

/// One line per entry, "scale dim v0 v1 ... vk", in filtration order.
std::string write_filtration(const Filtration& filtration);

}  // namespace phtk

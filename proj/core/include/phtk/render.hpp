#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phtk/diagram.hpp"

namespace phtk {

struct RenderOptions {
    int width = 640;
    int height = 400;
    /// Colour of dimension k is colors[k % colors.size()].
    std::vector<std::string> colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    bool draw_diagonal = true;
    /// Plot coordinate used for infinite deaths. Must exceed every finite
    /// value in the diagram; defaults to 1.05 x the largest one (1.0 if none).
    std::optional<double> cap;
};

/// The cap actually used for `diagram`. Throws InvalidOptions if an explicit
/// cap does not exceed every finite value.
double resolve_cap(const PersistenceDiagram& diagram, const RenderOptions& options);

/// One horizontal bar per pair, grouped by dimension; essential bars run to
/// the cap and end in an arrowhead. Throws EmptyDiagram.
std::string render_barcode_svg(const PersistenceDiagram& diagram, const RenderOptions& options = {});

/// Birth/death scatter with the diagonal; essential classes sit on the cap
/// line with a triangle marker. Throws EmptyDiagram.
std::string render_diagram_svg(const PersistenceDiagram& diagram, const RenderOptions& options = {});

/// Aligned two-line table: "β_0  β_1 ..." over the values.
std::string write_betti_table(const BettiNumbers& betti);

}  // namespace phtk

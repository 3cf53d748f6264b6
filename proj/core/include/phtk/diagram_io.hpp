#pragma once

#include <string>
#include <string_view>

#include "phtk/diagram.hpp"

namespace phtk {

/// Header "dim,birth,death", one pair per line in (dim, birth, death) order,
/// "inf" for essential classes. Values use the shortest round-trip decimal.
std::string write_diagram_csv(const PersistenceDiagram& diagram);

/// Inverse of write_diagram_csv. Rows may come in any order. Throws
/// MalformedRecord for a wrong header or field count and NonNumeric for
/// unreadable values.
PersistenceDiagram read_diagram_csv(std::string_view text);

}  // namespace phtk

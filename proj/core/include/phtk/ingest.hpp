#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "phtk/point_cloud.hpp"

namespace phtk {

/// Extracts alpha-carbon coordinates from PDB text (fixed-column v3.3).
///
/// One point per ATOM record whose atom name is "CA", in file order. Only the
/// first MODEL is read, alternate locations other than blank/'A' are skipped
/// and `chain` restricts the selection to one chain id. Labels have the form
/// "<chain>:<residue name>:<sequence number>".
///
/// Throws MalformedRecord for ATOM lines shorter than 54 characters or with
/// unreadable coordinates, EmptySelection when nothing matched.
PointCloud parse_pdb(std::string_view text, std::optional<char> chain = std::nullopt);

/// Comma-separated coordinates, one point per row. A first row whose first
/// field is not numeric is a header. Blank lines are ignored.
///
/// Throws RaggedRows or NonNumeric with the offending line.
PointCloud load_csv(std::string_view text);

/// Inverse of load_csv: header "x,y,z" style (x0,x1,... beyond three
/// columns), then rows with shortest round-trip decimals.
std::string write_csv(const PointCloud& cloud);

}  // namespace phtk

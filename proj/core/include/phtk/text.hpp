#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phtk::text {

/// Shortest decimal that parses back to exactly `v`; "inf" for +infinity.
std::string format_shortest(double v);

/// printf-style %.{digits}g; "inf" for +infinity.
std::string format_significant(double v, int digits);

/// Full-field decimal parse. Accepts "inf" (any case) only when
/// `allow_infinity` is set; never accepts NaN.
std::optional<double> parse_double(std::string_view field, bool allow_infinity = false);

std::string_view trim(std::string_view s) noexcept;

/// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep);

}  // namespace phtk::text

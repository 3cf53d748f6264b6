#include "phtk/diagram_io.hpp"

#include <charconv>
#include <vector>

#include "phtk/errors.hpp"
#include "phtk/text.hpp"

namespace phtk {

std::string write_diagram_csv(const PersistenceDiagram& diagram) {
    std::string out = "dim,birth,death\n";
    for (const auto& p : diagram.pairs()) {
        out += std::to_string(p.dimension);
        out += ',';
        out += text::format_shortest(p.birth);
        out += ',';
        out += text::format_shortest(p.death);
        out += '\n';
    }
    return out;
}

PersistenceDiagram read_diagram_csv(std::string_view input) {
    const auto lines = text::split_lines(input);
    std::vector<PersistencePair> pairs;
    bool header_seen = false;
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::size_t line_no = n + 1;
        const auto line = text::trim(lines[n]);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "dim,birth,death") throw MalformedRecord("expected header 'dim,birth,death'", line_no);
            header_seen = true;
            continue;
        }
        const auto fields = text::split(line, ',');
        if (fields.size() != 3) throw MalformedRecord("expected 3 fields", line_no);

        const auto dim_field = text::trim(fields[0]);
        int dim = -1;
        auto [ptr, ec] = std::from_chars(dim_field.data(), dim_field.data() + dim_field.size(), dim);
        if (ec != std::errc{} || ptr != dim_field.data() + dim_field.size() || dim < 0) {
            throw NonNumeric("bad dimension '" + std::string(dim_field) + "'", line_no);
        }
        const auto birth = text::parse_double(fields[1]);
        const auto death = text::parse_double(fields[2], true);
        if (!birth) throw NonNumeric("bad birth '" + std::string(text::trim(fields[1])) + "'", line_no);
        if (!death) throw NonNumeric("bad death '" + std::string(text::trim(fields[2])) + "'", line_no);
        if (*death < *birth) throw MalformedRecord("death precedes birth", line_no);
        pairs.push_back({dim, *birth, *death});
    }
    if (!header_seen) throw MalformedRecord("missing header 'dim,birth,death'", 0);
    return PersistenceDiagram(std::move(pairs));
}

}  // namespace phtk

#include "phtk/ingest.hpp"

#include <vector>

#include "phtk/errors.hpp"
#include "phtk/text.hpp"

namespace phtk {

namespace {

// 0-based offsets of the PDB v3.3 ATOM columns we read
constexpr std::size_t kMinAtomLength = 54;
constexpr std::size_t kAtomName = 12, kAtomNameWidth = 4;
constexpr std::size_t kAltLoc = 16;
constexpr std::size_t kResName = 17, kResNameWidth = 3;
constexpr std::size_t kChainId = 21;
constexpr std::size_t kResSeq = 22, kResSeqWidth = 4;
constexpr std::size_t kX = 30, kY = 38, kZ = 46, kCoordWidth = 8;

std::string_view column(std::string_view line, std::size_t start, std::size_t width) {
    if (start >= line.size()) return {};
    return line.substr(start, width);
}

}  // namespace

PointCloud parse_pdb(std::string_view text, std::optional<char> chain) {
    std::vector<double> coords;
    std::vector<std::string> labels;
    const auto lines = text::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::string_view line = lines[n];
        const std::string_view record = text::trim(column(line, 0, 6));
        if (record == "ENDMDL") break;
        if (record != "ATOM") continue;

        const std::size_t line_no = n + 1;
        if (line.size() < kMinAtomLength) {
            throw MalformedRecord("ATOM record shorter than " + std::to_string(kMinAtomLength) + " columns",
                                  line_no);
        }
        const auto x = text::parse_double(column(line, kX, kCoordWidth));
        const auto y = text::parse_double(column(line, kY, kCoordWidth));
        const auto z = text::parse_double(column(line, kZ, kCoordWidth));
        if (!x || !y || !z) throw MalformedRecord("unreadable coordinates", line_no);

        if (text::trim(column(line, kAtomName, kAtomNameWidth)) != "CA") continue;
        const char alt = line[kAltLoc];
        if (alt != ' ' && alt != 'A') continue;
        const char chain_id = line[kChainId];
        if (chain && *chain != chain_id) continue;

        coords.insert(coords.end(), {*x, *y, *z});
        std::string label(1, chain_id);
        label += ':';
        label += text::trim(column(line, kResName, kResNameWidth));
        label += ':';
        label += text::trim(column(line, kResSeq, kResSeqWidth));
        labels.push_back(std::move(label));
    }
    if (coords.empty()) {
        throw EmptySelection(chain ? std::string("no CA atoms in chain ") + *chain : "no CA atoms found");
    }
    return PointCloud(3, std::move(coords), std::move(labels));
}

PointCloud load_csv(std::string_view input) {
    std::vector<double> coords;
    std::size_t width = 0;
    bool first_row = true;
    const auto lines = text::split_lines(input);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        if (text::trim(lines[n]).empty()) continue;
        const std::size_t line_no = n + 1;
        const auto fields = text::split(lines[n], ',');
        if (first_row) {
            first_row = false;
            if (!text::parse_double(fields.front())) continue;  // header
        }
        if (width == 0) {
            width = fields.size();
        } else if (fields.size() != width) {
            throw RaggedRows("expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        for (auto f : fields) {
            auto v = text::parse_double(f);
            if (!v) throw NonNumeric("not a finite number: '" + std::string(text::trim(f)) + "'", line_no);
            coords.push_back(*v);
        }
    }
    return PointCloud(width, std::move(coords));
}

std::string write_csv(const PointCloud& cloud) {
    std::string out;
    const std::size_t d = cloud.dimension();
    for (std::size_t c = 0; c < d; ++c) {
        if (c) out += ',';
        out += d <= 3 ? std::string(1, "xyz"[c]) : "x" + std::to_string(c);
    }
    out += '\n';
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (std::size_t c = 0; c < d; ++c) {
            if (c) out += ',';
            out += text::format_shortest(p[c]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace phtk

#include "phtk/render.hpp"

#include <algorithm>
#include <cmath>

#include "phtk/errors.hpp"
#include "phtk/text.hpp"

namespace phtk {

namespace {

constexpr double kMarginLeft = 56, kMarginRight = 24, kMarginTop = 24, kMarginBottom = 44;
constexpr int kTicks = 5;

std::string num(double v) { return text::format_significant(v, 6); }

const std::string& color_of(const RenderOptions& o, int dim) {
    static const std::string kBlack = "#000000";
    if (o.colors.empty()) return kBlack;
    return o.colors[static_cast<std::size_t>(dim) % o.colors.size()];
}

double min_birth(const PersistenceDiagram& d) {
    double lo = 0.0;
    for (const auto& p : d.pairs()) lo = std::min(lo, p.birth);
    return lo;
}

std::string header(const RenderOptions& o) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(o.width) +
           "\" height=\"" + std::to_string(o.height) + "\" viewBox=\"0 0 " + std::to_string(o.width) + " " +
           std::to_string(o.height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(o.width) + "\" height=\"" + std::to_string(o.height) +
           "\" fill=\"#ffffff\"/>\n";
    return out;
}

std::string line(double x1, double y1, double x2, double y2, const std::string& attrs) {
    return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\" " +
           attrs + "/>\n";
}

std::string label(double x, double y, const std::string& anchor, const std::string& content) {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"" +
           anchor + "\">" + content + "</text>\n";
}

}  // namespace

double resolve_cap(const PersistenceDiagram& diagram, const RenderOptions& options) {
    const double top = diagram.max_finite_value();
    if (options.cap) {
        if (!(std::isfinite(*options.cap) && *options.cap > top)) {
            throw InvalidOptions("cap must exceed every finite value in the diagram");
        }
        return *options.cap;
    }
    return top > 0.0 ? 1.05 * top : 1.0;
}

std::string render_barcode_svg(const PersistenceDiagram& diagram, const RenderOptions& o) {
    if (diagram.empty()) throw EmptyDiagram("nothing to draw");
    const double cap = resolve_cap(diagram, o);
    const double lo = min_birth(diagram);
    const double plot_w = o.width - kMarginLeft - kMarginRight;
    const double plot_h = o.height - kMarginTop - kMarginBottom;
    auto x_of = [&](double v) { return kMarginLeft + (v - lo) / (cap - lo) * plot_w; };

    std::vector<int> dims;
    for (const auto& p : diagram.pairs()) {
        if (dims.empty() || dims.back() != p.dimension) dims.push_back(p.dimension);
    }
    // one row per bar plus an empty row between dimension groups
    const double rows = static_cast<double>(diagram.size() + dims.size() - 1);
    const double row_h = plot_h / rows;

    std::string out = header(o);
    out += "<defs>\n";
    for (int d : dims) {
        out += "<marker id=\"arrow-h" + std::to_string(d) +
               "\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\">"
               "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"" +
               color_of(o, d) + "\"/></marker>\n";
    }
    out += "</defs>\n";

    const double axis_y = kMarginTop + plot_h + 6;
    out += line(kMarginLeft, axis_y, kMarginLeft + plot_w, axis_y, "stroke=\"#000000\" stroke-width=\"1\"");
    for (int t = 0; t <= kTicks; ++t) {
        const double v = lo + (cap - lo) * t / kTicks;
        out += line(x_of(v), axis_y, x_of(v), axis_y + 4, "stroke=\"#000000\" stroke-width=\"1\"");
        out += label(x_of(v), axis_y + 16, "middle", num(v));
    }
    out += label(kMarginLeft + plot_w / 2, axis_y + 32, "middle", "scale");

    double row = 0;
    int current = dims.front();
    double group_start = kMarginTop;
    for (const auto& p : diagram.pairs()) {
        if (p.dimension != current) {
            out += label(kMarginLeft - 8, (group_start + kMarginTop + row * row_h) / 2, "end",
                         "H" + std::to_string(current));
            row += 1;  // gap between groups
            current = p.dimension;
            group_start = kMarginTop + row * row_h;
        }
        const double y = kMarginTop + (row + 0.5) * row_h;
        const std::string h = "h" + std::to_string(p.dimension);
        std::string attrs = "class=\"bar " + h + (p.is_essential() ? " essential" : "") + "\" stroke=\"" +
                            color_of(o, p.dimension) + "\" stroke-width=\"2\"";
        if (p.is_essential()) attrs += " marker-end=\"url(#arrow-" + h + ")\"";
        out += line(x_of(p.birth), y, x_of(p.is_essential() ? cap : p.death), y, attrs);
        row += 1;
    }
    out += label(kMarginLeft - 8, (group_start + kMarginTop + row * row_h) / 2, "end", "H" + std::to_string(current));
    out += "</svg>\n";
    return out;
}

std::string render_diagram_svg(const PersistenceDiagram& diagram, const RenderOptions& o) {
    if (diagram.empty()) throw EmptyDiagram("nothing to draw");
    const double cap = resolve_cap(diagram, o);
    const double lo = min_birth(diagram);
    const double plot_w = o.width - kMarginLeft - kMarginRight;
    const double plot_h = o.height - kMarginTop - kMarginBottom;
    auto x_of = [&](double v) { return kMarginLeft + (v - lo) / (cap - lo) * plot_w; };
    auto y_of = [&](double v) { return kMarginTop + plot_h - (v - lo) / (cap - lo) * plot_h; };

    std::string out = header(o);
    const std::string axis = "stroke=\"#000000\" stroke-width=\"1\"";
    out += line(x_of(lo), y_of(lo), x_of(cap), y_of(lo), axis);
    out += line(x_of(lo), y_of(lo), x_of(lo), y_of(cap), axis);
    for (int t = 0; t <= kTicks; ++t) {
        const double v = lo + (cap - lo) * t / kTicks;
        out += line(x_of(v), y_of(lo), x_of(v), y_of(lo) + 4, axis);
        out += label(x_of(v), y_of(lo) + 16, "middle", num(v));
        out += line(x_of(lo) - 4, y_of(v), x_of(lo), y_of(v), axis);
        out += label(x_of(lo) - 6, y_of(v) + 4, "end", num(v));
    }
    out += label(kMarginLeft + plot_w / 2, y_of(lo) + 32, "middle", "birth");
    out += label(14, kMarginTop + plot_h / 2, "middle", "death");
    if (o.draw_diagonal) {
        out += line(x_of(lo), y_of(lo), x_of(cap), y_of(cap), "class=\"diagonal\" stroke=\"#888888\" stroke-width=\"1\"");
    }
    out += line(x_of(lo), y_of(cap), x_of(cap), y_of(cap),
                "class=\"cap\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
    out += label(x_of(cap) + 2, y_of(cap) + 4, "start", "inf");

    int last_dim = -1;
    double legend_y = kMarginTop + 12;
    for (const auto& p : diagram.pairs()) {
        const std::string h = "h" + std::to_string(p.dimension);
        const std::string& c = color_of(o, p.dimension);
        if (p.dimension != last_dim) {
            last_dim = p.dimension;
            out += "<text x=\"" + num(x_of(cap) - 40) + "\" y=\"" + num(legend_y + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + c + "\">H" +
                   std::to_string(p.dimension) + "</text>\n";
            legend_y += 14;
        }
        const double x = x_of(p.birth);
        if (p.is_essential()) {
            const double y = y_of(cap);
            out += "<path class=\"point " + h + " essential\" d=\"M" + num(x - 4) + "," + num(y + 3) + " L" +
                   num(x + 4) + "," + num(y + 3) + " L" + num(x) + "," + num(y - 4) + " Z\" fill=\"" + c + "\"/>\n";
        } else {
            out += "<circle class=\"point " + h + "\" cx=\"" + num(x) + "\" cy=\"" + num(y_of(p.death)) +
                   "\" r=\"3\" fill=\"" + c + "\" fill-opacity=\"0.8\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string write_betti_table(const BettiNumbers& betti) {
    std::vector<std::string> heads, cells;
    std::vector<std::size_t> widths;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        const std::string idx = std::to_string(k);
        heads.push_back("β_" + idx);  // UTF-8 beta, one display column
        cells.push_back(std::to_string(betti.values[k]));
        widths.push_back(std::max<std::size_t>(2 + idx.size(), cells.back().size()));
    }
    auto pad = [](std::string s, std::size_t shown, std::size_t width) {
        return std::string(width > shown ? width - shown : 0, ' ') + s;
    };
    std::string top, bottom;
    for (std::size_t k = 0; k < heads.size(); ++k) {
        if (k) {
            top += "  ";
            bottom += "  ";
        }
        top += pad(heads[k], 2 + std::to_string(k).size(), widths[k]);
        bottom += pad(cells[k], cells[k].size(), widths[k]);
    }
    return top + "\n" + bottom + "\n";
}

}  // namespace phtk

#include "phtk/rips.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <vector>

#include "phtk/errors.hpp"
#include "phtk/text.hpp"

namespace phtk {

double to_diameter(double scale, ScaleConvention convention) noexcept {
    return convention == ScaleConvention::Radius ? 2.0 * scale : scale;
}

ScaleConvention parse_scale_convention(std::string_view name) {
    if (name == "diameter") return ScaleConvention::Diameter;
    if (name == "radius") return ScaleConvention::Radius;
    throw InvalidOptions("unknown scale convention '" + std::string(name) + "'");
}

namespace {

class CliqueEnumerator {
public:
    CliqueEnumerator(const DistanceMatrix& d, double threshold, int top_dimension, std::vector<FiltrationEntry>& out)
        : d_(d), top_dimension_(top_dimension), out_(out), higher_(d.size()) {
        for (std::size_t v = 0; v < d.size(); ++v) {
            for (std::size_t u = v + 1; u < d.size(); ++u) {
                if (d(v, u) <= threshold) higher_[v].push_back(static_cast<VertexId>(u));
            }
        }
    }

    void run() {
        for (std::size_t v = 0; v < d_.size(); ++v) {
            Simplex::Storage clique{static_cast<VertexId>(v)};
            out_.push_back({Simplex(clique), 0.0});
            if (top_dimension_ >= 1) expand(clique, 0.0, higher_[v]);
        }
    }

private:
    // `candidates` are the common higher neighbours of every vertex in `clique`.
    void expand(Simplex::Storage& clique, double scale, const std::vector<VertexId>& candidates) {
        std::vector<VertexId> next;
        for (VertexId u : candidates) {
            double s = scale;
            for (VertexId w : clique) s = std::max(s, d_(w, u));
            clique.push_back(u);
            out_.push_back({Simplex(clique), s});
            if (static_cast<int>(clique.size()) <= top_dimension_) {
                next.clear();
                std::set_intersection(candidates.begin(), candidates.end(), higher_[u].begin(), higher_[u].end(),
                                      std::back_inserter(next));
                if (!next.empty()) expand(clique, s, next);
            }
            clique.pop_back();
        }
    }

    const DistanceMatrix& d_;
    int top_dimension_;
    std::vector<FiltrationEntry>& out_;
    std::vector<std::vector<VertexId>> higher_;
};

}  // namespace

Filtration build_rips(const DistanceMatrix& distances, const RipsParams& params) {
    if (params.max_dimension < 0) throw InvalidOptions("max dimension must be non-negative");
    if (std::isnan(params.threshold) || params.threshold < 0.0) {
        throw InvalidOptions("threshold must be non-negative");
    }
    const std::size_t n = distances.size();
    const int top = params.max_dimension + 1;
    if (static_cast<std::size_t>(top) >= n) {
        throw DimensionTooLarge("homology through dimension " + std::to_string(params.max_dimension) + " needs " +
                                std::to_string(top) + "-simplices, which " + std::to_string(n) +
                                " points cannot span");
    }

    std::vector<FiltrationEntry> entries;
    CliqueEnumerator(distances, params.threshold, top, entries).run();
    std::sort(entries.begin(), entries.end(), filtration_less);

    int dim = -1;
    for (const auto& e : entries) dim = std::max(dim, e.simplex.dimension());
    return Filtration(std::move(entries), dim, params.max_dimension);
}

SimplicialComplex complex_at_scale(const Filtration& filtration, double s) {
    const auto prefix = filtration.entries().first(filtration.prefix_length(s));
    std::vector<Simplex> simplices;
    simplices.reserve(prefix.size());
    for (const auto& e : prefix) simplices.push_back(e.simplex);
    return SimplicialComplex(std::move(simplices));
}

std::string write_filtration(const Filtration& filtration) {
    std::string out;
    for (const auto& e : filtration.entries()) {
        out += text::format_shortest(e.scale);
        out += ' ';
        out += std::to_string(e.simplex.dimension());
        for (VertexId v : e.simplex.vertices()) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace phtk

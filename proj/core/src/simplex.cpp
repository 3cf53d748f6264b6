#include "phtk/simplex.hpp"

#include <algorithm>

#include "phtk/errors.hpp"

namespace phtk {

namespace {

void canonicalize(Simplex::Storage& v) {
    if (v.empty()) {
        throw InvalidSimplex("a simplex needs at least one vertex");
    }
    if (!std::is_sorted(v.begin(), v.end())) {
        std::sort(v.begin(), v.end());
    }
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw InvalidSimplex("duplicate vertex in simplex");
    }
}

}  // namespace

Simplex::Simplex(std::initializer_list<VertexId> vertices) : vertices_(vertices.begin(), vertices.end()) {
    canonicalize(vertices_);
}

Simplex::Simplex(std::span<const VertexId> vertices) : vertices_(vertices.begin(), vertices.end()) {
    canonicalize(vertices_);
}

Simplex::Simplex(Storage vertices) : vertices_(std::move(vertices)) { canonicalize(vertices_); }

Simplex Simplex::without(std::size_t i) const {
    if (vertices_.size() < 2) {
        throw InvalidSimplex("a vertex has no proper faces");
    }
    Storage face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
        if (j != i) face.push_back(vertices_[j]);
    }
    return Simplex(std::move(face));
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(without(i));
    return out;
}

bool Simplex::has_face(const Simplex& face) const noexcept {
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(), face.vertices_.end());
}

std::string Simplex::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vertices_[i]);
    }
    out += '}';
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                                  b.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the vertex ids
    std::size_t h = 1469598103934665603ull;
    for (VertexId v : s.vertices()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace phtk

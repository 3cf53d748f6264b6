#include "phtk/homology.hpp"

#include <algorithm>
#include <bit>

#include "phtk/errors.hpp"

namespace phtk {

BoundaryMatrixZ2::BoundaryMatrixZ2(std::size_t rows, std::vector<std::vector<Index>> columns)
    : rows_(rows), columns_(std::move(columns)) {
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end());
        // pairs of equal entries cancel
        std::vector<Index> kept;
        for (std::size_t i = 0; i < col.size();) {
            std::size_t j = i;
            while (j < col.size() && col[j] == col[i]) ++j;
            if ((j - i) % 2 == 1) kept.push_back(col[i]);
            i = j;
        }
        if (!kept.empty() && kept.back() >= rows_) throw InvalidOptions("row index out of range");
        col = std::move(kept);
    }
}

BoundaryMatrixZ2 BoundaryMatrixZ2::identity(std::size_t n) {
    std::vector<std::vector<Index>> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = {static_cast<Index>(i)};
    return BoundaryMatrixZ2(n, std::move(cols));
}

bool BoundaryMatrixZ2::at(std::size_t i, std::size_t j) const noexcept {
    return std::binary_search(columns_[j].begin(), columns_[j].end(), static_cast<Index>(i));
}

Chain boundary_of_simplex(const Simplex& simplex) {
    if (simplex.dimension() == 0) return Chain(-1);
    const auto facets = simplex.facets();
    return Chain(simplex.dimension() - 1, facets);
}

Chain boundary_of_chain(const Chain& chain) {
    Chain out(chain.dimension() - 1);
    for (const Simplex& s : chain.simplices()) {
        if (s.dimension() == 0) continue;
        for (std::size_t i = 0; i < s.size(); ++i) out += s.without(i);
    }
    return out;
}

BoundaryMatrixZ2 build_boundary_matrix(const SimplicialComplex& complex, int k) {
    const auto cells = complex.of_dimension(k);
    if (k <= 0) return BoundaryMatrixZ2(0, std::vector<std::vector<BoundaryMatrixZ2::Index>>(cells.size()));
    const auto faces = complex.of_dimension(k - 1);
    std::vector<std::vector<BoundaryMatrixZ2::Index>> cols;
    cols.reserve(cells.size());
    for (const Simplex& s : cells) {
        std::vector<BoundaryMatrixZ2::Index> col;
        col.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Simplex face = s.without(i);
            auto idx = complex.index_of(face);
            if (!idx) throw InvalidComplex("face " + face.to_string() + " of " + s.to_string() + " is missing");
            col.push_back(static_cast<BoundaryMatrixZ2::Index>(*idx));
        }
        cols.push_back(std::move(col));
    }
    return BoundaryMatrixZ2(faces.size(), std::move(cols));
}

std::size_t rank_z2(const BoundaryMatrixZ2& m) {
    const std::size_t words = (m.rows() + 63) / 64;
    if (words == 0 || m.cols() == 0) return 0;
    std::vector<std::uint64_t> bits(m.cols() * words, 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (auto r : m.column(j)) bits[j * words + r / 64] |= std::uint64_t{1} << (r % 64);
    }

    // pivot_col[r] = column whose lowest one (highest row index) is r
    std::vector<std::ptrdiff_t> pivot_col(m.rows(), -1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::uint64_t* col = &bits[j * words];
        while (true) {
            std::ptrdiff_t w = static_cast<std::ptrdiff_t>(words) - 1;
            while (w >= 0 && col[w] == 0) --w;
            if (w < 0) break;
            const std::size_t low = static_cast<std::size_t>(w) * 64 + 63 - std::countl_zero(col[w]);
            if (pivot_col[low] < 0) {
                pivot_col[low] = static_cast<std::ptrdiff_t>(j);
                ++rank;
                break;
            }
            const std::uint64_t* other = &bits[static_cast<std::size_t>(pivot_col[low]) * words];
            for (std::ptrdiff_t x = 0; x <= w; ++x) col[x] ^= other[x];
        }
    }
    return rank;
}

BettiNumbers betti_numbers(const SimplicialComplex& complex, int max_k) {
    BettiNumbers out;
    if (max_k < 0) return out;
    // ranks[k] = rank delta_k for k = 0..max_k+1
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_k) + 2, 0);
    for (int k = 1; k <= max_k + 1; ++k) ranks[k] = rank_z2(build_boundary_matrix(complex, k));
    for (int k = 0; k <= max_k; ++k) {
        out.values.push_back(complex.count(k) - ranks[k] - ranks[k + 1]);
    }
    return out;
}

bool is_cycle(const Chain& chain) { return boundary_of_chain(chain).empty(); }

bool are_homologous(const Chain& a, const Chain& b, const SimplicialComplex& complex) {
    if (!is_cycle(a) || !is_cycle(b)) throw NotACycle("homology is only defined between cycles");
    if (!a.empty() && !b.empty() && a.dimension() != b.dimension()) {
        throw DimensionMismatch("cycles of different dimensions");
    }
    const Chain sum = a + b;
    for (const Simplex& s : a.simplices()) {
        if (!complex.contains(s)) throw InvalidComplex(s.to_string() + " is not in the complex");
    }
    for (const Simplex& s : b.simplices()) {
        if (!complex.contains(s)) throw InvalidComplex(s.to_string() + " is not in the complex");
    }
    if (sum.empty()) return true;

    const int k = sum.dimension();
    const BoundaryMatrixZ2 delta = build_boundary_matrix(complex, k + 1);
    std::vector<std::vector<BoundaryMatrixZ2::Index>> cols(delta.cols() + 1);
    for (std::size_t j = 0; j < delta.cols(); ++j) cols[j].assign(delta.column(j).begin(), delta.column(j).end());
    for (const Simplex& s : sum.simplices()) {
        cols.back().push_back(static_cast<BoundaryMatrixZ2::Index>(*complex.index_of(s)));
    }
    const std::size_t rows = complex.count(k);
    return rank_z2(BoundaryMatrixZ2(rows, std::move(cols))) == rank_z2(delta);
}

}  // namespace phtk

#include "phtk/distance_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "phtk/errors.hpp"

namespace phtk {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != n_ * n_) {
        throw NotSquare("expected " + std::to_string(n_ * n_) + " entries for a " + std::to_string(n_) +
                        "x" + std::to_string(n_) + " matrix, got " + std::to_string(values_.size()));
    }
    if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
        throw InvalidOptions("distance matrix entries must be finite");
    }
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> values;
    values.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw NotSquare("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
        }
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return DistanceMatrix(n, std::move(values));
}

double DistanceMatrix::max_distance() const noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) best = std::max(best, (*this)(i, j));
    }
    return best;
}

}  // namespace phtk

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace phtk {

/// Dense n x n matrix of finite pairwise distances, row-major.
///
/// Only shape and finiteness are enforced here; the metric axioms are
/// diagnosed by validate_metric() so that arbitrary user matrices can be
/// inspected.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<double> values);

    /// Throws NotSquare unless every row has exactly rows.size() entries.
    static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * n_, n_}; }
    std::span<const double> values() const noexcept { return values_; }

    /// Largest off-diagonal entry, 0 for n < 2.
    double max_distance() const noexcept;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

}  // namespace phtk

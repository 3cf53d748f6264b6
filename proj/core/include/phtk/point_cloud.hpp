#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace phtk {

/// n points in R^d stored row-major. Vertex id i of every derived complex is
/// row i; optional labels (e.g. residue names from a PDB file) ride along.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dimension, std::vector<double> coordinates, std::vector<std::string> labels = {});

    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return dimension_ == 0 ? 0 : coordinates_.size() / dimension_; }
    std::size_t dimension() const noexcept { return dimension_; }
    bool empty() const noexcept { return coordinates_.empty(); }

    std::span<const double> point(std::size_t i) const noexcept {
        return {coordinates_.data() + i * dimension_, dimension_};
    }
    std::span<const double> coordinates() const noexcept { return coordinates_; }
    std::span<const std::string> labels() const noexcept { return labels_; }

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::size_t dimension_ = 0;
    std::vector<double> coordinates_;
    std::vector<std::string> labels_;
};

}  // namespace phtk

#include "phtk/point_cloud.hpp"

#include <cmath>

#include "phtk/errors.hpp"

namespace phtk {

PointCloud::PointCloud(std::size_t dimension, std::vector<double> coordinates, std::vector<std::string> labels)
    : dimension_(dimension), coordinates_(std::move(coordinates)), labels_(std::move(labels)) {
    if (!coordinates_.empty() && dimension_ == 0) {
        throw InvalidPointCloud("points must have at least one coordinate");
    }
    if (dimension_ != 0 && coordinates_.size() % dimension_ != 0) {
        throw InvalidPointCloud("coordinate count is not a multiple of the dimension");
    }
    for (std::size_t i = 0; i < coordinates_.size(); ++i) {
        if (!std::isfinite(coordinates_[i])) {
            throw InvalidPointCloud("non-finite coordinate in point " + std::to_string(i / dimension_));
        }
    }
    if (!labels_.empty() && labels_.size() != size()) {
        throw InvalidPointCloud("label count does not match point count");
    }
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    const std::size_t d = rows.front().size();
    std::vector<double> coords;
    coords.reserve(rows.size() * d);
    for (const auto& row : rows) {
        if (row.size() != d) throw InvalidPointCloud("rows have different dimensions");
        coords.insert(coords.end(), row.begin(), row.end());
    }
    return PointCloud(d, std::move(coords));
}

}  // namespace phtk

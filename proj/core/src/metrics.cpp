#include "phtk/metrics.hpp"

#include <cmath>

#include "phtk/errors.hpp"
#include "phtk/text.hpp"

namespace phtk {

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dimension();
    std::vector<double> values(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto q = cloud.point(j);
            double sum = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double delta = p[c] - q[c];
                sum += delta * delta;
            }
            const double dist = std::sqrt(sum);
            values[i * n + j] = dist;
            values[j * n + i] = dist;
        }
    }
    return DistanceMatrix(n, std::move(values));
}

std::string_view to_string(MetricAxiom axiom) noexcept {
    switch (axiom) {
        case MetricAxiom::Identity: return "identity";
        case MetricAxiom::Positivity: return "positivity";
        case MetricAxiom::Symmetry: return "symmetry";
        case MetricAxiom::Triangle: return "triangle";
    }
    return "unknown";
}

std::vector<MetricViolation> validate_metric(const DistanceMatrix& m) {
    std::vector<MetricViolation> out;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != 0.0) out.push_back({MetricAxiom::Identity, i, i, i});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!(m(i, j) > 0.0)) out.push_back({MetricAxiom::Positivity, i, j, j});
            if (i < j && m(i, j) != m(j, i)) out.push_back({MetricAxiom::Symmetry, i, j, j});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i == k) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (m(i, k) > m(i, j) + m(j, k) + kTriangleTolerance) {
                    out.push_back({MetricAxiom::Triangle, i, k, j});
                }
            }
        }
    }
    return out;
}

std::string describe(const MetricViolation& v, const DistanceMatrix& m) {
    auto idx = [](std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    auto num = [](double x) { return text::format_significant(x, 9); };
    std::string out(to_string(v.axiom));
    out += " violated at " + idx(v.i, v.j) + ": ";
    switch (v.axiom) {
        case MetricAxiom::Identity: out += "d = " + num(m(v.i, v.i)) + " != 0"; break;
        case MetricAxiom::Positivity: out += "d = " + num(m(v.i, v.j)) + " <= 0"; break;
        case MetricAxiom::Symmetry: out += num(m(v.i, v.j)) + " != " + num(m(v.j, v.i)); break;
        case MetricAxiom::Triangle:
            out += num(m(v.i, v.j)) + " > " + num(m(v.i, v.via)) + " + " + num(m(v.via, v.j)) + " via " +
                   std::to_string(v.via);
            break;
    }
    return out;
}

std::string write_distance_csv(const DistanceMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ',';
            out += text::format_shortest(m(i, j));
        }
        out += '\n';
    }
    return out;
}

DistanceMatrix load_distance_csv(std::string_view input) {
    std::vector<std::vector<double>> rows;
    const auto lines = text::split_lines(input);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        if (text::trim(lines[n]).empty()) continue;
        std::vector<double> row;
        for (auto f : text::split(lines[n], ',')) {
            auto v = text::parse_double(f);
            if (!v) throw NonNumeric("not a finite number: '" + std::string(text::trim(f)) + "'", n + 1);
            row.push_back(*v);
        }
        rows.push_back(std::move(row));
    }
    return DistanceMatrix::from_rows(rows);
}

}  // namespace phtk

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <regex>

#include "oracles.hpp"
#include "phtk/phtk.hpp"

using namespace phtk;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

PersistenceDiagram square_diagram() {
    return compute_persistence(build_rips(pairwise_distances(oracle::unit_square()), {1, 2.0}));
}

// plot area of the default 640x400 canvas
constexpr double kLeft = 56, kTop = 24, kPlotW = 560, kPlotH = 332;

}  // namespace

TEST_CASE("cap defaults above the largest finite value", "[render]") {
    const PersistenceDiagram d({{0, 0, 2}, {0, 0, kInfinity}});
    CHECK(resolve_cap(d, {}) == Catch::Approx(2.1));
    CHECK(resolve_cap(PersistenceDiagram({{0, 0, kInfinity}}), {}) == 1.0);
    RenderOptions o;
    o.cap = 5.0;
    CHECK(resolve_cap(d, o) == 5.0);
    o.cap = 2.0;
    CHECK_THROWS_AS(resolve_cap(d, o), InvalidOptions);
}

TEST_CASE("lone essential class is a bar to the cap", "[render]") {
    const PersistenceDiagram d({{0, 0, kInfinity}});
    const auto svg = render_barcode_svg(d);
    CHECK(count_of(svg, "class=\"bar ") == 1);
    CHECK(count_of(svg, "class=\"bar h0 essential\"") == 1);
    CHECK(count_of(svg, "marker-end=\"url(#arrow-h0)\"") == 1);
    const std::regex bar(R"re(<line x1="([^"]+)" y1="[^"]+" x2="([^"]+)" y2="[^"]+" class="bar)re");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, bar));
    CHECK(std::stod(m[1]) == Catch::Approx(kLeft));
    CHECK(std::stod(m[2]) == Catch::Approx(kLeft + kPlotW));
}

TEST_CASE("unit square barcode has four H0 bars and one H1 bar", "[render]") {
    const auto svg = render_barcode_svg(square_diagram());
    CHECK(count_of(svg, "class=\"bar h0") == 4);
    CHECK(count_of(svg, "class=\"bar h1") == 1);
    CHECK(svg.starts_with("<?xml"));
    CHECK(svg.ends_with("</svg>\n"));
}

TEST_CASE("point above the diagonal", "[render]") {
    const auto svg = render_diagram_svg(PersistenceDiagram({{0, 1, 3}}));
    const std::regex circle(R"re(<circle class="point h0" cx="([^"]+)" cy="([^"]+)")re");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, circle));
    const double cap = 3.15;
    CHECK(std::stod(m[1]) == Catch::Approx(kLeft + 1.0 / cap * kPlotW).epsilon(1e-5));
    CHECK(std::stod(m[2]) == Catch::Approx(kTop + kPlotH - 3.0 / cap * kPlotH).epsilon(1e-5));
    // y of the diagonal at the same birth is lower on the page
    CHECK(std::stod(m[2]) < kTop + kPlotH - 1.0 / cap * kPlotH);
    CHECK(count_of(svg, "class=\"diagonal\"") == 1);
}

TEST_CASE("essential classes sit on the cap line", "[render]") {
    const PersistenceDiagram d({{0, 0, kInfinity}, {1, 0.5, kInfinity}});
    const auto svg = render_diagram_svg(d);
    CHECK(count_of(svg, "<circle") == 0);
    CHECK(count_of(svg, "class=\"point h0 essential\"") == 1);
    CHECK(count_of(svg, "class=\"point h1 essential\"") == 1);
    CHECK(count_of(svg, "class=\"cap\"") == 1);
}

TEST_CASE("unit square H1 marker position", "[render]") {
    const auto svg = render_diagram_svg(square_diagram());
    const std::regex circle(R"re(<circle class="point h1" cx="([^"]+)" cy="([^"]+)")re");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, circle));
    const double cap = 1.05 * std::sqrt(2.0);
    // invert the plot transform to recover data coordinates
    const double birth = (std::stod(m[1]) - kLeft) / kPlotW * cap;
    const double death = (kTop + kPlotH - std::stod(m[2])) / kPlotH * cap;
    CHECK(birth == Catch::Approx(1.0).epsilon(1e-5));
    CHECK(death == Catch::Approx(1.41421356).epsilon(1e-5));
}

TEST_CASE("empty diagrams are rejected", "[render]") {
    CHECK_THROWS_AS(render_barcode_svg(PersistenceDiagram()), EmptyDiagram);
    CHECK_THROWS_AS(render_diagram_svg(PersistenceDiagram()), EmptyDiagram);
}

TEST_CASE("every pair is drawn exactly once and output is stable", "[render][property]") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = compute_persistence(build_rips(pairwise_distances(oracle::random_cloud(rng, 9, 2)), {2, kInfinity}));
        const auto bars = render_barcode_svg(d);
        const auto points = render_diagram_svg(d);
        REQUIRE(count_of(bars, "class=\"bar ") == d.size());
        REQUIRE(count_of(points, "class=\"point ") == d.size());
        for (int k = 0; k <= 2; ++k) {
            const std::string h = "h" + std::to_string(k);
            REQUIRE(count_of(bars, "class=\"bar " + h) == d.count(k));
            REQUIRE(count_of(points, "class=\"point " + h) == d.count(k));
        }
        REQUIRE(render_barcode_svg(d) == bars);
        REQUIRE(render_diagram_svg(d) == points);
    }
}

TEST_CASE("colours and canvas size follow the options", "[render]") {
    RenderOptions o;
    o.width = 300;
    o.height = 200;
    o.colors = {"#123456"};
    o.draw_diagonal = false;
    const auto svg = render_diagram_svg(PersistenceDiagram({{0, 0, 1}, {1, 0.5, 1}}), o);
    CHECK(svg.find("width=\"300\" height=\"200\"") != std::string::npos);
    CHECK(count_of(svg, "fill=\"#123456\"") >= 2);
    CHECK(count_of(svg, "class=\"diagonal\"") == 0);
}

TEST_CASE("Betti table layout", "[render]") {
    CHECK(write_betti_table({{1, 1, 0}}) == "β_0  β_1  β_2\n  1    1    0\n");
    CHECK(write_betti_table({{1, 3, 0}}) == "β_0  β_1  β_2\n  1    3    0\n");
    CHECK(write_betti_table({{2, 2, 0}}) == "β_0  β_1  β_2\n  2    2    0\n");
    CHECK(write_betti_table({{111, 0}}) == "β_0  β_1\n111    0\n");
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "phtk/phtk.hpp"

using namespace phtk;

TEST_CASE("3-4-5 triangle", "[metrics]") {
    const auto d = pairwise_distances(PointCloud(2, {0, 0, 3, 4}));
    CHECK(d == DistanceMatrix(2, {0, 5, 5, 0}));
}

TEST_CASE("single point gives the 1x1 zero matrix", "[metrics]") {
    const auto d = pairwise_distances(PointCloud(3, {1, 2, 3}));
    CHECK(d == DistanceMatrix(1, {0}));
}

TEST_CASE("pairwise distances are exactly symmetric with zero diagonal", "[metrics]") {
    std::mt19937_64 rng(1);
    const auto d = pairwise_distances(oracle::random_cloud(rng, 111, 3, 50.0));
    REQUIRE(d.size() == 111);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d(i, i) == 0.0);
        for (std::size_t j = 0; j < d.size(); ++j) REQUIRE(d(i, j) == d(j, i));
    }
}

TEST_CASE("Euclidean distances of random clouds satisfy the axioms", "[metrics][property]") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = oracle::random_cloud(rng, 2 + rng() % 20, 1 + rng() % 4);
        REQUIRE(validate_metric(pairwise_distances(p)).empty());
    }
}

TEST_CASE("asymmetric matrix is flagged", "[metrics]") {
    const auto v = validate_metric(DistanceMatrix(2, {0, 1, 2, 0}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].axiom == MetricAxiom::Symmetry);
    CHECK(v[0].i == 0);
    CHECK(v[0].j == 1);
}

TEST_CASE("triangle violation is flagged with the intermediate point", "[metrics]") {
    const DistanceMatrix m(3, {0, 1, 3, 1, 0, 1, 3, 1, 0});
    const auto v = validate_metric(m);
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& x : v) {
        CHECK(x.axiom == MetricAxiom::Triangle);
        if (x.i == 0 && x.j == 2 && x.via == 1) found = true;
    }
    CHECK(found);
    CHECK(describe(v[0], m).find("triangle") != std::string::npos);
}

TEST_CASE("identity and positivity", "[metrics]") {
    const auto v = validate_metric(DistanceMatrix(2, {1, 0, 0, 0}));
    bool identity = false, positivity = false;
    for (const auto& x : v) {
        identity |= x.axiom == MetricAxiom::Identity;
        positivity |= x.axiom == MetricAxiom::Positivity;
    }
    CHECK(identity);
    CHECK(positivity);
}

TEST_CASE("distances are invariant under rigid motions", "[metrics][property]") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> shift(-100.0, 100.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = oracle::random_cloud(rng, 15, 3, 10.0);
        const double a = angle(rng), b = angle(rng);
        const double tx = shift(rng), ty = shift(rng), tz = shift(rng);
        std::vector<double> q;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto x = p.point(i);
            // rotate about z, then about x, then translate
            const double x1 = std::cos(a) * x[0] - std::sin(a) * x[1];
            const double y1 = std::sin(a) * x[0] + std::cos(a) * x[1];
            const double z1 = x[2];
            const double y2 = std::cos(b) * y1 - std::sin(b) * z1;
            const double z2 = std::sin(b) * y1 + std::cos(b) * z1;
            q.insert(q.end(), {x1 + tx, y2 + ty, z2 + tz});
        }
        const auto d1 = pairwise_distances(p);
        const auto d2 = pairwise_distances(PointCloud(3, q));
        for (std::size_t i = 0; i < d1.values().size(); ++i) {
            REQUIRE(std::abs(d1.values()[i] - d2.values()[i]) <= 1e-9);
        }
    }
}

TEST_CASE("distance csv round trip", "[metrics]") {
    std::mt19937_64 rng(4);
    const auto d = pairwise_distances(oracle::random_cloud(rng, 6, 2));
    CHECK(load_distance_csv(write_distance_csv(d)) == d);
    CHECK_THROWS_AS(load_distance_csv("0,1\n1,0,2\n"), NotSquare);
    CHECK_THROWS_AS(load_distance_csv("0,x\n1,0\n"), NonNumeric);
}

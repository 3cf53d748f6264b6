// Acceptance suite: one PASS/FAIL/SKIP line per criterion, nonzero exit on
// any FAIL. Criterion 9 needs the real DNA coordinates; point PHTK_DNA_PATH
// at a PDB or CSV file to run it (optionally PHTK_DNA_THRESHOLD to fix the
// persistence cut instead of taking the widest gap).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "phtk/phtk.hpp"
#include "phtk/text.hpp"

using namespace phtk;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    enum Kind { Pass, Fail, Skip } kind;
    std::string detail;
};

Outcome pass(std::string d = {}) { return {Outcome::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Outcome::Fail, std::move(d)}; }
Outcome skip(std::string d) { return {Outcome::Skip, std::move(d)}; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) { return text::format_significant(v, 6); }

std::string betti_str(const BettiNumbers& b) {
    std::string s = "(";
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
    return s + ")";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<PersistencePair> pairs_of(const PersistenceDiagram& d) { return {d.pairs().begin(), d.pairs().end()}; }

// 1 -------------------------------------------------------------------------
Outcome common_shapes() {
    const auto t0 = Clock::now();
    struct Case {
        const char* name;
        SimplicialComplex complex;
        BettiNumbers expected;
    };
    const std::vector<Case> cases{{"circle", oracle::hexagon(), {{1, 1, 0}}},
                                  {"sphere", oracle::octahedron_boundary(), {{1, 0, 1}}},
                                  {"torus", oracle::seven_vertex_torus(), {{1, 2, 1}}},
                                  {"two circles", oracle::two_hexagons(), {{2, 2, 0}}}};
    for (const auto& c : cases) {
        const auto got = betti_numbers(c.complex, 2);
        if (!(got == c.expected)) return fail(std::string(c.name) + " gave " + betti_str(got));
    }
    const double t = seconds_since(t0);
    if (t >= 1.0) return fail("took " + fmt(t) + " s");
    return pass(fmt(t * 1e3) + " ms");
}

// 2 -------------------------------------------------------------------------
Outcome hexagon_boundary() {
    Chain c(1);
    for (VertexId i = 0; i < 6; ++i) c += Simplex{i, (i + 1) % 6};
    if (c.size() != 6) return fail("chain has " + std::to_string(c.size()) + " edges");
    const Chain b = boundary_of_chain(c);
    if (!b.empty()) return fail("boundary has " + std::to_string(b.size()) + " terms");
    if (!is_cycle(c)) return fail("not reported as a cycle");
    return pass();
}

// 3 -------------------------------------------------------------------------
Outcome boundary_squared() {
    std::mt19937_64 rng(3);
    std::size_t failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const int dim = 2 + i % 4;
        std::vector<VertexId> pool(64);
        std::iota(pool.begin(), pool.end(), VertexId{0});
        std::shuffle(pool.begin(), pool.end(), rng);
        const Simplex s(std::span<const VertexId>(pool.data(), static_cast<std::size_t>(dim) + 1));
        if (s.dimension() != dim || !boundary_of_chain(boundary_of_simplex(s)).empty()) ++failures;
    }
    if (failures) return fail(std::to_string(failures) + " of 1000 failed");
    return pass("1000 simplices, dimensions 2-5");
}

// 4 -------------------------------------------------------------------------
Outcome oracle_equivalence() {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const std::size_t dim = 2 + trial % 2;
        const auto d = pairwise_distances(oracle::random_cloud(rng, n, dim));
        const int k = static_cast<int>(std::min<std::size_t>(2, n - 2));
        const auto f = build_rips(d, {k, kInfinity});
        const auto dg = compute_persistence(f);
        const std::string where = "cloud " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";

        if (pairs_of(dg) != oracle::naive_persistence(f.entries(), k)) return fail(where + ": naive reduction differs");
        for (double s : f.scales()) {
            if (!(betti_at_scale(dg, s) == betti_numbers(complex_at_scale(f, s), k))) {
                return fail(where + ": static Betti numbers differ at scale " + fmt(s));
            }
        }
        if (dg.in_dimension(0) != oracle::union_find_h0(d, kInfinity)) return fail(where + ": union-find H0 differs");
    }
    return pass("200 clouds");
}

// 5 -------------------------------------------------------------------------
Outcome unit_square() {
    const auto t0 = Clock::now();
    const auto dg = compute_persistence(build_rips(pairwise_distances(oracle::unit_square()), {1, 2.0}));
    const double t = seconds_since(t0);

    const auto h0 = dg.in_dimension(0);
    const auto h1 = dg.in_dimension(1);
    if (h1.size() != 1) return fail(std::to_string(h1.size()) + " H1 pairs");
    if (h1[0].birth != 1.0 || std::abs(h1[0].death - std::sqrt(2.0)) > 1e-12) {
        return fail("H1 pair (" + fmt(h1[0].birth) + ", " + fmt(h1[0].death) + ")");
    }
    std::size_t at_one = 0;
    for (const auto& p : h0) at_one += (p.birth == 0.0 && p.death == 1.0) ? 1 : 0;
    if (h0.size() != 4 || at_one != 3 || dg.essential_count(0) != 1) return fail("H0 pairs wrong");
    if (t >= 0.01) return fail("took " + fmt(t * 1e3) + " ms");
    return pass(fmt(t * 1e3) + " ms");
}

// 6 -------------------------------------------------------------------------
Outcome circle_sampling() {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::vector<double> coords;
    for (int i = 0; i < 20; ++i) {
        const double t = angle(rng);
        coords.insert(coords.end(), {std::cos(t), std::sin(t)});
    }
    const auto dg = compute_persistence(build_rips(pairwise_distances(PointCloud(2, coords)), {1, kInfinity}));
    const auto h1 = significant_features(dg, 0.2).in_dimension(1);
    if (h1.size() != 1) return fail(std::to_string(h1.size()) + " H1 features above 0.2");
    if (!(h1[0].persistence() > 0.5)) return fail("H1 persistence " + fmt(h1[0].persistence()));
    const double mid = 0.5 * (h1[0].birth + h1[0].death);
    const auto b = betti_at_scale(dg, mid);
    if (!(b == BettiNumbers{{1, 1}})) return fail("Betti numbers at " + fmt(mid) + " are " + betti_str(b));
    return pass("H1 (" + fmt(h1[0].birth) + ", " + fmt(h1[0].death) + "), beta" + betti_str(b) + " at " + fmt(mid));
}

// 7 -------------------------------------------------------------------------
Outcome diagram_distances() {
    std::mt19937_64 rng(7);
    std::vector<PersistenceDiagram> seen;
    for (int trial = 0; trial < 100; ++trial) {
        const bool grid = trial % 2 == 0;
        const auto a = oracle::random_diagram(rng, 5, 0, grid);
        const auto b = oracle::random_diagram(rng, 5, 0, grid);
        const auto expected = oracle::exhaustive_matching(a, b, 0);
        const double bn = bottleneck_distance(a, b, 0);
        const double ws = wasserstein_distance(a, b, 0);
        const std::string where = "pair " + std::to_string(trial);
        if (bn != expected.bottleneck) return fail(where + ": bottleneck " + fmt(bn) + " vs " + fmt(expected.bottleneck));
        if (std::abs(ws - expected.wasserstein) > 1e-9) {
            return fail(where + ": wasserstein " + fmt(ws) + " vs " + fmt(expected.wasserstein));
        }
        seen.push_back(a);
        seen.push_back(b);
    }
    // metric axioms over triples of the generated diagrams
    for (std::size_t i = 0; i + 2 < seen.size(); i += 3) {
        const auto &x = seen[i], &y = seen[i + 1], &z = seen[i + 2];
        for (auto dist : {&bottleneck_distance, &wasserstein_distance}) {
            const double xy = dist(x, y, 0);
            if (xy != dist(y, x, 0)) return fail("asymmetric");
            if (dist(x, x, 0) != 0.0) return fail("d(x,x) != 0");
            if ((xy == 0.0) != (x == y)) return fail("zero distance between different diagrams");
            if (dist(x, z, 0) > xy + dist(y, z, 0) + 1e-9) return fail("triangle inequality");
        }
        if (bottleneck_distance(x, y, 0) > wasserstein_distance(x, y, 0) + 1e-12) return fail("bottleneck > wasserstein");
    }
    return pass("100 pairs");
}

// 8 -------------------------------------------------------------------------
Outcome stability() {
    const double eta = 0.05;
    const auto base = oracle::circle_points(20);
    const auto ref = compute_persistence(build_rips(pairwise_distances(base), {1, kInfinity}));
    double worst = 0.0;
    for (int seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        std::uniform_real_distribution<double> u(-eta, eta);
        std::vector<double> coords(base.coordinates().begin(), base.coordinates().end());
        for (std::size_t i = 0; i < coords.size(); i += 2) {
            double dx, dy;
            do {
                dx = u(rng);
                dy = u(rng);
            } while (dx * dx + dy * dy > eta * eta);
            coords[i] += dx;
            coords[i + 1] += dy;
        }
        const auto dg = compute_persistence(build_rips(pairwise_distances(PointCloud(2, coords)), {1, kInfinity}));
        const double d = bottleneck_distance(ref, dg, 1);
        worst = std::max(worst, d);
        if (d > 2.0 * eta) return fail("seed " + std::to_string(seed) + ": " + fmt(d) + " > " + fmt(2.0 * eta));
    }
    return pass("worst " + fmt(worst) + " over 50 seeds");
}

// 9 -------------------------------------------------------------------------
Outcome dna_reproduction() {
    const char* path = std::getenv("PHTK_DNA_PATH");
    if (!path || !*path) return skip("set PHTK_DNA_PATH to the 111-point coordinates");
    const std::string file(path);
    const std::string content = slurp(file);
    const bool is_pdb = file.ends_with(".pdb") || file.ends_with(".ent");
    const PointCloud cloud = is_pdb ? parse_pdb(content) : load_csv(content);
    if (cloud.size() != 111) return fail("expected 111 points, got " + std::to_string(cloud.size()));

    const auto d = pairwise_distances(cloud);
    const auto dg = compute_persistence(build_rips(d, {2, d.max_distance()}));

    double cut;
    if (const char* t = std::getenv("PHTK_DNA_THRESHOLD"); t && *t) {
        cut = std::stod(t);
    } else {
        // widest gap between consecutive H1 persistence values
        std::vector<double> p;
        for (const auto& x : dg.in_dimension(1)) p.push_back(x.persistence());
        std::sort(p.rbegin(), p.rend());
        if (p.size() < 2) return fail("fewer than two H1 features");
        std::size_t at = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] - p[i + 1] > p[at] - p[at + 1]) at = i;
        }
        cut = 0.5 * (p[at] + p[at + 1]);
    }
    const auto sig = significant_features(dg, cut);
    const auto counts = feature_counts(sig);
    const std::string got = "essential H0 " + std::to_string(sig.essential_count(0)) + ", H1 " +
                            std::to_string(counts[1]) + ", H2 " + std::to_string(counts[2]) + " at cut " + fmt(cut);
    if (sig.essential_count(0) != 1 || counts[1] != 3 || counts[2] != 0) return fail(got);
    return pass(got);
}

// 10 ------------------------------------------------------------------------
Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / ("phtk_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string input = std::string(PHTK_TEST_DATA_DIR) + "/trefoil_ca.pdb";
    const std::vector<std::string> outputs{"diagram.csv", "barcode.svg", "diagram.svg"};
    for (const char* tag : {"a", "b"}) {
        fs::create_directories(dir / tag);
        std::vector<std::string> args{"phtk", "run", "--input", input, "--max-dimension", "1", "--threshold", "12"};
        args.insert(args.end(), {"--diagram-csv", (dir / tag / outputs[0]).string()});
        args.insert(args.end(), {"--barcode-svg", (dir / tag / outputs[1]).string()});
        args.insert(args.end(), {"--diagram-svg", (dir / tag / outputs[2]).string()});
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        if (cli::main(static_cast<int>(argv.size()), argv.data(), out, err) != cli::kOk) {
            fs::remove_all(dir);
            return fail("run exited with an error: " + err.str());
        }
    }
    std::string problem;
    for (const auto& name : outputs) {
        const auto a = slurp((dir / "a" / name).string());
        const auto b = slurp((dir / "b" / name).string());
        if (a.empty()) problem = name + " is empty";
        else if (a != b) problem = name + " differs";
        if (!problem.empty()) break;
    }
    fs::remove_all(dir);
    if (!problem.empty()) return fail(problem);
    return pass("CSV and both SVGs identical");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"common-shapes Betti table", common_shapes},
        {"hexagon 1-chain boundary", hexagon_boundary},
        {"boundary of boundary is zero", boundary_squared},
        {"reduction vs oracles on random clouds", oracle_equivalence},
        {"unit square diagram", unit_square},
        {"circle sampling", circle_sampling},
        {"diagram distances vs exhaustive matching", diagram_distances},
        {"stability under jitter", stability},
        {"DNA supercoil reproduction", dna_reproduction},
        {"run determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const char* tag = o.kind == Outcome::Pass ? "PASS" : o.kind == Outcome::Fail ? "FAIL" : "SKIP";
        failures += o.kind == Outcome::Fail ? 1 : 0;
        std::cout << tag << "  " << (i + 1) << ". " << criteria[i].first;
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << '\n';
    }
    return failures == 0 ? 0 : 1;
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "phtk/phtk.hpp"
#include "phtk/text.hpp"

namespace phtk::cli {

namespace {

/// Thrown for bad flags or values discovered after argument parsing.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input file that cannot be read.
struct ReadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ReadError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream outf(path, std::ios::binary | std::ios::trunc);
    if (!outf || !outf.write(content.data(), static_cast<std::streamsize>(content.size()))) {
        throw ConfigError(path + ": cannot write file");
    }
}

InputFormat infer_format(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return (ext == ".pdb" || ext == ".ent") ? InputFormat::Pdb : InputFormat::Csv;
}

PointCloud load_points(const std::string& path, std::optional<InputFormat> format, std::optional<char> chain) {
    const std::string content = read_file(path);
    if (format.value_or(infer_format(path)) == InputFormat::Pdb) return parse_pdb(content, chain);
    return load_csv(content);
}

std::string betti_line(const BettiNumbers& b) {
    std::string out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (k) out += ' ';
        out += "β" + std::to_string(k) + "=" + std::to_string(b.values[k]);
    }
    return out;
}

/// Runs `body`, translating library and I/O errors into exit codes.
template <class Body>
int guarded(std::ostream& err, const std::string& source, Body&& body) {
    try {
        return body();
    } catch (const ReadError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const ParseError& e) {
        err << "error: " << source << ": " << e.what() << '\n';
        return kParseError;
    } catch (const InvalidPointCloud& e) {
        err << "error: " << source << ": " << e.what() << '\n';
        return kParseError;
    } catch (const NotSquare& e) {
        err << "error: " << source << ": " << e.what() << '\n';
        return kParseError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace

int cmd_run(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, config.input, [&] {
        if (config.max_dimension < 0) throw ConfigError("--max-dimension must be non-negative");
        if (config.threshold && !(*config.threshold >= 0.0)) throw ConfigError("--threshold must be non-negative");
        if (!(config.min_persistence >= 0.0)) throw ConfigError("--min-persistence must be non-negative");
        if (config.scale && !(*config.scale >= 0.0)) throw ConfigError("--scale must be non-negative");

        const PointCloud cloud = load_points(config.input, config.format, config.chain);
        if (cloud.empty()) throw ParseError("no points", 0);
        const DistanceMatrix distances = pairwise_distances(cloud);

        RipsParams params;
        params.max_dimension = config.max_dimension;
        params.threshold = config.threshold ? to_diameter(*config.threshold, config.scale_convention)
                                            : distances.max_distance();
        const Filtration filtration = build_rips(distances, params);
        const PersistenceDiagram diagram = compute_persistence(filtration);
        const PersistenceDiagram significant = significant_features(diagram, config.min_persistence);

        if (config.distance_csv) write_file(*config.distance_csv, write_distance_csv(distances));
        if (config.filtration_dump) write_file(*config.filtration_dump, write_filtration(filtration));
        if (config.diagram_csv) write_file(*config.diagram_csv, write_diagram_csv(diagram));
        if (config.barcode_svg) write_file(*config.barcode_svg, render_barcode_svg(diagram));
        if (config.diagram_svg) write_file(*config.diagram_svg, render_diagram_svg(diagram));

        std::string table;
        if (config.scale) {
            const double s = to_diameter(*config.scale, config.scale_convention);
            table = write_betti_table(betti_at_scale(significant, s));
        } else {
            table = write_betti_table(feature_counts(significant));
        }
        if (config.betti_table) write_file(*config.betti_table, table);

        out << "points: " << cloud.size() << "\n";
        out << "threshold: " << text::format_significant(params.threshold, 9) << "\n";
        out << "simplices: " << filtration.size() << "\n";
        out << "features with persistence >= " << text::format_significant(config.min_persistence, 9);
        if (config.scale) out << " alive at scale " << text::format_significant(*config.scale, 9);
        out << ":\n" << table;
        return static_cast<int>(kOk);
    });
}

int cmd_betti(const std::string& diagram_csv, double scale, std::ostream& out, std::ostream& err) {
    return guarded(err, diagram_csv, [&] {
        if (!(scale >= 0.0)) throw ConfigError("--scale must be non-negative");
        const PersistenceDiagram diagram = read_diagram_csv(read_file(diagram_csv));
        out << betti_line(betti_at_scale(diagram, scale)) << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_distance(const std::string& a, const std::string& b, const std::string& kind, const std::vector<int>& dims,
                 std::ostream& out, std::ostream& err) {
    std::string source = a;
    return guarded(err, source, [&] {
        if (kind != "bottleneck" && kind != "wasserstein") throw ConfigError("unknown distance kind '" + kind + "'");
        const PersistenceDiagram da = read_diagram_csv(read_file(a));
        source = b;
        const PersistenceDiagram db = read_diagram_csv(read_file(b));

        std::vector<int> wanted = dims;
        if (wanted.empty()) {
            for (int k = 0; k <= std::max(da.max_dimension(), db.max_dimension()); ++k) wanted.push_back(k);
            if (wanted.empty()) wanted.push_back(0);
        }
        for (int k : wanted) {
            if (k < 0) throw ConfigError("--dim must be non-negative");
            const double d = kind == "bottleneck" ? bottleneck_distance(da, db, k) : wasserstein_distance(da, db, k);
            out << text::format_significant(d, 9) << '\n';
        }
        return static_cast<int>(kOk);
    });
}

int cmd_pdb_extract(const std::string& input, std::optional<char> chain, const std::optional<std::string>& output,
                    std::ostream& out, std::ostream& err) {
    return guarded(err, input, [&] {
        const std::string csv = write_csv(parse_pdb(read_file(input), chain));
        if (output) {
            write_file(*output, csv);
        } else {
            out << csv;
        }
        return static_cast<int>(kOk);
    });
}

namespace {

int cmd_validate(const std::string& input, std::optional<InputFormat> format, std::optional<char> chain,
                 const std::optional<std::string>& matrix, std::optional<double> threshold, int max_dimension,
                 std::ostream& out, std::ostream& err) {
    const std::string source = matrix ? *matrix : input;
    return guarded(err, source, [&] {
        if (matrix && !input.empty()) throw ConfigError("give either --input or --matrix, not both");
        if (!matrix && input.empty()) throw ConfigError("one of --input or --matrix is required");
        const DistanceMatrix distances = matrix ? load_distance_csv(read_file(*matrix))
                                                : pairwise_distances(load_points(input, format, chain));

        constexpr std::size_t kShown = 20;
        const auto metric = validate_metric(distances);
        out << "metric: " << (metric.empty() ? "ok" : std::to_string(metric.size()) + " violation(s)") << '\n';
        for (std::size_t i = 0; i < std::min(kShown, metric.size()); ++i) {
            out << "  " << describe(metric[i], distances) << '\n';
        }

        std::size_t complex_problems = 0;
        if (distances.size() > static_cast<std::size_t>(max_dimension) + 1) {
            RipsParams params{max_dimension, threshold.value_or(distances.max_distance())};
            const Filtration f = build_rips(distances, params);
            const auto violations = validate_complex(complex_at_scale(f, params.threshold));
            complex_problems = violations.size();
            out << "rips complex (" << f.size() << " simplices): "
                << (violations.empty() ? "ok" : std::to_string(violations.size()) + " violation(s)") << '\n';
            for (std::size_t i = 0; i < std::min(kShown, violations.size()); ++i) {
                out << "  " << violations[i].simplex.to_string() << " misses " << violations[i].missing_face.to_string()
                    << '\n';
            }
        }
        return static_cast<int>(metric.empty() && complex_problems == 0 ? kOk : kViolations);
    });
}

std::optional<char> chain_id(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s.size() != 1) throw ConfigError("--chain takes a single character");
    return s[0];
}

std::optional<InputFormat> format_of(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "pdb") return InputFormat::Pdb;
    if (s == "csv") return InputFormat::Csv;
    throw ConfigError("unknown format '" + s + "'");
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Persistent homology of point clouds via Vietoris-Rips filtrations", "phtk"};
    app.require_subcommand(1);

    PipelineConfig run_cfg;
    std::string run_format, run_chain, run_convention = "diameter";
    auto* run = app.add_subcommand("run", "point cloud -> Rips filtration -> persistence diagram and Betti numbers");
    run->add_option("--input", run_cfg.input, "PDB or CSV point file")->required();
    run->add_option("--format", run_format, "pdb|csv (default: from extension)");
    run->add_option("--chain", run_chain, "PDB chain id to keep");
    run->add_option("--max-dimension", run_cfg.max_dimension, "highest homology dimension")->capture_default_str();
    run->add_option("--threshold", run_cfg.threshold, "largest scale (default: largest pairwise distance)");
    run->add_option("--scale-convention", run_convention, "diameter|radius")->capture_default_str();
    run->add_option("--min-persistence", run_cfg.min_persistence, "feature filter for the Betti table")
        ->capture_default_str();
    run->add_option("--diagram-csv", run_cfg.diagram_csv, "write the persistence diagram as CSV");
    run->add_option("--barcode-svg", run_cfg.barcode_svg, "write the barcode as SVG");
    run->add_option("--diagram-svg", run_cfg.diagram_svg, "write the persistence diagram as SVG");
    run->add_option("--betti-table", run_cfg.betti_table, "write the Betti table as text");
    run->add_option("--filtration-dump", run_cfg.filtration_dump, "write the filtration, one simplex per line");
    run->add_option("--distance-csv", run_cfg.distance_csv, "write the distance matrix as CSV");
    run->add_option("--scale", run_cfg.scale, "report Betti numbers alive at this scale");

    std::string betti_csv;
    double betti_scale = 0.0;
    auto* betti = app.add_subcommand("betti", "Betti numbers of a diagram CSV at one scale");
    betti->add_option("diagram", betti_csv, "diagram CSV")->required();
    betti->add_option("--scale", betti_scale, "edge-length scale")->required();

    std::string dist_a, dist_b, dist_kind = "bottleneck";
    std::vector<int> dist_dims;
    auto* distance = app.add_subcommand("distance", "bottleneck or 1-Wasserstein distance between two diagram CSVs");
    distance->add_option("a", dist_a, "first diagram CSV")->required();
    distance->add_option("b", dist_b, "second diagram CSV")->required();
    distance->add_option("--kind", dist_kind, "bottleneck|wasserstein")->capture_default_str();
    distance->add_option("--dim", dist_dims, "homology dimension(s); default: all");

    std::string pdb_input, pdb_chain;
    std::optional<std::string> pdb_output;
    auto* extract = app.add_subcommand("pdb-extract", "alpha-carbon coordinates of a PDB file as CSV");
    extract->add_option("--input", pdb_input, "PDB file")->required();
    extract->add_option("--chain", pdb_chain, "chain id to keep");
    extract->add_option("--output", pdb_output, "output CSV (default: stdout)");

    std::string val_input, val_format, val_chain;
    std::optional<std::string> val_matrix;
    std::optional<double> val_threshold;
    int val_dim = 1;
    auto* validate = app.add_subcommand("validate", "check metric axioms and Rips complex closure");
    validate->add_option("--input", val_input, "PDB or CSV point file");
    validate->add_option("--format", val_format, "pdb|csv (default: from extension)");
    validate->add_option("--chain", val_chain, "PDB chain id to keep");
    validate->add_option("--matrix", val_matrix, "headerless square distance matrix CSV");
    validate->add_option("--threshold", val_threshold, "Rips threshold (default: largest distance)");
    validate->add_option("--max-dimension", val_dim, "highest homology dimension")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (*run) {
            run_cfg.format = format_of(run_format);
            run_cfg.chain = chain_id(run_chain);
            try {
                run_cfg.scale_convention = parse_scale_convention(run_convention);
            } catch (const Error& e) {
                throw ConfigError(e.what());
            }
            return cmd_run(run_cfg, out, err);
        }
        if (*betti) return cmd_betti(betti_csv, betti_scale, out, err);
        if (*distance) return cmd_distance(dist_a, dist_b, dist_kind, dist_dims, out, err);
        if (*extract) return cmd_pdb_extract(pdb_input, chain_id(pdb_chain), pdb_output, out, err);
        if (*validate) {
            return cmd_validate(val_input, format_of(val_format), chain_id(val_chain), val_matrix, val_threshold,
                                val_dim, out, err);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace phtk::cli

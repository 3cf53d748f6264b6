#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "phtk/rips.hpp"

namespace phtk::cli {

enum ExitCode : int {
    kOk = 0,
    kViolations = 1,  // `validate` found problems
    kParseError = 2,  // unreadable or malformed input
    kConfigError = 3,
};

enum class InputFormat { Pdb, Csv };

struct PipelineConfig {
    std::string input;
    std::optional<InputFormat> format;  // inferred from the extension when unset
    std::optional<char> chain;
    int max_dimension = 2;
    std::optional<double> threshold;  // default: largest pairwise distance
    ScaleConvention scale_convention = ScaleConvention::Diameter;
    double min_persistence = 0.0;
    std::optional<std::string> diagram_csv;
    std::optional<std::string> barcode_svg;
    std::optional<std::string> diagram_svg;
    std::optional<std::string> betti_table;
    std::optional<std::string> filtration_dump;
    std::optional<std::string> distance_csv;
    std::optional<double> scale;
};

int cmd_run(const PipelineConfig& config, std::ostream& out, std::ostream& err);
int cmd_betti(const std::string& diagram_csv, double scale, std::ostream& out, std::ostream& err);
int cmd_distance(const std::string& a, const std::string& b, const std::string& kind, const std::vector<int>& dims,
                 std::ostream& out, std::ostream& err);
int cmd_pdb_extract(const std::string& input, std::optional<char> chain, const std::optional<std::string>& output,
                    std::ostream& out, std::ostream& err);

/// Parses `argv` and dispatches to a subcommand; returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phtk::cli

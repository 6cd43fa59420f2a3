#pragma once

#include <map>
#include <string>
#include <vector>

#include "srgb/report.hpp"

namespace srgb {

enum class Command { Tables, Curve, Surface, GaussBonnet, Sweep };

struct RunConfig {
    Command command = Command::Tables;
    ModelSpaceId space = ModelSpaceId::AffineGroup;
    DistributionKind dist = DistributionKind::H1;
    std::vector<double> params{0.0};
    std::vector<double> Ls{1.0, 4.0, 100.0};
    std::string fixture;
    int grid = 0;  // surface command: sample the chart on an N x N interior grid
    std::map<std::string, double> tolerances;  // gb_gate, quad_tol, class_tol, second_kind_gate
    std::string output;                        // file stem; empty -> stdout
    std::string format = "json";               // json | csv
};

struct RunResult {
    int exit_code = 0;
    std::string json_text;
    std::string csv_text;  // empty when the command has no tabular output
    std::string text;      // human-oriented rendering for stdout
};

/// Validates, executes and assembles the outputs; throws
/// std::invalid_argument for config errors (CLI maps that to exit 2).
RunResult run(const RunConfig& config);

double tolerance_or(const RunConfig& config, const std::string& key, double fallback);

}  // namespace srgb

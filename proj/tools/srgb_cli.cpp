// Command-line front end: tables / curve / surface / gauss-bonnet / sweep.
//
// Exit codes: 0 all gated checks pass, 1 a tolerance gate failed, 2 bad
// configuration or validation error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "srgb/run.hpp"

namespace {

srgb::ModelSpaceId parse_space(const std::string& s) {
    if (s == "affine") return srgb::ModelSpaceId::AffineGroup;
    if (s == "e11") return srgb::ModelSpaceId::E11;
    throw std::invalid_argument("space must be 'affine' or 'e11'");
}

srgb::DistributionKind parse_dist(const std::string& s) {
    if (s == "h1") return srgb::DistributionKind::H1;
    if (s == "h2") return srgb::DistributionKind::H2;
    throw std::invalid_argument("dist must be 'h1' or 'h2'");
}

void load_config_file(const std::string& path, srgb::RunConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot read config file: " + path);
    srgb::json j = srgb::json::parse(is);
    if (j.contains("space")) cfg.space = parse_space(j["space"].get<std::string>());
    if (j.contains("dist")) cfg.dist = parse_dist(j["dist"].get<std::string>());
    if (j.contains("params")) cfg.params = j["params"].get<std::vector<double>>();
    if (j.contains("L")) cfg.Ls = j["L"].get<std::vector<double>>();
    if (j.contains("fixture")) cfg.fixture = j["fixture"].get<std::string>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("tolerances"))
        for (auto& [k, v] : j["tolerances"].items()) cfg.tolerances[k] = v.get<double>();
}

struct Flags {
    std::string space, dist, fixture, out, format, config;
    std::vector<double> params, Ls;
    std::map<std::string, double> tols;
    int grid = 0;
    CLI::Option *o_space = nullptr, *o_dist = nullptr, *o_fixture = nullptr, *o_out = nullptr,
                *o_format = nullptr, *o_params = nullptr, *o_L = nullptr, *o_grid = nullptr;
};

void add_common(CLI::App* cmd, Flags& f) {
    f.o_space = cmd->add_option("--space", f.space, "model space: affine | e11");
    f.o_dist = cmd->add_option("--dist", f.dist, "horizontal distribution: h1 | h2");
    f.o_params =
        cmd->add_option("--param", f.params, "deformation parameter values")->delimiter(',');
    f.o_L = cmd->add_option("--L", f.Ls, "metric parameter values")->delimiter(',');
    f.o_fixture = cmd->add_option("--fixture", f.fixture, "fixture name from the registry");
    f.o_out = cmd->add_option("--out", f.out, "output file stem (.json/.csv appended)");
    f.o_format = cmd->add_option("--format", f.format, "stdout format: json | csv");
    f.o_grid = cmd->add_option("--grid", f.grid, "surface: sample the chart on an N x N grid");
    cmd->add_option("--config", f.config, "JSON config file (flags override)");
    cmd->add_option("--tol", f.tols,
                    "tolerance overrides as key=value (gb_gate, quad_tol, class_tol, "
                    "second_kind_gate)");
}

int emit(const srgb::RunResult& res, const srgb::RunConfig& cfg) {
    if (cfg.output.empty()) {
        if (cfg.format == "csv" && !res.csv_text.empty())
            std::cout << res.csv_text;
        else if (cfg.command == srgb::Command::Tables)
            std::cout << res.text << res.json_text;
        else
            std::cout << res.json_text;
    } else {
        srgb::write_file(cfg.output + ".json", res.json_text);
        if (!res.csv_text.empty()) srgb::write_file(cfg.output + ".csv", res.csv_text);
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed Schouten-Van Kampen connections: curvature and Gauss-Bonnet checks"};
    app.require_subcommand(1);

    auto* tables = app.add_subcommand("tables", "connection tables and the printed-lemma diff");
    auto* curve = app.add_subcommand("curve", "curve curvature sweep (CSV)");
    auto* surface = app.add_subcommand("surface", "adapted frames, II, K^Sigma, expansion fits");
    auto* gb = app.add_subcommand("gauss-bonnet", "finite-L and limit Gauss-Bonnet checks");
    auto* sweep = app.add_subcommand("sweep", "finite-L Gauss-Bonnet residuals over the L grid");
    const std::vector<CLI::App*> cmds{tables, curve, surface, gb, sweep};
    std::vector<Flags> flags(cmds.size());
    for (std::size_t i = 0; i < cmds.size(); ++i) add_common(cmds[i], flags[i]);

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t active = 0;
        for (std::size_t i = 0; i < cmds.size(); ++i)
            if (cmds[i]->parsed()) active = i;
        const Flags& f = flags[active];
        srgb::RunConfig cfg;
        if (!f.config.empty()) load_config_file(f.config, cfg);
        if (f.o_space->count()) cfg.space = parse_space(f.space);
        if (f.o_dist->count()) cfg.dist = parse_dist(f.dist);
        if (f.o_params->count()) cfg.params = f.params;
        if (f.o_L->count()) cfg.Ls = f.Ls;
        if (f.o_fixture->count()) cfg.fixture = f.fixture;
        if (f.o_out->count()) cfg.output = f.out;
        if (f.o_format->count()) cfg.format = f.format;
        if (f.o_grid->count()) cfg.grid = f.grid;
        for (const auto& [k, v] : f.tols) cfg.tolerances[k] = v;
        if (tables->parsed()) cfg.command = srgb::Command::Tables;
        if (curve->parsed()) cfg.command = srgb::Command::Curve;
        if (surface->parsed()) cfg.command = srgb::Command::Surface;
        if (gb->parsed()) cfg.command = srgb::Command::GaussBonnet;
        if (sweep->parsed()) cfg.command = srgb::Command::Sweep;
        const srgb::RunResult res = srgb::run(cfg);
        return emit(res, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include <cmath>

#include "doctest.h"
#include "srgb/run.hpp"

using namespace srgb;

TEST_CASE("run(tables) reports exact agreement for the affine first kind") {
    RunConfig cfg;
    cfg.command = Command::Tables;
    cfg.space = ModelSpaceId::AffineGroup;
    cfg.dist = DistributionKind::H1;
    cfg.params = {0.0};
    cfg.Ls = {4.0};
    const RunResult res = run(cfg);
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.json_text);
    CHECK(j["tables"][0]["max_abs_delta"].get<double>() == 0.0);
    // the discrepancy log carries the known bracket mismatch
    CHECK(j["discrepancy_log"]["brackets"][0]["mismatch_count"].get<int>() == 1);
}

TEST_CASE("run(curve) on the model line is constant 1 - alpha") {
    RunConfig cfg;
    cfg.command = Command::Curve;
    cfg.space = ModelSpaceId::AffineGroup;
    cfg.dist = DistributionKind::H1;
    cfg.params = {0.25};
    cfg.Ls = {1e2, 1e4, 1e6};
    cfg.fixture = "affine-line";
    const RunResult res = run(cfg);
    const json j = json::parse(res.json_text);
    for (const auto& row : j["rows"]) {
        CHECK(row["k_L"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(row["class"].get<std::string>() == "non-horizontal");
    }
    CHECK(!res.csv_text.empty());
    CHECK(res.csv_text.substr(0, 4) == "t,L,");
}

TEST_CASE("run(gauss-bonnet) exits 0 on the classical scenario") {
    RunConfig cfg;
    cfg.command = Command::GaussBonnet;
    cfg.space = ModelSpaceId::AffineGroup;
    cfg.dist = DistributionKind::H1;
    cfg.params = {0.0};
    cfg.Ls = {1.0, 4.0};
    cfg.fixture = "affine-x3-disk";
    const RunResult res = run(cfg);
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.json_text);
    CHECK(j["all_gated_pass"].get<bool>());
}

TEST_CASE("config validation errors") {
    RunConfig cfg;
    cfg.command = Command::Curve;
    cfg.fixture = "affine-line";
    cfg.params = {};
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
    cfg.params = {0.0};
    cfg.Ls = {-1.0};
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
    cfg.Ls = {1.0};
    cfg.fixture = "no-such-fixture";
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("byte-identical outputs across repeated runs") {
    RunConfig cfg;
    cfg.command = Command::Surface;
    cfg.space = ModelSpaceId::AffineGroup;
    cfg.dist = DistributionKind::H1;
    cfg.params = {0.0, 0.5};
    cfg.Ls = {4.0};
    cfg.fixture = "affine-x2-surface";
    const RunResult a = run(cfg);
    const RunResult b = run(cfg);
    CHECK(a.json_text == b.json_text);

    RunConfig gb;
    gb.command = Command::Sweep;
    gb.space = ModelSpaceId::AffineGroup;
    gb.dist = DistributionKind::H1;
    gb.params = {0.5};
    gb.Ls = {1.0, 4.0};
    gb.fixture = "affine-x3-disk";
    const RunResult c = run(gb);
    const RunResult d = run(gb);
    CHECK(c.json_text == d.json_text);
    CHECK(c.csv_text == d.csv_text);
}

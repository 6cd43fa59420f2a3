#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srgb/gauss_bonnet.hpp"

namespace srgb {

struct CurveFixture {
    std::string name;
    ModelSpaceId space;
    CurveSpec curve;
    double sample_t = 0;  // representative parameter for point-wise reports
};

struct SurfaceFixture {
    std::string name;
    ModelSpaceId space;
    ImplicitSurface surface;
    SurfaceChart chart;
    std::vector<Point> sample_points;
};

namespace fixtures {

std::vector<std::string> curve_names();
std::vector<std::string> surface_names();
std::vector<std::string> scenario_names();

/// Named fixture, or an inline polynomial curve of the form
///   "poly:<space>:c10 c11 ...,c20 c21 ...,c30 c31 ..."
/// where the k-th list holds the coefficients of x_k(t) in increasing degree
/// (e.g. "poly:affine:1,0 1,0" is the model line (1, t, 0) on [0,1]).
CurveFixture curve(const std::string& name);
SurfaceFixture surface(const std::string& name);

/// Scenario with the distribution/parameter/L-grid filled in by the caller.
GBScenario scenario(const std::string& name, DistributionKind dist, double param,
                    std::vector<double> L_grid);

}  // namespace fixtures

}  // namespace srgb

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "srgb/curve.hpp"
#include "srgb/surface.hpp"

namespace srgb {

/// Parametrized patch of an implicit surface with analytic partials.
struct SurfaceChart {
    std::string name;
    double s0 = 0, s1 = 1, t0 = 0, t1 = 1;
    double orientation = 1.0;  // sign of the area form relative to (e1,e2)
    std::function<Point(double, double)> phi;
    std::function<CoordVec(double, double)> dphi_ds;
    std::function<CoordVec(double, double)> dphi_dt;
};

enum class MeasureKind { dsL, ds, dsBar, dSigmaL, dSigma, dSigmaBar };

class HorizontalPointError : public std::domain_error {
  public:
    HorizontalPointError() : std::domain_error("ds-bar density undefined at a horizontal point") {}
};

/// Length densities along a curve. dsBar throws at horizontal points.
double curve_measure_density(ModelSpaceId space, const CurveSpec& curve, double t,
                             MeasureKind kind, double L = 1.0);

/// Area densities on a chart. dSigma is signed by the chart orientation;
/// dSigmaBar is the 1/L coefficient of L^{-1/2} dSigma_L, fitted over the
/// pinned grid {1e2..1e6}.
double chart_measure_density(ModelSpaceId space, const ImplicitSurface& surf,
                             const SurfaceChart& chart, double s, double t, MeasureKind kind,
                             double L = 1.0);

/// Deterministic adaptive Simpson; throws on non-convergence at depth 20.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol);

/// Same, skipping symmetric windows (used for principal-value boundary terms);
/// windows are (center, half_width) pairs inside [a,b].
double integrate_excluding(const std::function<double(double)>& f, double a, double b, double tol,
                           const std::vector<std::pair<double, double>>& windows);

double line_integral(ModelSpaceId space, const CurveSpec& curve,
                     const std::function<double(double)>& integrand, MeasureKind kind, double L,
                     double tol);

struct SurfaceIntegral {
    double value = 0;
    double excluded_area = 0;  // parameter-space area of excluded cells
};

/// Tensor-product adaptive quadrature over the chart rectangle against the
/// requested measure. Cells touching points flagged by `exclude` are skipped
/// and their parameter area reported. Throws if the excluded fraction exceeds
/// `max_excluded_fraction`.
SurfaceIntegral surface_integral(ModelSpaceId space, const ImplicitSurface& surf,
                                 const SurfaceChart& chart,
                                 const std::function<double(double, double)>& integrand,
                                 MeasureKind kind, double L, double tol,
                                 const std::function<bool(const Point&)>& exclude = nullptr,
                                 double max_excluded_fraction = 0.05, int cells = 16);

enum class FitModel { A_plus_B_over_sqrtL, A_plus_B_over_L, A_L_plus_B };

struct ExtrapolationResult {
    double A = 0;
    double B = 0;
    double residual = 0;
};

/// Least-squares fit of two-parameter asymptotic models; >= 4 samples with
/// distinct L required.
ExtrapolationResult limit_extrapolate(const std::vector<std::pair<double, double>>& samples,
                                      FitModel model);

/// Sample-and-fit helper: B coefficient of L^{-1/2} ds_L = ds + dsBar/L + ...
double fitted_ds_bar_density(ModelSpaceId space, const CurveSpec& curve, double t,
                             const std::vector<double>& L_grid);

/// Check that the chart maps into the surface (|u| < 1e-9 on a sample grid)
/// and that the partials are independent away from the rectangle edges.
void validate_chart(ModelSpaceId space, const ImplicitSurface& surf, const SurfaceChart& chart);

}  // namespace srgb

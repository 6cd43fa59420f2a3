#pragma once

#include <vector>

#include "srgb/curve.hpp"
#include "srgb/surface.hpp"

namespace srgb {

struct Mat2 {
    double h11 = 0, h12 = 0, h21 = 0, h22 = 0;
    double det() const { return h11 * h22 - h12 * h21; }
    double trace() const { return h11 + h22; }
};

struct TangentOps {
    FrameVec j_of_v{};  // J_L(v)
    double lambda1 = 0, lambda2 = 0;  // components of v in (e1, e2)
};

/// J_L(e1) = e2, J_L(e2) = -e1; components of a tangent vector in (e1,e2).
/// Throws for inputs with a normal component.
TangentOps tangent_ops(const AdaptedFrame& frame, const FrameVec& v);

struct SurfaceCurvature {
    double k_L = 0;
    double k_L_signed = 0;
};

/// Geodesic and signed geodesic curvature of a curve lying in the surface.
SurfaceCurvature surface_curvatures(const ConnectionContext& ctx, const ImplicitSurface& surf,
                                    const CurveSpec& curve, double t);

struct SurfaceCurveLimit {
    HorizontalClass cls;
    double k_inf = 0;
    double k_inf_signed = 0;
    LimitScaling scaling = LimitScaling::Finite;
};

/// Sub-Riemannian limits of the (signed) geodesic curvature; the sign comes
/// from the finite-L signed quantity (the limit inherits it).
SurfaceCurveLimit surface_curvature_limits(const ConnectionContext& ctx,
                                           const ImplicitSurface& surf, const CurveSpec& curve,
                                           double t, double tol = 1e-8);

struct SecondFundamental {
    Mat2 II;
    double H = 0;  // trace
};

/// Definitional second fundamental form <nabla_{e_i} nu, e_j>_L via the
/// field jets of nu's components.
SecondFundamental second_fundamental(const ConnectionContext& ctx, const ImplicitSurface& surf,
                                     const Point& p);

struct SectionalCurvature {
    double K_amb = 0;    // -<R(e1,e2)e1, e2>_L
    double K_sigma = 0;  // K_amb + det(II)
};

SectionalCurvature gauss_sectional(const ConnectionContext& ctx, const ImplicitSurface& surf,
                                   const Point& p);

/// Limit of tr(II) as L -> infinity (three-point fit in L^{-1/2}, 1/L).
double mean_curvature_limit(const ConnectionContext& ctx, const ImplicitSurface& surf,
                            const Point& p);

/// Limit of K_sigma as L -> infinity (same fit).
double k_sigma_limit(const ConnectionContext& ctx, const ImplicitSurface& surf, const Point& p);

struct ExpansionFit {
    double c_lead = 0;   // coefficient of L
    double c_0 = 0;      // constant term
    double c_m12 = 0;    // coefficient of L^{-1/2}
    double c_m1 = 0;     // coefficient of L^{-1}
    double fit_residual = 0;
};

/// Least-squares fit of K_sigma(L) against c_lead L + c_0 + c_m12 L^{-1/2} +
/// c_m1 / L over the supplied grid (>= 4 distinct L required).
ExpansionFit expansion_fit(const ConnectionContext& ctx, const ImplicitSurface& surf,
                           const Point& p, const std::vector<double>& L_grid);

/// Generic small least squares (normal equations with column scaling); shared
/// by the expansion and measure fits. Returns max |residual|.
double solve_least_squares(const std::vector<std::vector<double>>& rows,
                           const std::vector<double>& y, std::vector<double>& coeffs);

}  // namespace srgb

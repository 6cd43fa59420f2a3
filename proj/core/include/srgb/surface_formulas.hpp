#pragma once

#include "srgb/surface_ops.hpp"

namespace srgb {

/// Closed forms exactly as printed in the source theorems and propositions.
/// They serve as regression fixtures for the definitional machinery; the
/// comparison reports record where they deviate (several entries have known
/// defects, see the tables subcommand output).
namespace printed {

/// Second fundamental form per the four printed theorems. For the E(1,1)
/// first-kind table, h22's deformation coefficient is read as (1-beta); the
/// literal text prints (1-alpha) with no alpha in scope.
Mat2 second_fundamental(const ConnectionContext& ctx, const SurfacePointState& st);

/// Constant-order coefficient of the K^Sigma expansion (B0 / B1 / D0 / D1).
/// For D0 the last term is read with the square on X3u/|grad_H u| only.
double k_sigma_constant_term(const ConnectionContext& ctx, const SurfacePointState& st,
                             bool d0_square_whole_term = false);

/// Leading (coefficient of L) integrand printed for the second-kind families:
/// alpha^2 pbar^2 / 2 resp. the beta polynomial / 4. First-kind families: 0.
double k_sigma_leading_term(const ConnectionContext& ctx, const SurfacePointState& st);

/// The alternative leading candidate printed inside the second-kind
/// Gauss-Bonnet identity (alpha pbar^2 / 2; for E(1,1) the identity reuses the
/// proposition's polynomial, so both candidates coincide there).
double k_sigma_leading_term_gb(const ConnectionContext& ctx, const SurfacePointState& st);

/// Horizontal mean curvature limit per the printed propositions.
double mean_curvature_limit(const ConnectionContext& ctx, const SurfacePointState& st);

/// Printed sub-Riemannian limit magnitude of the signed geodesic curvature of
/// a curve in a surface (case omega != 0).
double surface_curve_limit_magnitude(const ConnectionContext& ctx, const AdaptedFrame& f,
                                     const CurveJet& jet);

}  // namespace printed

}  // namespace srgb

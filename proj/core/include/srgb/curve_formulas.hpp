#pragma once

#include "srgb/curve.hpp"

namespace srgb {

namespace printed {

/// Covariant acceleration written directly in curve coordinates, per family.
/// For the E(1,1) second-kind family the X3 coefficient follows from the
/// constructed connection table (the printed lemma drops its beta dependence).
FrameVec covariant_accel_closed(const ConnectionContext& ctx, const CurveJet& jet);

/// k^L from the closed acceleration (the printed lemmas are this expression
/// combined with the curvature definition).
double curvature_finite_L_closed(const ConnectionContext& ctx, const CurveJet& jet);

/// Printed limit k^infinity for omega != 0 (note: the E(1,1) second-kind
/// formula is encoded exactly as printed, including its dropped sqrt(2)).
double curve_limit_nonhorizontal(const ConnectionContext& ctx, const CurveJet& jet);

/// Printed lim k^L / sqrt(L) for the horizontal-regular case.
double curve_limit_sqrtL(const ConnectionContext& ctx, const CurveJet& jet);

}  // namespace printed

}  // namespace srgb

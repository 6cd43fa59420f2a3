#pragma once

#include <functional>
#include <string>

#include "srgb/connection.hpp"

namespace srgb {

/// Position, coordinate velocity and coordinate acceleration at a parameter.
struct CurveJet {
    Point pos;
    CoordVec vel;
    CoordVec acc;
};

/// Analytic C^2 curve: the fixture supplies gamma, gamma', gamma''.
struct CurveSpec {
    std::string name;
    double t0 = 0, t1 = 1;
    std::function<CurveJet(double)> eval;

    CurveJet at(double t) const { return eval(t); }
};

/// Frame components of gamma' and their t-derivatives, computed exactly from
/// the frame Jacobians (a = M^{-1} v, adot = M^{-1}(acc - dM/dt a)).
struct FrameVelocity {
    FrameVec a;     // gamma' against X1,X2,X3; a[2] == omega(gamma')
    FrameVec adot;  // d/dt of the components; adot[2] == d/dt omega(gamma')
};

FrameVelocity frame_velocity(ModelSpaceId space, const CurveJet& jet);

/// (omega(gamma'), d/dt omega(gamma')).
std::pair<double, double> omega_along(ModelSpaceId space, const CurveSpec& curve, double t);

/// nabla_{gamma'} gamma' in frame components.
FrameVec covariant_accel(const ConnectionContext& ctx, const CurveSpec& curve, double t);

/// Curvature k^L of a regular curve (the sqrt of the norm/projection
/// combination; tiny negative radicands from rounding are clamped).
double curvature_finite_L(const ConnectionContext& ctx, const CurveSpec& curve, double t);

enum class Horizontality { NonHorizontal, HorizontalRegular, HorizontalDegenerate };

struct HorizontalClass {
    Horizontality kind = Horizontality::NonHorizontal;
    double omega = 0;         // omega(gamma')
    double discriminant = 0;  // limiting X3 coefficient of the covariant acceleration at omega=0
    double tolerance = 0;
};

/// Classification of gamma(t) for the family in ctx. The discriminant is the
/// L->infinity X3-coefficient of the covariant acceleration (equals
/// d/dt omega for the H1 families; carries the extra deformation term for the
/// second-kind families).
HorizontalClass classify(const ConnectionContext& ctx, const CurveSpec& curve, double t,
                         double tol = 1e-8);

enum class LimitScaling { Finite, SqrtL };

struct CurveLimit {
    HorizontalClass cls;
    double value = 0;
    LimitScaling scaling = LimitScaling::Finite;
};

/// Sub-Riemannian limit of k^L: the finite limit for non-horizontal and
/// degenerate points, lim k^L / sqrt(L) for horizontal regular points.
/// Computed from the L-affine structure of the acceleration components
/// (exact two-point slope extraction), not from the printed lemmas.
CurveLimit curvature_limit(const ConnectionContext& ctx, const CurveSpec& curve, double t,
                           double tol = 1e-8);

}  // namespace srgb

#include "srgb/curve.hpp"

#include <cmath>
#include <stdexcept>

namespace srgb {

FrameVelocity frame_velocity(ModelSpaceId space, const CurveJet& jet) {
    const Mat3 m = frame_at(space, jet.pos);
    FrameVelocity fv;
    fv.a = m.solve(jet.vel);
    // d/dt M = sum_k (dM/dx_k) vel_k;  adot = M^{-1} (acc - (dM/dt) a)
    CoordVec rhs = jet.acc;
    for (int k = 0; k < 3; ++k) {
        if (jet.vel[k] == 0.0) continue;
        const Mat3 dk = frame_jacobian(space, jet.pos, k);
        CoordVec da = dk.mul(fv.a);
        for (int r = 0; r < 3; ++r) rhs[r] -= jet.vel[k] * da[r];
    }
    fv.adot = m.solve(rhs);
    return fv;
}

std::pair<double, double> omega_along(ModelSpaceId space, const CurveSpec& curve, double t) {
    FrameVelocity fv = frame_velocity(space, curve.at(t));
    return {fv.a[2], fv.adot[2]};
}

FrameVec covariant_accel(const ConnectionContext& ctx, const CurveSpec& curve, double t) {
    FrameVelocity fv = frame_velocity(ctx.space, curve.at(t));
    return covariant_derivative(ctx.gamma, fv.a, fv.a, fv.adot);
}

namespace {

void require_regular(const CurveJet& jet, const char* who) {
    if (euclidean_norm(jet.vel) == 0.0)
        throw std::domain_error(std::string(who) + ": curve not regular (zero velocity)");
}

}  // namespace

double curvature_finite_L(const ConnectionContext& ctx, const CurveSpec& curve, double t) {
    const CurveJet jet = curve.at(t);
    require_regular(jet, "curvature_finite_L");
    const FrameVelocity fv = frame_velocity(ctx.space, jet);
    const FrameVec acc = covariant_derivative(ctx.gamma, fv.a, fv.a, fv.adot);
    const double n2 = metric_inner(ctx.L, fv.a, fv.a);
    const double t1 = metric_inner(ctx.L, acc, acc) / (n2 * n2);
    const double pr = metric_inner(ctx.L, acc, fv.a);
    const double rad = t1 - pr * pr / (n2 * n2 * n2);
    if (rad < 0) {
        if (rad < -1e-12 * (1.0 + t1))
            throw std::runtime_error("curvature_finite_L: radicand below Cauchy-Schwarz floor");
        return 0.0;
    }
    return std::sqrt(rad);
}

namespace {

// The acceleration's X3 component is affine in 1/L; eliminate the 1/L term
// with samples at L=1 and L=2.
double limiting_x3_coeff(const ConnectionContext& ctx, const CurveSpec& curve, double t) {
    const double c1 = covariant_accel(with_L(ctx, 1.0), curve, t)[2];
    const double c2 = covariant_accel(with_L(ctx, 2.0), curve, t)[2];
    return 2.0 * c2 - c1;
}

}  // namespace

HorizontalClass classify(const ConnectionContext& ctx, const CurveSpec& curve, double t, double tol) {
    const CurveJet jet = curve.at(t);
    require_regular(jet, "classify");
    const FrameVelocity fv = frame_velocity(ctx.space, jet);
    const double speed = std::sqrt(fv.a[0] * fv.a[0] + fv.a[1] * fv.a[1] + fv.a[2] * fv.a[2]);
    HorizontalClass hc;
    hc.omega = fv.a[2];
    hc.discriminant = limiting_x3_coeff(ctx, curve, t);
    hc.tolerance = tol;
    if (std::abs(hc.omega) >= tol * speed) {
        hc.kind = Horizontality::NonHorizontal;
    } else if (std::abs(hc.discriminant) >= tol * speed * speed) {
        hc.kind = Horizontality::HorizontalRegular;
    } else {
        hc.kind = Horizontality::HorizontalDegenerate;
    }
    return hc;
}

CurveLimit curvature_limit(const ConnectionContext& ctx, const CurveSpec& curve, double t,
                           double tol) {
    CurveLimit out;
    out.cls = classify(ctx, curve, t, tol);
    const FrameVelocity fv = frame_velocity(ctx.space, curve.at(t));
    switch (out.cls.kind) {
        case Horizontality::NonHorizontal: {
            // c1, c2 are affine in L; their slopes over omega give the limit.
            const FrameVec a1 = covariant_accel(with_L(ctx, 1.0), curve, t);
            const FrameVec a2 = covariant_accel(with_L(ctx, 2.0), curve, t);
            const double B1 = (a2[0] - a1[0]) / out.cls.omega;
            const double B2 = (a2[1] - a1[1]) / out.cls.omega;
            out.value = std::hypot(B1, B2) / std::abs(out.cls.omega);
            out.scaling = LimitScaling::Finite;
            break;
        }
        case Horizontality::HorizontalRegular: {
            const double h2 = fv.a[0] * fv.a[0] + fv.a[1] * fv.a[1];
            out.value = std::abs(out.cls.discriminant) / h2;
            out.scaling = LimitScaling::SqrtL;
            break;
        }
        case Horizontality::HorizontalDegenerate: {
            // k^L is L-free here; evaluate at L=1.
            out.value = curvature_finite_L(with_L(ctx, 1.0), curve, t);
            out.scaling = LimitScaling::Finite;
            break;
        }
    }
    return out;
}

}  // namespace srgb

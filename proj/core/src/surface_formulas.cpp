#include "srgb/surface_formulas.hpp"

#include <cmath>

namespace srgb::printed {

namespace {

bool is_affine(const ConnectionContext& ctx) { return ctx.space == ModelSpaceId::AffineGroup; }
bool is_h1(const ConnectionContext& ctx) { return ctx.dist == DistributionKind::H1; }

}  // namespace

Mat2 second_fundamental(const ConnectionContext& ctx, const SurfacePointState& st) {
    const FrameFieldDerivs d = frame_field_derivs(st);
    const AdaptedFrame& f = st.frame;
    const double L = f.L, sq = std::sqrt(L), a = ctx.param, b = ctx.param;
    const double lol = f.l / f.l_L, llo = f.l_L / f.l;
    const double pb = f.p_bar, qb = f.q_bar, pbL = f.pL_bar, qbL = f.qL_bar, rbL = f.rL_bar;
    Mat2 m;
    if (is_affine(ctx)) {
        if (is_h1(ctx)) {
            m.h11 = lol * d.div_h;
            m.h12 = -llo * d.e1_grad_rbL - (1 - a) * sq / 2;
            m.h21 = -llo * d.e1_grad_rbL - (1 + a * rbL * rbL) * sq / 2 + a * qbL * rbL;
            m.h22 = -lol * lol * d.e2_grad_rl + d.x3t_rbL - (1 - a) * pbL;
        } else {
            m.h11 = lol * d.div_h + a * rbL * pb * qb * sq / 2;
            m.h12 = -llo * d.e1_grad_rbL + (a * pbL * pbL - 1) * sq / 2 + a * rbL * rbL * pb * pb * sq / 2;
            m.h21 = -llo * d.e1_grad_rbL - (1 + a * rbL * qb * qb - a * pbL * pbL - a * qbL * qbL) * sq / 2 +
                    a * qbL * rbL;
            m.h22 = -lol * lol * d.e2_grad_rl + d.x3t_rbL - (1 - a) * pbL -
                    a * rbL * (pbL * qbL + rbL * rbL * pb * qb) * sq / 2;
        }
    } else {
        if (is_h1(ctx)) {
            m.h11 = lol * d.div_h - rbL * pb * qb * (1 - b) / sq;
            m.h12 = -llo * d.e1_grad_rbL - (1 - b) * sq / 2 + (1 - b) * (qbL * qbL - pbL * pbL) / (2 * sq) +
                    (1 - b) * rbL * rbL * (qb * qb - pb * pb) / (2 * sq);
            m.h21 = -llo * d.e1_grad_rbL - sq / 2 + (qbL * qbL - pbL * pbL) / (2 * sq) +
                    qb * qb * rbL * rbL * (1 - b * L - b) / (2 * sq) -
                    pb * pb * rbL * rbL * (1 + b * L - b) / (2 * sq);
            // (1-beta) reading of the printed (1-alpha) coefficient
            m.h22 = -lol * lol * d.e2_grad_rl + d.x3t_rbL + (1 - b) * pbL * qbL * rbL / sq +
                    (1 - b) * pb * qb * rbL * rbL * rbL / sq;
        } else {
            m.h11 = lol * d.div_h + (b * L + b - 2) * rbL * pb * qb / (2 * sq);
            m.h12 = -llo * d.e1_grad_rbL - (1 - b * pbL * pbL) * sq / 2 +
                    (qbL * qbL - pbL * pbL * (1 - b)) / (2 * sq) +
                    ((1 - b) * pb * pb - qb * qb) * rbL * rbL / (2 * sq);
            m.h21 = -llo * d.e1_grad_rbL + (b * lol * pbL - b * lol * qbL - 1) * sq / 2 -
                    (qbL * b * lol + pbL * b * lol) / (2 * sq) +
                    qb * qb * rbL * rbL * (-L - 1) / (2 * sq);
            m.h22 = -lol * lol * d.e2_grad_rl + d.x3t_rbL - b * pbL * qbL * rbL * sq +
                    (1 - b) * pbL * qbL * rbL / sq + (1 - b) * (-L - 1) * pbL * qbL * rbL / (2 * sq) -
                    (b * L + b - 2) * pb * qb * rbL * rbL / 2;
        }
    }
    return m;
}

double k_sigma_constant_term(const ConnectionContext& ctx, const SurfacePointState& st,
                             bool d0_square_whole_term) {
    const FrameFieldDerivs d = frame_field_derivs(st);
    const AdaptedFrame& f = st.frame;
    const double a = ctx.param, b = ctx.param;
    const double pb = f.p_bar, qb = f.q_bar;
    const double sl = st.s.v / st.l.v;  // X3u / |grad_H u|
    const double M = d.div_h, E = d.e1_grad_sl;
    if (is_affine(ctx)) {
        if (is_h1(ctx)) {
            return -(2 - a) / 2 * E - (1 - a) * qb * qb + (4 - 3 * a - a * a) * qb / 2 * sl -
                   (3 - a) / 4 * sl * sl - (1 - a) * pb * M;
        }
        return -(2 + a * qb * qb) / 2 * E - (1 - a) * qb * qb +
               (a * pb * pb * (1 + a) + 3 * a - 3) / 4 * sl * sl +
               (4 * qb * qb - 5 * a * qb + a * a * qb * pb * pb) / 2 * sl -
               ((1 - a) * pb + a * pb * qb / 2 * sl) * (M + a * pb * qb / 2 * sl);
    }
    if (is_h1(ctx)) {
        const double last = d0_square_whole_term
                                ? std::pow(((1 - b) * (1 - b) + 2) / 4 * sl, 2)
                                : ((1 - b) * (1 - b) + 2) / 4 * sl * sl;
        return -(2 - b) / 2 * E - 5 * (1 - b) * (qb * qb - pb * pb) / 4 + last;
    }
    return (b * pb * pb + b * pb + b * qb - 2) / 2 * E +
           (1 - b) * (1 - b) * (pb * pb - qb * qb) / 2 + (1 - b) * sl * sl +
           (-(b + 1) * pb * qb / 2 * sl - b * pb * qb / 2 * sl * sl) * (M + b * pb * qb / 2 * sl) -
           ((b * pb - b * qb - 1) * (qb * qb - pb * pb * (1 - b)) -
            b * (pb + qb) * (b * pb * pb - 1)) / 4;
}

double k_sigma_leading_term(const ConnectionContext& ctx, const SurfacePointState& st) {
    const double pb = st.frame.p_bar, qb = st.frame.q_bar;
    const double a = ctx.param, b = ctx.param;
    if (is_h1(ctx)) return 0.0;
    if (is_affine(ctx)) return a * a * pb * pb / 2;
    return b * (b - 2 - b * pb * pb * pb + b * pb * pb * qb + pb * pb + pb - qb) / 4;
}

double k_sigma_leading_term_gb(const ConnectionContext& ctx, const SurfacePointState& st) {
    const double pb = st.frame.p_bar;
    const double a = ctx.param;
    if (is_h1(ctx)) return 0.0;
    if (is_affine(ctx)) return a * pb * pb / 2;
    return k_sigma_leading_term(ctx, st);
}

double mean_curvature_limit(const ConnectionContext& ctx, const SurfacePointState& st) {
    const FrameFieldDerivs d = frame_field_derivs(st);
    const AdaptedFrame& f = st.frame;
    const double pb = f.p_bar, qb = f.q_bar;
    const double sl = st.s.v / st.l.v;
    if (is_affine(ctx)) return d.div_h - (1 - ctx.param) * pb;
    if (is_h1(ctx)) return d.div_h;
    return d.div_h - pb * qb / 2 * sl - ctx.param * pb * qb / 2 * sl * sl;
}

double surface_curve_limit_magnitude(const ConnectionContext& ctx, const AdaptedFrame& f,
                                     const CurveJet& jet) {
    const double a = ctx.param, b = ctx.param;
    const double pb = f.p_bar, qb = f.q_bar;
    const FrameVelocity fv = frame_velocity(ctx.space, jet);
    const double om = fv.a[2];
    if (is_affine(ctx)) {
        const double g1 = jet.pos.x1, d1 = jet.vel[0], d2 = jet.vel[1], d3 = jet.vel[2];
        if (is_h1(ctx))
            return std::abs(pb * (2 - a) * d1 / (2 * g1) + qb * ((1 - a) * d2 / g1 + a * d3 / 2)) /
                   std::abs(om);
        return std::abs(pb * (2 - a) * d1 / 2 + qb * (1 - a) * d2) / std::abs(g1 * om);
    }
    const double g3 = jet.pos.x3, d1 = jet.vel[0], d2 = jet.vel[1], d3 = jet.vel[2];
    const double W = -std::exp(-g3) * d1 + std::exp(g3) * d2;
    const double s2 = std::sqrt(2.0);
    if (is_h1(ctx))
        return std::abs(s2 * (2 - b) * qb / 4 * W + (2 - b) * pb * d3 / 2) / std::abs(om);
    return std::abs(s2 * (1 - b) * qb * W + (2 - b) * pb * d3) / std::abs(2 * om);
}

}  // namespace srgb::printed

#include "srgb/surface.hpp"

#include <cmath>

namespace srgb {

FrameVec frame_derivs(ModelSpaceId space, const ImplicitSurface& surf, const Point& p) {
    const Mat3 m = frame_at(space, p);
    const CoordVec g = surf.grad(p);
    FrameVec out;
    for (int i = 0; i < 3; ++i) out[i] = dot(m.col(i), g);
    return out;
}

namespace {

std::array<CoordVec, 3> hessian_rows(const ImplicitSurface& surf, const Point& p) {
    if (surf.hess) return surf.hess(p);
    // central differences of the gradient, relative step
    std::array<CoordVec, 3> rows;
    const double coords[3] = {p.x1, p.x2, p.x3};
    for (int k = 0; k < 3; ++k) {
        const double h = 1e-5 * std::max(1.0, std::abs(coords[k]));
        Point pp = p, pm = p;
        (k == 0 ? pp.x1 : k == 1 ? pp.x2 : pp.x3) += h;
        (k == 0 ? pm.x1 : k == 1 ? pm.x2 : pm.x3) -= h;
        const CoordVec gp = surf.grad(pp), gm = surf.grad(pm);
        rows[k] = {(gp[0] - gm[0]) / (2 * h), (gp[1] - gm[1]) / (2 * h), (gp[2] - gm[2]) / (2 * h)};
    }
    return rows;
}

}  // namespace

Mat3 frame_hessian(ModelSpaceId space, const ImplicitSurface& surf, const Point& p) {
    const Mat3 m = frame_at(space, p);
    const CoordVec g = surf.grad(p);
    const auto H = hessian_rows(surf, p);
    Mat3 out;
    // X_i X_j u = sum_m M(m,i) [ sum_r dM(r,j)/dx_m g_r + sum_r M(r,j) H_m[r] ]
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double acc = 0;
            for (int mm = 0; mm < 3; ++mm) {
                if (m(mm, i) == 0.0) continue;
                const Mat3 dm = frame_jacobian(space, p, mm);
                acc += m(mm, i) * (dot(dm.col(j), g) + dot(m.col(j), H[mm]));
            }
            out(i, j) = acc;
        }
    }
    return out;
}

double characteristic_threshold() { return 1e-6; }

CharacteristicReport characteristic_report(ModelSpaceId space, const ImplicitSurface& surf,
                                           const Point& p) {
    const FrameVec d = frame_derivs(space, surf, p);
    CharacteristicReport rep;
    rep.l_value = std::hypot(d[0], d[1]);
    rep.threshold = characteristic_threshold();
    const double scale = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    rep.is_characteristic = rep.l_value < rep.threshold * scale;
    return rep;
}

SurfacePointState surface_point_state(ModelSpaceId space, const ImplicitSurface& surf,
                                      const Point& pt, double L) {
    if (!(L > 0)) throw std::invalid_argument("surface_point_state: L must be positive");
    const CharacteristicReport rep = characteristic_report(space, surf, pt);
    if (rep.is_characteristic) throw CharacteristicPointError(rep);

    const FrameVec d = frame_derivs(space, surf, pt);
    const Mat3 FH = frame_hessian(space, surf, pt);

    SurfacePointState st;
    // jets seeded with rows of the frame Hessian: X_k(p) = X_k X_1 u = FH(k,0)
    st.p = Jet(d[0], {FH(0, 0), FH(1, 0), FH(2, 0)});
    st.q = Jet(d[1], {FH(0, 1), FH(1, 1), FH(2, 1)});
    st.s = Jet(d[2], {FH(0, 2), FH(1, 2), FH(2, 2)});

    const Jet L_(L);
    st.l = sqrt(st.p * st.p + st.q * st.q);
    st.l_L = sqrt(st.p * st.p + st.q * st.q + st.s * st.s / L_);
    st.p_bar = st.p / st.l;
    st.q_bar = st.q / st.l;
    st.pL_bar = st.p / st.l_L;
    st.qL_bar = st.q / st.l_L;
    const double sqrtL = std::sqrt(L);
    st.rL_bar = (st.s / Jet(sqrtL)) / st.l_L;

    st.nu = {st.p / st.l_L, st.q / st.l_L, st.s / (L_ * st.l_L)};
    st.e1j = {st.q_bar, -st.p_bar, Jet(0.0)};
    st.e2j = {st.rL_bar * st.p_bar, st.rL_bar * st.q_bar, -(st.l / st.l_L) / Jet(sqrtL)};

    AdaptedFrame& f = st.frame;
    f.L = L;
    f.p = st.p.v;
    f.q = st.q.v;
    f.r = st.s.v / sqrtL;
    f.l = st.l.v;
    f.l_L = st.l_L.v;
    f.p_bar = st.p_bar.v;
    f.q_bar = st.q_bar.v;
    f.pL_bar = st.pL_bar.v;
    f.qL_bar = st.qL_bar.v;
    f.rL_bar = st.rL_bar.v;
    f.nu_L = {st.nu[0].v, st.nu[1].v, st.nu[2].v};
    f.e1 = {st.e1j[0].v, st.e1j[1].v, st.e1j[2].v};
    f.e2 = {st.e2j[0].v, st.e2j[1].v, st.e2j[2].v};
    return st;
}

AdaptedFrame adapted_frame(ModelSpaceId space, const ImplicitSurface& surf, const Point& p,
                           double L) {
    return surface_point_state(space, surf, p, L).frame;
}

FrameFieldDerivs frame_field_derivs(const SurfacePointState& st) {
    FrameFieldDerivs out;
    const Jet sl = st.s / st.l;
    const Jet rl = (st.s / Jet(std::sqrt(st.frame.L))) / st.l;  // r / l
    const double pb = st.frame.p_bar, qb = st.frame.q_bar, rbL = st.frame.rL_bar;
    out.e1_grad_sl = qb * sl.g[0] - pb * sl.g[1];
    out.e1_grad_rbL = qb * st.rL_bar.g[0] - pb * st.rL_bar.g[1];
    out.e2_grad_rl = rbL * pb * rl.g[0] + rbL * qb * rl.g[1];
    out.x3t_rbL = st.rL_bar.g[2] / std::sqrt(st.frame.L);
    out.div_h = st.p_bar.g[0] + st.q_bar.g[1];
    return out;
}

}  // namespace srgb

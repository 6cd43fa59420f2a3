#include "srgb/surface_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace srgb {

TangentOps tangent_ops(const AdaptedFrame& frame, const FrameVec& v) {
    const double L = frame.L;
    const double vn = metric_norm(L, v);
    if (std::abs(metric_inner(L, v, frame.nu_L)) > 1e-9 * std::max(1.0, vn))
        throw std::invalid_argument("tangent_ops: input has a normal component");
    TangentOps out;
    out.lambda1 = metric_inner(L, v, frame.e1);
    out.lambda2 = metric_inner(L, v, frame.e2);
    // J(l1 e1 + l2 e2) = l1 e2 - l2 e1
    out.j_of_v = out.lambda1 * frame.e2 - out.lambda2 * frame.e1;
    return out;
}

namespace {

void require_on_surface(const ImplicitSurface& surf, const Point& p) {
    if (std::abs(surf.u(p)) > 1e-9)
        throw std::domain_error("surface_curvatures: curve point off the surface");
}

struct ProjectedAccel {
    double l1 = 0, l2 = 0;  // velocity components in (e1,e2)
    double m1 = 0, m2 = 0;  // acceleration components in (e1,e2)
};

ProjectedAccel project_curve(const ConnectionContext& ctx, const AdaptedFrame& f,
                             const CurveSpec& curve, double t) {
    const CurveJet jet = curve.at(t);
    const FrameVelocity fv = frame_velocity(ctx.space, jet);
    const FrameVec acc = covariant_derivative(ctx.gamma, fv.a, fv.a, fv.adot);
    ProjectedAccel pa;
    pa.l1 = metric_inner(ctx.L, fv.a, f.e1);
    pa.l2 = metric_inner(ctx.L, fv.a, f.e2);
    pa.m1 = metric_inner(ctx.L, acc, f.e1);
    pa.m2 = metric_inner(ctx.L, acc, f.e2);
    return pa;
}

}  // namespace

SurfaceCurvature surface_curvatures(const ConnectionContext& ctx, const ImplicitSurface& surf,
                                    const CurveSpec& curve, double t) {
    const CurveJet jet = curve.at(t);
    require_on_surface(surf, jet.pos);
    if (euclidean_norm(jet.vel) == 0.0)
        throw std::domain_error("surface_curvatures: curve not regular");
    const AdaptedFrame f = adapted_frame(ctx.space, surf, jet.pos, ctx.L);
    const ProjectedAccel pa = project_curve(ctx, f, curve, t);
    const double n2 = pa.l1 * pa.l1 + pa.l2 * pa.l2;
    const double t1 = (pa.m1 * pa.m1 + pa.m2 * pa.m2) / (n2 * n2);
    const double pr = pa.l1 * pa.m1 + pa.l2 * pa.m2;
    double rad = t1 - pr * pr / (n2 * n2 * n2);
    if (rad < 0) {
        if (rad < -1e-12 * (1.0 + t1))
            throw std::runtime_error("surface_curvatures: radicand below Cauchy-Schwarz floor");
        rad = 0.0;
    }
    SurfaceCurvature out;
    out.k_L = std::sqrt(rad);
    out.k_L_signed = (-pa.l2 * pa.m1 + pa.l1 * pa.m2) / std::pow(n2, 1.5);
    return out;
}

SurfaceCurveLimit surface_curvature_limits(const ConnectionContext& ctx,
                                           const ImplicitSurface& surf, const CurveSpec& curve,
                                           double t, double tol) {
    SurfaceCurveLimit out;
    out.cls = classify(ctx, curve, t, tol);
    const CurveJet jet = curve.at(t);
    require_on_surface(surf, jet.pos);
    const AdaptedFrame f = adapted_frame(ctx.space, surf, jet.pos, 1.0);
    const FrameVelocity fv = frame_velocity(ctx.space, jet);
    switch (out.cls.kind) {
        case Horizontality::NonHorizontal: {
            const FrameVec a1 = covariant_accel(with_L(ctx, 1.0), curve, t);
            const FrameVec a2 = covariant_accel(with_L(ctx, 2.0), curve, t);
            const double B1 = (a2[0] - a1[0]) / out.cls.omega;
            const double B2 = (a2[1] - a1[1]) / out.cls.omega;
            out.k_inf_signed = (f.q_bar * B1 - f.p_bar * B2) / std::abs(out.cls.omega);
            out.k_inf = std::abs(out.k_inf_signed);
            out.scaling = LimitScaling::Finite;
            break;
        }
        case Horizontality::HorizontalRegular: {
            const double l1 = f.q_bar * fv.a[0] - f.p_bar * fv.a[1];
            const double c3 = out.cls.discriminant;
            out.k_inf = std::abs(c3) / (l1 * l1);
            out.k_inf_signed = -c3 * l1 / std::pow(std::abs(l1), 3.0);
            out.scaling = LimitScaling::SqrtL;
            break;
        }
        case Horizontality::HorizontalDegenerate: {
            out.k_inf = 0;
            out.k_inf_signed = 0;
            out.scaling = LimitScaling::Finite;
            break;
        }
    }
    return out;
}

SecondFundamental second_fundamental(const ConnectionContext& ctx, const ImplicitSurface& surf,
                                     const Point& p) {
    const SurfacePointState st = surface_point_state(ctx.space, surf, p, ctx.L);
    const FrameVec nu = st.frame.nu_L;
    auto cov_nu = [&](const FrameVec& dir) {
        FrameVec dcomp;
        for (int j = 0; j < 3; ++j)
            dcomp[j] = dir[0] * st.nu[j].g[0] + dir[1] * st.nu[j].g[1] + dir[2] * st.nu[j].g[2];
        return covariant_derivative(ctx.gamma, nu, dir, dcomp);
    };
    const FrameVec d1 = cov_nu(st.frame.e1);
    const FrameVec d2 = cov_nu(st.frame.e2);
    SecondFundamental out;
    out.II.h11 = metric_inner(ctx.L, d1, st.frame.e1);
    out.II.h12 = metric_inner(ctx.L, d1, st.frame.e2);
    out.II.h21 = metric_inner(ctx.L, d2, st.frame.e1);
    out.II.h22 = metric_inner(ctx.L, d2, st.frame.e2);
    out.H = out.II.trace();
    return out;
}

SectionalCurvature gauss_sectional(const ConnectionContext& ctx, const ImplicitSurface& surf,
                                   const Point& p) {
    const SecondFundamental sf = second_fundamental(ctx, surf, p);
    const AdaptedFrame f = adapted_frame(ctx.space, surf, p, ctx.L);
    const RiemannTable R = riemann_tensor<double>(ctx.gamma, ctx.brackets);
    const FrameVec r = R.apply(f.e1, f.e2, f.e1);
    SectionalCurvature out;
    out.K_amb = -metric_inner(ctx.L, r, f.e2);
    out.K_sigma = out.K_amb + sf.II.det();
    return out;
}

double solve_least_squares(const std::vector<std::vector<double>>& rows,
                           const std::vector<double>& y, std::vector<double>& coeffs) {
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("least squares: empty system");
    const std::size_t m = rows[0].size();
    if (y.size() != n) throw std::invalid_argument("least squares: size mismatch");
    // column scaling for conditioning
    std::vector<double> scale(m, 0.0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < m; ++j) scale[j] = std::max(scale[j], std::abs(r[j]));
    for (std::size_t j = 0; j < m; ++j)
        if (scale[j] == 0.0) scale[j] = 1.0;
    // normal equations
    std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
    std::vector<double> b(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double rj = rows[i][j] / scale[j];
            b[j] += rj * y[i];
            for (std::size_t k = 0; k < m; ++k) A[j][k] += rj * rows[i][k] / scale[k];
        }
    }
    // Gaussian elimination with partial pivoting
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < m; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        if (std::abs(A[piv][c]) < 1e-13)
            throw std::invalid_argument("least squares: singular design matrix (grid too small)");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < m; ++r) {
            const double f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < m; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    coeffs.assign(m, 0.0);
    for (std::size_t c = m; c-- > 0;) {
        double acc = b[c];
        for (std::size_t k = c + 1; k < m; ++k) acc -= A[c][k] * coeffs[k];
        coeffs[c] = acc / A[c][c];
    }
    for (std::size_t j = 0; j < m; ++j) coeffs[j] /= scale[j];
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0;
        for (std::size_t j = 0; j < m; ++j) fit += rows[i][j] * coeffs[j];
        worst = std::max(worst, std::abs(fit - y[i]));
    }
    return worst;
}

ExpansionFit expansion_fit(const ConnectionContext& ctx, const ImplicitSurface& surf,
                           const Point& p, const std::vector<double>& L_grid) {
    if (L_grid.size() < 4)
        throw std::invalid_argument("expansion_fit: need at least 4 grid points");
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    for (double L : L_grid) {
        rows.push_back({L, 1.0, 1.0 / std::sqrt(L), 1.0 / L});
        y.push_back(gauss_sectional(with_L(ctx, L), surf, p).K_sigma);
    }
    std::vector<double> c;
    ExpansionFit out;
    out.fit_residual = solve_least_squares(rows, y, c);
    out.c_lead = c[0];
    out.c_0 = c[1];
    out.c_m12 = c[2];
    out.c_m1 = c[3];
    return out;
}

namespace {

double limit_of_three(const ConnectionContext& ctx, const ImplicitSurface& surf, const Point& p,
                      double (*value)(const ConnectionContext&, const ImplicitSurface&,
                                      const Point&)) {
    const double grid[3] = {1e4, 1e6, 1e8};
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    for (double L : grid) {
        rows.push_back({1.0, 1.0 / std::sqrt(L), 1.0 / L});
        y.push_back(value(with_L(ctx, L), surf, p));
    }
    std::vector<double> c;
    solve_least_squares(rows, y, c);
    return c[0];
}

}  // namespace

double mean_curvature_limit(const ConnectionContext& ctx, const ImplicitSurface& surf,
                            const Point& p) {
    return limit_of_three(ctx, surf, p,
                          +[](const ConnectionContext& c, const ImplicitSurface& s, const Point& pt) {
                              return second_fundamental(c, s, pt).H;
                          });
}

double k_sigma_limit(const ConnectionContext& ctx, const ImplicitSurface& surf, const Point& p) {
    return limit_of_three(ctx, surf, p,
                          +[](const ConnectionContext& c, const ImplicitSurface& s, const Point& pt) {
                              return gauss_sectional(c, s, pt).K_sigma;
                          });
}

}  // namespace srgb

#include "srgb/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "srgb/surface_ops.hpp"

namespace srgb {

double curve_measure_density(ModelSpaceId space, const CurveSpec& curve, double t,
                             MeasureKind kind, double L) {
    const FrameVelocity fv = frame_velocity(space, curve.at(t));
    const double om = fv.a[2];
    switch (kind) {
        case MeasureKind::dsL:
            return metric_norm(L, fv.a);
        case MeasureKind::ds:
            return std::abs(om);
        case MeasureKind::dsBar: {
            const double h2 = fv.a[0] * fv.a[0] + fv.a[1] * fv.a[1];
            const double speed = std::sqrt(h2 + om * om);
            if (std::abs(om) < 1e-12 * std::max(1.0, speed)) throw HorizontalPointError();
            return 0.5 * h2 / std::abs(om);
        }
        default:
            throw std::invalid_argument("curve_measure_density: not a curve measure");
    }
}

namespace {

double chart_dsigmaL(ModelSpaceId space, const SurfaceChart& chart, double s, double t, double L) {
    const Point p = chart.phi(s, t);
    const FrameVec u = coordinate_to_frame(space, p, chart.dphi_ds(s, t));
    const FrameVec v = coordinate_to_frame(space, p, chart.dphi_dt(s, t));
    const double E = metric_inner(L, u, u), F = metric_inner(L, u, v), G = metric_inner(L, v, v);
    return std::sqrt(std::max(E * G - F * F, 0.0));
}

double chart_dsigma(ModelSpaceId space, const ImplicitSurface& surf, const SurfaceChart& chart,
                    double s, double t) {
    const Point p = chart.phi(s, t);
    const FrameVec u = coordinate_to_frame(space, p, chart.dphi_ds(s, t));
    const FrameVec v = coordinate_to_frame(space, p, chart.dphi_dt(s, t));
    const FrameVec d = frame_derivs(space, surf, p);
    const double l = std::hypot(d[0], d[1]);
    const double pb = d[0] / l, qb = d[1] / l;
    // (pbar w2 - qbar w1) ^ w on (u, v); coframe values are just components
    const double Au = pb * u[1] - qb * u[0], Av = pb * v[1] - qb * v[0];
    return chart.orientation * (Au * v[2] - Av * u[2]);
}

}  // namespace

double chart_measure_density(ModelSpaceId space, const ImplicitSurface& surf,
                             const SurfaceChart& chart, double s, double t, MeasureKind kind,
                             double L) {
    switch (kind) {
        case MeasureKind::dSigmaL:
            return chart_dsigmaL(space, chart, s, t, L);
        case MeasureKind::dSigma:
            return chart_dsigma(space, surf, chart, s, t);
        case MeasureKind::dSigmaBar: {
            std::vector<std::pair<double, double>> samples;
            for (double Ls : {1e2, 1e3, 1e4, 1e5, 1e6})
                samples.push_back({Ls, chart_dsigmaL(space, chart, s, t, Ls) / std::sqrt(Ls)});
            // the signed orientation follows dSigma
            const double sign = chart_dsigma(space, surf, chart, s, t) < 0 ? -1.0 : 1.0;
            return sign * limit_extrapolate(samples, FitModel::A_plus_B_over_L).B;
        }
        default:
            throw std::invalid_argument("chart_measure_density: not a chart measure");
    }
}

namespace {

struct SimpsonState {
    const std::function<double(double)>* f = nullptr;
    double tol = 1e-10;
};

double simpson_rec(const SimpsonState& st, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm), frm = (*st.f)(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    // accept on the requested absolute tolerance, or once the correction is at
    // the rounding floor of the panel values (the absolute target is not
    // reachable below that), or when the interval has degenerated
    const double floor_scale = std::abs(left) + std::abs(right);
    if (std::abs(delta) <= 15 * tol || std::abs(delta) <= 1e-13 * floor_scale ||
        (b - a) < 1e-14 * std::abs(b) + 1e-300)
        return left + right + delta / 15;
    if (depth >= 20) throw std::runtime_error("integrate_adaptive: refinement cap reached");
    return simpson_rec(st, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           simpson_rec(st, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    SimpsonState st{&f, tol};
    // bootstrap with 8 panels so symmetric (e.g. periodic) integrands cannot
    // alias the first refinement into a spurious acceptance
    const int panels = 8;
    double acc = 0;
    for (int i = 0; i < panels; ++i) {
        const double pa = a + (b - a) * i / panels;
        const double pb = a + (b - a) * (i + 1) / panels;
        const double m = 0.5 * (pa + pb);
        const double fa = f(pa), fm = f(m), fb = f(pb);
        const double whole = (pb - pa) / 6 * (fa + 4 * fm + fb);
        acc += simpson_rec(st, pa, pb, fa, fm, fb, whole, tol / panels, 0);
    }
    return acc;
}

double integrate_excluding(const std::function<double(double)>& f, double a, double b, double tol,
                           const std::vector<std::pair<double, double>>& windows) {
    // windows sorted by center; integrate the gaps
    std::vector<std::pair<double, double>> w = windows;
    std::sort(w.begin(), w.end());
    double acc = 0, lo = a;
    for (const auto& [c, h] : w) {
        const double wl = std::max(a, c - h), wr = std::min(b, c + h);
        if (wr <= lo) continue;
        if (wl > lo) acc += integrate_adaptive(f, lo, wl, tol);
        lo = std::max(lo, wr);
    }
    if (lo < b) acc += integrate_adaptive(f, lo, b, tol);
    return acc;
}

double line_integral(ModelSpaceId space, const CurveSpec& curve,
                     const std::function<double(double)>& integrand, MeasureKind kind, double L,
                     double tol) {
    auto f = [&](double t) {
        return integrand(t) * curve_measure_density(space, curve, t, kind, L);
    };
    return integrate_adaptive(f, curve.t0, curve.t1, tol);
}

SurfaceIntegral surface_integral(ModelSpaceId space, const ImplicitSurface& surf,
                                 const SurfaceChart& chart,
                                 const std::function<double(double, double)>& integrand,
                                 MeasureKind kind, double L, double tol,
                                 const std::function<bool(const Point&)>& exclude,
                                 double max_excluded_fraction, int cells) {
    SurfaceIntegral out;
    const double ds_ = (chart.s1 - chart.s0) / cells;
    const double dt_ = (chart.t1 - chart.t0) / cells;
    const double cell_tol = tol / (cells * cells);
    const double total_area = (chart.s1 - chart.s0) * (chart.t1 - chart.t0);
    for (int i = 0; i < cells; ++i) {
        for (int j = 0; j < cells; ++j) {
            const double sa = chart.s0 + i * ds_, sb = sa + ds_;
            const double ta = chart.t0 + j * dt_, tb = ta + dt_;
            if (exclude) {
                bool flagged = false;
                const double sample_s[] = {sa, sb, sa, sb, 0.5 * (sa + sb)};
                const double sample_t[] = {ta, ta, tb, tb, 0.5 * (ta + tb)};
                for (int k = 0; k < 5 && !flagged; ++k)
                    flagged = exclude(chart.phi(sample_s[k], sample_t[k]));
                if (flagged) {
                    out.excluded_area += ds_ * dt_;
                    continue;
                }
            }
            auto inner = [&](double ss) {
                auto ft = [&](double tt) {
                    return integrand(ss, tt) *
                           chart_measure_density(space, surf, chart, ss, tt, kind, L);
                };
                return integrate_adaptive(ft, ta, tb, cell_tol);
            };
            out.value += integrate_adaptive(inner, sa, sb, cell_tol);
        }
    }
    if (out.excluded_area > max_excluded_fraction * total_area)
        throw std::runtime_error("surface_integral: excluded area above configured bound");
    return out;
}

ExtrapolationResult limit_extrapolate(const std::vector<std::pair<double, double>>& samples,
                                      FitModel model) {
    if (samples.size() < 4)
        throw std::invalid_argument("limit_extrapolate: need at least 4 samples");
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    for (const auto& [L, val] : samples) {
        switch (model) {
            case FitModel::A_plus_B_over_sqrtL: rows.push_back({1.0, 1.0 / std::sqrt(L)}); break;
            case FitModel::A_plus_B_over_L: rows.push_back({1.0, 1.0 / L}); break;
            case FitModel::A_L_plus_B: rows.push_back({L, 1.0}); break;
        }
        y.push_back(val);
    }
    std::vector<double> c;
    ExtrapolationResult out;
    out.residual = solve_least_squares(rows, y, c);
    out.A = c[0];
    out.B = c[1];
    return out;
}

double fitted_ds_bar_density(ModelSpaceId space, const CurveSpec& curve, double t,
                             const std::vector<double>& L_grid) {
    std::vector<std::pair<double, double>> samples;
    for (double L : L_grid)
        samples.push_back({L, curve_measure_density(space, curve, t, MeasureKind::dsL, L) /
                                  std::sqrt(L)});
    return limit_extrapolate(samples, FitModel::A_plus_B_over_L).B;
}

void validate_chart(ModelSpaceId, const ImplicitSurface& surf, const SurfaceChart& chart) {
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            const double s = chart.s0 + (chart.s1 - chart.s0) * i / 4.0;
            const double t = chart.t0 + (chart.t1 - chart.t0) * j / 4.0;
            const Point p = chart.phi(s, t);
            if (std::abs(surf.u(p)) > 1e-9)
                throw std::invalid_argument("validate_chart: chart leaves the surface");
        }
    }
}

}  // namespace srgb

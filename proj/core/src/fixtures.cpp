#include "srgb/fixtures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace srgb::fixtures {

namespace {

CurveJet jet(Point p, CoordVec v, CoordVec a) { return CurveJet{p, v, a}; }

CurveSpec affine_line() {
    CurveSpec c;
    c.name = "affine-line";
    c.t0 = 0;
    c.t1 = 1;
    c.eval = [](double t) { return jet({1, t, 0}, {0, 1, 0}, {0, 0, 0}); };
    return c;
}

CurveSpec affine_x1_flow() {
    CurveSpec c;
    c.name = "affine-x1-flow";
    c.t0 = 0;
    c.t1 = 1;
    c.eval = [](double t) {
        const double e = std::exp(t);
        return jet({e, 0, 0}, {e, 0, 0}, {e, 0, 0});
    };
    return c;
}

CurveSpec affine_helix() {
    // generic non-horizontal curve: omega = cos t/(2+cos t) - 1/2 != 0 near t=0
    CurveSpec c;
    c.name = "affine-helix";
    c.t0 = -0.5;
    c.t1 = 0.5;
    c.eval = [](double t) {
        return jet({2 + std::cos(t), std::sin(t), t / 2},
                   {-std::sin(t), std::cos(t), 0.5},
                   {-std::cos(t), -std::sin(t), 0.0});
    };
    return c;
}

CurveSpec affine_horizontal() {
    // omega = t - 1: horizontal regular at t = 1 with d/dt omega = 1; the
    // drifting x1 keeps the k^L/sqrt(L) error genuinely O(1/L)
    CurveSpec c;
    c.name = "affine-horizontal";
    c.t0 = 0.5;
    c.t1 = 1.5;
    c.eval = [](double t) {
        return jet({2 + t, t * t + t * t * t / 3, t}, {1, 2 * t + t * t, 1}, {0, 2 + 2 * t, 0});
    };
    return c;
}

CurveSpec e11_line() {
    CurveSpec c;
    c.name = "e11-line";
    c.t0 = -0.5;
    c.t1 = 0.5;
    const double s2 = std::sqrt(2.0);
    c.eval = [s2](double t) { return jet({-s2 * t, 0, 0}, {-s2, 0, 0}, {0, 0, 0}); };
    return c;
}

CurveSpec e11_slant() {
    // non-horizontal with nonconstant data
    CurveSpec c;
    c.name = "e11-slant";
    c.t0 = -0.4;
    c.t1 = 0.4;
    c.eval = [](double t) {
        return jet({t, -2 * t, 0.3 + t * t}, {1, -2, 2 * t}, {0, 0, 2});
    };
    return c;
}

ImplicitSurface plane_x3() {
    ImplicitSurface s;
    s.name = "u=x3";
    s.u = [](const Point& p) { return p.x3; };
    s.grad = [](const Point&) { return CoordVec{0, 0, 1}; };
    s.hess = [](const Point&) { return std::array<CoordVec, 3>{}; };
    return s;
}

ImplicitSurface plane_x2() {
    ImplicitSurface s;
    s.name = "u=x2";
    s.u = [](const Point& p) { return p.x2; };
    s.grad = [](const Point&) { return CoordVec{0, 1, 0}; };
    s.hess = [](const Point&) { return std::array<CoordVec, 3>{}; };
    return s;
}

ImplicitSurface plane_x1() {
    ImplicitSurface s;
    s.name = "u=x1-1";
    s.u = [](const Point& p) { return p.x1 - 1.0; };
    s.grad = [](const Point&) { return CoordVec{1, 0, 0}; };
    s.hess = [](const Point&) { return std::array<CoordVec, 3>{}; };
    return s;
}

ImplicitSurface plane_x1_plus_x2() {
    ImplicitSurface s;
    s.name = "u=x1+x2";
    s.u = [](const Point& p) { return p.x1 + p.x2; };
    s.grad = [](const Point&) { return CoordVec{1, 1, 0}; };
    s.hess = [](const Point&) { return std::array<CoordVec, 3>{}; };
    return s;
}

SurfaceChart affine_disk_chart() {
    // polar chart around (2,0) in the x3=0 plane; (s,t) is negatively oriented
    // against (e1,e2) there, hence orientation = -1
    SurfaceChart ch;
    ch.name = "affine-x3-disk";
    ch.s0 = 0;
    ch.s1 = 1;
    ch.t0 = 0;
    ch.t1 = 2 * std::acos(-1.0);
    ch.orientation = -1.0;
    ch.phi = [](double s, double t) { return Point{2 + s * std::cos(t), s * std::sin(t), 0}; };
    ch.dphi_ds = [](double, double t) { return CoordVec{std::cos(t), std::sin(t), 0}; };
    ch.dphi_dt = [](double s, double t) { return CoordVec{-s * std::sin(t), s * std::cos(t), 0}; };
    return ch;
}

SurfaceChart e11_disk_chart() {
    SurfaceChart ch;
    ch.name = "e11-x3-disk";
    ch.s0 = 0;
    ch.s1 = 1;
    ch.t0 = 0;
    ch.t1 = 2 * std::acos(-1.0);
    ch.orientation = 1.0;
    ch.phi = [](double s, double t) { return Point{s * std::cos(t), s * std::sin(t), 0}; };
    ch.dphi_ds = [](double, double t) { return CoordVec{std::cos(t), std::sin(t), 0}; };
    ch.dphi_dt = [](double s, double t) { return CoordVec{-s * std::sin(t), s * std::cos(t), 0}; };
    return ch;
}

SurfaceChart affine_x2_chart() {
    SurfaceChart ch;
    ch.name = "affine-x2-surface";
    ch.s0 = 1;
    ch.s1 = 2;
    ch.t0 = -0.5;
    ch.t1 = 0.5;
    ch.phi = [](double s, double t) { return Point{s, 0, t}; };
    ch.dphi_ds = [](double, double) { return CoordVec{1, 0, 0}; };
    ch.dphi_dt = [](double, double) { return CoordVec{0, 0, 1}; };
    return ch;
}

SurfaceChart affine_x1_chart() {
    SurfaceChart ch;
    ch.name = "affine-x1-wall";
    ch.s0 = -0.5;
    ch.s1 = 0.5;
    ch.t0 = -0.5;
    ch.t1 = 0.5;
    ch.phi = [](double s, double t) { return Point{1, s, t}; };
    ch.dphi_ds = [](double, double) { return CoordVec{0, 1, 0}; };
    ch.dphi_dt = [](double, double) { return CoordVec{0, 0, 1}; };
    return ch;
}

SurfaceChart e11_x1x2_chart() {
    // u = x1 + x2: chart (s, -s, t); characteristic along t = 0
    SurfaceChart ch;
    ch.name = "e11-x1x2-surface";
    ch.s0 = 0.5;
    ch.s1 = 1.5;
    ch.t0 = -1.0;
    ch.t1 = 1.0;
    ch.phi = [](double s, double t) { return Point{s, -s, t}; };
    ch.dphi_ds = [](double, double) { return CoordVec{1, -1, 0}; };
    ch.dphi_dt = [](double, double) { return CoordVec{0, 0, 1}; };
    return ch;
}

CurveSpec affine_disk_boundary() {
    // clockwise in (x1,x2): positively oriented for the adapted frame on u=x3
    CurveSpec c;
    c.name = "affine-x3-disk-boundary";
    c.t0 = 0;
    c.t1 = 2 * std::acos(-1.0);
    c.eval = [](double t) {
        return CurveJet{{2 + std::cos(t), -std::sin(t), 0},
                        {-std::sin(t), -std::cos(t), 0},
                        {-std::cos(t), std::sin(t), 0}};
    };
    return c;
}

CurveSpec e11_disk_boundary() {
    CurveSpec c;
    c.name = "e11-x3-disk-boundary";
    c.t0 = 0;
    c.t1 = 2 * std::acos(-1.0);
    c.eval = [](double t) {
        return CurveJet{{std::cos(t), std::sin(t), 0},
                        {-std::sin(t), std::cos(t), 0},
                        {-std::cos(t), -std::sin(t), 0}};
    };
    return c;
}

}  // namespace

std::vector<std::string> curve_names() {
    return {"affine-line", "affine-x1-flow", "affine-helix", "affine-horizontal", "e11-line",
            "e11-slant"};
}

std::vector<std::string> surface_names() {
    return {"affine-x3-disk", "affine-x2-surface", "affine-x1-wall", "e11-x3-disk",
            "e11-x1x2-surface"};
}

std::vector<std::string> scenario_names() { return {"affine-x3-disk", "e11-x3-disk"}; }

namespace {

CurveFixture parse_inline_curve(const std::string& text) {
    // poly:<space>:c10 c11 ...,c20 ...,c30 ...
    const std::size_t sep = text.find(':', 5);
    if (sep == std::string::npos)
        throw std::invalid_argument("inline curve: expected poly:<space>:<coeff lists>");
    const std::string space_name = text.substr(5, sep - 5);
    ModelSpaceId space;
    if (space_name == "affine")
        space = ModelSpaceId::AffineGroup;
    else if (space_name == "e11")
        space = ModelSpaceId::E11;
    else
        throw std::invalid_argument("inline curve: space must be affine or e11");
    std::array<std::vector<double>, 3> coeffs;
    std::size_t pos = sep + 1;
    for (int k = 0; k < 3; ++k) {
        const std::size_t end = k < 2 ? text.find(',', pos) : text.size();
        if (end == std::string::npos)
            throw std::invalid_argument("inline curve: expected three coefficient lists");
        std::istringstream is(text.substr(pos, end - pos));
        double v;
        while (is >> v) coeffs[k].push_back(v);
        if (coeffs[k].empty()) coeffs[k].push_back(0.0);
        pos = end + 1;
    }
    CurveSpec c;
    c.name = text;
    c.t0 = 0;
    c.t1 = 1;
    c.eval = [coeffs](double t) {
        double x[3] = {0, 0, 0}, dx[3] = {0, 0, 0}, ddx[3] = {0, 0, 0};
        for (int k = 0; k < 3; ++k) {
            for (std::size_t n = coeffs[k].size(); n-- > 0;) {
                const double cn = coeffs[k][n];
                x[k] += cn * std::pow(t, static_cast<double>(n));
                if (n >= 1) dx[k] += cn * n * std::pow(t, static_cast<double>(n - 1));
                if (n >= 2) ddx[k] += cn * n * (n - 1) * std::pow(t, static_cast<double>(n - 2));
            }
        }
        return CurveJet{{x[0], x[1], x[2]}, {dx[0], dx[1], dx[2]}, {ddx[0], ddx[1], ddx[2]}};
    };
    return {text, space, c, 0.5};
}

}  // namespace

CurveFixture curve(const std::string& name) {
    if (name.rfind("poly:", 0) == 0) return parse_inline_curve(name);
    if (name == "affine-line") return {name, ModelSpaceId::AffineGroup, affine_line(), 0.5};
    if (name == "affine-x1-flow") return {name, ModelSpaceId::AffineGroup, affine_x1_flow(), 0.5};
    if (name == "affine-helix") return {name, ModelSpaceId::AffineGroup, affine_helix(), 0.0};
    if (name == "affine-horizontal")
        return {name, ModelSpaceId::AffineGroup, affine_horizontal(), 1.0};
    if (name == "e11-line") return {name, ModelSpaceId::E11, e11_line(), 0.0};
    if (name == "e11-slant") return {name, ModelSpaceId::E11, e11_slant(), 0.1};
    throw std::invalid_argument("unknown curve fixture: " + name);
}

SurfaceFixture surface(const std::string& name) {
    if (name == "affine-x3-disk")
        return {name, ModelSpaceId::AffineGroup, plane_x3(), affine_disk_chart(),
                {{2, 0, 0}, {1.5, 0.3, 0}, {2.5, -0.2, 0}}};
    if (name == "affine-x2-surface")
        return {name, ModelSpaceId::AffineGroup, plane_x2(), affine_x2_chart(),
                {{2, 0, 0}, {1.2, 0, 0.3}, {1.7, 0, -0.4}}};
    if (name == "affine-x1-wall")
        return {name, ModelSpaceId::AffineGroup, plane_x1(), affine_x1_chart(),
                {{1, 0, 0}, {1, 0.2, -0.1}, {1, -0.3, 0.4}}};
    if (name == "e11-x3-disk")
        return {name, ModelSpaceId::E11, plane_x3(), e11_disk_chart(),
                {{0, 0, 0}, {0.4, 0.1, 0}, {-0.3, 0.5, 0}}};
    if (name == "e11-x1x2-surface")
        return {name, ModelSpaceId::E11, plane_x1_plus_x2(), e11_x1x2_chart(),
                // the last point sits on the characteristic circle x3 = 0
                {{1, -1, 0.5}, {0.8, -0.8, -0.6}, {1.2, -1.2, 0.9}, {1, -1, 0}}};
    throw std::invalid_argument("unknown surface fixture: " + name);
}

GBScenario scenario(const std::string& name, DistributionKind dist, double param,
                    std::vector<double> L_grid) {
    GBScenario sc;
    sc.name = name;
    sc.dist = dist;
    sc.param = param;
    if (!L_grid.empty()) sc.L_grid = std::move(L_grid);
    if (name == "affine-x3-disk") {
        sc.space = ModelSpaceId::AffineGroup;
        sc.surface = plane_x3();
        sc.chart = affine_disk_chart();
        sc.boundary = {affine_disk_boundary()};
        sc.euler_char = 1;
        return sc;
    }
    if (name == "e11-x3-disk") {
        sc.space = ModelSpaceId::E11;
        sc.surface = plane_x3();
        sc.chart = e11_disk_chart();
        sc.boundary = {e11_disk_boundary()};
        sc.euler_char = 1;
        return sc;
    }
    throw std::invalid_argument("unknown scenario fixture: " + name);
}

}  // namespace srgb::fixtures

#include <cmath>
#include <random>

#include "doctest.h"
#include "srgb/curve.hpp"
#include "srgb/curve_formulas.hpp"
#include "srgb/fixtures.hpp"

using namespace srgb;

namespace {

CurveSpec curve_of(const char* name) { return fixtures::curve(name).curve; }

// finite-difference oracle for the covariant acceleration: frame components
// of gamma' differentiated numerically, then the Gamma contraction
FrameVec covariant_accel_fd(const ConnectionContext& ctx, const CurveSpec& curve, double t) {
    const double h = 1e-6;
    const FrameVec ap = frame_velocity(ctx.space, curve.at(t + h)).a;
    const FrameVec am = frame_velocity(ctx.space, curve.at(t - h)).a;
    const FrameVec a = frame_velocity(ctx.space, curve.at(t)).a;
    const FrameVec adot{(ap[0] - am[0]) / (2 * h), (ap[1] - am[1]) / (2 * h),
                        (ap[2] - am[2]) / (2 * h)};
    return covariant_derivative(ctx.gamma, a, a, adot);
}

double slope_loglog(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        const double lx = std::log(x), ly = std::log(y);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::mt19937 rng(777);

CurveSpec random_affine_curve() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    CurveSpec sp;
    sp.name = "random-affine";
    sp.t0 = -0.5;
    sp.t1 = 0.5;
    sp.eval = [=](double t) {
        return CurveJet{{2 + a * std::sin(t), b * t + c * t * t, d * std::cos(t)},
                        {a * std::cos(t), b + 2 * c * t, -d * std::sin(t)},
                        {-a * std::sin(t), 2 * c, -d * std::cos(t)}};
    };
    return sp;
}

CurveSpec random_e11_curve() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a = u(rng), b = u(rng), c = u(rng);
    CurveSpec sp;
    sp.name = "random-e11";
    sp.t0 = -0.5;
    sp.t1 = 0.5;
    sp.eval = [=](double t) {
        return CurveJet{{a * t, b * std::sin(t), c * t * t},
                        {a, b * std::cos(t), 2 * c * t},
                        {0, -b * std::sin(t), 2 * c}};
    };
    return sp;
}

}  // namespace

TEST_CASE("omega along the named fixtures") {
    auto [om1, dom1] = omega_along(ModelSpaceId::AffineGroup, curve_of("affine-line"), 0.3);
    CHECK(om1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dom1 == doctest::Approx(0.0));

    auto [om2, dom2] = omega_along(ModelSpaceId::AffineGroup, curve_of("affine-x1-flow"), 0.4);
    CHECK(om2 == doctest::Approx(0.0));
    CHECK(dom2 == doctest::Approx(0.0));

    CurveSpec diag;  // gamma = (t, -t, 0): horizontal for all t in E(1,1)
    diag.t0 = -1;
    diag.t1 = 1;
    diag.eval = [](double t) { return CurveJet{{t, -t, 0}, {1, -1, 0}, {0, 0, 0}}; };
    auto [om3, dom3] = omega_along(ModelSpaceId::E11, diag, 0.2);
    CHECK(om3 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(dom3 == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("covariant acceleration on the named fixtures") {
    const ConnectionContext aff =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.0, 1.0);
    FrameVec acc = covariant_accel(aff, curve_of("affine-line"), 0.2);
    CHECK(acc[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(acc[1] == doctest::Approx(0.0));
    CHECK(acc[2] == doctest::Approx(0.0));

    for (double a : {0.0, 0.4, 1.0}) {
        const ConnectionContext c =
            make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, a, 2.0);
        acc = covariant_accel(c, curve_of("affine-x1-flow"), 0.3);
        for (int k = 0; k < 3; ++k) CHECK(acc[k] == doctest::Approx(0.0).epsilon(1e-13));
    }

    CurveSpec x1dir;  // gamma = (0,0,t): velocity X1 in E(1,1)
    x1dir.t0 = -1;
    x1dir.t1 = 1;
    x1dir.eval = [](double t) { return CurveJet{{0, 0, t}, {0, 0, 1}, {0, 0, 0}}; };
    const ConnectionContext e11 = make_context(ModelSpaceId::E11, DistributionKind::H1, 0.0, 3.0);
    acc = covariant_accel(e11, x1dir, 0.1);
    for (int k = 0; k < 3; ++k) CHECK(acc[k] == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("closed-form acceleration matches the generic evaluator (50 samples per family)") {
    std::uniform_real_distribution<double> upar(0.0, 1.0), uL(0.5, 50.0), ut(-0.45, 0.45);
    for (ModelSpaceId space : {ModelSpaceId::AffineGroup, ModelSpaceId::E11}) {
        for (DistributionKind dist : {DistributionKind::H1, DistributionKind::H2}) {
            for (int n = 0; n < 50; ++n) {
                const CurveSpec sp = space == ModelSpaceId::AffineGroup ? random_affine_curve()
                                                                        : random_e11_curve();
                const double t = ut(rng);
                const ConnectionContext ctx = make_context(space, dist, upar(rng), uL(rng));
                const FrameVec generic = covariant_accel(ctx, sp, t);
                const FrameVec closed = printed::covariant_accel_closed(ctx, sp.at(t));
                for (int k = 0; k < 3; ++k)
                    CHECK(generic[k] == doctest::Approx(closed[k]).epsilon(1e-10));
                // and k^L itself agrees with the closed-form route
                CHECK(curvature_finite_L(ctx, sp, t) ==
                      doctest::Approx(printed::curvature_finite_L_closed(ctx, sp.at(t)))
                          .epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("finite-difference oracle confirms the covariant acceleration") {
    const CurveSpec par = [] {
        CurveSpec c;
        c.t0 = -0.5;
        c.t1 = 0.5;
        c.eval = [](double t) { return CurveJet{{1, t, t * t}, {0, 1, 2 * t}, {0, 0, 2}}; };
        return c;
    }();
    const ConnectionContext ctx =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.0, 100.0);
    const FrameVec a = covariant_accel(ctx, par, 0.0);
    const FrameVec fd = covariant_accel_fd(ctx, par, 0.0);
    for (int k = 0; k < 3; ++k) CHECK(a[k] == doctest::Approx(fd[k]).epsilon(1e-6));
    // and k^L agrees with the closed-form route
    CHECK(curvature_finite_L(ctx, par, 0.0) ==
          doctest::Approx(printed::curvature_finite_L_closed(ctx, par.at(0.0))).epsilon(1e-10));
}

TEST_CASE("curvature of the line fixture is 1 - alpha for every L") {
    for (double a : {0.0, 0.25, 0.5, 1.0}) {
        for (double L : {1e0, 1e2, 1e4, 1e8}) {
            const ConnectionContext ctx =
                make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, a, L);
            CHECK(curvature_finite_L(ctx, curve_of("affine-line"), 0.5) ==
                  doctest::Approx(1.0 - a).epsilon(1e-10));
        }
    }
    const ConnectionContext g =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.3, 7.0);
    CHECK(curvature_finite_L(g, curve_of("affine-x1-flow"), 0.2) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classification of the fixtures") {
    const ConnectionContext aff =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.0, 1.0);
    CHECK(classify(aff, curve_of("affine-line"), 0.5).kind == Horizontality::NonHorizontal);
    CHECK(classify(aff, curve_of("affine-x1-flow"), 0.5).kind ==
          Horizontality::HorizontalDegenerate);
    CHECK(classify(aff, curve_of("affine-horizontal"), 1.0).kind ==
          Horizontality::HorizontalRegular);
    // second-kind discriminant: omega = 0 but d/dt omega + a g1' g3'/(2 g1) != 0
    CurveSpec tw;
    tw.t0 = 0.5;
    tw.t1 = 2.0;
    // gamma = (t, t^2? ...) pick omega == 0 path: gamma2' = gamma1 * gamma3'
    // with gamma = (t, t^2/2, t): omega = t/t - 1 = 0, d/dt omega = 0
    tw.eval = [](double t) { return CurveJet{{t, t * t / 2, t}, {1, t, 1}, {0, 1, 0}}; };
    const ConnectionContext h2a =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H2, 0.8, 1.0);
    const HorizontalClass hc = classify(h2a, tw, 1.0);
    CHECK(hc.kind == Horizontality::HorizontalRegular);  // alpha term kicks in
    CHECK(hc.discriminant == doctest::Approx(0.8 * 1.0 * 1.0 / (2 * 1.0)).epsilon(1e-10));
    const ConnectionContext h1a =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.8, 1.0);
    CHECK(classify(h1a, tw, 1.0).kind == Horizontality::HorizontalDegenerate);
}

TEST_CASE("curvature limits on the named fixtures") {
    const ConnectionContext aff =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.0, 1.0);
    CurveLimit lim = curvature_limit(aff, curve_of("affine-line"), 0.5);
    CHECK(lim.cls.kind == Horizontality::NonHorizontal);
    CHECK(lim.scaling == LimitScaling::Finite);
    CHECK(lim.value == doctest::Approx(1.0).epsilon(1e-12));

    lim = curvature_limit(aff, curve_of("affine-x1-flow"), 0.2);
    CHECK(lim.cls.kind == Horizontality::HorizontalDegenerate);
    CHECK(lim.value == doctest::Approx(0.0).epsilon(1e-12));

    for (double b : {0.0, 0.4, 1.0}) {
        const ConnectionContext e11 =
            make_context(ModelSpaceId::E11, DistributionKind::H1, b, 1.0);
        lim = curvature_limit(e11, curve_of("e11-line"), 0.0);
        CHECK(lim.cls.kind == Horizontality::NonHorizontal);
        CHECK(lim.value == doctest::Approx((2.0 - b) / 2.0).epsilon(1e-11));
    }
}

TEST_CASE("non-horizontal convergence: |k^L - k^inf| decays with slope <= -0.4") {
    for (const char* name : {"affine-helix", "e11-slant"}) {
        const CurveFixture fx = fixtures::curve(name);
        for (DistributionKind dist : {DistributionKind::H1, DistributionKind::H2}) {
            const ConnectionContext base = make_context(fx.space, dist, 0.3, 1.0);
            const CurveLimit lim = curvature_limit(base, fx.curve, fx.sample_t);
            REQUIRE(lim.cls.kind == Horizontality::NonHorizontal);
            std::vector<std::pair<double, double>> pts;
            double prev = 1e300;
            for (double L : {1e2, 1e4, 1e6, 1e8}) {
                const double err = std::abs(
                    curvature_finite_L(with_L(base, L), fx.curve, fx.sample_t) - lim.value);
                CHECK(err < prev);
                prev = err;
                pts.push_back({L, std::max(err, 1e-300)});
            }
            CHECK(slope_loglog(pts) <= -0.4);
        }
    }
}

TEST_CASE("horizontal-regular scaling: k^L/sqrt(L) converges to the limit coefficient") {
    const CurveFixture fx = fixtures::curve("affine-horizontal");
    const ConnectionContext base =
        make_context(fx.space, DistributionKind::H1, 0.0, 1.0);
    const CurveLimit lim = curvature_limit(base, fx.curve, 1.0);
    REQUIRE(lim.scaling == LimitScaling::SqrtL);
    // |domega/dt| / (a1^2 + a2^2) = 1 / ((1/3)^2 + 1) = 9/10
    CHECK(lim.value == doctest::Approx(0.9).epsilon(1e-12));
    std::vector<std::pair<double, double>> pts;
    for (double L : {1e2, 1e4, 1e6, 1e8}) {
        const double err =
            std::abs(curvature_finite_L(with_L(base, L), fx.curve, 1.0) / std::sqrt(L) -
                     lim.value);
        pts.push_back({L, std::max(err, 1e-300)});
    }
    CHECK(slope_loglog(pts) <= -0.4);
    // printed coefficient formula agrees
    CHECK(printed::curve_limit_sqrtL(base, fx.curve.at(1.0)) ==
          doctest::Approx(lim.value).epsilon(1e-12));
}

TEST_CASE("printed non-horizontal limits agree where the source is consistent") {
    std::uniform_real_distribution<double> upar(0.0, 1.0);
    for (int n = 0; n < 20; ++n) {
        const double t = 0.2;
        {
            const CurveSpec sp = random_affine_curve();
            for (DistributionKind dist : {DistributionKind::H1, DistributionKind::H2}) {
                const ConnectionContext ctx =
                    make_context(ModelSpaceId::AffineGroup, dist, upar(rng), 1.0);
                const CurveLimit lim = curvature_limit(ctx, sp, t);
                if (lim.cls.kind != Horizontality::NonHorizontal) continue;
                CHECK(lim.value ==
                      doctest::Approx(printed::curve_limit_nonhorizontal(ctx, sp.at(t)))
                          .epsilon(1e-9));
            }
        }
        {
            const CurveSpec sp = random_e11_curve();
            const ConnectionContext ctx =
                make_context(ModelSpaceId::E11, DistributionKind::H1, upar(rng), 1.0);
            const CurveLimit lim = curvature_limit(ctx, sp, t);
            if (lim.cls.kind != Horizontality::NonHorizontal) continue;
            CHECK(lim.value ==
                  doctest::Approx(printed::curve_limit_nonhorizontal(ctx, sp.at(t)))
                      .epsilon(1e-9));
        }
    }
}

TEST_CASE("the printed second-kind E(1,1) limit misses a factor sqrt(2) on its first term") {
    // constructed limit: sqrt(2 (1-b)^2 W^2/4 + (2-b)^2 g3'^2/4)/|omega|;
    // printed: sqrt((1-b)^2 W^2 + (2-b)^2 g3'^2)/|2 omega|
    const double b = 0.3;
    const ConnectionContext ctx = make_context(ModelSpaceId::E11, DistributionKind::H2, b, 1.0);
    const CurveSpec sp = curve_of("e11-slant");
    const double t = 0.1;
    const CurveLimit lim = curvature_limit(ctx, sp, t);
    REQUIRE(lim.cls.kind == Horizontality::NonHorizontal);
    const CurveJet jet = sp.at(t);
    const double printed_val = printed::curve_limit_nonhorizontal(ctx, jet);
    CHECK(lim.value != doctest::Approx(printed_val).epsilon(1e-6));
    // corrected reading (sqrt(2) restored) matches the constructed limit
    const double g3 = jet.pos.x3;
    const double W = -std::exp(-g3) * jet.vel[0] + std::exp(g3) * jet.vel[1];
    const FrameVelocity fv = frame_velocity(ModelSpaceId::E11, jet);
    const double corrected =
        std::sqrt(2 * (1 - b) * (1 - b) * W * W + (2 - b) * (2 - b) * jet.vel[2] * jet.vel[2]) /
        std::abs(2 * fv.a[2]);
    CHECK(lim.value == doctest::Approx(corrected).epsilon(1e-10));
}

TEST_CASE("reparametrization invariance of k^L") {
    const CurveSpec base = curve_of("affine-helix");
    CurveSpec doubled;
    doubled.t0 = base.t0 / 2;
    doubled.t1 = base.t1 / 2;
    doubled.eval = [base](double t) {
        const CurveJet j = base.at(2 * t);
        return CurveJet{j.pos, {2 * j.vel[0], 2 * j.vel[1], 2 * j.vel[2]},
                        {4 * j.acc[0], 4 * j.acc[1], 4 * j.acc[2]}};
    };
    CurveSpec cubic;  // phi(t) = t^3 + t
    cubic.t0 = -0.1;
    cubic.t1 = 0.1;
    cubic.eval = [base](double t) {
        const double u = t * t * t + t, du = 3 * t * t + 1, ddu = 6 * t;
        const CurveJet j = base.at(u);
        CurveJet out;
        out.pos = j.pos;
        for (int k = 0; k < 3; ++k) {
            out.vel[k] = j.vel[k] * du;
            out.acc[k] = j.acc[k] * du * du + j.vel[k] * ddu;
        }
        return out;
    };
    for (double a : {0.0, 0.6}) {
        const ConnectionContext ctx =
            make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, a, 9.0);
        const double k_base = curvature_finite_L(ctx, base, 0.2);
        CHECK(curvature_finite_L(ctx, doubled, 0.1) == doctest::Approx(k_base).epsilon(1e-9));
        // phi(0) = 0: matching points for the cubic reparametrization
        CHECK(curvature_finite_L(ctx, cubic, 0.0) ==
              doctest::Approx(curvature_finite_L(ctx, base, 0.0)).epsilon(1e-9));
    }
}

TEST_CASE("inline polynomial curve fixtures") {
    const CurveFixture fx = fixtures::curve("poly:affine:1,0 1,0");
    const ConnectionContext ctx =
        make_context(fx.space, DistributionKind::H1, 0.25, 100.0);
    CHECK(curvature_finite_L(ctx, fx.curve, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(fixtures::curve("poly:bad:1,1,1"), std::invalid_argument);
}

TEST_CASE("e11 horizontal-regular limit matches the printed coefficient") {
    // gamma = (t^2/2, -t, 0): omega = -(sqrt2/2)(t - 1) vanishes at t = 1
    CurveSpec sp;
    sp.t0 = 0.5;
    sp.t1 = 1.5;
    sp.eval = [](double t) { return CurveJet{{t * t / 2, -t, 0}, {t, -1, 0}, {1, 0, 0}}; };
    const ConnectionContext ctx = make_context(ModelSpaceId::E11, DistributionKind::H1, 0.4, 1.0);
    const CurveLimit lim = curvature_limit(ctx, sp, 1.0);
    REQUIRE(lim.cls.kind == Horizontality::HorizontalRegular);
    REQUIRE(lim.scaling == LimitScaling::SqrtL);
    CHECK(lim.value == doctest::Approx(std::sqrt(2.0) / 4).epsilon(1e-12));
    CHECK(printed::curve_limit_sqrtL(ctx, sp.at(1.0)) ==
          doctest::Approx(lim.value).epsilon(1e-12));
    // and k^L / sqrt(L) approaches it
    CHECK(curvature_finite_L(with_L(ctx, 1e8), sp, 1.0) / 1e4 ==
          doctest::Approx(lim.value).epsilon(1e-6));
}

TEST_CASE("e11 second-kind discriminant carries the deformation term") {
    // gamma = (t, -t + t^3, t): omega(0) = 0, d/dt omega(0) = sqrt(2),
    // a1 = 1, a2 = -sqrt(2). The constructed connection's limiting X3
    // coefficient is d/dt omega + (b/2) a1 a2 = sqrt(2) (1 - b/2); the plain
    // d/dt omega reading would give sqrt(2) regardless of b.
    CurveSpec sp;
    sp.t0 = -0.5;
    sp.t1 = 0.5;
    sp.eval = [](double t) {
        return CurveJet{{t, -t + t * t * t, t}, {1, -1 + 3 * t * t, 1}, {0, 6 * t, 0}};
    };
    const double s2 = std::sqrt(2.0);
    for (double b : {0.0, 1.0}) {
        const ConnectionContext ctx = make_context(ModelSpaceId::E11, DistributionKind::H2, b, 1.0);
        const HorizontalClass hc = classify(ctx, sp, 0.0);
        REQUIRE(hc.kind == Horizontality::HorizontalRegular);
        CHECK(hc.discriminant == doctest::Approx(s2 * (1 - b / 2)).epsilon(1e-12));
        // definitional confirmation at finite L: k^L / sqrt(L) approaches
        // |discriminant| / (a1^2 + a2^2) = sqrt(2)(1 - b/2)/3
        const double scaled = curvature_finite_L(with_L(ctx, 1e8), sp, 0.0) / 1e4;
        CHECK(scaled == doctest::Approx(s2 * (1 - b / 2) / 3.0).epsilon(1e-4));
    }
    // at b = 1 the plain reading is off by a factor 2
    const ConnectionContext c1 = make_context(ModelSpaceId::E11, DistributionKind::H2, 1.0, 1.0);
    CHECK(curvature_limit(c1, sp, 0.0).value !=
          doctest::Approx(printed::curve_limit_sqrtL(c1, sp.at(0.0))).epsilon(1e-3));
}

TEST_CASE("regularity violations throw") {
    CurveSpec stopped;
    stopped.t0 = -1;
    stopped.t1 = 1;
    stopped.eval = [](double t) { return CurveJet{{1, t * t, 0}, {0, 2 * t, 0}, {0, 2, 0}}; };
    const ConnectionContext ctx =
        make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.0, 1.0);
    CHECK_THROWS_AS(curvature_finite_L(ctx, stopped, 0.0), std::domain_error);
    CHECK_NOTHROW(curvature_finite_L(ctx, stopped, 0.5));
}

#include <benchmark/benchmark.h>

#include "srgb/fixtures.hpp"
#include "srgb/gauss_bonnet.hpp"
#include "srgb/quadrature.hpp"
#include "srgb/surface_ops.hpp"

using namespace srgb;

static void BM_MakeContext(benchmark::State& state) {
    for (auto _ : state) {
        ConnectionContext ctx =
            make_context(ModelSpaceId::AffineGroup, DistributionKind::H1, 0.3, 4.0);
        benchmark::DoNotOptimize(ctx);
    }
}
BENCHMARK(BM_MakeContext);

static void BM_CurvatureFiniteL(benchmark::State& state) {
    const CurveFixture fx = fixtures::curve("affine-helix");
    const ConnectionContext ctx = make_context(fx.space, DistributionKind::H1, 0.3, 100.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(curvature_finite_L(ctx, fx.curve, 0.1));
    }
}
BENCHMARK(BM_CurvatureFiniteL);

static void BM_SecondFundamental(benchmark::State& state) {
    const SurfaceFixture fx = fixtures::surface("affine-x2-surface");
    const ConnectionContext ctx = make_context(fx.space, DistributionKind::H1, 0.3, 100.0);
    const Point p{2, 0, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(second_fundamental(ctx, fx.surface, p));
    }
}
BENCHMARK(BM_SecondFundamental);

static void BM_KSigma(benchmark::State& state) {
    const SurfaceFixture fx = fixtures::surface("e11-x1x2-surface");
    const ConnectionContext ctx = make_context(fx.space, DistributionKind::H1, 0.3, 100.0);
    const Point p = fx.chart.phi(1.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sectional(ctx, fx.surface, p).K_sigma);
    }
}
BENCHMARK(BM_KSigma);

static void BM_DiskArea(benchmark::State& state) {
    const SurfaceFixture fx = fixtures::surface("affine-x3-disk");
    auto one = [](double, double) { return 1.0; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(surface_integral(fx.space, fx.surface, fx.chart, one,
                                                  MeasureKind::dSigma, 1.0, 1e-8)
                                     .value);
    }
}
BENCHMARK(BM_DiskArea);

static void BM_FiniteLGaussBonnet(benchmark::State& state) {
    GBScenario sc = fixtures::scenario("affine-x3-disk", DistributionKind::H1, 0.0, {4.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(finite_L_check(sc, 4.0).residual);
    }
}
BENCHMARK(BM_FiniteLGaussBonnet);

BENCHMARK_MAIN();

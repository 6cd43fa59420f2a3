#include <cmath>
#include <random>

#include "doctest.h"
#include "srgb/model_space.hpp"
#include "srgb/printed_tables.hpp"

using namespace srgb;

namespace {
const double kS2 = std::sqrt(0.5);
}

TEST_CASE("frame columns match the defining vector fields") {
    Mat3 m = frame_at(ModelSpaceId::AffineGroup, {2, 5, 1});
    CHECK(m.col(0) == CoordVec{2, 0, 0});
    CHECK(m.col(1) == CoordVec{0, 2, 1});
    CHECK(m.col(2) == CoordVec{0, 2, 0});

    m = frame_at(ModelSpaceId::E11, {0, 0, 0});
    CHECK(m.col(0) == CoordVec{0, 0, 1});
    CHECK(m.col(1)[0] == doctest::Approx(-kS2).epsilon(1e-15));
    CHECK(m.col(1)[1] == doctest::Approx(kS2).epsilon(1e-15));
    CHECK(m.col(2)[0] == doctest::Approx(-kS2).epsilon(1e-15));
    CHECK(m.col(2)[1] == doctest::Approx(-kS2).epsilon(1e-15));

    m = frame_at(ModelSpaceId::AffineGroup, {1, 0, 0});
    CHECK(m.col(0) == CoordVec{1, 0, 0});
    CHECK(m.col(1) == CoordVec{0, 1, 1});
    CHECK(m.col(2) == CoordVec{0, 1, 0});
}

TEST_CASE("affine chart rejects x1 <= 0") {
    CHECK_THROWS_AS(frame_at(ModelSpaceId::AffineGroup, {0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(frame_at(ModelSpaceId::AffineGroup, {-1, 0, 0}), std::domain_error);
    CHECK_NOTHROW(frame_at(ModelSpaceId::E11, {-1, 0, 0}));
}

TEST_CASE("coordinate_to_frame inverts the frame") {
    FrameVec v = coordinate_to_frame(ModelSpaceId::AffineGroup, {2, 1, 1}, {1, 0, 0});
    CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(0.0));
    CHECK(v[2] == doctest::Approx(0.0));

    v = coordinate_to_frame(ModelSpaceId::AffineGroup, {2, 1, 1}, {0, 0, 1});
    CHECK(v[0] == doctest::Approx(0.0));
    CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(-1.0).epsilon(1e-14));

    // round trip through X2's own coordinate expression
    const Point p{0.3, -0.2, 0.7};
    const Mat3 m = frame_at(ModelSpaceId::E11, p);
    v = coordinate_to_frame(ModelSpaceId::E11, p, m.col(1));
    CHECK(v[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("round trip holds at 100 random valid points") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 0; n < 100; ++n) {
        for (ModelSpaceId space : {ModelSpaceId::AffineGroup, ModelSpaceId::E11}) {
            Point p{u(rng), u(rng), u(rng)};
            if (space == ModelSpaceId::AffineGroup) p.x1 = 0.1 + std::abs(p.x1);
            const CoordVec vc{u(rng), u(rng), u(rng)};
            const Mat3 m = frame_at(space, p);
            const FrameVec a = coordinate_to_frame(space, p, vc);
            const CoordVec back = m.mul(a);
            for (int k = 0; k < 3; ++k) CHECK(back[k] == doctest::Approx(vc[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("coframe evaluation and duality") {
    FrameVec w = coframe_eval(ModelSpaceId::AffineGroup, {2, 0, 0}, {0, 1, 0});
    CHECK(w[2] == doctest::Approx(0.5).epsilon(1e-14));  // omega = dx2/x1 - dx3

    // duality: coframe of each frame column is the Kronecker pattern
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.2, 2.0);
    for (int n = 0; n < 20; ++n) {
        for (ModelSpaceId space : {ModelSpaceId::AffineGroup, ModelSpaceId::E11}) {
            const Point p{u(rng), u(rng), u(rng)};
            const Mat3 m = frame_at(space, p);
            for (int j = 0; j < 3; ++j) {
                const FrameVec d = coframe_eval(space, p, m.col(j));
                for (int k = 0; k < 3; ++k)
                    CHECK(d[k] == doctest::Approx(k == j ? 1.0 : 0.0).epsilon(1e-12));
            }
        }
    }

    w = coframe_eval(ModelSpaceId::E11, {0.4, -1.0, 0.0}, {1, 0, 0});
    CHECK(w[0] == doctest::Approx(0.0));
    CHECK(w[1] == doctest::Approx(-kS2).epsilon(1e-14));  // omega2
    CHECK(w[2] == doctest::Approx(-kS2).epsilon(1e-14));  // omega
}

TEST_CASE("bracket tables: coordinate-derived vs printed") {
    const BracketTable e11_d = bracket_table(ModelSpaceId::E11, BracketSource::CoordinateDerived);
    const BracketTable e11_p = bracket_table(ModelSpaceId::E11, BracketSource::PrintedTable);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(e11_d(i, j)[k] == doctest::Approx(e11_p(i, j)[k]).epsilon(1e-9));
    CHECK(e11_d(0, 2)[1] == doctest::Approx(1.0).epsilon(1e-12));  // [X1,X3] = X2

    const BracketTable aff = bracket_table(ModelSpaceId::AffineGroup,
                                           BracketSource::CoordinateDerived);
    CHECK(aff(0, 2)[2] == doctest::Approx(1.0).epsilon(1e-12));  // [X1,X3] = X3 (not X2)
    CHECK(aff(0, 2)[1] == doctest::Approx(0.0));
    const BracketTable aff_p = bracket_table(ModelSpaceId::AffineGroup, BracketSource::PrintedTable);
    CHECK(aff_p(1, 2) == FrameVec{0, 0, 0});  // [X2,X3] = 0 as printed

    // the differ reports exactly the one discrepancy
    const TableDiffReport diff = diff_bracket_tables(ModelSpaceId::AffineGroup);
    REQUIRE(diff.diffs.size() == 1);
    CHECK(diff.diffs[0].entry == "[X1,X3]");
    CHECK(diff_bracket_tables(ModelSpaceId::E11).diffs.empty());

    // antisymmetry
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(aff(i, j)[k] == -aff(j, i)[k]);
}

TEST_CASE("metric inner products") {
    CHECK(metric_inner(4.0, {1, 2, 3}, {1, 2, 3}) == doctest::Approx(41.0));
    CHECK(metric_inner(7.5, {0, 0, 1}, {0, 0, 1}) == doctest::Approx(7.5));
    CHECK(metric_inner(7.5, {1, 0, 0}, {0, 0, 1}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(metric_inner(-1.0, {1, 0, 0}, {1, 0, 0}), std::invalid_argument);
}

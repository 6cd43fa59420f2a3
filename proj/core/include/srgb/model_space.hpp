#pragma once

#include <array>

#include "srgb/linalg.hpp"

namespace srgb {

/// The two model Lie groups.
enum class ModelSpaceId { AffineGroup, E11 };

/// A point in the coordinate chart. The affine group lives on x1 > 0 (the
/// frame X1 = x1 d/dx1 degenerates at x1 = 0; the identity is (1,0,0)).
struct Point {
    double x1 = 0, x2 = 0, x3 = 0;
};

enum class BracketSource { CoordinateDerived, PrintedTable };

/// Constant structure table c[i][j] = [X_i, X_j] in frame components.
template <class T>
struct BasicBracketTable {
    std::array<Vec3<T>, 9> c{};
    BracketSource source = BracketSource::CoordinateDerived;

    Vec3<T>& operator()(int i, int j) { return c[3 * i + j]; }
    const Vec3<T>& operator()(int i, int j) const { return c[3 * i + j]; }
};
using BracketTable = BasicBracketTable<double>;

void validate_point(ModelSpaceId space, const Point& p);

/// Columns are X1, X2, X3 expressed in the coordinate basis d/dx1..d/dx3.
Mat3 frame_at(ModelSpaceId space, const Point& p);

/// Derivative of the frame matrix with respect to coordinate x_k.
Mat3 frame_jacobian(ModelSpaceId space, const Point& p, int k);

/// Frame components of a coordinate velocity: frame_at(space,p) * result = v.
FrameVec coordinate_to_frame(ModelSpaceId space, const Point& p, const CoordVec& v_coord);

/// (omega1, omega2, omega) applied to a coordinate velocity; dual to the frame.
FrameVec coframe_eval(ModelSpaceId space, const Point& p, const CoordVec& v_coord);

/// Structure constants, either from the printed table or recomputed from the
/// coordinate frames. The coordinate route doubles as an oracle: entries are
/// checked to be constant across sample points (left invariance).
BracketTable bracket_table(ModelSpaceId space, BracketSource source);

/// Same table with exact integer entries, for the rational table algebra.
template <class T>
BasicBracketTable<T> exact_bracket_table(ModelSpaceId space, BracketSource source) {
    BasicBracketTable<T> t;
    t.source = source;
    auto set = [&t](int i, int j, int a, int b, int c) {
        t(i, j) = Vec3<T>(T(a), T(b), T(c));
        t(j, i) = Vec3<T>(T(-a), T(-b), T(-c));
    };
    set(0, 1, 0, 0, 1);  // [X1,X2] = X3 in both spaces
    if (space == ModelSpaceId::AffineGroup && source == BracketSource::CoordinateDerived)
        set(0, 2, 0, 0, 1);  // coordinate frames give [X1,X3] = X3
    else
        set(0, 2, 0, 1, 0);  // printed tables say [X1,X3] = X2
    return t;
}

/// <v,w>_L = v1 w1 + v2 w2 + L v3 w3 (components against X1,X2,X3).
double metric_inner(double L, const FrameVec& v, const FrameVec& w);
double metric_norm(double L, const FrameVec& v);

}  // namespace srgb

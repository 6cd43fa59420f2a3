#include "srgb/model_space.hpp"

#include <cmath>
#include <stdexcept>

namespace srgb {

void validate_point(ModelSpaceId space, const Point& p) {
    if (space == ModelSpaceId::AffineGroup && !(p.x1 > 0))
        throw std::domain_error("affine group chart requires x1 > 0");
}

Mat3 frame_at(ModelSpaceId space, const Point& p) {
    validate_point(space, p);
    Mat3 m;
    if (space == ModelSpaceId::AffineGroup) {
        // X1 = x1 d1, X2 = x1 d2 + d3, X3 = x1 d2
        m(0, 0) = p.x1;
        m(1, 1) = p.x1; m(2, 1) = 1.0;
        m(1, 2) = p.x1;
    } else {
        // X1 = d3, X2 = (1/sqrt2)(-e^{x3} d1 + e^{-x3} d2), X3 = -(1/sqrt2)(e^{x3} d1 + e^{-x3} d2)
        const double s = std::sqrt(0.5);
        const double ep = std::exp(p.x3), em = std::exp(-p.x3);
        m(2, 0) = 1.0;
        m(0, 1) = -s * ep; m(1, 1) = s * em;
        m(0, 2) = -s * ep; m(1, 2) = -s * em;
    }
    return m;
}

Mat3 frame_jacobian(ModelSpaceId space, const Point& p, int k) {
    validate_point(space, p);
    Mat3 m;
    if (space == ModelSpaceId::AffineGroup) {
        if (k == 0) {
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            m(1, 2) = 1.0;
        }
    } else if (k == 2) {
        const double s = std::sqrt(0.5);
        const double ep = std::exp(p.x3), em = std::exp(-p.x3);
        m(0, 1) = -s * ep; m(1, 1) = -s * em;
        m(0, 2) = -s * ep; m(1, 2) = s * em;
    }
    return m;
}

FrameVec coordinate_to_frame(ModelSpaceId space, const Point& p, const CoordVec& v_coord) {
    return frame_at(space, p).solve(v_coord);
}

FrameVec coframe_eval(ModelSpaceId space, const Point& p, const CoordVec& v_coord) {
    // Duality with the frame makes this the same linear solve.
    return coordinate_to_frame(space, p, v_coord);
}

namespace {

FrameVec commutator_at(ModelSpaceId space, const Point& p, int i, int j) {
    // [Xi, Xj] = (Xi . d) Xj - (Xj . d) Xi, evaluated with the analytic
    // frame Jacobians, then expressed in frame components.
    const Mat3 m = frame_at(space, p);
    CoordVec xi = m.col(i), xj = m.col(j);
    CoordVec acc{};
    for (int k = 0; k < 3; ++k) {
        const Mat3 dk = frame_jacobian(space, p, k);
        const CoordVec dXj = dk.col(j), dXi = dk.col(i);
        for (int r = 0; r < 3; ++r) acc[r] += xi[k] * dXj[r] - xj[k] * dXi[r];
    }
    return m.solve(acc);
}

}  // namespace

BracketTable bracket_table(ModelSpaceId space, BracketSource source) {
    if (source == BracketSource::PrintedTable) {
        return exact_bracket_table<double>(space, source);
    }
    auto derive = [](ModelSpaceId sp) {
        const Point samples[] = {{1.5, 0.2, -0.3}, {2.0, -1.0, 0.7}, {0.5, 3.0, 1.1}};
        BracketTable t;
        t.source = BracketSource::CoordinateDerived;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                FrameVec first = commutator_at(sp, samples[0], i, j);
                for (const Point& p : samples) {
                    FrameVec v = commutator_at(sp, p, i, j);
                    for (int r = 0; r < 3; ++r) {
                        if (std::abs(v[r] - first[r]) > 1e-9)
                            throw std::logic_error("bracket_table: commutator not constant");
                    }
                }
                t(i, j) = first;
            }
        }
        return t;
    };
    // left-invariance makes these constant; derive once per space
    static const BracketTable affine = derive(ModelSpaceId::AffineGroup);
    static const BracketTable e11 = derive(ModelSpaceId::E11);
    return space == ModelSpaceId::AffineGroup ? affine : e11;
}

double metric_inner(double L, const FrameVec& v, const FrameVec& w) {
    if (!(L > 0)) throw std::invalid_argument("metric_inner: L must be positive");
    return v[0] * w[0] + v[1] * w[1] + L * v[2] * w[2];
}

double metric_norm(double L, const FrameVec& v) { return std::sqrt(metric_inner(L, v, v)); }

}  // namespace srgb

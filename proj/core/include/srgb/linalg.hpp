#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace srgb {

/// Component triple against the left-invariant frame {X1, X2, X3} (or a
/// coordinate triple, depending on context). Scalar type is a template so the
/// connection algebra can run on exact rationals as well as doubles.
template <class T>
struct Vec3 {
    std::array<T, 3> v{};

    Vec3() = default;
    Vec3(T a, T b, T c) : v{a, b, c} {}

    T& operator[](std::size_t i) { return v[i]; }
    const T& operator[](std::size_t i) const { return v[i]; }

    Vec3 operator+(const Vec3& o) const { return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}; }
    Vec3 operator-(const Vec3& o) const { return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}; }
    Vec3 operator-() const { return {-v[0], -v[1], -v[2]}; }
    Vec3& operator+=(const Vec3& o) {
        v[0] += o.v[0]; v[1] += o.v[1]; v[2] += o.v[2];
        return *this;
    }
    friend Vec3 operator*(const T& s, const Vec3& a) { return {s * a.v[0], s * a.v[1], s * a.v[2]}; }
    friend Vec3 operator*(const Vec3& a, const T& s) { return s * a; }
    bool operator==(const Vec3&) const = default;
};

using FrameVec = Vec3<double>;
using CoordVec = Vec3<double>;

/// Dense 3x3 of doubles, column-major access by (row, col).
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[3 * c + r]; }
    double operator()(int r, int c) const { return m[3 * c + r]; }

    CoordVec col(int c) const { return {m[3 * c], m[3 * c + 1], m[3 * c + 2]}; }

    CoordVec mul(const CoordVec& x) const {
        CoordVec y{};
        for (int r = 0; r < 3; ++r)
            y[r] = (*this)(r, 0) * x[0] + (*this)(r, 1) * x[1] + (*this)(r, 2) * x[2];
        return y;
    }

    double det() const {
        return (*this)(0, 0) * ((*this)(1, 1) * (*this)(2, 2) - (*this)(1, 2) * (*this)(2, 1)) -
               (*this)(0, 1) * ((*this)(1, 0) * (*this)(2, 2) - (*this)(1, 2) * (*this)(2, 0)) +
               (*this)(0, 2) * ((*this)(1, 0) * (*this)(2, 1) - (*this)(1, 1) * (*this)(2, 0));
    }

    /// Solve A x = b by the adjugate; the frames handled here are far from
    /// singular on their domains.
    CoordVec solve(const CoordVec& b) const {
        const double d = det();
        if (std::abs(d) < 1e-300) throw std::domain_error("Mat3::solve: singular matrix");
        Mat3 adj;
        const Mat3& a = *this;
        adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
        adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
        adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
        adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
        adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
        adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
        adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
        adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
        adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        CoordVec x = adj.mul(b);
        return {x[0] / d, x[1] / d, x[2] / d};
    }
};

inline double dot(const CoordVec& a, const CoordVec& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double euclidean_norm(const CoordVec& a) { return std::sqrt(dot(a, a)); }

}  // namespace srgb

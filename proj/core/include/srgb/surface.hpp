#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "srgb/connection.hpp"

namespace srgb {

/// Implicit surface u = 0 with analytic coordinate derivatives. When no
/// Hessian closure is supplied, central differences on the gradient are used
/// (relative step 1e-5).
struct ImplicitSurface {
    std::string name;
    std::function<double(const Point&)> u;
    std::function<CoordVec(const Point&)> grad;
    std::function<std::array<CoordVec, 3>(const Point&)> hess;  // rows: d(grad)/dx_k; optional
};

/// (X1 u, X2 u, X3 u) at p.
FrameVec frame_derivs(ModelSpaceId space, const ImplicitSurface& surf, const Point& p);

/// FH(i,j) = X_i X_j u at p (not symmetric; the commutators show up in the
/// antisymmetric part).
Mat3 frame_hessian(ModelSpaceId space, const ImplicitSurface& surf, const Point& p);

struct CharacteristicReport {
    bool is_characteristic = false;
    double l_value = 0;
    double threshold = 0;
};

class CharacteristicPointError : public std::domain_error {
  public:
    explicit CharacteristicPointError(const CharacteristicReport& rep)
        : std::domain_error("characteristic point: |grad_H u| below threshold"), report(rep) {}
    CharacteristicReport report;
};

/// Scalar with its frame gradient; the chain rule for the adapted-frame bar
/// quantities runs on these.
struct Jet {
    double v = 0;
    FrameVec g{};  // g[k] = X_k(value)

    Jet() = default;
    Jet(double value) : v(value) {}
    Jet(double value, const FrameVec& grad) : v(value), g(grad) {}

    Jet operator+(const Jet& o) const { return {v + o.v, g + o.g}; }
    Jet operator-(const Jet& o) const { return {v - o.v, g - o.g}; }
    Jet operator-() const { return {-v, -g}; }
    Jet operator*(const Jet& o) const { return {v * o.v, v * o.g + o.v * g}; }
    Jet operator/(const Jet& o) const {
        const double iv = 1.0 / o.v;
        return {v * iv, iv * g - (v * iv * iv) * o.g};
    }
};

inline Jet sqrt(const Jet& j) {
    const double r = std::sqrt(j.v);
    return {r, (0.5 / r) * j.g};
}

/// Normal and tangent frame adapted to the surface at a non-characteristic
/// point, plus the bar quantities.
struct AdaptedFrame {
    double p = 0, q = 0, r = 0;          // X1 u, X2 u, tilde-X3 u
    double l = 0, l_L = 0;
    double p_bar = 0, q_bar = 0;
    double pL_bar = 0, qL_bar = 0, rL_bar = 0;
    double L = 1;
    FrameVec nu_L{};  // Riemannian unit normal (components against X1,X2,X3)
    FrameVec e1{};
    FrameVec e2{};
};

/// Full per-point state: the adapted frame plus jets of every field needed by
/// the covariant derivatives of nu and the printed closed forms.
struct SurfacePointState {
    AdaptedFrame frame;
    Jet p, q, s;             // s = X3 u (the un-rescaled transverse derivative)
    Jet l, l_L;
    Jet p_bar, q_bar;
    Jet pL_bar, qL_bar, rL_bar;
    std::array<Jet, 3> nu;   // jets of nu_L's frame components
    std::array<Jet, 3> e2j;  // jets of e2's frame components
    std::array<Jet, 3> e1j;  // jets of e1's frame components
};

double characteristic_threshold();

CharacteristicReport characteristic_report(ModelSpaceId space, const ImplicitSurface& surf,
                                           const Point& p);

/// Throws CharacteristicPointError when |grad_H u| is below the threshold
/// relative to |(p,q,X3 u)|.
AdaptedFrame adapted_frame(ModelSpaceId space, const ImplicitSurface& surf, const Point& p,
                           double L);

SurfacePointState surface_point_state(ModelSpaceId space, const ImplicitSurface& surf,
                                      const Point& p, double L);

/// Derivative combinations used by the printed theorems.
struct FrameFieldDerivs {
    double e1_grad_sl = 0;    // <e1, grad_H (X3u/|grad_H u|)>
    double e1_grad_rbL = 0;   // <e1, grad_H rL_bar>
    double e2_grad_rl = 0;    // <e2, grad_H (r/l)>_L
    double x3t_rbL = 0;       // tilde-X3 (rL_bar)
    double div_h = 0;         // X1(p_bar) + X2(q_bar)
};

FrameFieldDerivs frame_field_derivs(const SurfacePointState& st);

}  // namespace srgb

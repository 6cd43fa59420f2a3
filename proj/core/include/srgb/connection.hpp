#pragma once

#include <array>
#include <stdexcept>

#include "srgb/model_space.hpp"
#include "srgb/rational.hpp"

namespace srgb {

/// H1 = span{X1,X2}, complement span{X3}; H2 = span{X2,X3}, complement span{X1}.
enum class DistributionKind { H1, H2 };

enum class Provenance { Koszul, SVK, Deformed, PrintedLemma };

/// Constant coefficient table gamma(i,j) = nabla_{X_i} X_j in frame components.
template <class T>
struct BasicConnectionTable {
    std::array<Vec3<T>, 9> gamma{};
    Provenance provenance = Provenance::Koszul;

    Vec3<T>& operator()(int i, int j) { return gamma[3 * i + j]; }
    const Vec3<T>& operator()(int i, int j) const { return gamma[3 * i + j]; }

    /// nabla_dir w for constant-coefficient w (pure Gamma contraction).
    Vec3<T> apply(const Vec3<T>& dir, const Vec3<T>& w) const {
        Vec3<T> out{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out += (dir[i] * w[j]) * (*this)(i, j);
        return out;
    }
};
using ConnectionTable = BasicConnectionTable<double>;

template <class T>
T metric_inner_t(const T& L, const Vec3<T>& v, const Vec3<T>& w) {
    return v[0] * w[0] + v[1] * w[1] + L * (v[2] * w[2]);
}

/// Levi-Civita connection of g_L from the constant-frame Koszul formula
/// 2<nabla_i j, k> = <[i,j],k> - <[j,k],i> + <[k,i],j>.
template <class T>
BasicConnectionTable<T> koszul_levi_civita(const T& L, const BasicBracketTable<T>& br) {
    BasicConnectionTable<T> t;
    t.provenance = Provenance::Koszul;
    const T gkk[3] = {T(1), T(1), L};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Vec3<T> comp{};
            for (int k = 0; k < 3; ++k) {
                Vec3<T> ei{}, ej{}, ek{};
                ei[i] = T(1);
                ej[j] = T(1);
                ek[k] = T(1);
                T v = metric_inner_t<T>(L, br(i, j), ek) - metric_inner_t<T>(L, br(j, k), ei) +
                      metric_inner_t<T>(L, br(k, i), ej);
                comp[k] = v / (T(2) * gkk[k]);
            }
            t(i, j) = comp;
        }
    }
    return t;
}

/// Schouten-Van Kampen: P nabla (P .) + Pperp nabla (Pperp .), projections per
/// distribution; preserves the splitting.
template <class T>
BasicConnectionTable<T> svk_connection(const BasicConnectionTable<T>& base, DistributionKind dist) {
    const bool h1 = dist == DistributionKind::H1;
    auto in_h = [h1](int k) { return h1 ? k != 2 : k != 0; };
    BasicConnectionTable<T> t;
    t.provenance = Provenance::SVK;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // P Xj is Xj or 0; project the derivative back onto the same factor.
            const Vec3<T>& g = base(i, j);
            Vec3<T> out{};
            for (int k = 0; k < 3; ++k)
                if (in_h(k) == in_h(j)) out[k] = g[k];
            t(i, j) = out;
        }
    }
    return t;
}

/// (1 - param) * lc + param * svk, entrywise.
template <class T>
BasicConnectionTable<T> deform(const BasicConnectionTable<T>& lc, const BasicConnectionTable<T>& svk,
                               const T& param) {
    BasicConnectionTable<T> t;
    t.provenance = Provenance::Deformed;
    for (int n = 0; n < 9; ++n)
        t.gamma[n] = (T(1) - param) * lc.gamma[n] + param * svk.gamma[n];
    return t;
}

template <class T>
struct ConnectionDiagnostics {
    T metric_defect{};                    // max |<G_ki, Xj> + <Xi, G_kj>|
    std::array<Vec3<T>, 9> torsion{};     // T(Xi,Xj) = G_ij - G_ji - [Xi,Xj]
};

inline double to_double_of(double x) { return x; }
inline double to_double_of(const Rat& x) { return x.to_double(); }
inline double abs_t(double x) { return x < 0 ? -x : x; }
inline Rat abs_t(const Rat& x) { return abs(x); }

template <class T>
ConnectionDiagnostics<T> connection_diagnostics(const BasicConnectionTable<T>& tab, const T& L,
                                                const BasicBracketTable<T>& br) {
    ConnectionDiagnostics<T> d;
    T worst{};
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Vec3<T> ei{}, ej{};
                ei[i] = T(1);
                ej[j] = T(1);
                T v = metric_inner_t<T>(L, tab(k, i), ej) + metric_inner_t<T>(L, ei, tab(k, j));
                T a = abs_t(v);
                if (to_double_of(a) > to_double_of(worst)) worst = a;
            }
        }
    }
    d.metric_defect = worst;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d.torsion[3 * i + j] = tab(i, j) - tab(j, i) - br(i, j);
    return d;
}

/// Algebraic curvature R(Xi,Xj)Xk = nab_i nab_j Xk - nab_j nab_i Xk - nab_{[ij]} Xk.
template <class T>
struct BasicRiemannTable {
    std::array<Vec3<T>, 27> r{};
    Vec3<T>& operator()(int i, int j, int k) { return r[9 * i + 3 * j + k]; }
    const Vec3<T>& operator()(int i, int j, int k) const { return r[9 * i + 3 * j + k]; }

    /// R(u,v)w by trilinearity.
    Vec3<T> apply(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w) const {
        Vec3<T> out{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) out += (u[i] * v[j] * w[k]) * (*this)(i, j, k);
        return out;
    }
};
using RiemannTable = BasicRiemannTable<double>;

template <class T>
BasicRiemannTable<T> riemann_tensor(const BasicConnectionTable<T>& tab, const BasicBracketTable<T>& br) {
    BasicRiemannTable<T> R;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                Vec3<T> ei{}, ej{};
                ei[i] = T(1);
                ej[j] = T(1);
                Vec3<T> t1 = tab.apply(ei, tab(j, k));
                Vec3<T> t2 = tab.apply(ej, tab(i, k));
                Vec3<T> t3{};
                for (int m = 0; m < 3; ++m) t3 += br(i, j)[m] * tab(m, k);
                R(i, j, k) = t1 - t2 - t3;
            }
        }
    }
    return R;
}

/// Space + distribution + deformation parameter + L, with the table built by
/// the definitional chain (coordinate brackets; see tables discrepancy log).
struct ConnectionContext {
    ModelSpaceId space = ModelSpaceId::AffineGroup;
    DistributionKind dist = DistributionKind::H1;
    double param = 0.0;  // alpha on the affine group, beta on E(1,1)
    double L = 1.0;
    ConnectionTable gamma;
    BracketTable brackets;
};

ConnectionContext make_context(ModelSpaceId space, DistributionKind dist, double param, double L);

/// Same context at a different L (tables rebuilt).
ConnectionContext with_L(const ConnectionContext& ctx, double L);

/// Leibniz evaluation: result = sum_j dcoeff_j X_j + sum_{i,j} coeff_j dir_i Gamma(i,j).
FrameVec covariant_derivative(const ConnectionTable& tab, const FrameVec& field_coeffs,
                              const FrameVec& direction, const FrameVec& coeff_derivs);

}  // namespace srgb

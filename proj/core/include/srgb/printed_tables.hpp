#pragma once

#include <string>
#include <vector>

#include "srgb/connection.hpp"

namespace srgb {

/// Connection tables exactly as printed in the source lemmas (including their
/// typos). Regression fixtures only; the constructed chain governs all
/// downstream geometry.
template <class T>
BasicConnectionTable<T> printed_table(ModelSpaceId space, DistributionKind dist, const T& param,
                                    const T& L) {
    BasicConnectionTable<T> t;
    t.provenance = Provenance::PrintedLemma;
    const T z(0), one(1), two(2);
    const T om = one - param;  // (1-alpha) resp. (1-beta)
    auto V = [](T a, T b, T c) { return Vec3<T>(a, b, c); };
    if (space == ModelSpaceId::AffineGroup) {
        if (dist == DistributionKind::H1) {
            t(0, 1) = V(z, z, om / two);
            t(0, 2) = V(z, -om * L / two, z);
            t(1, 0) = V(z, z, -om / two);
            t(1, 2) = V(om * L / two, z, z);
            t(2, 0) = V(z, -L / two, -om);
            t(2, 1) = V(L / two, z, z);
            t(2, 2) = V(om * L, z, z);
        } else {
            t(0, 1) = V(z, z, one / two);
            t(0, 2) = V(z, -L / two, z);
            t(1, 0) = V(z, z, -om / two);
            t(1, 2) = V(om * L / two, z, z);
            t(2, 0) = V(z, -om * L / two, -om);
            t(2, 1) = V(om * L / two, z, z);
            t(2, 2) = V(om * L, z, z);
        }
    } else {
        if (dist == DistributionKind::H1) {
            t(0, 1) = V(z, z, om * (L - one) / (two * L));
            t(0, 2) = V(z, -(one - L) * om / two, z);  // printed sign (see log)
            t(1, 0) = V(z, z, om * (-L - one) / (two * L));
            t(1, 2) = V(om * (L + one) / two, z, z);
            t(2, 0) = V(z, -(L + one) / two, z);
            t(2, 1) = V((L + one) / two, z, z);
        } else {
            t(0, 1) = V(z, z, (L - one) / (two * L));
            t(0, 2) = V(z, (one - L) / two, z);
            t(1, 0) = V(z, z, (L + one) * om / (two * L));   // printed -(-L-1)(1-b)/(2L)
            t(1, 2) = V(om * (L + one) / two, z, z);
            t(2, 0) = V(z, (one + L) * om / two, z);         // printed -(-1-L)(1-b)/2
            t(2, 1) = V(om * (L + one) / two, z, z);
        }
    }
    return t;
}

/// Curvature tables exactly as printed in the four curvature lemmas.
template <class T>
BasicRiemannTable<T> printed_riemann(ModelSpaceId space, DistributionKind dist, const T& param,
                                   const T& L) {
    BasicRiemannTable<T> R;
    const T z(0), one(1), two(2), four(4);
    const T om = one - param;
    auto V = [](T a, T b, T c) { return Vec3<T>(a, b, c); };
    auto set = [&R](int i, int j, int k, const Vec3<T>& v) {
        R(i, j, k) = v;
        R(j, i, k) = -v;
    };
    if (space == ModelSpaceId::AffineGroup) {
        if (dist == DistributionKind::H1) {
            set(0, 1, 0, V(z, (om * om * L) / four + L / two, om));
            set(0, 1, 1, V(-(om * L / four + L / two), z, z));  // printed (1-a), not (1-a)^2
            set(0, 1, 2, V(-om * L, z, z));
            set(0, 2, 0, V(z, L * (om * om + one) / two, om * (four - L) / four));
            set(0, 2, 1, V(-(om * om + one) / two * L, z, z));
            set(0, 2, 2, V(om * (L * L - four * L) / four, z, z));
            set(1, 2, 0, V(z, z, z));
            set(1, 2, 1, V(z, z, -om * L / four));
            set(1, 2, 2, V(z, om * L * L / four, z));
        } else {
            const T three(3);
            set(0, 1, 0, V(z, three * om * L / four, om));
            set(0, 1, 1, V(-three * om * L / four, z, z));
            set(0, 1, 2, V(-om * L, z, z));
            set(0, 2, 0, V(z, om * L, om * (four - L) / four));
            set(0, 2, 1, V(-om * L, z, z));
            set(0, 2, 2, V(om * (L * L - four * L) / four, z, z));
            set(1, 2, 0, V(z, z, z));
            set(1, 2, 1, V(z, z, -om * om * L / four));
            set(1, 2, 2, V(z, om * om * L * L / four, z));
        }
    } else {
        const T three(3);
        const T Lp1 = L + one;
        if (dist == DistributionKind::H1) {
            const T c01 = -(one - L * L) * om * om / (four * L) + (one + L) / two;
            set(0, 1, 0, V(z, c01, z));
            set(0, 1, 1, V(-c01, z, z));
            set(0, 1, 2, V(z, z, z));
            set(0, 2, 0, V(z, z, (-L * L + two * L + three) * om / (four * L)));
            set(0, 2, 1, V(z, z, z));
            set(0, 2, 2, V(om * (L * L - L - two) / two, z, z));  // printed; chain differs
            set(1, 2, 0, V(z, z, z));
            set(1, 2, 1, V(z, z, om * (L * L + two * L + one) / (four * L)));  // printed sign
            set(1, 2, 2, V(z, om * Lp1 * Lp1 / four, z));
        } else {
            set(0, 1, 0, V(z, (two * L * L + L - one) * om / (two * L), z));
            set(0, 1, 1, V(-L * Lp1 * om / two, z, z));
            set(0, 1, 2, V(z, z, z));
            set(0, 2, 0, V(z, z, (-L * L + two * L + three) * om / (four * L)));
            set(0, 2, 1, V(z, z, z));
            set(0, 2, 2, V(om * (L * L - two * L - three) / four, z, z));
            set(1, 2, 0, V(z, z, z));
            set(1, 2, 1, V(z, z, om * om * (L * L + two * L + one) / (four * L)));  // printed sign
            set(1, 2, 2, V(z, om * om * Lp1 * Lp1 / four, z));
        }
    }
    return R;
}

/// One entry-level difference between the constructed chain and a printed table.
struct TableDiff {
    std::string table;    // e.g. "connection", "riemann", "bracket"
    std::string entry;    // e.g. "nabla_X1 X3"
    Vec3<double> constructed;
    Vec3<double> printed;
    double max_abs_delta = 0;
};

struct TableDiffReport {
    ModelSpaceId space;
    DistributionKind dist;
    double param = 0;
    double L = 0;
    std::vector<TableDiff> diffs;  // empty means exact agreement
};

/// Entrywise comparison at exact rational (param, L); |delta| is exact, so the
/// report is stable across platforms.
TableDiffReport diff_connection_tables(ModelSpaceId space, DistributionKind dist, const Rat& param,
                                       const Rat& L);
TableDiffReport diff_riemann_tables(ModelSpaceId space, DistributionKind dist, const Rat& param,
                                    const Rat& L);
TableDiffReport diff_bracket_tables(ModelSpaceId space);

}  // namespace srgb

#include "srgb/printed_tables.hpp"

#include <cmath>

namespace srgb {

namespace {

const char* frame_name(int i) {
    static const char* names[] = {"X1", "X2", "X3"};
    return names[i];
}

Vec3<double> to_double_vec(const Vec3<Rat>& v) {
    return {v[0].to_double(), v[1].to_double(), v[2].to_double()};
}

double max_abs(const Vec3<Rat>& v) {
    double m = 0;
    for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(v[k].to_double()));
    return m;
}

}  // namespace

TableDiffReport diff_connection_tables(ModelSpaceId space, DistributionKind dist, const Rat& param,
                                       const Rat& L) {
    TableDiffReport rep{space, dist, param.to_double(), L.to_double(), {}};
    auto br = exact_bracket_table<Rat>(space, BracketSource::CoordinateDerived);
    auto lc = koszul_levi_civita<Rat>(L, br);
    auto chain = deform<Rat>(lc, svk_connection<Rat>(lc, dist), param);
    auto printed = printed_table<Rat>(space, dist, param, L);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Vec3<Rat> d = chain(i, j) - printed(i, j);
            if (d == Vec3<Rat>{}) continue;
            TableDiff td;
            td.table = "connection";
            td.entry = std::string("nabla_") + frame_name(i) + " " + frame_name(j);
            td.constructed = to_double_vec(chain(i, j));
            td.printed = to_double_vec(printed(i, j));
            td.max_abs_delta = max_abs(d);
            rep.diffs.push_back(td);
        }
    }
    return rep;
}

TableDiffReport diff_riemann_tables(ModelSpaceId space, DistributionKind dist, const Rat& param,
                                    const Rat& L) {
    TableDiffReport rep{space, dist, param.to_double(), L.to_double(), {}};
    auto br = exact_bracket_table<Rat>(space, BracketSource::CoordinateDerived);
    auto lc = koszul_levi_civita<Rat>(L, br);
    auto chain = deform<Rat>(lc, svk_connection<Rat>(lc, dist), param);
    auto R = riemann_tensor<Rat>(chain, br);
    auto printed = printed_riemann<Rat>(space, dist, param, L);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                Vec3<Rat> d = R(i, j, k) - printed(i, j, k);
                if (d == Vec3<Rat>{}) continue;
                TableDiff td;
                td.table = "riemann";
                td.entry = std::string("R(") + frame_name(i) + "," + frame_name(j) + ")" +
                           frame_name(k);
                td.constructed = to_double_vec(R(i, j, k));
                td.printed = to_double_vec(printed(i, j, k));
                td.max_abs_delta = max_abs(d);
                rep.diffs.push_back(td);
            }
        }
    }
    return rep;
}

TableDiffReport diff_bracket_tables(ModelSpaceId space) {
    TableDiffReport rep{space, DistributionKind::H1, 0.0, 1.0, {}};
    auto derived = exact_bracket_table<Rat>(space, BracketSource::CoordinateDerived);
    auto printed = exact_bracket_table<Rat>(space, BracketSource::PrintedTable);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Vec3<Rat> d = derived(i, j) - printed(i, j);
            if (d == Vec3<Rat>{}) continue;
            TableDiff td;
            td.table = "bracket";
            td.entry = std::string("[") + frame_name(i) + "," + frame_name(j) + "]";
            td.constructed = to_double_vec(derived(i, j));
            td.printed = to_double_vec(printed(i, j));
            td.max_abs_delta = max_abs(d);
            rep.diffs.push_back(td);
        }
    }
    return rep;
}

}  // namespace srgb

#include "srgb/report.hpp"

#include <fstream>
#include <sstream>

namespace srgb {

std::string space_name(ModelSpaceId space) {
    return space == ModelSpaceId::AffineGroup ? "affine" : "e11";
}

std::string dist_name(DistributionKind dist) { return dist == DistributionKind::H1 ? "h1" : "h2"; }

std::string class_name(Horizontality h) {
    switch (h) {
        case Horizontality::NonHorizontal: return "non-horizontal";
        case Horizontality::HorizontalRegular: return "horizontal-regular";
        case Horizontality::HorizontalDegenerate: return "horizontal-degenerate";
    }
    return "?";
}

namespace {

double canon(double v) { return v == 0.0 ? 0.0 : v; }

json vec_json(const Vec3<double>& v) {
    return json::array({canon(v[0]), canon(v[1]), canon(v[2])});
}

}  // namespace

json to_json(const TableDiffReport& rep) {
    json j;
    j["space"] = space_name(rep.space);
    j["dist"] = dist_name(rep.dist);
    j["param"] = rep.param;
    j["L"] = rep.L;
    j["mismatch_count"] = rep.diffs.size();
    json diffs = json::array();
    for (const TableDiff& d : rep.diffs) {
        json e;
        e["table"] = d.table;
        e["entry"] = d.entry;
        e["constructed"] = vec_json(d.constructed);
        e["printed"] = vec_json(d.printed);
        e["max_abs_delta"] = d.max_abs_delta;
        diffs.push_back(e);
    }
    j["diffs"] = diffs;
    return j;
}

json to_json(const GBReport& rep) {
    json j;
    j["identity"] = rep.identity;
    j["L"] = rep.L;
    j["interior_integral"] = rep.interior_integral;
    j["boundary_integral"] = rep.boundary_integral;
    j["target"] = rep.target;
    j["residual"] = rep.residual;
    j["pass"] = rep.pass;
    j["excluded_area"] = rep.excluded_area;
    j["interior_printed"] = rep.interior_printed;
    j["residual_printed"] = rep.residual_printed;
    j["residual_corrected"] = rep.residual_corrected;
    j["leading_identity_residual"] = rep.leading_identity_residual;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

json to_json(const AdaptedFrame& f) {
    json j;
    j["p"] = f.p;
    j["q"] = f.q;
    j["r"] = f.r;
    j["l"] = f.l;
    j["l_L"] = f.l_L;
    j["p_bar"] = f.p_bar;
    j["q_bar"] = f.q_bar;
    j["pL_bar"] = f.pL_bar;
    j["qL_bar"] = f.qL_bar;
    j["rL_bar"] = f.rL_bar;
    j["nu_L"] = vec_json(f.nu_L);
    j["e1"] = vec_json(f.e1);
    j["e2"] = vec_json(f.e2);
    return j;
}

json to_json(const Mat2& m) {
    return json::array({json::array({m.h11, m.h12}), json::array({m.h21, m.h22})});
}

json to_json(const ExpansionFit& fit) {
    json j;
    j["c_lead"] = fit.c_lead;
    j["c_0"] = fit.c_0;
    j["c_m12"] = fit.c_m12;
    j["c_m1"] = fit.c_m1;
    j["fit_residual"] = fit.fit_residual;
    return j;
}

json discrepancy_log() {
    json out;
    out["brackets"] = json::array();
    out["connection"] = json::array();
    out["riemann"] = json::array();
    for (ModelSpaceId space : {ModelSpaceId::AffineGroup, ModelSpaceId::E11}) {
        json b = to_json(diff_bracket_tables(space));
        b["space"] = space_name(space);
        out["brackets"].push_back(b);
        for (DistributionKind dist : {DistributionKind::H1, DistributionKind::H2}) {
            // a generic rational grid point pins the rational-function identity
            const Rat param(3, 10), L(4);
            out["connection"].push_back(to_json(diff_connection_tables(space, dist, param, L)));
            out["riemann"].push_back(to_json(diff_riemann_tables(space, dist, param, L)));
        }
    }
    return out;
}

std::string format_table(const ConnectionTable& t) {
    static const char* names[3] = {"X1", "X2", "X3"};
    std::ostringstream os;
    os.setf(std::ios::fmtflags(0), std::ios::floatfield);
    os.precision(12);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const FrameVec& v = t(i, j);
            auto z = [](double x) { return x == 0.0 ? 0.0 : x; };
            os << "nabla_" << names[i] << " " << names[j] << " = (" << z(v[0]) << ", " << z(v[1])
               << ", " << z(v[2]) << ")";
            os << (j == 2 ? "\n" : "   ");
        }
    }
    return os.str();
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        const bool quote = f.find_first_of(",\"\r\n") != std::string::npos;
        if (quote) {
            out += '"';
            for (char c : f) {
                if (c == '"') out += '"';
                out += c;
            }
            out += '"';
        } else {
            out += f;
        }
        if (i + 1 < fields.size()) out += ',';
    }
    out += "\r\n";
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << content;
}

}  // namespace srgb

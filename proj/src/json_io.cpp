#include "teslerforge/json_io.hpp"

#include <utility>

namespace teslerforge::io {

namespace {

const json& expect_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(errc::parse_error, std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int expect_size(const json& j, const char* key) {
    const json& field = expect_field(j, key);
    if (!field.is_number_integer() || field.get<int>() < 1) {
        throw Error(errc::parse_error, std::string("field '") + key + "' must be a positive integer");
    }
    return field.get<int>();
}

std::vector<RatVector> rows_from_json(const json& j, int n, bool tilde) {
    const json& rows = expect_field(j, "rows");
    const std::size_t expected_rows = static_cast<std::size_t>(tilde ? n - 1 : n);
    if (!rows.is_array() || rows.size() != expected_rows) {
        throw Error(errc::parse_error, "unexpected row count");
    }
    std::vector<RatVector> out;
    for (int i = 1; i <= static_cast<int>(expected_rows); ++i) {
        const json& row = rows[static_cast<std::size_t>(i - 1)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n - i + 1)) {
            throw Error(errc::parse_error, "unexpected row length");
        }
        out.push_back(rat_vector_from_json(row));
    }
    return out;
}

}  // namespace

json rat_to_json(const Rat& r) {
    return rat_to_string(r);
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw Error(errc::parse_error, "rational must be a string");
    return parse_rat(j.get<std::string>());
}

json rat_vector_to_json(const RatVector& v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(rat_to_json(r));
    return out;
}

RatVector rat_vector_from_json(const json& j) {
    if (!j.is_array()) throw Error(errc::parse_error, "expected an array of rationals");
    RatVector out;
    for (const json& item : j) out.push_back(rat_from_json(item));
    return out;
}

json upper_tri_to_json(const UpperTri& m) {
    json rows = json::array();
    for (int i = 1; i <= m.n(); ++i) {
        json row = json::array();
        for (int j = i; j <= m.n(); ++j) row.push_back(rat_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"rows", std::move(rows)}};
}

UpperTri upper_tri_from_json(const json& j) {
    const int n = expect_size(j, "n");
    UpperTri out(n);
    const auto rows = rows_from_json(j, n, false);
    for (int i = 1; i <= n; ++i) {
        for (int col = i; col <= n; ++col) out.set(i, col, rows[i - 1][col - i]);
    }
    return out;
}

json tilde_upper_tri_to_json(const TildeUpperTri& b) {
    json rows = json::array();
    for (int i = 1; i <= b.n() - 1; ++i) {
        json row = json::array();
        for (int j = i; j <= b.n(); ++j) row.push_back(rat_to_json(b.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", b.n()}, {"rows", std::move(rows)}};
}

TildeUpperTri tilde_upper_tri_from_json(const json& j) {
    const int n = expect_size(j, "n");
    if (n < 2) throw Error(errc::parse_error, "projected matrices need n >= 2");
    TildeUpperTri out(n);
    const auto rows = rows_from_json(j, n, true);
    for (int i = 1; i <= n - 1; ++i) {
        for (int col = i; col <= n; ++col) out.set(i, col, rows[i - 1][col - i]);
    }
    return out;
}

HookVector hook_vector_from_json(const json& j) {
    if (j.is_object()) return rat_vector_from_json(expect_field(j, "a"));
    return rat_vector_from_json(j);
}

json net_flow_to_json(const flow::NetFlow& a) {
    return json{{"n", a.n}, {"a", rat_vector_to_json(a.a)}};
}

flow::NetFlow net_flow_from_json(const json& j) {
    if (j.is_array()) {
        RatVector values = rat_vector_from_json(j);
        return {static_cast<int>(values.size()), std::move(values)};
    }
    const int n = expect_size(j, "n");
    RatVector values = rat_vector_from_json(expect_field(j, "a"));
    if (static_cast<int>(values.size()) != n) {
        throw Error(errc::parse_error, "net flow length does not match n");
    }
    return {n, std::move(values)};
}

json hrep_to_json(const polyhedra::HRep& h) {
    auto rows_to_json = [](const std::vector<polyhedra::LinearRow>& rows) {
        json out = json::array();
        for (const auto& row : rows) {
            out.push_back(json{{"coeffs", rat_vector_to_json(row.coeffs)},
                               {"rhs", rat_to_json(row.rhs)}});
        }
        return out;
    };
    return json{{"dim", h.dim}, {"eq", rows_to_json(h.eq)}, {"ineq", rows_to_json(h.ineq)}};
}

polyhedra::HRep hrep_from_json(const json& j) {
    polyhedra::HRep h;
    h.dim = expect_size(j, "dim");
    auto rows_from = [&](const char* key) {
        std::vector<polyhedra::LinearRow> rows;
        const json& field = expect_field(j, key);
        if (!field.is_array()) throw Error(errc::parse_error, "constraint rows must be an array");
        for (const json& row : field) {
            rows.push_back({rat_vector_from_json(expect_field(row, "coeffs")),
                            rat_from_json(expect_field(row, "rhs"))});
        }
        return rows;
    };
    h.eq = rows_from("eq");
    h.ineq = rows_from("ineq");
    return h;
}

json vrep_to_json(const polyhedra::VRep& v) {
    json vertices = json::array();
    for (const auto& vertex : v.vertices) vertices.push_back(rat_vector_to_json(vertex));
    json adjacency = json::array();
    for (const auto& [a, b] : v.adjacency) adjacency.push_back(json::array({a, b}));
    return json{{"vertices", std::move(vertices)}, {"adjacency", std::move(adjacency)}};
}

polyhedra::VRep vrep_from_json(const json& j) {
    polyhedra::VRep v;
    for (const json& vertex : expect_field(j, "vertices")) {
        v.vertices.push_back(rat_vector_from_json(vertex));
    }
    if (j.contains("adjacency")) {
        for (const json& pair : j.at("adjacency")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw Error(errc::parse_error, "adjacency entries must be index pairs");
            }
            v.adjacency.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
    }
    return v;
}

json deforming_vector_to_json(const defcone::DeformingVector& dv) {
    return json{{"a", rat_vector_to_json(dv.a)}, {"btilde", tilde_upper_tri_to_json(dv.btilde)}};
}

defcone::DeformingVector deforming_vector_from_json(const json& j) {
    return {rat_vector_from_json(expect_field(j, "a")),
            tilde_upper_tri_from_json(expect_field(j, "btilde"))};
}

json face_index_to_json(const defcone::FaceIndex& f) {
    return json{{"n", f.n}, {"indices", f.indices}};
}

json tesler_compare_to_json(const defcone::TeslerCompare& c) {
    const char* verdict = "neither";
    if (c.relation == defcone::TeslerRelation::NormallyEquivalent) verdict = "normally_equivalent";
    if (c.relation == defcone::TeslerRelation::Deformation) verdict = "deformation";
    return json{{"verdict", verdict},
                {"certificate",
                 json{{"index_a", face_index_to_json(c.index_a)},
                      {"index_b", face_index_to_json(c.index_b)}}}};
}

json deform_check_to_json(const polyhedra::DeformCheck& c) {
    json out;
    switch (c.verdict) {
        case polyhedra::DeformCheck::Verdict::Weak: out["verdict"] = "weak"; break;
        case polyhedra::DeformCheck::Verdict::Strong: out["verdict"] = "strong"; break;
        case polyhedra::DeformCheck::Verdict::NotDeformation:
            out["verdict"] = "not_deformation";
            break;
    }
    if (c.verdict == polyhedra::DeformCheck::Verdict::NotDeformation) {
        json reason;
        switch (c.reason) {
            case polyhedra::DeformCheck::Reason::EmptyQ: reason["code"] = "empty_q"; break;
            case polyhedra::DeformCheck::Reason::NonTight:
                reason["code"] = "non_tight";
                reason["row"] = c.offending_row;
                break;
            case polyhedra::DeformCheck::Reason::NonVertexIntersection:
                reason["code"] = "non_vertex_intersection";
                reason["vertex"] = c.offending_vertex;
                break;
            case polyhedra::DeformCheck::Reason::None: break;
        }
        out["reason"] = std::move(reason);
    } else {
        out["vertex_map"] = c.vertex_map;
    }
    return out;
}

json flow_verdict_to_json(const flow::FlowVerdict& v) {
    json certificate;
    switch (v.certificate.kind) {
        case flow::FlowCertificate::Kind::PointPolytope:
            certificate["kind"] = "point_polytope";
            break;
        case flow::FlowCertificate::Kind::AllNonnegTail:
            certificate["kind"] = "all_nonneg_tail";
            break;
        case flow::FlowCertificate::Kind::NegativeTail:
            certificate["kind"] = "negative_tail";
            certificate["m"] = v.certificate.m;
            certificate["eta_m"] = rat_to_json(v.certificate.eta_m);
            certificate["neg_a_m"] = rat_to_json(v.certificate.neg_a_m);
            break;
        case flow::FlowCertificate::Kind::NonRedundantDiagonal:
            certificate["kind"] = "non_redundant_diagonal";
            certificate["witness"] = upper_tri_to_json(*v.certificate.witness);
            break;
    }
    json out{{"is_deformation", v.is_deformation},
             {"l", v.l},
             {"voided", v.voided},
             {"certificate", std::move(certificate)}};
    if (v.a_hat) out["a_hat"] = net_flow_to_json(*v.a_hat);
    return out;
}

}  // namespace teslerforge::io

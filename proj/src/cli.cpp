#include "teslerforge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "teslerforge/defcone.hpp"
#include "teslerforge/flow.hpp"
#include "teslerforge/json_io.hpp"
#include "teslerforge/tesler.hpp"

namespace teslerforge::cli {

namespace {

using io::json;

struct Inputs {
    std::string a, b, a0, btilde, matrix, vertex, hrep, objective;
    std::string out_file;
    bool pretty = false;
    int max_n = tesler::kDefaultMaxN;
    int max_dim = polyhedra::kDefaultMaxDim;
};

// Flag values starting with '@' name a file holding the payload.
std::string payload(const std::string& raw) {
    if (raw.empty() || raw[0] != '@') return raw;
    std::ifstream in(raw.substr(1));
    if (!in) throw Error(errc::parse_error, "cannot read input file '" + raw.substr(1) + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_payload(const std::string& raw, const char* what) {
    const std::string text = payload(raw);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw Error(errc::parse_error, std::string("malformed JSON for ") + what);
    }
    return j;
}

HookVector require_hook_vector(const Inputs& in) {
    if (in.a.empty()) throw Error(errc::parse_error, "--a is required");
    return io::hook_vector_from_json(parse_payload(in.a, "--a"));
}

flow::NetFlow require_net_flow(const Inputs& in) {
    if (in.a.empty()) throw Error(errc::parse_error, "--a is required");
    return io::net_flow_from_json(parse_payload(in.a, "--a"));
}

defcone::DeformingVector require_dv(const Inputs& in) {
    if (in.a.empty() || in.btilde.empty()) {
        throw Error(errc::parse_error, "--a and --btilde are required");
    }
    return {io::hook_vector_from_json(parse_payload(in.a, "--a")),
            io::tilde_upper_tri_from_json(parse_payload(in.btilde, "--btilde"))};
}

UpperTri require_matrix(const std::string& raw, const char* what) {
    if (raw.empty()) throw Error(errc::parse_error, std::string(what) + " is required");
    return io::upper_tri_from_json(parse_payload(raw, what));
}

polyhedra::HRep require_hrep(const Inputs& in) {
    if (in.hrep.empty()) throw Error(errc::parse_error, "--hrep is required");
    return io::hrep_from_json(parse_payload(in.hrep, "--hrep"));
}

/// Optional base hook sum vector: must be strictly positive and of matching
/// size. Every positive choice defines the same deformation cone, so it is
/// only validated.
void validate_a0(const Inputs& in, int n) {
    if (in.a0.empty()) return;
    const HookVector a0 = io::hook_vector_from_json(parse_payload(in.a0, "--a0"));
    if (static_cast<int>(a0.size()) != n) {
        throw Error(errc::size_mismatch, "--a0 size does not match the input");
    }
    for (const Rat& x : a0) {
        if (x <= 0) throw Error(errc::negative_input, "--a0 must be strictly positive");
    }
}

json cmd_tes_vertices(const Inputs& in) {
    const auto vertices = tesler::tesler_vertices(require_hook_vector(in), in.max_n);
    json out = json::array();
    for (const UpperTri& v : vertices) out.push_back(io::upper_tri_to_json(v));
    return json{{"count", vertices.size()}, {"vertices", std::move(out)}};
}

json cmd_tes_edges(const Inputs& in) {
    const auto vertices = tesler::tesler_vertices(require_hook_vector(in), in.max_n);
    json vertex_json = json::array();
    for (const UpperTri& v : vertices) vertex_json.push_back(io::upper_tri_to_json(v));
    json edges = json::array();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (tesler::are_adjacent(vertices[i], vertices[j])) {
                edges.push_back(
                    json{{"endpoints", json::array({i, j})},
                         {"vector", io::upper_tri_to_json(
                                        tesler::edge_vector(vertices[i], vertices[j]))}});
            }
        }
    }
    return json{{"vertices", std::move(vertex_json)}, {"edges", std::move(edges)}};
}

json cmd_tes_hooksum(const Inputs& in) {
    const UpperTri m = require_matrix(in.matrix, "--matrix");
    return json{{"eta", io::rat_vector_to_json(hook_vector(m))}};
}

json cmd_tes_deform_map(const Inputs& in) {
    const UpperTri v = require_matrix(in.vertex, "--vertex");
    const HookVector a = require_hook_vector(in);
    return json{{"image", io::upper_tri_to_json(tesler::support_map_vertex(v, a))}};
}

json cmd_defcone_check(const Inputs& in) {
    const auto dv = require_dv(in);
    validate_a0(in, dv.n());
    return json{{"contains", defcone::cone_contains(dv)}};
}

json cmd_defcone_face(const Inputs& in) {
    if (!in.btilde.empty()) {
        const auto dv = require_dv(in);
        validate_a0(in, dv.n());
        return io::face_index_to_json(defcone::cone_face_membership(dv));
    }
    return io::face_index_to_json(defcone::face_index(require_hook_vector(in)));
}

json cmd_defcone_translate(const Inputs& in) {
    const auto dv = require_dv(in);
    validate_a0(in, dv.n());
    const auto translate = defcone::tesler_translate(dv);
    return json{{"a_T", io::rat_vector_to_json(translate.hook_sums)},
                {"t", io::upper_tri_to_json(translate.shift)}};
}

json cmd_defcone_deform_vertex(const Inputs& in) {
    const auto dv = require_dv(in);
    validate_a0(in, dv.n());
    const UpperTri v = require_matrix(in.vertex, "--vertex");
    return json{{"image", io::upper_tri_to_json(defcone::deform_vertex(v, dv))}};
}

json cmd_defcone_compare(const Inputs& in) {
    if (in.a.empty() || in.b.empty()) throw Error(errc::parse_error, "--a and --b are required");
    const HookVector a = io::hook_vector_from_json(parse_payload(in.a, "--a"));
    const HookVector b = io::hook_vector_from_json(parse_payload(in.b, "--b"));
    return io::tesler_compare_to_json(defcone::tesler_deforms(a, b));
}

json cmd_flow_feasible(const Inputs& in) {
    return json{{"feasible", flow::is_feasible(require_net_flow(in))}};
}

json cmd_flow_critical(const Inputs& in) {
    const auto info = flow::critical_position(require_net_flow(in));
    return json{{"l", info.l}, {"voided", info.voided}};
}

json cmd_flow_reduce(const Inputs& in) {
    const auto reduced = flow::translate_reduce(require_net_flow(in));
    if (std::holds_alternative<UpperTri>(reduced)) {
        return json{{"point", io::upper_tri_to_json(std::get<UpperTri>(reduced))}};
    }
    const auto& r = std::get<flow::ReducedFlow>(reduced);
    return json{{"a_hat", io::net_flow_to_json(r.a_hat)}, {"t", io::upper_tri_to_json(r.shift)}};
}

json cmd_flow_witness(const Inputs& in) {
    const auto a = require_net_flow(in);
    int m = 0;
    for (int i = 1; i <= a.n && m == 0; ++i) {
        if (a.a[i - 1] < 0) m = i;
    }
    if (m == 0) {
        throw Error(errc::precondition_violated, "the net flow vector has no negative entry");
    }
    return json{{"m", m}, {"flow", io::upper_tri_to_json(flow::witness_flow(a, m))}};
}

json cmd_flow_tight(const Inputs& in) {
    const auto tight = flow::tight_description(require_net_flow(in));
    if (tight.representable()) {
        return json{{"representable", true},
                    {"btilde", io::tilde_upper_tri_to_json(*tight.btilde)}};
    }
    return json{{"representable", false}, {"witness", io::upper_tri_to_json(*tight.witness)}};
}

json cmd_flow_verdict(const Inputs& in) {
    const auto a = require_net_flow(in);
    validate_a0(in, a.n);
    return io::flow_verdict_to_json(flow::is_deformation_of_tesler(a));
}

json cmd_oracle_vertices(const Inputs& in) {
    return io::vrep_to_json(polyhedra::enumerate_vertices(require_hrep(in), in.max_dim));
}

json cmd_oracle_minimize(const Inputs& in) {
    if (in.objective.empty()) throw Error(errc::parse_error, "--objective is required");
    const auto h = require_hrep(in);
    const RatVector c = io::rat_vector_from_json(parse_payload(in.objective, "--objective"));
    const auto [value, argmin] = polyhedra::minimize(h, c, in.max_dim);
    return json{{"value", io::rat_to_json(value)}, {"argmin", io::rat_vector_to_json(argmin)}};
}

json cmd_oracle_is_deformation(const Inputs& in) {
    if (in.a.empty() || in.b.empty()) {
        throw Error(errc::parse_error, "--a (equality rhs) and --b (inequality rhs) are required");
    }
    const auto h = require_hrep(in);
    const auto v = polyhedra::enumerate_vertices(h, in.max_dim);
    const RatVector eq_rhs = io::rat_vector_from_json(parse_payload(in.a, "--a"));
    const RatVector ineq_rhs = io::rat_vector_from_json(parse_payload(in.b, "--b"));
    return io::deform_check_to_json(polyhedra::is_deformation(h, v, eq_rhs, ineq_rhs, in.max_dim));
}

bool looks_like_matrix(const json& j) {
    return j.is_object() && j.size() == 2 && j.contains("n") && j.contains("rows");
}

void render_matrix(const json& j, std::ostream& out, const std::string& indent) {
    std::vector<std::vector<std::string>> rows;
    std::size_t width = 1;
    for (const json& row : j.at("rows")) {
        rows.emplace_back();
        for (const json& cell : row) {
            rows.back().push_back(cell.get<std::string>());
            width = std::max(width, rows.back().back().size());
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << indent << "[";
        out << std::string(i * (width + 1), ' ');
        for (const std::string& cell : rows[i]) {
            out << " " << std::string(width - cell.size(), ' ') << cell;
        }
        out << " ]\n";
    }
}

// Human-oriented rendering behind --pretty: matrices in bracket layout,
// everything else as key/value lines. Not a stable format.
void render_pretty(const json& j, std::ostream& out, const std::string& indent) {
    if (looks_like_matrix(j)) {
        render_matrix(j, out, indent);
        return;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured()) {
                out << indent << key << ":\n";
                render_pretty(value, out, indent + "  ");
            } else {
                out << indent << key << ": " << value.dump() << "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        std::size_t idx = 0;
        for (const json& item : j) {
            if (item.is_structured()) {
                out << indent << "- [" << idx << "]\n";
                render_pretty(item, out, indent + "  ");
            } else {
                out << indent << "- " << item.dump() << "\n";
            }
            ++idx;
        }
        return;
    }
    out << indent << j.dump() << "\n";
}

using Handler = json (*)(const Inputs&);

struct Dispatch {
    const char* group;
    const char* name;
    const char* help;
    Handler handler;
    unsigned flags;  // bitmask over the option set below
};

enum Flag : unsigned {
    kA = 1u << 0,
    kB = 1u << 1,
    kA0 = 1u << 2,
    kBtilde = 1u << 3,
    kMatrix = 1u << 4,
    kVertex = 1u << 5,
    kHrep = 1u << 6,
    kObjective = 1u << 7,
};

constexpr Dispatch kCommands[] = {
    {"tes", "vertices", "enumerate the vertices of Tes_n(a)", cmd_tes_vertices, kA},
    {"tes", "edges", "vertices, adjacency, and edge vectors of Tes_n(a)", cmd_tes_edges, kA},
    {"tes", "hooksum", "hook sum vector of a matrix", cmd_tes_hooksum, kMatrix},
    {"tes", "deform-map", "support-preserving vertex map into Tes_n(a)", cmd_tes_deform_map,
     kA | kVertex},
    {"defcone", "check", "deformation cone membership", cmd_defcone_check, kA | kBtilde | kA0},
    {"defcone", "face", "face of the cone containing the input", cmd_defcone_face,
     kA | kBtilde | kA0},
    {"defcone", "translate", "write Q(a, btilde) as a translated Tesler polytope",
     cmd_defcone_translate, kA | kBtilde | kA0},
    {"defcone", "deform-vertex", "vertex correspondence onto Q(a, btilde)",
     cmd_defcone_deform_vertex, kA | kBtilde | kVertex | kA0},
    {"defcone", "compare", "relation between Tes_n(a) and Tes_n(b)", cmd_defcone_compare,
     kA | kB},
    {"flow", "feasible", "nonemptiness of Flow_n(a)", cmd_flow_feasible, kA},
    {"flow", "critical", "critical position and voided entries", cmd_flow_critical, kA},
    {"flow", "reduce", "strip forced entries by translation", cmd_flow_reduce, kA},
    {"flow", "witness", "witness flow for the first negative tail entry", cmd_flow_witness, kA},
    {"flow", "tight", "tight right-hand side or non-redundancy witness", cmd_flow_tight, kA},
    {"flow", "verdict", "is Flow_n(a) a deformation of a positive Tesler polytope",
     cmd_flow_verdict, kA | kA0},
    {"oracle", "vertices", "exact vertex enumeration of an H-representation",
     cmd_oracle_vertices, kHrep},
    {"oracle", "minimize", "exact linear minimization over a polytope", cmd_oracle_minimize,
     kHrep | kObjective},
    {"oracle", "is-deformation", "deformation check for replaced right-hand sides",
     cmd_oracle_is_deformation, kHrep | kA | kB},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Inputs in;
    if (const char* env = std::getenv("TESLERFORGE_MAX_DIM")) {
        const int v = std::atoi(env);
        if (v > 0) in.max_dim = v;
    }

    CLI::App app{"Exact toolkit for Tesler polytopes, deformation cones, and flow polytopes",
                 "teslerforge"};
    app.require_subcommand(1);

    Handler selected = nullptr;

    for (const char* group : {"tes", "defcone", "flow", "oracle"}) {
        app.add_subcommand(group)->require_subcommand(1);
    }
    for (const Dispatch& entry : kCommands) {
        CLI::App* cmd = app.get_subcommand(entry.group)->add_subcommand(entry.name, entry.help);
        if (entry.flags & kA) cmd->add_option("--a", in.a, "hook sum / net flow vector (JSON)");
        if (entry.flags & kB) cmd->add_option("--b", in.b, "second vector (JSON)");
        if (entry.flags & kA0) cmd->add_option("--a0", in.a0, "base hook sum vector (JSON)");
        if (entry.flags & kBtilde) cmd->add_option("--btilde", in.btilde, "projected matrix (JSON)");
        if (entry.flags & kMatrix) cmd->add_option("--matrix", in.matrix, "matrix (JSON)");
        if (entry.flags & kVertex) cmd->add_option("--vertex", in.vertex, "vertex matrix (JSON)");
        if (entry.flags & kHrep) cmd->add_option("--hrep", in.hrep, "H-representation (JSON)");
        if (entry.flags & kObjective) {
            cmd->add_option("--objective", in.objective, "objective vector (JSON)");
        }
        cmd->add_option("--out", in.out_file, "write the JSON result to a file");
        cmd->add_flag("--pretty", in.pretty, "render matrices in bracket layout");
        cmd->add_option("--max-n", in.max_n, "cap for enumeration by matrix size");
        const Handler handler = entry.handler;
        cmd->callback([&selected, handler] { selected = handler; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        if (selected == nullptr) throw CLI::CallForHelp();
        const json result = selected(in);

        std::ostringstream rendered;
        if (in.pretty) {
            render_pretty(result, rendered, "");
        } else {
            rendered << result.dump(2) << "\n";
        }
        if (!in.out_file.empty()) {
            std::ofstream file(in.out_file);
            if (!file) throw Error(errc::parse_error, "cannot write '" + in.out_file + "'");
            file << rendered.str();
        } else {
            out << rendered.str();
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        const json error{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        out << error.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        const json error{{"error", {{"code", "internal_error"}, {"message", e.what()}}}};
        out << error.dump(2) << "\n";
        return 2;
    }
}

}  // namespace teslerforge::cli

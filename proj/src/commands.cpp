#include "polyadj/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "polyadj/io.hpp"
#include "polyadj/matsui.hpp"
#include "polyadj/reductions.hpp"
#include "polyadj/witness.hpp"

namespace polyadj::cli {

const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::PropertyFailed: return "property-failed";
        case Status::InputError: return "input-error";
    }
    return "?";
}

ReduceKind parse_reduce_kind(const std::string& name) {
    if (name == "stable-part") return ReduceKind::StablePart;
    if (name == "part-npadj") return ReduceKind::PartNPadj;
    if (name == "npadj-dcp") return ReduceKind::NPadjDcp;
    if (name == "chain") return ReduceKind::Chain;
    throw Error(ErrorCode::InvalidArgument, "unknown reduction kind '" + name + "'");
}

namespace {

// Runs `body`, mapping library errors onto the exit-status contract.
CommandResult run(const char* command, const std::function<CommandResult()>& body) {
    try {
        CommandResult r = body();
        Payload out;
        out["command"] = command;
        out["status"] = status_name(r.status);
        out.update(r.payload);
        r.payload = std::move(out);
        return r;
    } catch (const Error& e) {
        CommandResult r;
        r.status = is_defect(e.code()) ? Status::PropertyFailed : Status::InputError;
        r.payload["command"] = command;
        r.payload["status"] = status_name(r.status);
        r.payload["error"]["code"] = error_name(e.code());
        r.payload["error"]["message"] = e.what();
        if (e.index()) r.payload["error"]["index"] = *e.index();
        return r;
    }
}

Payload index_list(const IndexSet& s) {
    Payload out = Payload::array();
    for (auto i : s) out.push_back(i + 1);
    return out;
}

// space-separated, same convention as the map rows
std::string rational_list(const RationalVector& v) {
    std::string out;
    for (const auto& q : v) out += (out.empty() ? "" : " ") + to_string(q);
    return out;
}

Payload lines_of(const std::string& text) {
    Payload out = Payload::array();
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

Payload hull_support(const HullCertificate& cert, const std::vector<BitVector>& points) {
    Payload out = Payload::array();
    for (const auto& [idx, w] : cert.support) {
        out.push_back(Payload{{"vertex", points[idx].to_string()}, {"weight", to_string(w)}});
    }
    return out;
}

Payload artifact_payload(const std::string& kind, const ReductionArtifact& art) {
    Payload p;
    p["kind"] = kind;
    p["source_family"] = family_name(art.source.family());
    p["target_family"] = family_name(art.target.family());
    p["source_dim"] = dimension(art.source);
    p["target_dim"] = dimension(art.target);
    if (art.target.has_matrix()) {
        p["target_shape"] = {art.target.matrix().rows(), art.target.matrix().cols()};
    }
    p["target_code"] = lines_of(io::format_code(art.target));
    Payload rows = Payload::array();
    const auto& t = art.map.matrix();
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::string row;
        for (const auto& q : t[r]) row += to_string(q) + " ";
        row += "| " + to_string(art.map.offset()[r]);
        rows.push_back(row);
    }
    p["map"] = rows;
    Payload fixes = Payload::array();
    for (auto [coord, value] : art.face_fixes) fixes.push_back(std::to_string(coord) + "=" + std::to_string(value));
    p["face_fixes"] = fixes;
    return p;
}

Payload report_payload(const ReductionReport& rep) {
    return Payload{{"image_equals_face_slice", rep.image_equals_face_slice},
                   {"injective", rep.injective},
                   {"face_is_supported", rep.face_is_supported},
                   {"source_vertices", rep.source_vertices},
                   {"face_vertices", rep.face_vertices},
                   {"source_dim", rep.source_dim},
                   {"target_dim", rep.target_dim},
                   {"source_code_len", rep.source_code_len},
                   {"target_code_len", rep.target_code_len}};
}

BitVector member_vertex(const PolytopeCode& code, const std::string& text, const char* which) {
    BitVector x = BitVector::from_string(text);
    if (!membership(code, x)) {
        throw Error(ErrorCode::VertexNotInSet, std::string(which) + " = " + text + " is not a vertex of the polytope");
    }
    return x;
}

}  // namespace

CommandResult cmd_enumerate(Family family, const std::filesystem::path& input, bool count_only, const Options& opts) {
    return run("enumerate", [&] {
        PolytopeCode code = io::read_code(family, input);
        auto vertices = enumerate_vertices(code, opts.max_dim);
        CommandResult r;
        r.payload["family"] = family_name(family);
        r.payload["dimension"] = dimension(code);
        r.payload["count"] = vertices.size();
        if (!count_only) {
            Payload list = Payload::array();
            for (const auto& v : vertices) list.push_back(v.to_string());
            r.payload["vertices"] = list;
        }
        return r;
    });
}

CommandResult cmd_adjacent(Family family, const std::filesystem::path& input, const std::string& u, const std::string& v,
                           const Options& opts) {
    return run("adjacent", [&] {
        PolytopeCode code = io::read_code(family, input);
        validate_code(code);
        BitVector xu = member_vertex(code, u, "u");
        BitVector xv = member_vertex(code, v, "v");
        if (xu == xv) throw Error(ErrorCode::EqualVertices, "u and v are the same vertex");
        auto vertices = enumerate_vertices(code, opts.max_dim);
        auto verdict = are_adjacent(vertices, xu, xv);

        CommandResult r;
        r.payload["family"] = family_name(family);
        r.payload["u"] = u;
        r.payload["v"] = v;
        r.payload["vertex_count"] = vertices.size();
        r.payload["adjacent"] = verdict.adjacent;
        Payload cert;
        if (verdict.face) {
            cert["kind"] = "face";
            cert["normal"] = rational_list(verdict.face->normal);
            cert["offset"] = to_string(verdict.face->offset);
        } else {
            cert["kind"] = "segment";
            cert["weight_u"] = to_string(verdict.segment->weight_u);
            cert["support"] = hull_support(verdict.segment->hull, vertices);
        }
        r.payload["certificate"] = cert;
        return r;
    });
}

CommandResult cmd_matsui(const std::filesystem::path& input, const Options& opts) {
    return run("matsui", [&] {
        BinaryMatrix a = io::read_matrix(input);
        auto rep = matsui_check(a, opts.max_dim);
        auto [x0, x0bar] = special_vertices(a);
        CommandResult r;
        r.status = rep.criterion_holds ? Status::Ok : Status::PropertyFailed;
        r.payload["rows"] = a.rows();
        r.payload["cols"] = a.cols();
        r.payload["part_empty"] = rep.part_empty;
        r.payload["x0_x0bar_adjacent"] = rep.x0_x0bar_adjacent;
        r.payload["criterion_holds"] = rep.criterion_holds;
        r.payload["part_vertices"] = rep.part_vertices;
        r.payload["npadj_vertices"] = rep.npadj_vertices;
        r.payload["x0"] = x0.to_string();
        r.payload["x0bar"] = x0bar.to_string();
        return r;
    });
}

CommandResult cmd_reduce(ReduceKind kind, const std::filesystem::path& input, bool verify, const Options& opts,
                         const std::optional<std::filesystem::path>& output) {
    return run("reduce", [&] {
        std::vector<std::pair<std::string, ReductionArtifact>> stages;
        switch (kind) {
            case ReduceKind::StablePart: stages.emplace_back("stable-part", stable_to_part(io::read_graph(input))); break;
            case ReduceKind::PartNPadj: stages.emplace_back("part-npadj", part_to_npadj(io::read_matrix(input))); break;
            case ReduceKind::NPadjDcp: stages.emplace_back("npadj-dcp", npadj_to_dcp(io::read_matrix(input))); break;
            case ReduceKind::Chain: {
                auto chain = reduction_chain(io::read_graph(input));
                stages.emplace_back("stable-part", std::move(chain.stable_part));
                stages.emplace_back("part-npadj", std::move(chain.part_npadj));
                stages.emplace_back("npadj-dcp", std::move(chain.npadj_dcp));
                stages.emplace_back("composed", std::move(chain.composed));
                break;
            }
        }
        CommandResult r;
        Payload list = Payload::array();
        bool all_ok = true;
        for (const auto& [name, art] : stages) {
            Payload p = artifact_payload(name, art);
            if (verify) {
                auto rep = verify_reduction(art, opts.max_dim);
                all_ok = all_ok && rep.all_passed();
                p["verification"] = report_payload(rep);
            }
            list.push_back(std::move(p));
        }
        r.payload["stages"] = list;
        if (verify) r.payload["verified"] = all_ok;
        if (!all_ok) r.status = Status::PropertyFailed;
        if (output) {
            std::ofstream out(*output);
            if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + output->string() + "'");
            out << io::format_code(stages.back().second.target);
            r.payload["written"] = output->string();
        }
        return r;
    });
}

CommandResult cmd_refute_face(const std::filesystem::path& graph, const std::filesystem::path& pairs_file) {
    return run("refute-face", [&] {
        Graph g = io::read_graph(graph);
        auto pairs = io::read_pairs(pairs_file);
        PairFamily family = build_pair_family(g, pairs);
        TripleChoice choice = find_t(family);
        Witness wit = construct_witness(family, choice);

        CommandResult r;
        r.payload["pairs"] = pairs.size();
        r.payload["working_pairs"] = family.working_count();
        r.payload["I"] = index_list(family.common);
        r.payload["J"] = index_list(family.differ);
        r.payload["j0"] = family.j0 + 1;
        Payload us = Payload::array();
        for (const auto& u : family.u) us.push_back(index_list(u));
        r.payload["U"] = us;
        r.payload["t"] = wit.t;
        r.payload["S"] = index_list(wit.s);
        r.payload["y_star"] = wit.y_star.to_string();
        r.payload["y_star_bar"] = wit.y_star_bar.to_string();
        r.payload["midpoint"] = rational_list(midpoint(wit.y_star, wit.y_star_bar));

        // independent re-check of what construct_witness already enforced
        PolytopeCode stable = PolytopeCode::stable(g);
        bool sum_ok = true;
        for (std::size_t i = 0; i < family.sum.size(); ++i) sum_ok = sum_ok && wit.y_star[i] + wit.y_star_bar[i] == family.sum[i];
        bool distinct = true;
        for (const auto& [a, b] : pairs) {
            if ((a == wit.y_star && b == wit.y_star_bar) || (b == wit.y_star && a == wit.y_star_bar)) distinct = false;
        }
        Payload check{{"y_star_in_stable", membership(stable, wit.y_star)},
                      {"y_star_bar_in_stable", membership(stable, wit.y_star_bar)},
                      {"sum_matches", sum_ok},
                      {"distinct_from_inputs", distinct}};
        r.payload["verification"] = check;
        bool ok = check["y_star_in_stable"].get<bool>() && check["y_star_bar_in_stable"].get<bool>() && sum_ok && distinct;
        if (!ok) r.status = Status::PropertyFailed;
        return r;
    });
}

CommandResult cmd_face_check(Family family, const std::filesystem::path& input, const std::filesystem::path& subset,
                             const Options& opts) {
    return run("face-check", [&] {
        PolytopeCode code = io::read_code(family, input);
        auto vertices = enumerate_vertices(code, opts.max_dim);
        auto face = io::read_vertex_list(subset);
        auto cert = is_face(face, vertices);
        CommandResult r;
        r.payload["family"] = family_name(family);
        r.payload["vertex_count"] = vertices.size();
        r.payload["subset_size"] = face.size();
        r.payload["is_face"] = cert.has_value();
        if (cert) {
            r.payload["certificate"] = Payload{{"normal", rational_list(cert->normal)}, {"offset", to_string(cert->offset)}};
        }
        return r;
    });
}

// ---------------------------------------------------------------- rendering

namespace {

std::string scalar(const Payload& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const Payload& v, int indent, std::string& out) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_array() && !value.empty() && std::all_of(value.begin(), value.end(), [](const Payload& x) { return x.is_number(); })) {
                std::string flat;
                for (const auto& x : value) flat += (flat.empty() ? "" : ", ") + x.dump();
                out += pad + key + ": [" + flat + "]\n";
            } else if (value.is_structured() && !value.empty()) {
                out += pad + key + ":\n";
                render(value, indent + 2, out);
            } else if (value.is_array()) {
                out += pad + key + ": []\n";
            } else {
                out += pad + key + ": " + scalar(value) + "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object()) {
                std::string nested;
                render(item, indent + 2, nested);
                // first line hangs off the dash
                out += pad + "- " + nested.substr(static_cast<std::size_t>(indent) + 2);
            } else if (item.is_array()) {
                std::string flat = "[";
                for (std::size_t i = 0; i < item.size(); ++i) flat += (i ? ", " : "") + scalar(item[i]);
                out += pad + "- " + flat + "]\n";
            } else {
                out += pad + "- " + scalar(item) + "\n";
            }
        }
    } else {
        out += pad + scalar(v) + "\n";
    }
}

}  // namespace

std::string render_text(const Payload& payload) {
    std::string out;
    render(payload, 0, out);
    return out;
}

std::string render_json(const Payload& payload) { return payload.dump(2) + "\n"; }

}  // namespace polyadj::cli

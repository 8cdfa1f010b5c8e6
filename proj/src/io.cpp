#include "plansat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace plansat {

std::string serialize_embedding(const PlaneEmbedding& e) {
    std::ostringstream out;
    out << "pse 1\n";
    out << "n " << e.vertex_count() << "\n";
    for (auto [u, v] : e.graph().edges()) out << "e " << u << " " << v << "\n";
    for (int v = 0; v < e.vertex_count(); ++v) {
        if (e.rotation(v).empty()) continue;
        out << "r " << v << ":";
        for (int w : e.rotation(v)) out << " " << w;
        out << "\n";
    }
    for (const auto& [rep, anchor] : e.anchors()) {
        if (anchor.is_root())
            out << "a " << rep << ": root\n";
        else
            out << "a " << rep << ": " << anchor.x << " " << anchor.y << "\n";
    }
    return out.str();
}

PlaneEmbedding parse_embedding(std::istream& in) {
    std::string line;
    int n = -1;
    bool header = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::vector<int>>> rotations;
    std::map<int, Anchor> anchors;

    auto fail = [](const std::string& msg) -> void {
        throw Error(ErrorCode::ParseError, msg);
    };

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (tag == "pse") {
            int version;
            if (!(ls >> version) || version != 1) fail("unsupported format version" + where());
            header = true;
        } else if (tag == "n") {
            if (!(ls >> n) || n < 0) fail("bad vertex count" + where());
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) fail("bad edge line" + where());
            edges.emplace_back(u, v);
        } else if (tag == "r") {
            std::string vtok;
            if (!(ls >> vtok) || vtok.back() != ':') fail("bad rotation line" + where());
            int v = std::stoi(vtok.substr(0, vtok.size() - 1));
            std::vector<int> rot;
            int w;
            while (ls >> w) rot.push_back(w);
            rotations.emplace_back(v, std::move(rot));
        } else if (tag == "a") {
            std::string rtok;
            if (!(ls >> rtok) || rtok.back() != ':') fail("bad anchor line" + where());
            int rep = std::stoi(rtok.substr(0, rtok.size() - 1));
            std::string first;
            if (!(ls >> first)) fail("bad anchor line" + where());
            if (first == "root") {
                anchors[rep] = Anchor::root();
            } else {
                int y;
                if (!(ls >> y)) fail("bad anchor line" + where());
                anchors[rep] = Anchor::at(std::stoi(first), y);
            }
        } else {
            fail("unknown tag '" + tag + "'" + where());
        }
    }
    if (!header) fail("missing 'pse 1' header");
    if (n < 0) fail("missing vertex count");

    Graph g(n, edges);
    std::vector<std::vector<int>> rot(n);
    for (auto& [v, r] : rotations) {
        if (v < 0 || v >= n) fail("rotation vertex out of range");
        rot[v] = std::move(r);
    }
    try {
        return PlaneEmbedding::create(std::move(g), std::move(rot), std::move(anchors));
    } catch (const Error& err) {
        throw Error(ErrorCode::ParseError, std::string("invalid embedding: ") + err.what());
    }
}

PlaneEmbedding parse_embedding_string(const std::string& text) {
    std::istringstream in(text);
    return parse_embedding(in);
}

PlaneEmbedding load_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return parse_embedding(in);
}

void save_embedding_file(const PlaneEmbedding& e, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << serialize_embedding(e);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

const char* method_name(ConstructionMethod m) {
    switch (m) {
        case ConstructionMethod::greedy: return "greedy";
        case ConstructionMethod::lemma1: return "lemma1";
        case ConstructionMethod::many3: return "many3";
        case ConstructionMethod::auto_dispatch: return "auto";
    }
    return "?";
}

namespace {

std::string face_str(DirEdge id) {
    if (id == kIsolatedRegionId) return "*";
    return std::to_string(id.from) + "->" + std::to_string(id.to);
}

nlohmann::json cert_json(const BoundCertificate& c) {
    nlohmann::json j;
    j["formula"] = c.formula;
    for (auto& [k, v] : c.inputs) j["inputs"][k] = v;
    j["lhs"] = c.lhs.str();
    j["relation"] = relation_str(c.relation);
    j["rhs"] = c.rhs.str();
    j["satisfied"] = c.satisfied;
    j["equality"] = c.equality;
    return j;
}

void cert_text(std::ostream& out, const BoundCertificate& c) {
    out << "certificate " << c.formula << ": " << c.lhs.str() << " " << relation_str(c.relation)
        << " " << c.rhs.str() << " -> " << (c.satisfied ? "satisfied" : "VIOLATED");
    if (c.equality) out << " (equality)";
    out << " [";
    bool first = true;
    for (auto& [k, v] : c.inputs) {
        if (!first) out << " ";
        out << k << "=" << v;
        first = false;
    }
    out << "]\n";
}

}  // namespace

std::string report_certificates(const std::vector<BoundCertificate>& certs, bool json) {
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : certs) j.push_back(cert_json(c));
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "plansat-report 1\nkind bounds\n";
    for (const auto& c : certs) cert_text(out, c);
    return out.str();
}

std::string report_saturation(const SaturationReport& rep, bool json) {
    if (json) {
        nlohmann::json j;
        j["saturated"] = rep.saturated;
        j["addable_count"] = rep.addable_count;
        auto pairs = nlohmann::json::array();
        for (const auto& pv : rep.pair_verdicts) {
            nlohmann::json p;
            p["u"] = pv.pair.u;
            p["v"] = pv.pair.v;
            p["face"] = face_str(pv.pair.face);
            p["embeds"] = pv.embeds;
            if (pv.witness) p["witness"] = pv.witness->map;
            pairs.push_back(std::move(p));
        }
        j["pairs"] = std::move(pairs);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "plansat-report 1\nkind check\n";
    out << "saturated " << (rep.saturated ? "true" : "false") << "\n";
    out << "addable_count " << rep.addable_count << "\n";
    for (const auto& pv : rep.pair_verdicts) {
        out << "pair " << pv.pair.u << " " << pv.pair.v << " face " << face_str(pv.pair.face)
            << " " << (pv.embeds ? "extension-embeds" : "refuted");
        if (pv.embeds && pv.witness) {
            out << " witness";
            for (int m : pv.witness->map) out << " " << m;
        }
        out << "\n";
    }
    return out.str();
}

std::string report_construction(const ConstructionTrace& trace, bool json) {
    if (json) {
        nlohmann::json j;
        j["method"] = method_name(trace.method);
        if (trace.method == ConstructionMethod::auto_dispatch)
            j["dispatched"] = method_name(trace.dispatched);
        j["final_edges"] = trace.final_edges;
        j["edges_added_greedy"] = trace.edges_added_greedy;
        j["phase1_vertices"] = trace.phase1_vertices;
        j["phase2_vertices"] = trace.phase2_vertices;
        j["u_size"] = trace.u_size;
        j["w_size"] = trace.w_size;
        j["extension_edges"] = trace.extension_edges;
        j["face_T"] = face_str(trace.face_T);
        auto certs = nlohmann::json::array();
        for (const auto& c : trace.certificates) certs.push_back(cert_json(c));
        j["certificates"] = std::move(certs);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "plansat-report 1\nkind construct\n";
    out << "method " << method_name(trace.method) << "\n";
    if (trace.method == ConstructionMethod::auto_dispatch)
        out << "dispatched " << method_name(trace.dispatched) << "\n";
    out << "final_edges " << trace.final_edges << "\n";
    out << "edges_added_greedy " << trace.edges_added_greedy << "\n";
    if (trace.method == ConstructionMethod::lemma1 ||
        trace.dispatched == ConstructionMethod::lemma1) {
        out << "phase1_vertices " << trace.phase1_vertices << "\n";
        out << "phase2_vertices " << trace.phase2_vertices << "\n";
    }
    if (trace.method == ConstructionMethod::many3 ||
        trace.dispatched == ConstructionMethod::many3) {
        out << "u_size " << trace.u_size << "\n";
        out << "w_size " << trace.w_size << "\n";
        out << "extension_edges " << trace.extension_edges << "\n";
        out << "face_T " << face_str(trace.face_T) << "\n";
    }
    for (const auto& c : trace.certificates) cert_text(out, c);
    return out.str();
}

std::string report_solver(const SolverResult& result, bool json) {
    if (json) {
        nlohmann::json j;
        j["sat_value"] = result.sat_value;
        j["exhaustive"] = result.exhaustive;
        j["scaffold_index"] = result.scaffold_index;
        auto edges = nlohmann::json::array();
        for (auto [u, v] : result.witness_edges) edges.push_back({u, v});
        j["witness_edges"] = std::move(edges);
        j["stats"]["scaffolds"] = result.stats.scaffolds;
        j["stats"]["subsets"] = result.stats.subsets;
        j["stats"]["arrangements"] = result.stats.arrangements;
        j["stats"]["mono_calls"] = result.stats.mono_calls;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "plansat-report 1\nkind exact\n";
    out << "sat_value " << result.sat_value << "\n";
    out << "exhaustive " << (result.exhaustive ? "true" : "false") << "\n";
    out << "scaffold_index " << result.scaffold_index << "\n";
    out << "stats scaffolds=" << result.stats.scaffolds << " subsets=" << result.stats.subsets
        << " arrangements=" << result.stats.arrangements
        << " mono_calls=" << result.stats.mono_calls << "\n";
    return out.str();
}

std::string report_structure(const StructureReport& rep, const BoundCertificate& deg3,
                             bool json) {
    if (json) {
        nlohmann::json j;
        j["independent_set"] = rep.independent_set;
        j["halfdeg_violations"] = rep.halfdeg_violations;
        j["high_nbr_violations"] = rep.high_nbr_violations;
        j["k5_minus_edge_exception"] = rep.k5_minus_edge_exception;
        j["adj_pair_violations"] = rep.adj_pair_violations;
        j["all_pass"] = rep.all_pass();
        j["deg3_bound"] = cert_json(deg3);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "plansat-report 1\nkind props\n";
    out << "independent_set " << (rep.independent_set ? "pass" : "FAIL") << "\n";
    out << "half_degree " << (rep.halfdeg_violations.empty() ? "pass" : "FAIL") << "\n";
    out << "three_high_neighbors "
        << (rep.high_nbr_violations.empty()
                ? "pass"
                : (rep.k5_minus_edge_exception ? "exception-k5-minus-edge" : "FAIL"))
        << "\n";
    out << "adjacent_high_pair " << (rep.adj_pair_violations.empty() ? "pass" : "FAIL") << "\n";
    cert_text(out, deg3);
    return out.str();
}

}  // namespace plansat

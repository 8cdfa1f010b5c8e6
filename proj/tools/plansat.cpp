#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "plansat/generators.hpp"
#include "plansat/io.hpp"

using namespace plansat;

namespace {

void write_dot(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << to_dot(g);
}

int cmd_gen(const std::string& family, int k, int n, std::uint64_t seed,
            const std::string& of, const std::string& out_path, const std::string& dot) {
    PlaneEmbedding e;
    if (family == "cycle") {
        e = cycle_embedding(n);
    } else if (family == "double_wheel") {
        e = double_wheel(k);
    } else if (family == "kleetope") {
        if (of.empty()) throw Error(ErrorCode::BadParameter, "kleetope needs --of <embedding>");
        e = kleetope(load_embedding_file(of));
    } else if (family == "stacked") {
        e = stacked_triangulation(n, seed);
    } else if (family == "random") {
        e = random_triangulation(n, seed);
    } else if (family == "gk") {
        e = build_Gk(k);
    } else if (family == "hk") {
        e = build_Hk(k);
    } else {
        throw Error(ErrorCode::BadParameter, "unknown family '" + family + "'");
    }
    save_embedding_file(e, out_path);
    if (!dot.empty()) write_dot(e.graph(), dot);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-saturated subgraphs of maximal planar graphs"};
    app.require_subcommand(1);

    std::string family, of, host_path, sub_path, out_path, dot_path, method = "auto";
    int k = 0, n = 0, threads = 1, max_n = 8;
    std::uint64_t seed = 0;
    double time_limit = 0.0;
    bool json = false;

    auto* gen = app.add_subcommand("gen", "generate a graph family embedding");
    gen->add_option("--family", family, "cycle|double_wheel|kleetope|stacked|random|gk|hk")
        ->required();
    gen->add_option("--k", k, "family parameter k");
    gen->add_option("--n", n, "family parameter n");
    gen->add_option("--seed", seed, "random seed (default 0)");
    gen->add_option("--of", of, "input embedding (kleetope)");
    gen->add_option("--out", out_path, "output embedding file")->required();
    gen->add_option("--dot", dot_path, "also write a DOT rendering");

    auto* props = app.add_subcommand("props", "degree-3 structure properties of a host");
    props->add_option("--host", host_path)->required();
    props->add_flag("--json", json);

    auto* check = app.add_subcommand("check", "plane-saturation check of sub against host");
    check->add_option("--host", host_path)->required();
    check->add_option("--sub", sub_path)->required();
    check->add_flag("--json", json);
    check->add_option("--threads", threads, "parallel pair verdicts");

    auto* construct = app.add_subcommand("construct", "build a saturated subgraph of host");
    construct->add_option("--host", host_path)->required();
    construct->add_option("--method", method, "lemma1|many3|auto");
    construct->add_option("--out", out_path, "output embedding file")->required();
    construct->add_option("--dot", dot_path, "also write a DOT rendering");
    construct->add_flag("--json", json);

    auto* exact = app.add_subcommand("exact", "exact saturation number of a tiny host");
    exact->add_option("--host", host_path)->required();
    exact->add_option("--out", out_path, "witness embedding file");
    exact->add_option("--time-limit", time_limit, "seconds before giving up");
    exact->add_option("--max-n", max_n, "raise the size guard (default 8)");
    exact->add_flag("--json", json);

    auto* bounds = app.add_subcommand("bounds", "bound certificates for a host");
    bounds->add_option("--host", host_path)->required();
    bounds->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, k, n, seed, of, out_path, dot_path);

        if (props->parsed()) {
            PlaneEmbedding host = load_embedding_file(host_path);
            StructureReport rep = structure_props(host.graph(), host);
            BoundCertificate deg3 = deg3_bound_check(host.graph());
            std::cout << report_structure(rep, deg3, json);
            return (rep.all_pass() && deg3.satisfied) ? 0 : 1;
        }

        if (check->parsed()) {
            PlaneEmbedding host = load_embedding_file(host_path);
            PlaneEmbedding sub = load_embedding_file(sub_path);
            SaturationReport rep = is_plane_saturated(sub, host.graph(), threads);
            std::cout << report_saturation(rep, json);
            return rep.saturated ? 0 : 1;
        }

        if (construct->parsed()) {
            PlaneEmbedding host = load_embedding_file(host_path);
            std::pair<PlaneEmbedding, ConstructionTrace> result = [&] {
                if (method == "lemma1") return lemma1_construct(host.graph(), host);
                if (method == "many3") return many3_construct(host.graph(), host);
                if (method == "auto") return upper_bound_auto(host.graph());
                throw Error(ErrorCode::BadParameter, "unknown method '" + method + "'");
            }();
            save_embedding_file(result.first, out_path);
            if (!dot_path.empty()) write_dot(result.first.graph(), dot_path);
            std::cout << report_construction(result.second, json);
            return 0;
        }

        if (exact->parsed()) {
            PlaneEmbedding host = load_embedding_file(host_path);
            SolverLimits limits;
            limits.max_n = max_n;
            if (time_limit > 0) limits.time_limit_seconds = time_limit;
            SolverResult result = exact_sat(host.graph(), limits);
            std::cout << report_solver(result, json);
            if (!out_path.empty() && result.witness) save_embedding_file(*result.witness, out_path);
            return 0;
        }

        if (bounds->parsed()) {
            PlaneEmbedding host = load_embedding_file(host_path);
            LowerBounds lb = lower_bounds(host.graph());
            std::vector<BoundCertificate> certs{lb.sixth, lb.sixteenth,
                                                degree_gap_bound(host.graph()),
                                                deg3_bound_check(host.graph())};
            std::cout << report_certificates(certs, json);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

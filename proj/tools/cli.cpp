#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbkit/atlas.hpp"
#include "mbkit/constructions.hpp"
#include "mbkit/json_io.hpp"

namespace {

using nlohmann::json;
using namespace mbk;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification / obstruction / not-found
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::uint64_t seed = 0;
    double tol_zero = 1e-9;
    double tol_nonzero = 1e-8;
    int restarts = 100;
    int max_iters = 500;
    std::string out;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

RealizationCertificate load_certificate(const json& params, const char* key) {
    if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter: ") + key);
    return certificate_from_json(read_json_file(params.at(key).get<std::string>()));
}

void print_certificate_summary(const RealizationCertificate& cert, std::ostream& os) {
    const SymmetricMatrix& m = cert.matrix;
    const Graph& g = cert.graph;
    double zero_max = 0.0, nonzero_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j) {
            if (g.has_edge(i, j))
                nonzero_min = std::min(nonzero_min, std::abs(m(i, j)));
            else
                zero_max = std::max(zero_max, std::abs(m(i, j)));
        }
    if (g.edge_count() == 0) nonzero_min = 0.0;
    os << cert.provenance.name << ": graph6=" << encode_graph6(g) << " n=" << g.vertex_count()
       << " k=" << cert.k << " offpattern-max=" << zero_max << " edge-min=" << nonzero_min
       << " ok\n";
}

RealizationCertificate dispatch_construct(const std::string& name, const json& params,
                                          std::uint64_t seed) {
    if (name == "multipartite-b") {
        return multipartite_three_eigs(PartList(params.at("parts").get<std::vector<int>>()));
    }
    if (name == "path-p2") {
        return path_p2_realization(params.at("n").get<int>());
    }
    if (name == "path-of-cliques") {
        return path_of_cliques(params.at("sizes").get<std::vector<int>>());
    }
    if (name == "canonical-blocks") {
        CliqueBlockSpec spec(params.at("blocks").get<std::vector<std::vector<int>>>());
        std::vector<double> ps;
        if (params.contains("params")) ps = params.at("params").get<std::vector<double>>();
        return canonical_blocks_auto(spec, std::move(ps));
    }
    if (name == "three-cliques") {
        auto sizes = params.at("sizes").get<std::vector<int>>();
        if (sizes.size() != 6) throw std::invalid_argument("three-cliques: need six sizes");
        std::array<int, 6> arr;
        std::copy(sizes.begin(), sizes.end(), arr.begin());
        double t1 = 2.0, t2 = 3.0;
        if (params.contains("t")) {
            auto t = params.at("t").get<std::vector<double>>();
            if (t.size() != 2) throw std::invalid_argument("three-cliques: need two parameters");
            t1 = t[0];
            t2 = t[1];
        }
        return example_three_cliques(arr, t1, t2, seed);
    }
    if (name == "bipartite-hole") {
        HoleParams p;
        p.alpha = params.at("alpha").get<int>();
        p.a = params.at("a").get<std::vector<int>>();
        p.b = params.at("b").get<std::vector<int>>();
        p.w = params.at("w").get<std::vector<double>>();
        return bipartite_hole(p, seed);
    }
    if (name == "two-edges-removed") {
        auto a = params.at("a").get<std::vector<int>>();
        auto b = params.at("b").get<std::vector<int>>();
        auto w = params.at("w").get<std::vector<double>>();
        if (w.size() < 2) throw std::invalid_argument("two-edges-removed: need w1 and w2");
        return two_edges_removed(a, b, w[0], w[1], seed);
    }
    if (name == "join-equal") {
        RealizationCertificate c1 = load_certificate(params, "cert1");
        RealizationCertificate c2 = load_certificate(params, "cert2");
        return join_equal_mb(c1, c2, seed);
    }
    if (name == "join-empty-k") {
        return join_with_empty(load_certificate(params, "cert"), seed);
    }
    if (name == "join-empty-n") {
        return join_empty_n(parse_graph6(params.at("graph6").get<std::string>()), seed);
    }
    if (name == "join-empty-n-1") {
        return join_empty_n_minus_1(parse_graph6(params.at("graph6").get<std::string>()), seed);
    }
    if (name == "join-cliques") {
        RealizationCertificate base = load_certificate(params, "cert");
        GramFactor z = gram_extract(base.matrix, base.k);
        double beta = params.value("beta", z.col_norm_sq() + 1.0);
        return join_with_cliques(base.graph, z, params.at("sizes").get<std::vector<int>>(), beta, seed);
    }
    if (name == "clone") {
        return clone_realization(load_certificate(params, "cert"), params.at("vertex").get<int>());
    }
    if (name == "rescale") {
        return rescale_spectrum(load_certificate(params, "cert"), params.at("mu1").get<double>(),
                                params.at("mu2").get<double>());
    }
    throw std::invalid_argument("unknown construction: " + name);
}

int cmd_construct(const std::string& name, const std::string& params_text, const GlobalOptions& g) {
    json params = params_text.empty() ? json::object() : json::parse(params_text);

    if (name == "ring") {
        double t = params.contains("s") ? params.at("s").get<double>() : params.value("t", 2.0);
        RingMatrix rm = ring_matrix(params.at("k").get<int>(), t);
        json j{{"order", rm.order}, {"param", rm.param}, {"row_norm_sq", rm.row_norm_sq},
               {"entries", rm.m.data()}};
        write_output(j, g.out);
        std::cerr << "ring: k=" << rm.order << " param=" << rm.param << " ok\n";
        return kExitOk;
    }

    RealizationCertificate cert = dispatch_construct(name, params, g.seed);
    cert.tols.zero = g.tol_zero;
    cert.tols.nonzero = g.tol_nonzero;
    revalidate(cert);
    json j = certificate_to_json(cert);
    write_output(j, g.out);
    print_certificate_summary(cert, g.out.empty() ? std::cerr : std::cout);
    return kExitOk;
}

int cmd_verify(const std::string& file) {
    json j = read_json_file(file);
    RealizationCertificate cert = certificate_from_json(j);
    try {
        revalidate(cert);
    } catch (const CertifyError& e) {
        json rep{{"valid", false}, {"error", e.what()}};
        if (!e.pattern.violations.empty()) rep["pattern"] = pattern_report_to_json(e.pattern);
        std::cout << rep.dump(2) << "\n";
        return kExitFailure;
    }
    std::cout << json{{"valid", true}, {"graph6", encode_graph6(cert.graph)}, {"k", cert.k}}.dump(2)
              << "\n";
    return kExitOk;
}

int cmd_bounds(const std::string& graph6, const GlobalOptions& g) {
    Graph gr = parse_graph6(graph6);
    BoundsReport rep = bounds_report(gr);
    write_output(bounds_report_to_json(rep), g.out);
    return rep.obstructions.empty() ? kExitOk : kExitFailure;
}

int cmd_search(const std::string& graph6, std::optional<int> k, bool all_k, const GlobalOptions& g) {
    Graph gr = parse_graph6(graph6);
    SearchConfig cfg;
    cfg.restarts = g.restarts;
    cfg.max_iters = g.max_iters;
    cfg.seed = g.seed;
    cfg.zero_tol = g.tol_zero;
    cfg.nonzero_tol = g.tol_nonzero;

    if (all_k) {
        auto results = achievable_bipartitions(gr, cfg);
        json per_k = json::object();
        std::vector<int> achievable;
        for (const auto& [kk, r] : results) {
            per_k[std::to_string(kk)] = search_result_to_json(r);
            if (r.found) achievable.push_back(kk);
        }
        write_output(json{{"graph6", encode_graph6(gr)}, {"achievable", achievable}, {"runs", per_k}},
                     g.out);
        return achievable.empty() ? kExitFailure : kExitOk;
    }
    if (k) {
        SearchResult r = find_realization(gr, *k, cfg);
        write_output(search_result_to_json(r), g.out);
        return r.found ? kExitOk : kExitFailure;
    }
    MinimalBipartitionResult r = minimal_bipartition(gr, cfg);
    write_output(minimal_bipartition_to_json(r), g.out);
    return r.exact ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mbkit: two-eigenvalue realizations, bounds and search for small graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "global random seed")->envname("MBKIT_SEED");
    app.add_option("--tol-zero", g.tol_zero, "relative tolerance for must-be-zero entries");
    app.add_option("--tol-nonzero", g.tol_nonzero, "relative tolerance for must-be-nonzero entries");
    app.add_option("--restarts", g.restarts, "search restarts");
    app.add_option("--max-iters", g.max_iters, "search iterations per restart");
    app.add_option("--out", g.out, "output file (default: stdout)");

    std::string name, params_text, file, graph6, catalog, out_dir;
    std::optional<int> k_opt;
    bool all_k = false;

    auto* construct = app.add_subcommand("construct", "build a certificate by construction name");
    construct->add_option("name", name, "construction name")->required();
    construct->add_option("params", params_text, "JSON parameter object");

    auto* verify = app.add_subcommand("verify", "re-validate a certificate file");
    verify->add_option("file", file, "certificate JSON file")->required();

    auto* bounds = app.add_subcommand("bounds", "combinatorial bounds and obstructions");
    bounds->add_option("graph6", graph6, "graph6 string")->required();

    auto* search = app.add_subcommand("search", "numerical search for [n-k, k] realizations");
    search->add_option("graph6", graph6, "graph6 string")->required();
    int k_val = -1;
    search->add_option("--k", k_val, "target multiplicity k (default: scan for the minimum)");
    search->add_flag("--all", all_k, "try every k up to floor(n/2)");

    auto* atlas = app.add_subcommand("atlas", "batch-process a graph6 catalog");
    atlas->add_option("catalog", catalog, "graph6 catalog file")->required();
    atlas->add_option("--out-dir", out_dir, "output directory")->required();
    int k_min = 1, k_max = 16;
    bool timings = false;
    atlas->add_option("--k-min", k_min, "smallest k to try");
    atlas->add_option("--k-max", k_max, "largest k to try");
    atlas->add_flag("--timings", timings, "include per-graph timings (breaks byte-stable output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(name, params_text, g);
        if (verify->parsed()) return cmd_verify(file);
        if (bounds->parsed()) return cmd_bounds(graph6, g);
        if (search->parsed())
            return cmd_search(graph6, k_val >= 0 ? std::optional<int>(k_val) : std::nullopt, all_k, g);
        if (atlas->parsed()) {
            AtlasOptions opts;
            opts.k_min = k_min;
            opts.k_max = k_max;
            opts.timings = timings;
            opts.out_dir = out_dir;
            opts.search.restarts = g.restarts;
            opts.search.max_iters = g.max_iters;
            opts.search.seed = g.seed;
            opts.search.zero_tol = g.tol_zero;
            opts.search.nonzero_tol = g.tol_nonzero;
            return run_atlas(catalog, opts, std::cerr);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CertifyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

#include "mbkit/json_io.hpp"

#include <stdexcept>

namespace mbk {

using nlohmann::json;

json certificate_to_json(const RealizationCertificate& cert) {
    json j;
    j["schema"] = "mbkit.certificate/1";
    j["kind"] = cert.three_eigenvalue_kind ? "three-eigenvalue" : "bipartition";
    j["graph6"] = encode_graph6(cert.graph);
    j["n"] = cert.graph.vertex_count();
    j["k"] = cert.k;
    j["eigenvalues"] = cert.class_values;
    j["multiplicities"] = cert.class_multiplicities;
    j["matrix"] = cert.matrix.data();
    j["tolerances"] = {{"zero", cert.tols.zero},
                       {"nonzero", cert.tols.nonzero},
                       {"cluster", cert.tols.cluster}};
    json params;
    try {
        params = json::parse(cert.provenance.params_json);
    } catch (const json::parse_error&) {
        params = cert.provenance.params_json;
    }
    j["provenance"] = {{"name", cert.provenance.name}, {"params", params}, {"seed", cert.provenance.seed}};
    j["original_eigenvalues"] = cert.original_values;
    return j;
}

RealizationCertificate certificate_from_json(const json& j) {
    RealizationCertificate cert;
    if (!j.contains("graph6") || !j.contains("matrix") || !j.contains("n"))
        throw std::invalid_argument("certificate: missing required fields");
    cert.graph = parse_graph6(j.at("graph6").get<std::string>());
    int n = j.at("n").get<int>();
    if (cert.graph.vertex_count() != n)
        throw std::invalid_argument("certificate: n does not match the graph6 header");
    std::vector<double> entries = j.at("matrix").get<std::vector<double>>();
    if (int(entries.size()) != n * n) throw std::invalid_argument("certificate: matrix size mismatch");
    Matrix m(n, n);
    m.data() = std::move(entries);
    cert.matrix = SymmetricMatrix::from_dense(m);
    cert.k = j.at("k").get<int>();
    cert.class_values = j.at("eigenvalues").get<std::vector<double>>();
    cert.class_multiplicities = j.at("multiplicities").get<std::vector<int>>();
    cert.three_eigenvalue_kind = j.value("kind", "bipartition") == std::string("three-eigenvalue");
    if (j.contains("tolerances")) {
        cert.tols.zero = j.at("tolerances").value("zero", 1e-9);
        cert.tols.nonzero = j.at("tolerances").value("nonzero", 1e-8);
        cert.tols.cluster = j.at("tolerances").value("cluster", 1e-6);
    }
    if (j.contains("provenance")) {
        const json& p = j.at("provenance");
        cert.provenance.name = p.value("name", "unknown");
        cert.provenance.seed = p.value("seed", std::uint64_t(0));
        if (p.contains("params")) cert.provenance.params_json = p.at("params").dump();
    }
    if (j.contains("original_eigenvalues"))
        cert.original_values = j.at("original_eigenvalues").get<std::vector<double>>();
    return cert;
}

json pattern_report_to_json(const PatternReport& rep) {
    json v = json::array();
    for (const auto& x : rep.violations)
        v.push_back({{"i", x.i},
                     {"j", x.j},
                     {"kind", x.must_be_zero ? "must-be-zero" : "must-be-nonzero"},
                     {"value", x.value}});
    return json{{"ok", rep.ok},
                {"violations", v},
                {"zero_tol", rep.zero_tol},
                {"nonzero_tol", rep.nonzero_tol},
                {"scale", rep.scale}};
}

std::string obstruction_kind_name(ObstructionWitness::Kind k) {
    switch (k) {
        case ObstructionWitness::Kind::cut_edge:
            return "cut-edge";
        case ObstructionWitness::Kind::common_neighbour_deficit:
            return "common-neighbour-deficit";
        case ObstructionWitness::Kind::neighbourhood_union_deficit:
            return "neighbourhood-union-deficit";
    }
    return "unknown";
}

json bounds_report_to_json(const BoundsReport& rep) {
    json lower = json::array();
    for (const auto& lb : rep.lower)
        lower.push_back({{"value", lb.value}, {"source", lb.source}, {"witness", lb.witness}});
    json upper = json::array();
    for (const auto& ub : rep.upper) upper.push_back({{"k", ub.k}, {"source", ub.source}});
    json obs = json::array();
    for (const auto& o : rep.obstructions) {
        json e{{"kind", obstruction_kind_name(o.kind)},
               {"vertices", o.vertices},
               {"lhs", o.lhs},
               {"rhs", o.rhs}};
        if (o.kind == ObstructionWitness::Kind::neighbourhood_union_deficit)
            e["neighbourhood_union"] = o.neighbourhood_union;
        obs.push_back(std::move(e));
    }
    json j{{"graph6", rep.graph6},
           {"n", rep.n},
           {"lower_bounds", lower},
           {"upper_bounds", upper},
           {"q2_obstructions", obs},
           {"complete", rep.complete},
           {"mb2_form", rep.mb2_form},
           {"status", rep.status},
           {"max_lower", rep.max_lower},
           {"inconsistent", rep.inconsistent},
           {"union_search_exhausted", rep.union_search_exhausted}};
    if (rep.mb_exact) j["mb"] = *rep.mb_exact;
    return j;
}

json search_result_to_json(const SearchResult& res, bool include_certificate) {
    json j{{"status", res.found ? "found" : "not-found"},
           {"best_residual", res.best_residual},
           {"restarts_used", res.restarts_used},
           {"iterations", res.iterations}};
    if (res.found) {
        j["found_restart"] = res.found_restart;
        if (include_certificate && res.certificate) j["certificate"] = certificate_to_json(*res.certificate);
    }
    return j;
}

json search_config_to_json(const SearchConfig& cfg) {
    return json{{"restarts", cfg.restarts},
                {"max_iters", cfg.max_iters},
                {"step0", cfg.step0},
                {"step_grow", cfg.step_grow},
                {"step_shrink", cfg.step_shrink},
                {"penalty_weight", cfg.penalty_weight},
                {"zero_tol", cfg.zero_tol},
                {"nonzero_tol", cfg.nonzero_tol},
                {"cluster_tol", cfg.cluster_tol},
                {"seed", cfg.seed},
                {"polish_iters", cfg.polish_iters},
                {"polish_trigger", cfg.polish_trigger},
                {"parallel", cfg.parallel}};
}

SearchConfig search_config_from_json(const json& j) {
    SearchConfig cfg;
    cfg.restarts = j.value("restarts", cfg.restarts);
    cfg.max_iters = j.value("max_iters", cfg.max_iters);
    cfg.step0 = j.value("step0", cfg.step0);
    cfg.step_grow = j.value("step_grow", cfg.step_grow);
    cfg.step_shrink = j.value("step_shrink", cfg.step_shrink);
    cfg.penalty_weight = j.value("penalty_weight", cfg.penalty_weight);
    cfg.zero_tol = j.value("zero_tol", cfg.zero_tol);
    cfg.nonzero_tol = j.value("nonzero_tol", cfg.nonzero_tol);
    cfg.cluster_tol = j.value("cluster_tol", cfg.cluster_tol);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.polish_iters = j.value("polish_iters", cfg.polish_iters);
    cfg.polish_trigger = j.value("polish_trigger", cfg.polish_trigger);
    cfg.parallel = j.value("parallel", cfg.parallel);
    return cfg;
}

json minimal_bipartition_to_json(const MinimalBipartitionResult& res) {
    json runs = json::object();
    for (const auto& [k, r] : res.runs) runs[std::to_string(k)] = search_result_to_json(r, false);
    json j{{"bounds", bounds_report_to_json(res.bounds)},
           {"exact", res.exact},
           {"method", res.method},
           {"runs", runs}};
    if (res.mb) j["mb"] = *res.mb;
    if (res.certificate) j["certificate"] = certificate_to_json(*res.certificate);
    return j;
}

}  // namespace mbk

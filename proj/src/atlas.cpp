#include "mbkit/atlas.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <vector>

#include "mbkit/json_io.hpp"
#include "mbkit/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mbk {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

struct Item {
    std::string graph6;  // canonical re-encoding
    Graph graph;
    int index = 0;
};

json process_graph(const Item& item, const AtlasOptions& opts, std::vector<json>* certificates) {
    const Graph& g = item.graph;
    int n = g.vertex_count();

    SearchConfig cfg = opts.search;
    cfg.seed = derive_seed(opts.search.seed, fnv1a(item.graph6));

    BoundsReport rep = bounds_report(g);
    json entry;
    entry["graph6"] = item.graph6;
    entry["n"] = n;

    std::vector<int> achievable;
    json cert_refs = json::array();
    int min_found = n + 1;

    bool searchable = rep.status != "q-gt-2-witnessed" && rep.status != "no-bipartition-possible";
    if (searchable) {
        for (int k = std::max(1, opts.k_min); k <= std::min(n / 2, opts.k_max); ++k) {
            SearchResult r = find_realization(g, k, cfg);
            if (r.found && r.certificate) {
                achievable.push_back(k);
                min_found = std::min(min_found, k);
                std::string ref = "certs/entry" + std::to_string(item.index) + "_k" + std::to_string(k) + ".json";
                cert_refs.push_back(ref);
                certificates->push_back(
                    json{{"path", ref}, {"certificate", certificate_to_json(*r.certificate)}});
            }
        }
    }

    json mb;
    if (rep.status == "q-gt-2-witnessed") {
        mb["status"] = "q-gt-2-witnessed";
    } else if (rep.status == "no-bipartition-possible") {
        mb["status"] = "no-bipartition-possible";
    } else if (rep.complete && n >= 2) {
        mb["status"] = "exact";
        mb["value"] = 1;
    } else if (rep.mb2_form) {
        mb["status"] = "exact";
        mb["value"] = 2;
    } else if (min_found <= n && min_found == rep.max_lower) {
        mb["status"] = "exact";
        mb["value"] = min_found;
    } else {
        mb["status"] = "bounds";
        mb["lower"] = rep.max_lower;
        if (min_found <= n) mb["upper"] = min_found;
    }
    entry["mb"] = mb;
    entry["achievable"] = achievable;
    entry["certificates"] = cert_refs;
    json obs = json::array();
    for (const auto& o : rep.obstructions) obs.push_back(obstruction_kind_name(o.kind));
    entry["obstructions"] = obs;
    return entry;
}

}  // namespace

int run_atlas(const std::string& catalog_path, const AtlasOptions& opts, std::ostream& log) {
    namespace fs = std::filesystem;
    std::ifstream in(catalog_path);
    if (!in) {
        log << "atlas: cannot open catalog " << catalog_path << "\n";
        return 2;
    }
    fs::create_directories(opts.out_dir);
    fs::create_directories(fs::path(opts.out_dir) / "certs");
    fs::path entries_path = fs::path(opts.out_dir) / "entries.jsonl";

    // existing entries keyed by graph6, kept verbatim for idempotent reruns
    std::map<std::string, std::string> existing;
    if (fs::exists(entries_path)) {
        std::ifstream ein(entries_path);
        std::string line;
        while (std::getline(ein, line)) {
            if (line.empty()) continue;
            try {
                json j = json::parse(line);
                existing.emplace(j.at("graph6").get<std::string>(), line);
            } catch (const json::exception&) {
            }
        }
    }

    std::vector<Item> items;
    bool malformed = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '>') continue;  // header lines like >>graph6<<
        std::string token = line.substr(0, line.find_first_of(" \t\r"));
        if (token.empty()) continue;
        try {
            Graph g = parse_graph6(token);
            if (g.vertex_count() > 16) throw std::invalid_argument("atlas guard n <= 16 exceeded");
            Item it;
            it.graph6 = encode_graph6(g);
            it.graph = std::move(g);
            it.index = int(items.size());
            items.push_back(std::move(it));
        } catch (const std::exception& e) {
            log << "atlas: skipping malformed line " << lineno << ": " << e.what() << "\n";
            malformed = true;
        }
    }

    std::vector<std::string> lines(items.size());
    std::vector<char> fresh(items.size(), 0);
    std::vector<std::vector<json>> cert_payloads(items.size());
    std::vector<long long> elapsed_ms(items.size(), 0);

    std::vector<int> todo;
    for (int i = 0; i < int(items.size()); ++i) {
        auto it = existing.find(items[i].graph6);
        if (it != existing.end())
            lines[i] = it->second;
        else
            todo.push_back(i);
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int t = 0; t < int(todo.size()); ++t) {
        int i = todo[t];
        auto t0 = std::chrono::steady_clock::now();
        json entry = process_graph(items[i], opts, &cert_payloads[i]);
        auto t1 = std::chrono::steady_clock::now();
        elapsed_ms[i] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (opts.timings) entry["timing_ms"] = elapsed_ms[i];
        lines[i] = entry.dump();
        fresh[i] = 1;
    }

    bool any_fresh = false;
    for (char f : fresh) any_fresh |= (f != 0);
    if (any_fresh) {
        for (int i = 0; i < int(items.size()); ++i)
            for (const auto& payload : cert_payloads[i]) {
                fs::path p = fs::path(opts.out_dir) / payload.at("path").get<std::string>();
                std::ofstream out(p);
                out << payload.at("certificate").dump(2) << "\n";
            }
        std::ofstream out(entries_path, std::ios::trunc);
        for (const auto& l : lines) out << l << "\n";
    }

    int computed = int(todo.size());
    log << "atlas: " << items.size() << " graphs, " << computed << " computed, "
        << (items.size() - computed) << " reused\n";
    return malformed ? 1 : 0;
}

}  // namespace mbk

#include "mbkit/obstructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace mbk {

std::pair<int, std::vector<int>> independent_set_bound(const Graph& g) {
    IndependentSetResult r = independence_number(g);
    return {r.size, r.witness};
}

std::pair<int, std::vector<int>> induced_path_bound(const Graph& g) {
    InducedPathResult r = longest_induced_path(g);
    return {r.length, r.witness};
}

int interlacing_join_bound(int q_g) {
    if (q_g < 1) throw std::invalid_argument("interlacing_join_bound: q must be >= 1");
    return (q_g + 2) / 2;  // ceil((q+1)/2)
}

namespace {

// bridges via DFS lowpoints
std::vector<std::pair<int, int>> cut_edges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> bridges;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        bool skipped_parent = false;
        for (int v : g.neighbors(u)) {
            if (v == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[v] == -1) {
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridges.emplace_back(std::min(u, v), std::max(u, v));
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] == -1) dfs(s, -1);
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int blocks) : w(blocks, 0) {}
    void set(int v) { w[v >> 6] |= std::uint64_t(1) << (v & 63); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    std::vector<int> to_list() const {
        std::vector<int> out;
        for (int b = 0; b < int(w.size()); ++b) {
            std::uint64_t x = w[b];
            while (x) {
                out.push_back(b * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }
};

// Search for an independent set S whose nonempty pairwise
// common-neighbourhood union is smaller than S. Iterative deepening on |S|
// (cap 2..8) so the reported witness has the least possible size; the union
// only grows along a branch, so branches whose union already reaches the cap
// are pruned.
struct UnionDeficitSearch {
    const Graph& g;
    int n, blocks;
    static constexpr int kSizeCap = 8;
    long long budget = 20'000'000;
    bool exhausted = true;
    int cap = 2;
    std::optional<ObstructionWitness> found;

    explicit UnionDeficitSearch(const Graph& gr) : g(gr), n(gr.vertex_count()), blocks(gr.blocks()) {}

    void run() {
        std::vector<int> s;
        for (cap = 2; cap <= kSizeCap && !found && budget >= 0; ++cap) {
            for (int v = 0; v < n && !found; ++v) {
                s.assign(1, v);
                Bits uni(blocks);
                dfs(s, uni);
            }
        }
    }

    void dfs(std::vector<int>& s, const Bits& uni) {
        if (found) return;
        if (--budget < 0) {
            exhausted = false;
            return;
        }
        int usize = uni.count();
        if (int(s.size()) >= 2 && usize >= 1 && int(s.size()) > usize) {
            ObstructionWitness w;
            w.kind = ObstructionWitness::Kind::neighbourhood_union_deficit;
            w.vertices = s;
            w.neighbourhood_union = uni.to_list();
            w.lhs = int(s.size());
            w.rhs = usize;
            found = w;
            return;
        }
        if (int(s.size()) == cap || usize >= cap) return;

        for (int v = s.back() + 1; v < n; ++v) {
            bool independent = true;
            for (int u : s)
                if (g.has_edge(u, v)) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            Bits uni2 = uni;
            for (int u : s) {
                const std::uint64_t* ru = g.row(u);
                const std::uint64_t* rv = g.row(v);
                for (int b = 0; b < blocks; ++b) uni2.w[b] |= ru[b] & rv[b];
            }
            s.push_back(v);
            dfs(s, uni2);
            s.pop_back();
            if (found || budget < 0) return;
        }
    }
};

}  // namespace

std::vector<ObstructionWitness> q2_necessary_conditions(const Graph& g, bool* search_exhausted) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("q2_necessary_conditions: need n >= 3");
    if (n > 128) throw std::invalid_argument("q2_necessary_conditions: guard n <= 128 exceeded");
    if (!g.is_connected()) throw std::invalid_argument("q2_necessary_conditions: graph must be connected");

    std::vector<ObstructionWitness> out;

    for (auto [u, v] : cut_edges(g)) {
        ObstructionWitness w;
        w.kind = ObstructionWitness::Kind::cut_edge;
        w.vertices = {u, v};
        w.lhs = 1;
        w.rhs = 0;
        out.push_back(std::move(w));
    }

    // A single common neighbour of a non-adjacent pair cannot cancel in
    // A^2 = (l+m)A - lm I, so exactly one is impossible; an empty common
    // neighbourhood is unconstrained (the strong product of a path with an
    // edge realizes that case).
    int blocks = g.blocks();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            int common = 0;
            const std::uint64_t* ru = g.row(u);
            const std::uint64_t* rv = g.row(v);
            for (int b = 0; b < blocks; ++b) common += std::popcount(ru[b] & rv[b]);
            if (common == 1) {
                ObstructionWitness w;
                w.kind = ObstructionWitness::Kind::common_neighbour_deficit;
                w.vertices = {u, v};
                w.lhs = common;
                w.rhs = 2;
                out.push_back(std::move(w));
            }
        }

    UnionDeficitSearch search(g);
    search.run();
    if (search.found) out.push_back(*search.found);
    if (search_exhausted) *search_exhausted = search.exhausted;

    return out;
}

bool verify_obstruction(const Graph& g, const ObstructionWitness& w) {
    switch (w.kind) {
        case ObstructionWitness::Kind::cut_edge: {
            if (w.vertices.size() != 2 || !g.has_edge(w.vertices[0], w.vertices[1])) return false;
            Graph h = g;
            h.remove_edge(w.vertices[0], w.vertices[1]);
            return !h.is_connected() && g.is_connected();
        }
        case ObstructionWitness::Kind::common_neighbour_deficit: {
            if (w.vertices.size() != 2) return false;
            int u = w.vertices[0], v = w.vertices[1];
            if (g.has_edge(u, v)) return false;
            auto common = common_neighborhood_union(g, {u, v});
            return common.size() == 1 && w.lhs == 1 && w.rhs == 2;
        }
        case ObstructionWitness::Kind::neighbourhood_union_deficit: {
            auto uni = common_neighborhood_union(g, w.vertices);
            return !uni.empty() && uni == w.neighbourhood_union && int(w.vertices.size()) == w.lhs &&
                   int(uni.size()) == w.rhs && w.lhs > w.rhs;
        }
    }
    return false;
}

BoundsReport bounds_report(const Graph& g,
                           const std::vector<const RealizationCertificate*>& certificates) {
    BoundsReport rep;
    rep.graph6 = encode_graph6(g);
    int n = g.vertex_count();
    rep.n = n;
    rep.complete = g.is_complete();

    if (n <= 64) {
        auto [alpha, wit] = independent_set_bound(g);
        rep.lower.push_back({alpha, "independent-set", wit});
    }
    if (n <= 24) {
        auto [len, wit] = induced_path_bound(g);
        rep.lower.push_back({len, "induced-path", wit});
    }

    bool connected = g.is_connected();
    Mb2Recognition rec;
    if (connected) {
        rec = recognize_mb2_form(g);
        rep.mb2_form = rec.accepted;
        if (!rec.accepted && !rep.complete && n >= 2)
            rep.lower.push_back({3, "mb2-recognizer-reject", {}});
    }

    if (connected && n >= 3 && n <= 128) {
        rep.obstructions = q2_necessary_conditions(g, &rep.union_search_exhausted);
    }

    for (const auto* cert : certificates) {
        if (!cert || cert->three_eigenvalue_kind) continue;
        if (!(cert->graph == g)) continue;
        rep.upper.push_back({cert->k, cert->provenance.name});
    }
    if (rep.complete && n >= 2) rep.upper.push_back({1, "complete-graph"});

    for (const auto& lb : rep.lower) rep.max_lower = std::max(rep.max_lower, lb.value);

    int min_upper = n + 1;
    for (const auto& ub : rep.upper) min_upper = std::min(min_upper, ub.k);

    if (!rep.obstructions.empty()) {
        rep.status = "q-gt-2-witnessed";
    } else if (rep.max_lower > n / 2) {
        rep.status = "no-bipartition-possible";
    } else if (rep.complete && n >= 2) {
        rep.mb_exact = 1;
        rep.status = "exact";
    } else if (rep.mb2_form) {
        rep.mb_exact = 2;
        rep.status = "exact";
    } else if (min_upper <= n && min_upper == rep.max_lower) {
        rep.mb_exact = min_upper;
        rep.status = "exact";
    } else {
        rep.status = "bounded";
    }

    if (min_upper <= n && rep.max_lower > min_upper) rep.inconsistent = true;
    return rep;
}

}  // namespace mbk

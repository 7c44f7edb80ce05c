#include "mbkit/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mbk {

namespace {

// ---- maximum clique on a <=64-vertex graph, Tomita-style ----

struct CliqueSolver {
    int n;
    std::vector<std::uint64_t> adj;  // adjacency of the graph we search cliques in
    int best = 0;
    std::uint64_t best_set = 0;

    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1u; }

    // greedy sequential coloring; emits vertices with nondecreasing color bounds
    void color_sort(std::uint64_t p, std::vector<int>& order, std::vector<int>& bound) const {
        order.clear();
        bound.clear();
        int color = 0;
        while (p) {
            ++color;
            std::uint64_t avail = p;
            while (avail) {
                int v = std::countr_zero(avail);
                std::uint64_t bit = std::uint64_t(1) << v;
                avail &= ~(bit | adj[v]);
                p &= ~bit;
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(std::uint64_t r, int rsize, std::uint64_t p) {
        if (p == 0) {
            if (rsize > best) {
                best = rsize;
                best_set = r;
            }
            return;
        }
        std::vector<int> order, bound;
        color_sort(p, order, bound);
        for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
            if (rsize + bound[idx] <= best) return;
            int v = order[idx];
            std::uint64_t bit = std::uint64_t(1) << v;
            expand(r | bit, rsize + 1, p & adj[v]);
            p &= ~bit;
        }
    }
};

}  // namespace

IndependentSetResult independence_number(const Graph& g) {
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("independence_number: guard n <= 64 exceeded");
    IndependentSetResult res;
    if (n == 0) return res;

    // independent sets in g are cliques in the complement
    CliqueSolver solver;
    solver.n = n;
    solver.adj.assign(n, 0);
    std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    for (int u = 0; u < n; ++u) {
        std::uint64_t row = 0;
        for (int v = 0; v < n; ++v)
            if (v != u && !g.has_edge(u, v)) row |= std::uint64_t(1) << v;
        solver.adj[u] = row & full;
    }

    // greedy incumbent speeds up pruning considerably on structured graphs
    {
        std::uint64_t cand = full, set = 0;
        int size = 0;
        while (cand) {
            int pick = -1, bestdeg = -1;
            std::uint64_t c = cand;
            while (c) {
                int v = std::countr_zero(c);
                c &= c - 1;
                int d = std::popcount(solver.adj[v] & cand);
                if (d > bestdeg) {
                    bestdeg = d;
                    pick = v;
                }
            }
            set |= std::uint64_t(1) << pick;
            ++size;
            cand &= solver.adj[pick];
        }
        solver.best = size;
        solver.best_set = set;
    }

    solver.expand(0, 0, full);

    res.size = solver.best;
    for (int v = 0; v < n; ++v)
        if ((solver.best_set >> v) & 1u) res.witness.push_back(v);
    return res;
}

InducedPathResult longest_induced_path(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("longest_induced_path: guard n <= 24 exceeded");
    InducedPathResult res;
    if (n == 0) return res;

    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= std::uint32_t(1) << v;
    std::uint32_t full = (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);

    std::vector<int> path, best_path;
    int best = 0;

    // Path grows at the tail. Once a vertex becomes internal, all of its
    // other neighbors are excluded for good (they would create a chord).
    auto dfs = [&](auto&& self, int tail, std::uint32_t used, std::uint32_t excluded) -> void {
        int len = int(path.size()) - 1;
        if (len > best) {
            best = len;
            best_path = path;
        }
        std::uint32_t allowed = full & ~(used | excluded);
        if (len + std::popcount(allowed) <= best) return;
        std::uint32_t cand = adj[tail] & allowed;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint32_t bit = std::uint32_t(1) << v;
            path.push_back(v);
            self(self, v, used | bit, excluded | (adj[tail] & ~bit));
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        dfs(dfs, s, std::uint32_t(1) << s, 0);
    }
    res.length = best;
    res.witness = best_path;
    return res;
}

std::vector<int> common_neighborhood_union(const Graph& g, const std::vector<int>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (g.has_edge(s[a], s[b]))
                throw std::invalid_argument("common_neighborhood_union: S is not independent");

    int blocks = g.blocks();
    std::vector<std::uint64_t> acc(blocks, 0);
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            const std::uint64_t* ra = g.row(s[a]);
            const std::uint64_t* rb = g.row(s[b]);
            for (int i = 0; i < blocks; ++i) acc[i] |= ra[i] & rb[i];
        }
    std::vector<int> out;
    for (int i = 0; i < blocks; ++i) {
        std::uint64_t w = acc[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

JoinFactorization join_factorize(const Graph& g) {
    Graph comp = complement(g);
    int n = g.vertex_count();
    JoinFactorization out;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> compset{s};
        seen[s] = true;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : comp.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    compset.push_back(v);
                    stack.push_back(v);
                }
        }
        std::sort(compset.begin(), compset.end());
        out.factors.push_back(induced_subgraph(g, compset));
        out.vertex_sets.push_back(std::move(compset));
    }
    return out;
}

namespace {

// connected components of a factor, as vertex index lists into the factor
std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                    stack.push_back(v);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (!g.has_edge(verts[a], verts[b])) return false;
    return true;
}

}  // namespace

Mb2Recognition recognize_mb2_form(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("recognize_mb2_form: input must be connected");
    Mb2Recognition res;

    if (g.is_complete()) {
        res.reason = "complete graph";
        return res;
    }

    JoinFactorization fac = join_factorize(g);
    if (fac.factors.size() < 2) {
        res.reason = "single join factor";
        return res;
    }

    std::vector<std::pair<int, int>> pairs;
    for (const Graph& factor : fac.factors) {
        auto comps = components(factor);
        if (comps.size() > 2) {
            res.reason = "a join factor has more than two components";
            return res;
        }
        for (const auto& c : comps)
            if (!is_clique(factor, c)) {
                res.reason = "a join factor component is not a clique";
                return res;
            }
        int p = int(comps[0].size());
        int q = comps.size() == 2 ? int(comps[1].size()) : 0;
        if (p < q) std::swap(p, q);
        pairs.emplace_back(p, q);
    }

    // exclusion: (K_p u K_q) v K_1 with p,q >= 1
    if (pairs.size() == 2) {
        auto single = [](const std::pair<int, int>& pq) { return pq.first == 1 && pq.second == 0; };
        auto twoclq = [](const std::pair<int, int>& pq) { return pq.second >= 1; };
        if ((single(pairs[0]) && twoclq(pairs[1])) || (single(pairs[1]) && twoclq(pairs[0]))) {
            res.reason = "shape (clique pair) joined with a single vertex";
            return res;
        }
    }

    res.accepted = true;
    res.clique_pairs = std::move(pairs);
    res.factor_vertices = std::move(fac.vertex_sets);
    return res;
}

}  // namespace mbk

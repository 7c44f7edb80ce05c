#include "mbkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mbk {

Graph::Graph(int n) : n_(n), blocks_((n + 63) / 64), adj_(std::size_t(n) * ((n + 63) / 64), 0), labels_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex index out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_[std::size_t(u) * blocks_ + (v >> 6)] >> (v & 63)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if (has_edge(u, v)) return;
    adj_[std::size_t(u) * blocks_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    adj_[std::size_t(v) * blocks_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) return;
    adj_[std::size_t(u) * blocks_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    adj_[std::size_t(v) * blocks_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
    --edges_;
}

int Graph::degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (int b = 0; b < blocks_; ++b) d += std::popcount(adj_[std::size_t(u) * blocks_ + b]);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    for (int b = 0; b < blocks_; ++b) {
        std::uint64_t w = adj_[std::size_t(u) * blocks_ + b];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(b * 64 + bit);
            w &= w - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

bool Graph::is_complete() const { return edges_ == n_ * (n_ - 1) / 2; }

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    labels_[v] = std::move(s);
}

PartList::PartList(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("PartList: empty");
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("PartList: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int PartList::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

CliqueBlockSpec::CliqueBlockSpec(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
    if (blocks.empty()) throw std::invalid_argument("CliqueBlockSpec: no factors");
    std::size_t k = blocks[0].size();
    if (k == 0) throw std::invalid_argument("CliqueBlockSpec: no cliques");
    for (const auto& row : blocks) {
        if (row.size() != k) throw std::invalid_argument("CliqueBlockSpec: ragged rows");
        for (int a : row)
            if (a < 1) throw std::invalid_argument("CliqueBlockSpec: clique sizes must be positive");
    }
}

int CliqueBlockSpec::total_vertices() const {
    int t = 0;
    for (const auto& row : blocks)
        for (int a : row) t += a;
    return t;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph hypercube(int dim) {
    if (dim < 0 || dim > 20) throw std::invalid_argument("hypercube: dimension out of range");
    int n = 1 << dim;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b) {
            int v = u ^ (1 << b);
            if (u < v) g.add_edge(u, v);
        }
    return g;
}

Graph build_complete_multipartite(const PartList& parts) {
    int n = parts.total();
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (int p = 0; p < parts.count(); ++p)
        for (int i = 0; i < parts.parts[p]; ++i) {
            part_of[v] = p;
            g.set_label(v, "part " + std::to_string(p));
            ++v;
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) g.add_edge(a, b);
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng + nh);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    for (int u = 0; u < ng; ++u) out.set_label(u, g.labels()[u]);
    for (int v = 0; v < nh; ++v) out.set_label(ng + v, h.labels()[v]);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng + nh);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u) out.set_label(u, g.labels()[u]);
    for (int v = 0; v < nh; ++v) out.set_label(ng + v, h.labels()[v]);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < n; ++u) out.set_label(u, g.labels()[u]);
    return out;
}

Graph clone_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("clone_vertex: vertex out of range");
    Graph out(n + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    out.add_edge(n, v);
    for (int u : g.neighbors(v)) out.add_edge(n, u);
    for (int u = 0; u < n; ++u) out.set_label(u, g.labels()[u]);
    out.set_label(n, "clone of " + std::to_string(v));
    return out;
}

// Vertex order (1,1',2,2',...,n,n'); cluster i occupies 2i and 2i+1, clusters
// at distance <= 1 are fully adjacent.
Graph strong_product_path_p2(int n) {
    if (n < 1) throw std::invalid_argument("strong_product_path_p2: need n >= 1");
    Graph g(2 * n);
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (std::abs(u / 2 - v / 2) <= 1) g.add_edge(u, v);
    for (int i = 0; i < n; ++i) {
        g.set_label(2 * i, std::to_string(i + 1));
        g.set_label(2 * i + 1, std::to_string(i + 1) + "'");
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out(int(vertices.size()));
    for (int i = 0; i < int(vertices.size()); ++i) {
        out.set_label(i, g.labels()[vertices[i]]);
        for (int j = i + 1; j < int(vertices.size()); ++j)
            if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
    return out;
}

// ---- graph6 ----

namespace {

int g6_char(char c) {
    int v = int(static_cast<unsigned char>(c)) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: character out of range");
    return v;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    if (text[0] == ':' || text[0] == ';' || text[0] == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 not supported");
    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("graph6: 8-byte order form not supported");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = (long(g6_char(text[1])) << 12) | (long(g6_char(text[2])) << 6) | long(g6_char(text[3]));
        pos = 4;
    } else {
        n = g6_char(text[0]);
        pos = 1;
    }
    if (n > 100000) throw std::invalid_argument("graph6: order too large");
    long bits = n * (n - 1) / 2;
    std::size_t expect = pos + std::size_t((bits + 5) / 6);
    if (text.size() != expect) throw std::invalid_argument("graph6: wrong length");

    Graph g(static_cast<int>(n));
    long b = 0;
    // upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    int col = 1, row = 0;
    while (b < bits) {
        int group = g6_char(text[pos + std::size_t(b / 6)]);
        int bit = (group >> (5 - (b % 6))) & 1;
        if (bit) g.add_edge(row, col);
        ++b;
        if (++row == col) {
            row = 0;
            ++col;
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large to encode");
    }
    long bits = n * (n - 1) / 2;
    int group = 0, filled = 0;
    int col = 1, row = 0;
    for (long b = 0; b < bits; ++b) {
        group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
        ++filled;
        if (filled == 6) {
            out.push_back(char(group + 63));
            group = 0;
            filled = 0;
        }
        if (++row == col) {
            row = 0;
            ++col;
        }
    }
    if (filled > 0) out.push_back(char((group << (6 - filled)) + 63));
    return out;
}

// ---- catalog ----

namespace {

// pair index in the fixed (i<j) column-major-by-j order used everywhere here
inline int pair_index(int i, int j, int /*n*/) { return j * (j - 1) / 2 + i; }

std::uint32_t canonical_mask(std::uint32_t mask, int n, const std::vector<std::vector<int>>& perms) {
    std::uint32_t best = ~0u;
    for (const auto& p : perms) {
        std::uint32_t m = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (!((mask >> pair_index(i, j, n)) & 1u)) continue;
                int pi = p[i], pj = p[j];
                if (pi > pj) std::swap(pi, pj);
                m |= std::uint32_t(1) << pair_index(pi, pj, n);
            }
        best = std::min(best, m);
        if (best == 0) break;
    }
    return best;
}

bool mask_connected(std::uint32_t mask, int n) {
    std::vector<std::uint32_t> adj(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> pair_index(i, j, n)) & 1u) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n >= 32 ? ~0u : ((1u << n) - 1));
}

}  // namespace

std::vector<Graph> connected_graph_catalog(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("connected_graph_catalog: n must be 1..6");
    if (n == 1) return {Graph(1)};

    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    int m = n * (n - 1) / 2;
    std::vector<std::uint32_t> canon;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (!mask_connected(mask, n)) continue;
        canon.push_back(canonical_mask(mask, n, perms));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    std::stable_sort(canon.begin(), canon.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<Graph> out;
    out.reserve(canon.size());
    for (std::uint32_t mask : canon) {
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((mask >> pair_index(i, j, n)) & 1u) g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace mbk

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mbk {

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
// Optional per-vertex labels record how constructions laid the graph out.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }
    int blocks() const { return blocks_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;
    const std::uint64_t* row(int u) const { return &adj_[std::size_t(u) * blocks_]; }

    std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

    bool is_connected() const;
    bool is_complete() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string s);

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int blocks_ = 0;
    int edges_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

// Part sizes of a complete multipartite graph, normalized non-increasing.
struct PartList {
    std::vector<int> parts;

    explicit PartList(std::vector<int> p);
    int total() const;
    int count() const { return int(parts.size()); }
};

// Clique sizes a[f][c] for a join of factors, each factor a disjoint union
// of k cliques (f = join factor, c = clique within the factor).
struct CliqueBlockSpec {
    std::vector<std::vector<int>> blocks;

    explicit CliqueBlockSpec(std::vector<std::vector<int>> b);
    int factors() const { return int(blocks.size()); }
    int cliques_per_factor() const { return int(blocks[0].size()); }
    int total_vertices() const;
};

// basic builders
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph hypercube(int dim);

// family builders
Graph build_complete_multipartite(const PartList& parts);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph clone_vertex(const Graph& g, int v);
Graph strong_product_path_p2(int n);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// graph6 (McKay convention); supports the short form (n <= 62) and the
// 3-byte extended form (n <= 258047), one graph per line in catalog files.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// All connected graphs on n vertices up to isomorphism, n <= 6, in a fixed
// deterministic order. Brute-force canonical forms; desk scale only.
std::vector<Graph> connected_graph_catalog(int n);

}  // namespace mbk

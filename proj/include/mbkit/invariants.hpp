#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbkit/graph.hpp"

namespace mbk {

struct IndependentSetResult {
    int size = 0;
    std::vector<int> witness;
};

// Exact maximum independent set via branch and bound (clique search on the
// complement with greedy coloring bounds). Guard: n <= 64.
IndependentSetResult independence_number(const Graph& g);

struct InducedPathResult {
    int length = 0;  // edge count
    std::vector<int> witness;
};

// Exact longest induced path, reported as an edge count. Guard: n <= 24.
InducedPathResult longest_induced_path(const Graph& g);

// Union over unordered pairs of S of the common neighborhoods. S must be
// independent in g.
std::vector<int> common_neighborhood_union(const Graph& g, const std::vector<int>& s);

// Maximal join decomposition: factors are the connected components of the
// complement, taken as induced subgraphs of g. A single factor means g is
// join-indecomposable.
struct JoinFactorization {
    std::vector<std::vector<int>> vertex_sets;
    std::vector<Graph> factors;
};
JoinFactorization join_factorize(const Graph& g);

// Recognizer for connected graphs whose every join factor is a disjoint
// union of at most two cliques, with more than one factor, excluding the
// complete graphs and the shape (clique-pair) v K_1. On acceptance the
// decomposition witness lists the two clique sizes per factor (q = 0 when
// a factor is a single vertex).
struct Mb2Recognition {
    bool accepted = false;
    std::string reason;
    std::vector<std::pair<int, int>> clique_pairs;
    std::vector<std::vector<int>> factor_vertices;
};
Mb2Recognition recognize_mb2_form(const Graph& g);

}  // namespace mbk

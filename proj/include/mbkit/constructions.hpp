#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mbkit/graph.hpp"
#include "mbkit/realization.hpp"
#include "mbkit/spectra.hpp"

namespace mbk {

// Join of factors, each a disjoint union of cliques; vertex order is factor
// by factor, clique by clique. Shared layout for the block constructions.
Graph blocks_graph(const std::vector<std::vector<int>>& factor_clique_sizes);

// Scaled adjacency of the complete multipartite graph with entries
// 1/sqrt(p_i p_j) across parts; spectrum {-1^(l-1), 0^(sum p_i - l), (l-1)}.
// The one certificate kind with three eigenvalue classes.
RealizationCertificate multipartite_three_eigs(const PartList& parts);

// Join of two graphs carrying normalized [n-k, k] certificates with the same
// k and no isolated vertices; the assembled matrix C satisfies C^2 = 2C
// before normalization.
RealizationCertificate join_equal_mb(const RealizationCertificate& cg,
                                     const RealizationCertificate& ch, std::uint64_t seed);

// G joined with a disjoint union of cliques K_{s_1} u ... u K_{s_d}, driven
// by a d-column Gram factor of a matrix in S(G); beta must exceed the common
// squared column norm.
RealizationCertificate join_with_cliques(const Graph& g, const GramFactor& z,
                                         const std::vector<int>& sizes, double beta,
                                         std::uint64_t seed);

// G joined with k isolated vertices, for a normalized [n-k, k] certificate
// with k >= 2 and no isolated vertices in G.
RealizationCertificate join_with_empty(const RealizationCertificate& cg, std::uint64_t seed);

// Connected G on n >= 2 vertices joined with n (resp. n-1) isolated
// vertices; realizes the bipartition [n, n] (resp. [n, n-1]).
RealizationCertificate join_empty_n(const Graph& g, std::uint64_t seed);
RealizationCertificate join_empty_n_minus_1(const Graph& g, std::uint64_t seed);

// The explicit order-2..5 matrices with orthogonal equal-norm rows, one real
// parameter each (t > 1; the order-5 family is parametrized by s).
struct RingMatrix {
    int order = 0;
    double param = 0.0;
    Matrix m;
    double row_norm_sq = 0.0;
};
RingMatrix ring_matrix(int order, double t);

// Entry-wise nonzero cross products between two ring matrices with distinct
// parameters; threshold matches the nonvanishing-rotation convention.
bool ring_pair_nonzero(const RingMatrix& a, const RingMatrix& b, double theta_nz = 1e-8);

// Join of l factors, each a union of k cliques, realized from l ring
// matrices of order k with pairwise entry-wise nonzero cross products.
RealizationCertificate canonical_blocks(const CliqueBlockSpec& spec,
                                        const std::vector<RingMatrix>& ms);
// convenience: ring matrices built from a parameter list (defaults to small
// primes 2, 3, 5, ...)
RealizationCertificate canonical_blocks_auto(const CliqueBlockSpec& spec,
                                             std::vector<double> params = {});

// (K_a1 u K_b1 u K_c1) v (K_a2 u K_b2 u K_c2) via A = I - 2 sum v v^T with
// unit vectors built from the order-3 ring pattern; sizes > 1, parameters
// distinct and positive. Accidental sub-threshold entries resample the
// parameters.
RealizationCertificate example_three_cliques(const std::array<int, 6>& sizes, double t1, double t2,
                                             std::uint64_t seed);

// Parameters of the join construction with a K_{alpha,alpha} hole inside the
// first clique.
struct HoleParams {
    int alpha = 1;
    std::vector<int> a;     // clique sizes, > 2
    std::vector<int> b;     // clique sizes, > 2
    std::vector<double> w;  // positive weights, one per factor
};
RealizationCertificate bipartite_hole(const HoleParams& p, std::uint64_t seed);

// Join of clique pairs with two disjoint cross edges removed between K_{a_1}
// and K_{a_2}; w weights beyond the first two default to i+1.
RealizationCertificate two_edges_removed(const std::vector<int>& a, const std::vector<int>& b,
                                         double w1, double w2, std::uint64_t seed);

// The strong product of a path with a single edge: [n+1, n-1] with nonzero
// eigenvalue 10.
RealizationCertificate path_p2_realization(int n);

// Path of cliques of sizes c_i >= 2, built by cloning cluster vertices of
// the strong-product realization; partition [sum c_i - (m-1), m-1].
RealizationCertificate path_of_cliques(const std::vector<int>& cluster_sizes);

}  // namespace mbk

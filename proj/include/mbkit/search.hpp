#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "mbkit/graph.hpp"
#include "mbkit/matrix.hpp"
#include "mbkit/obstructions.hpp"
#include "mbkit/realization.hpp"

namespace mbk {

struct SearchConfig {
    int restarts = 100;
    int max_iters = 500;
    double step0 = 0.25;
    double step_grow = 1.05;
    double step_shrink = 0.5;
    double penalty_weight = 1.0;
    double zero_tol = 1e-9;     // matches certificate defaults
    double nonzero_tol = 1e-8;  // matches certificate defaults
    double cluster_tol = 1e-6;
    std::uint64_t seed = 0;
    int polish_iters = 300;
    double polish_trigger = 2e-3;
    bool parallel = true;  // restarts across OpenMP threads; result identical either way
};

struct SearchResult {
    bool found = false;
    std::optional<RealizationCertificate> certificate;
    double best_residual = 0.0;  // max off-pattern entry over restarts 0..found
    int restarts_used = 0;
    long long iterations = 0;  // summed over restarts 0..found
    int found_restart = -1;
};

// Penalty objective over n x k factors U with orthonormal columns:
// squared non-edge entries of U U^T plus a hinge pushing edge entries past
// eps. Exposed for the finite-difference gradient check.
double search_objective(const Graph& g, const Matrix& u, double mu, double eps);
Matrix search_gradient(const Graph& g, const Matrix& u, double mu, double eps);

// Decide whether G attains the multiplicity bipartition [n-k, k]: projected
// gradient descent with re-orthonormalization, refined by alternating
// projections, over seeded restarts (restart 0 warm-starts from the top
// adjacency eigenvectors). A success is always backed by a certificate; a
// not-found result is evidence, never a proof. Guard: n <= 16.
//
// Restarts are independent given (seed, index); later restarts are skipped
// once a lower-indexed one has succeeded, and the reported result is the
// success of least index, so parallel and serial runs agree exactly.
SearchResult find_realization(const Graph& g, int k, const SearchConfig& cfg);

struct MinimalBipartitionResult {
    BoundsReport bounds;
    std::optional<int> mb;  // exact value or least k found (see exact)
    bool exact = false;
    std::string method;
    std::map<int, SearchResult> runs;
    std::optional<RealizationCertificate> certificate;
};

// Least k with a certificate, scanned upward from the combinatorial lower
// bound; exact when the certificate meets that bound or a recognizer decides.
MinimalBipartitionResult minimal_bipartition(const Graph& g, const SearchConfig& cfg);

// Runs every k up to floor(n/2) and returns all results; the achievable set
// is the keys with found results.
std::map<int, SearchResult> achievable_bipartitions(const Graph& g, const SearchConfig& cfg);

}  // namespace mbk

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbkit/graph.hpp"
#include "mbkit/invariants.hpp"
#include "mbkit/realization.hpp"

namespace mbk {

// A concrete refutation of a two-distinct-eigenvalue realization. Witnesses
// can always be re-checked against the graph.
struct ObstructionWitness {
    enum class Kind { cut_edge, common_neighbour_deficit, neighbourhood_union_deficit };
    Kind kind;
    std::vector<int> vertices;              // the pair / independent set S
    std::vector<int> neighbourhood_union;   // for the union-deficit kind
    int lhs = 0, rhs = 0;                   // the violated inequality, both sides
};

struct LowerBound {
    int value;
    std::string source;  // independent-set | induced-path | mb2-recognizer-reject | interlacing
    std::vector<int> witness;
};

struct UpperBound {
    int k;
    std::string source;  // certificate provenance name
};

// Aggregated view. Lower bounds constrain the minimal bipartition when it is
// defined (two distinct eigenvalues attainable); obstructions witness that it
// is not defined at all.
struct BoundsReport {
    std::string graph6;
    int n = 0;
    std::vector<LowerBound> lower;
    std::vector<UpperBound> upper;
    std::vector<ObstructionWitness> obstructions;
    bool complete = false;
    bool mb2_form = false;
    std::optional<int> mb_exact;
    std::string status;  // exact | bounded | q-gt-2-witnessed | no-bipartition-possible
    bool inconsistent = false;
    bool union_search_exhausted = true;
    int max_lower = 0;
};

std::pair<int, std::vector<int>> independent_set_bound(const Graph& g);
std::pair<int, std::vector<int>> induced_path_bound(const Graph& g);

// Necessary conditions for two distinct eigenvalues on a connected graph:
// no cut edge, every non-adjacent pair has two common neighbours, and for
// independent sets with a nonempty pairwise common-neighbourhood union the
// union is at least as large as the set. The union search is capped at
// |S| <= 8 and a fixed node budget; an empty result is not a proof.
std::vector<ObstructionWitness> q2_necessary_conditions(const Graph& g,
                                                        bool* search_exhausted = nullptr);

// Lower bound for the vertex-cone join from a known eigenvalue count.
int interlacing_join_bound(int q_g);

BoundsReport bounds_report(const Graph& g,
                           const std::vector<const RealizationCertificate*>& certificates = {});

// re-check a witness against the graph (tests rely on this)
bool verify_obstruction(const Graph& g, const ObstructionWitness& w);

}  // namespace mbk

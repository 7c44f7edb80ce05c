#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbkit/graph.hpp"
#include "mbkit/matrix.hpp"
#include "mbkit/spectra.hpp"

namespace mbk {

struct Tolerances {
    double zero = 1e-9;     // relative, non-edge entries
    double nonzero = 1e-8;  // relative, edge entries
    double cluster = 1e-6;  // relative to the eigenvalue spread
};

struct PatternViolation {
    int i, j;
    bool must_be_zero;  // false: must be nonzero
    double value;
};

struct PatternReport {
    bool ok = false;
    std::vector<PatternViolation> violations;
    double zero_tol = 0.0;
    double nonzero_tol = 0.0;
    double scale = 0.0;
};

// Does A match the zero/nonzero off-diagonal pattern of G? The diagonal is
// unconstrained; entries compare against scale = max off-diagonal magnitude.
PatternReport pattern_membership(const SymmetricMatrix& a, const Graph& g, double zero_tol,
                                 double nonzero_tol);

struct Provenance {
    std::string name;
    std::string params_json = "{}";
    std::uint64_t seed = 0;
};

// Verified binding of a matrix to a graph and an eigenvalue multiplicity
// partition. Bipartition certificates are stored normalized to spectrum
// {0, 1} with multiplicities [n-k, k]; the one three-eigenvalue kind (the
// multipartite construction) keeps its natural values.
struct RealizationCertificate {
    Graph graph;
    SymmetricMatrix matrix;
    std::vector<double> class_values;       // ascending
    std::vector<int> class_multiplicities;  // parallel to class_values
    int k = 0;
    bool three_eigenvalue_kind = false;
    Tolerances tols;
    Provenance provenance;
    std::vector<double> original_values;  // pre-normalization class values
};

class CertifyError : public std::runtime_error {
public:
    CertifyError(std::string msg, PatternReport report)
        : std::runtime_error(std::move(msg)), pattern(std::move(report)) {}
    explicit CertifyError(std::string msg) : std::runtime_error(std::move(msg)) {}

    PatternReport pattern;
};

// Build a certificate: pattern check, eigendecomposition, multiplicity
// clustering, [n-k, k] validation and numerical-rank consistency, then
// normalization to the {0, 1} spectrum. Throws CertifyError with the failing
// report otherwise.
RealizationCertificate certify(const SymmetricMatrix& a, const Graph& g, int k,
                               const Tolerances& tols, Provenance provenance);

// Affine respectralization: maps the two class values to (mu1, mu2). The
// off-diagonal pattern is preserved exactly since the scaling is nonzero.
RealizationCertificate rescale_spectrum(const RealizationCertificate& cert, double mu1, double mu2);

// Vertex cloning on the certificate level: duplicate the Gram-factor row of
// v (split by 1/sqrt(2)); the result realizes clone_vertex(graph, v) with
// partition [n+1-k, k]. Rejects a (numerically) zero row at v.
RealizationCertificate clone_realization(const RealizationCertificate& cert, int v);

// Re-validate a certificate from its raw fields; used by file verification.
void revalidate(const RealizationCertificate& cert);

}  // namespace mbk

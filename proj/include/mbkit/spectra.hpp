#pragma once

#include <cstdint>
#include <vector>

#include "mbkit/eig.hpp"
#include "mbkit/graph.hpp"
#include "mbkit/matrix.hpp"

namespace mbk {

// Distinct eigenvalue classes. byMultiplicity order: multiplicity descending,
// value ascending on ties. ascending order: class value ascending.
struct MultiplicityClass {
    double value;
    int multiplicity;
};

struct MultiplicityPartition {
    std::vector<MultiplicityClass> classes;  // ascending by value
    double tol = 0.0;
    bool ill_separated = false;  // some gap within a factor of 10 of tol

    int total() const;
    std::vector<int> multiplicities_sorted() const;  // descending
    bool is_bipartition(int n, int k) const;         // exactly {n-k, k}
};

// Greedy gap clustering: consecutive eigenvalues join a class iff the gap is
// <= tol; class value is the mean.
MultiplicityPartition cluster_multiplicities(const Spectrum& spec, double tol);

// Haar-distributed k x k orthogonal matrix: seeded Gaussian sample,
// Gram-Schmidt with reorthogonalization, positive-diagonal sign convention.
Matrix random_orthogonal(int k, std::uint64_t seed);

// Orthogonal R with every entry of M1^T R M2 bounded away from zero
// (relative threshold theta_nz against ||M1||_F ||M2||_F), found by
// rejection sampling. M1, M2 must have k rows and no zero columns.
struct RotationResult {
    Matrix r;
    int tries = 0;
};
RotationResult nonvanishing_rotation(const Matrix& m1, const Matrix& m2, std::uint64_t seed,
                                     int max_tries = 32, double theta_nz = 1e-8);

// n x k factor with pairwise orthogonal columns of equal squared norm c;
// U U^T then has spectrum {0^(n-k), c^(k)}.
class GramFactor {
public:
    GramFactor(Matrix u, double col_norm_sq);

    const Matrix& u() const { return u_; }
    double col_norm_sq() const { return c_; }
    int n() const { return u_.rows(); }
    int k() const { return u_.cols(); }

private:
    Matrix u_;
    double c_;
};

SymmetricMatrix gram_assemble(const GramFactor& f);

// Inverse direction: requires the spectrum to be {0^(n-k), c^(k)} within tol
// for a single positive c; returns the scaled top-k eigenvector factor.
GramFactor gram_extract(const SymmetricMatrix& a, int k, double tol = 1e-8);

// Replace U by U R (orthogonal R) so that no entry of the factor is zero;
// the assembled matrix is unchanged. Requires no zero rows.
GramFactor entrywise_nonzero_gram(const GramFactor& f, std::uint64_t seed);

// Matrix in S(G) with prescribed distinct eigenvalues and nowhere-zero
// eigenvectors: random weights refined by alternating projections between
// the fixed-spectrum set and the zero pattern, retried over seeds.
SymmetricMatrix generic_realization(const Graph& g, const std::vector<double>& target_eigs,
                                    std::uint64_t seed, int max_tries = 60);

}  // namespace mbk

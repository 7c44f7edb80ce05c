#pragma once

#include <vector>

#include "mbkit/matrix.hpp"

namespace mbk {

// Eigendecomposition of a symmetric matrix. Eigenvalues ascending;
// eigenvectors are the matching columns of an orthogonal matrix, each with
// its largest-magnitude entry made positive.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;

    int order() const { return int(eigenvalues.size()); }
};

// Cyclic Jacobi over round-robin rounds. Rotations inside a round act on
// disjoint index pairs and are applied in two conflict-free phases, so the
// pair loop parallelizes with OpenMP and the result is identical for any
// thread count.
Spectrum eigendecompose(const SymmetricMatrix& a);

// residual checks used by tests and certificate validation
double spectrum_residual(const SymmetricMatrix& a, const Spectrum& s);   // max |A v - lambda v|
double orthonormality_defect(const Matrix& v);                           // max |V^T V - I|

namespace reference {
// Plain cyclic-by-row Jacobi kept as the serial reference implementation.
Spectrum eigendecompose_serial(const SymmetricMatrix& a);
}  // namespace reference

}  // namespace mbk

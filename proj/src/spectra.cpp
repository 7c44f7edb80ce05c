#include "mbkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mbkit/rng.hpp"

namespace mbk {

int MultiplicityPartition::total() const {
    int t = 0;
    for (const auto& c : classes) t += c.multiplicity;
    return t;
}

std::vector<int> MultiplicityPartition::multiplicities_sorted() const {
    std::vector<int> m;
    for (const auto& c : classes) m.push_back(c.multiplicity);
    std::sort(m.begin(), m.end(), std::greater<int>());
    return m;
}

bool MultiplicityPartition::is_bipartition(int n, int k) const {
    if (classes.size() != 2) return false;
    auto m = multiplicities_sorted();
    return m[0] == n - k && m[1] == k;
}

MultiplicityPartition cluster_multiplicities(const Spectrum& spec, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("cluster_multiplicities: tol must be positive");
    MultiplicityPartition part;
    part.tol = tol;
    const auto& ev = spec.eigenvalues;
    if (ev.empty()) return part;

    double sum = ev[0];
    int count = 1;
    for (std::size_t i = 1; i <= ev.size(); ++i) {
        bool close = i < ev.size() && (ev[i] - ev[i - 1]) <= tol;
        if (i < ev.size()) {
            double gap = ev[i] - ev[i - 1];
            if (gap > tol / 10.0 && gap <= 10.0 * tol) part.ill_separated = true;
        }
        if (close) {
            sum += ev[i];
            ++count;
        } else {
            part.classes.push_back({sum / count, count});
            if (i < ev.size()) {
                sum = ev[i];
                count = 1;
            }
        }
    }
    return part;
}

namespace {

// Gram-Schmidt with one reorthogonalization pass; diagonal of the implied
// triangular factor is positive by construction.
bool orthonormalize_columns(Matrix& m) {
    int n = m.rows(), k = m.cols();
    for (int j = 0; j < k; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < j; ++i) {
                double d = 0.0;
                for (int r = 0; r < n; ++r) d += m(r, i) * m(r, j);
                for (int r = 0; r < n; ++r) m(r, j) -= d * m(r, i);
            }
        }
        double norm = std::sqrt(m.col_norm_sq(j));
        if (norm < 1e-300) return false;
        for (int r = 0; r < n; ++r) m(r, j) /= norm;
    }
    return true;
}

}  // namespace

Matrix random_orthogonal(int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_orthogonal: k must be >= 1");
    if (k == 1) return Matrix::identity(1);  // sign convention pins the output
    Rng rng(derive_seed(seed, 0x6f7274686fULL));
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(i, j) = rng.normal();
        if (orthonormalize_columns(m)) return m;
    }
    throw std::runtime_error("random_orthogonal: degenerate Gaussian sample");
}

namespace {

double min_abs_product_entry(const Matrix& m1t, const Matrix& r, const Matrix& m2) {
    Matrix p = m1t * (r * m2);
    double mn = std::numeric_limits<double>::infinity();
    for (double x : p.data()) mn = std::min(mn, std::abs(x));
    return mn;
}

}  // namespace

RotationResult nonvanishing_rotation(const Matrix& m1, const Matrix& m2, std::uint64_t seed,
                                     int max_tries, double theta_nz) {
    if (m1.rows() != m2.rows()) throw std::invalid_argument("nonvanishing_rotation: row counts differ");
    int k = m1.rows();
    if (k < 1) throw std::invalid_argument("nonvanishing_rotation: empty input");
    for (int j = 0; j < m1.cols(); ++j)
        if (m1.col_norm_sq(j) == 0.0) throw std::invalid_argument("nonvanishing_rotation: M1 has a zero column");
    for (int j = 0; j < m2.cols(); ++j)
        if (m2.col_norm_sq(j) == 0.0) throw std::invalid_argument("nonvanishing_rotation: M2 has a zero column");

    double bound = theta_nz * m1.frobenius() * m2.frobenius();
    Matrix m1t = m1.transposed();

    if (k == 1) {
        for (double sign : {1.0, -1.0}) {
            Matrix r(1, 1);
            r(0, 0) = sign;
            if (min_abs_product_entry(m1t, r, m2) > bound) return {r, 1};
        }
        throw std::runtime_error("nonvanishing_rotation: k = 1 products below threshold");
    }

    for (int t = 0; t < max_tries; ++t) {
        Matrix r = random_orthogonal(k, derive_seed(seed, std::uint64_t(t)));
        if (min_abs_product_entry(m1t, r, m2) > bound) return {r, t + 1};
    }
    throw std::runtime_error("nonvanishing_rotation: no rotation found in " + std::to_string(max_tries) +
                             " tries (degenerate inputs or threshold too strict)");
}

GramFactor::GramFactor(Matrix u, double col_norm_sq) : u_(std::move(u)), c_(col_norm_sq) {
    int k = u_.cols();
    if (k < 1 || u_.rows() < 1) throw std::invalid_argument("GramFactor: empty factor");
    if (!(c_ > 0.0)) throw std::invalid_argument("GramFactor: column norm must be positive");
    for (int i = 0; i < k; ++i) {
        if (std::abs(u_.col_norm_sq(i) - c_) > 1e-10 * c_)
            throw std::invalid_argument("GramFactor: column norms differ from the declared value");
        for (int j = i + 1; j < k; ++j)
            if (std::abs(u_.col_dot(i, j)) > 1e-10 * c_)
                throw std::invalid_argument("GramFactor: columns are not orthogonal");
    }
}

SymmetricMatrix gram_assemble(const GramFactor& f) { return gram_outer(f.u()); }

GramFactor gram_extract(const SymmetricMatrix& a, int k, double tol) {
    int n = a.order();
    if (k < 1 || k > n) throw std::invalid_argument("gram_extract: k out of range");
    Spectrum spec = eigendecompose(a);
    double scale = std::max(1.0, std::abs(spec.eigenvalues.back()));
    for (int i = 0; i < n - k; ++i)
        if (std::abs(spec.eigenvalues[i]) > tol * scale)
            throw std::invalid_argument("gram_extract: spectrum is not {0^(n-k), c^(k)} (nonzero low class)");
    double c = 0.0;
    for (int i = n - k; i < n; ++i) c += spec.eigenvalues[i];
    c /= k;
    if (!(c > tol * scale)) throw std::invalid_argument("gram_extract: top class is not positive");
    for (int i = n - k; i < n; ++i)
        if (std::abs(spec.eigenvalues[i] - c) > tol * scale)
            throw std::invalid_argument("gram_extract: top class is not a single cluster");

    Matrix u(n, k);
    double root = std::sqrt(c);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) u(i, j) = root * spec.eigenvectors(i, n - k + j);
    return GramFactor(std::move(u), c);
}

GramFactor entrywise_nonzero_gram(const GramFactor& f, std::uint64_t seed) {
    const Matrix& u = f.u();
    for (int i = 0; i < u.rows(); ++i)
        if (u.row_norm_sq(i) == 0.0)
            throw std::invalid_argument("entrywise_nonzero_gram: zero row (isolated vertex)");
    Matrix m1 = u.transposed();
    RotationResult rot = nonvanishing_rotation(m1, Matrix::identity(f.k()), seed);
    return GramFactor(u * rot.r, f.col_norm_sq());
}

namespace {

// lightweight pattern test used inside the sampling loop; the reporting
// variant lives with the certificate machinery
bool pattern_ok(const SymmetricMatrix& a, const Graph& g, double zero_tol, double nonzero_tol) {
    int n = g.vertex_count();
    double scale = a.max_abs_offdiag();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = std::abs(a(i, j));
            if (g.has_edge(i, j)) {
                if (!(v > nonzero_tol * scale)) return false;
            } else if (!(v <= zero_tol * scale)) {
                return false;
            }
        }
    return true;
}

}  // namespace

SymmetricMatrix generic_realization(const Graph& g, const std::vector<double>& target_eigs,
                                    std::uint64_t seed, int max_tries) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("generic_realization: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("generic_realization: graph must be connected");
    if (int(target_eigs.size()) != n)
        throw std::invalid_argument("generic_realization: need n target eigenvalues");
    for (int i = 0; i + 1 < n; ++i)
        if (!(target_eigs[i] < target_eigs[i + 1]))
            throw std::invalid_argument("generic_realization: targets must be strictly increasing");

    if (n == 1) return SymmetricMatrix::diagonal({target_eigs[0]});

    constexpr double kZeroTol = 1e-9;
    constexpr double kNonzeroTol = 1e-8;
    constexpr double kVecFloor = 1e-8;
    constexpr int kApIters = 500;

    auto edges = g.edges();
    double spread = target_eigs.back() - target_eigs.front();

    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Rng rng(derive_seed(seed, 0x67656eULL + std::uint64_t(attempt)));
        SymmetricMatrix a(n);
        for (auto [u, v] : edges) {
            double w = rng.uniform(0.5, 1.5) * (rng.coin() ? 1.0 : -1.0);
            a.set(u, v, w);
        }
        for (int i = 0; i < n; ++i) a.set(i, i, rng.uniform(-1.0, 1.0));

        for (int iter = 0; iter < kApIters; ++iter) {
            Spectrum spec = eigendecompose(a);
            double min_gap = std::numeric_limits<double>::infinity();
            for (int i = 0; i + 1 < n; ++i)
                min_gap = std::min(min_gap, spec.eigenvalues[i + 1] - spec.eigenvalues[i]);
            if (!(min_gap > 1e-12 * std::max(1.0, spread))) break;  // degenerate; resample

            // spectral step: keep the eigenvector frame, impose the targets
            Matrix vt = spec.eigenvectors.transposed();
            Matrix scaled(n, n);
            for (int r = 0; r < n; ++r)
                for (int col = 0; col < n; ++col) scaled(r, col) = target_eigs[r] * vt(r, col);
            Matrix b = spec.eigenvectors * scaled;
            SymmetricMatrix bs(n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) bs.set(i, j, 0.5 * (b(i, j) + b(j, i)));

            double off = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!g.has_edge(i, j)) off = std::max(off, std::abs(bs(i, j)));
            double scale = std::max(1e-30, bs.max_abs_offdiag());

            if (off <= 0.3 * kZeroTol * scale) {
                double vmin = std::numeric_limits<double>::infinity();
                for (double x : spec.eigenvectors.data()) vmin = std::min(vmin, std::abs(x));
                if (vmin > kVecFloor && pattern_ok(bs, g, kZeroTol, kNonzeroTol)) return bs;
                break;  // converged to a bad point; resample
            }

            // pattern step: zero the non-edges, keep edges and diagonal
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!g.has_edge(i, j)) bs.set(i, j, 0.0);
            a = bs;
        }
    }
    throw std::runtime_error("generic_realization: no realization found within retry budget");
}

}  // namespace mbk

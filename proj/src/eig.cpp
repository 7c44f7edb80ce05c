#include "mbkit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mbk {

namespace {

constexpr int kMaxSweeps = 100;

struct Rotation {
    int p, q;
    double c, s;
};

// zero a_pq with the symmetric 2x2 Schur rotation
inline Rotation make_rotation(int p, int q, double app, double aqq, double apq) {
    double tau = (aqq - app) / (2.0 * apq);
    double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    return Rotation{p, q, c, t * c};
}

inline void rotate_cols(std::vector<double>& a, int n, const Rotation& r) {
    for (int i = 0; i < n; ++i) {
        double* row = &a[std::size_t(i) * n];
        double x = row[r.p], y = row[r.q];
        row[r.p] = r.c * x - r.s * y;
        row[r.q] = r.s * x + r.c * y;
    }
}

inline void rotate_rows(std::vector<double>& a, int n, const Rotation& r) {
    double* rp = &a[std::size_t(r.p) * n];
    double* rq = &a[std::size_t(r.q) * n];
    for (int j = 0; j < n; ++j) {
        double x = rp[j], y = rq[j];
        rp[j] = r.c * x - r.s * y;
        rq[j] = r.s * x + r.c * y;
    }
}

double offdiag_sq(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = a[std::size_t(i) * n + j];
            s += 2.0 * x * x;
        }
    return s;
}

Spectrum finish(std::vector<double>& a, std::vector<double>& v, int n) {
    Spectrum s;
    s.eigenvalues.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        double dx = a[std::size_t(x) * n + x], dy = a[std::size_t(y) * n + y];
        return dx != dy ? dx < dy : x < y;
    });
    s.eigenvectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        int src = order[j];
        s.eigenvalues[j] = a[std::size_t(src) * n + src];
        // sign convention: largest-magnitude entry positive
        int arg = 0;
        double mx = 0.0;
        for (int i = 0; i < n; ++i) {
            double val = std::abs(v[std::size_t(i) * n + src]);
            if (val > mx) {
                mx = val;
                arg = i;
            }
        }
        double flip = (v[std::size_t(arg) * n + src] < 0.0) ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) s.eigenvectors(i, j) = flip * v[std::size_t(i) * n + src];
    }
    return s;
}

}  // namespace

Spectrum eigendecompose(const SymmetricMatrix& sym) {
    if (!sym.all_finite()) throw std::invalid_argument("eigendecompose: non-finite entries");
    int n = sym.order();
    if (n == 0) return Spectrum{{}, Matrix(0, 0)};

    std::vector<double> a = sym.data();
    std::vector<double> v(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[std::size_t(i) * n + i] = 1.0;

    if (n == 1) return finish(a, v, n);

    double total = 0.0;
    for (double x : a) total += x * x;
    double stop = 1e-26 * std::max(1.0, total);

    // round-robin tournament: player m-1 fixed, the rest rotate
    const int m = (n % 2 == 0) ? n : n + 1;
    std::vector<Rotation> rots;
    rots.reserve(m / 2);

    bool converged = offdiag_sq(a, n) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int round = 0; round < m - 1; ++round) {
            rots.clear();
            {
                int p = m - 1, q = round;
                if (p < n && q < n) {
                    if (p > q) std::swap(p, q);
                    double apq = a[std::size_t(p) * n + q];
                    if (apq != 0.0)
                        rots.push_back(make_rotation(p, q, a[std::size_t(p) * n + p],
                                                     a[std::size_t(q) * n + q], apq));
                }
            }
            for (int i = 1; i <= (m - 2) / 2; ++i) {
                int p = (round + i) % (m - 1);
                int q = (round - i + (m - 1)) % (m - 1);
                if (p >= n || q >= n) continue;
                if (p > q) std::swap(p, q);
                double apq = a[std::size_t(p) * n + q];
                if (apq == 0.0) continue;
                rots.push_back(make_rotation(p, q, a[std::size_t(p) * n + p],
                                             a[std::size_t(q) * n + q], apq));
            }
            if (rots.empty()) continue;
            const int nr = int(rots.size());
            // pairs are disjoint: column updates touch disjoint columns,
            // row updates disjoint rows, so each phase is race-free
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= 96)
#endif
            for (int t = 0; t < nr; ++t) rotate_cols(a, n, rots[t]);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= 96)
#endif
            for (int t = 0; t < nr; ++t) rotate_rows(a, n, rots[t]);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= 96)
#endif
            for (int t = 0; t < nr; ++t) rotate_cols(v, n, rots[t]);
        }
        converged = offdiag_sq(a, n) <= stop;
    }
    if (!converged) throw std::runtime_error("eigendecompose: Jacobi sweeps did not converge");

    return finish(a, v, n);
}

double spectrum_residual(const SymmetricMatrix& a, const Spectrum& s) {
    int n = a.order();
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int k = 0; k < n; ++k) av += a(i, k) * s.eigenvectors(k, j);
            worst = std::max(worst, std::abs(av - s.eigenvalues[j] * s.eigenvectors(i, j)));
        }
    }
    return worst;
}

double orthonormality_defect(const Matrix& v) {
    int k = v.cols();
    double worst = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            double d = v.col_dot(i, j) - (i == j ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(d));
        }
    return worst;
}

namespace reference {

Spectrum eigendecompose_serial(const SymmetricMatrix& sym) {
    if (!sym.all_finite()) throw std::invalid_argument("eigendecompose_serial: non-finite entries");
    int n = sym.order();
    if (n == 0) return Spectrum{{}, Matrix(0, 0)};

    std::vector<double> a = sym.data();
    std::vector<double> v(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[std::size_t(i) * n + i] = 1.0;
    if (n == 1) return finish(a, v, n);

    double total = 0.0;
    for (double x : a) total += x * x;
    double stop = 1e-26 * std::max(1.0, total);

    bool converged = offdiag_sq(a, n) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[std::size_t(p) * n + q];
                if (apq == 0.0) continue;
                Rotation r = make_rotation(p, q, a[std::size_t(p) * n + p],
                                           a[std::size_t(q) * n + q], apq);
                rotate_cols(a, n, r);
                rotate_rows(a, n, r);
                rotate_cols(v, n, r);
            }
        }
        converged = offdiag_sq(a, n) <= stop;
    }
    if (!converged) throw std::runtime_error("eigendecompose_serial: Jacobi sweeps did not converge");
    return finish(a, v, n);
}

}  // namespace reference

}  // namespace mbk

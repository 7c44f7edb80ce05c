#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mbk {

// Dense row-major matrix. Everything here is desk scale (n up to a few
// hundred), so naive loops are fine and keep the numerics easy to audit.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(std::size_t(rows) * std::size_t(cols), 0.0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                double aik = (*this)(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        }
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix subtract: shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix& operator*=(double s) {
        for (double& x : a_) x *= s;
        return *this;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    bool all_finite() const {
        for (double x : a_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    double col_dot(int j1, int j2) const {
        double s = 0.0;
        for (int i = 0; i < rows_; ++i) s += (*this)(i, j1) * (*this)(i, j2);
        return s;
    }

    double row_norm_sq(int i) const {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * (*this)(i, j);
        return s;
    }

    double col_norm_sq(int j) const { return col_dot(j, j); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// Symmetric matrix of order n, stored dense and kept exactly symmetric.
// Construction from general data averages the two triangles and rejects
// anything asymmetric beyond 1e-12 relative.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : n_(n), a_(std::size_t(n) * std::size_t(n), 0.0) {
        if (n < 0) throw std::invalid_argument("SymmetricMatrix: negative order");
    }

    static SymmetricMatrix from_dense(const Matrix& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("SymmetricMatrix: not square");
        int n = m.rows();
        double scale = std::max(1.0, m.max_abs());
        SymmetricMatrix s(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double d = std::abs(m(i, j) - m(j, i));
                if (d > 1e-12 * scale)
                    throw std::invalid_argument("SymmetricMatrix: input asymmetric beyond tolerance");
                double v = 0.5 * (m(i, j) + m(j, i));
                s.set(i, j, v);
            }
        }
        return s;
    }

    static SymmetricMatrix diagonal(const std::vector<double>& d) {
        SymmetricMatrix s(int(d.size()));
        for (int i = 0; i < int(d.size()); ++i) s.set(i, i, d[i]);
        return s;
    }

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

    // writes both triangles
    void set(int i, int j, double v) {
        a_[std::size_t(i) * n_ + j] = v;
        a_[std::size_t(j) * n_ + i] = v;
    }

    const std::vector<double>& data() const { return a_; }

    Matrix to_matrix() const {
        Matrix m(n_, n_);
        m.data() = a_;
        return m;
    }

    bool all_finite() const {
        for (double x : a_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double max_abs_offdiag() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    SymmetricMatrix scaled_shifted(double alpha, double beta) const {
        SymmetricMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                r.set(i, j, alpha * (*this)(i, j) + (i == j ? beta : 0.0));
        return r;
    }

    double max_abs_diff(const SymmetricMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("max_abs_diff: order mismatch");
        double m = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

// A = U U^T, computed on the upper triangle and mirrored so the result is
// exactly symmetric.
inline SymmetricMatrix gram_outer(const Matrix& u) {
    int n = u.rows(), k = u.cols();
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int c = 0; c < k; ++c) s += u(i, c) * u(j, c);
            a.set(i, j, s);
        }
    }
    return a;
}

// U^T U
inline SymmetricMatrix gram_inner(const Matrix& u) {
    int k = u.cols();
    SymmetricMatrix a(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) a.set(i, j, u.col_dot(i, j));
    return a;
}

}  // namespace mbk

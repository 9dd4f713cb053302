// Dense complex matrices and vectors for small bipartite systems (dim <= 16).
// Row-major storage, value semantics, no sparse path.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zc/errors.hpp"

namespace zc {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
        return m;
    }

    static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = rows.begin()->size();
        CMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw DimensionMismatch("ragged row in matrix literal");
            std::size_t j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix transpose() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    CMatrix conj() const {
        CMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
        return m;
    }

    CMatrix dagger() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cplx trace() const {
        if (!square()) throw DimensionMismatch("trace of non-square matrix");
        cplx t(0.0, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    CVector col(std::size_t j) const {
        CVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const CVector& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix addition");
    CMatrix m(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) m.data()[k] = a.data()[k] + b.data()[k];
    return m;
}

inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix subtraction");
    CMatrix m(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) m.data()[k] = a.data()[k] - b.data()[k];
    return m;
}

inline CMatrix operator*(const cplx& s, const CMatrix& a) {
    CMatrix m(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) m.data()[k] = s * a.data()[k];
    return m;
}

inline CMatrix operator*(double s, const CMatrix& a) { return cplx(s, 0.0) * a; }

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
    CMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix comparison");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

// Entrywise equality within an absolute tolerance.
inline bool approx_equal(const CMatrix& a, const CMatrix& b, double atol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= atol;
}

inline bool exact_equal(const CMatrix& a, const CMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

inline bool is_hermitian(const CMatrix& a, double atol) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > atol) return false;
    return true;
}

inline bool is_unitary(const CMatrix& a, double atol) {
    if (!a.square()) return false;
    return max_abs_diff(a.dagger() * a, CMatrix::identity(a.rows())) <= atol;
}

// ---- vectors ----

inline double vnorm(const CVector& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

// <u|v> = sum conj(u_i) v_i
inline cplx vdot(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("inner product");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

inline CVector vconj(const CVector& v) {
    CVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = std::conj(v[i]);
    return w;
}

inline CVector matvec(const CMatrix& a, const CVector& v) {
    if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product");
    CVector w(a.rows(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) w[i] += a(i, j) * v[j];
    return w;
}

// |u><v| = u v^dagger
inline CMatrix outer(const CVector& u, const CVector& v) {
    CMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

inline CVector tensor(const CVector& a, const CVector& b) {
    CVector w(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) w[i * b.size() + j] = a[i] * b[j];
    return w;
}

// ---- J matrices, Kronecker product, partial transpose, minors ----

// J_{2m} = [[0, I_m], [-I_m, 0]]: +identity in the upper-right block,
// -identity in the lower-left block. Integer entries, exact.
inline CMatrix j_matrix(std::size_t half_dim) {
    const std::size_t m = half_dim;
    CMatrix j(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j(i, m + i) = cplx(1.0, 0.0);
        j(m + i, i) = cplx(-1.0, 0.0);
    }
    return j;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

// Transpose the first tensor factor: block (i,j) of size n_B x n_B swaps with (j,i).
// Pure data movement, so applying it twice restores the input exactly.
inline CMatrix partial_transpose_A(const CMatrix& rho, std::size_t n_a, std::size_t n_b) {
    const std::size_t n = n_a * n_b;
    if (rho.rows() != n || rho.cols() != n)
        throw DimensionMismatch("partial transpose expects a (n_A*n_B) square matrix");
    CMatrix m(n, n);
    for (std::size_t ia = 0; ia < n_a; ++ia)
        for (std::size_t ja = 0; ja < n_a; ++ja)
            for (std::size_t ib = 0; ib < n_b; ++ib)
                for (std::size_t jb = 0; jb < n_b; ++jb)
                    m(ia * n_b + ib, ja * n_b + jb) = rho(ja * n_b + ib, ia * n_b + jb);
    return m;
}

// Determinant by LU with partial pivoting.
inline cplx determinant(const CMatrix& a) {
    if (!a.square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = a.rows();
    CMatrix lu = a;
    cplx det(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(lu(i, k));
            if (m > best) { best = m; piv = i; }
        }
        if (best == 0.0) return cplx(0.0, 0.0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = lu(i, k) / lu(k, k);
            for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

inline CMatrix submatrix(const CMatrix& a, const std::vector<std::size_t>& idx) {
    CMatrix m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a(idx[i], idx[j]);
    return m;
}

// Principal minor of a Hermitian matrix over a strictly increasing index set.
// The determinant of a Hermitian submatrix is real; the residual imaginary
// part must stay below 1e-9 and is discarded.
inline double principal_minor(const CMatrix& h, const std::vector<std::size_t>& index_set) {
    if (!h.square()) throw DimensionMismatch("principal minor of non-square matrix");
    if (index_set.empty()) throw IndexOutOfRange("empty index set");
    for (std::size_t i = 0; i < index_set.size(); ++i) {
        if (index_set[i] >= h.rows()) throw IndexOutOfRange("index beyond matrix bound");
        if (i > 0 && index_set[i] <= index_set[i - 1])
            throw IndexOutOfRange("index set must be strictly increasing");
    }
    const cplx d = determinant(submatrix(h, index_set));
    if (std::abs(d.imag()) > 1e-9)
        throw NonHermitian("principal minor has imaginary part " + std::to_string(d.imag()));
    return d.real();
}

}  // namespace zc

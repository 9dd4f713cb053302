// Hermitian eigendecomposition by cyclic complex Jacobi rotations, plus the
// PSD square root built on it. Sized for dense matrices up to dim 16.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "zc/cmatrix.hpp"
#include "zc/errors.hpp"

namespace zc {

struct EigResult {
    std::vector<double> values;  // sorted descending
    CMatrix vectors;             // column k is the eigenvector of values[k]
    int sweeps = 0;
};

namespace detail {

inline double offdiag_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

}  // namespace detail

// Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian matrix.
// The input must satisfy ||H - H^dagger||_max <= herm_tol; it is symmetrized
// before iterating so the working matrix is exactly Hermitian.
inline EigResult herm_eig(const CMatrix& h, double herm_tol = 1e-9) {
    if (!h.square()) throw DimensionMismatch("herm_eig expects a square matrix");
    const std::size_t n = h.rows();
    if (max_abs_diff(h, h.dagger()) > herm_tol)
        throw NonHermitian("herm_eig input violates symmetry tolerance");

    CMatrix a = 0.5 * (h + h.dagger());
    CMatrix v = CMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double target = scale * 1e-15;
    const int max_sweeps = 60;
    int sweep = 0;
    double prev_off = std::numeric_limits<double>::infinity();
    for (; sweep < max_sweeps; ++sweep) {
        const double off = detail::offdiag_norm(a);
        if (off <= target) break;
        // rotations at machine level stop making progress; accept the plateau
        if (off <= scale * 1e-12 && off >= 0.5 * prev_off) break;
        prev_off = off;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double m = std::abs(apq);
                if (m <= scale * 1e-18) continue;
                const cplx phase = apq / m;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (app - aqq) / (2.0 * m);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx se_m = s * std::conj(phase);  // s e^{-i phi}
                const cplx se_p = s * phase;             // s e^{+i phi}
                // A <- U^dagger A U with U = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp + se_m * arq;
                    a(r, q) = -se_p * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr + se_p * aqr;
                    a(q, r) = -se_m * apr + c * aqr;
                }
                a(p, q) = cplx(0.0, 0.0);
                a(q, p) = cplx(0.0, 0.0);
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp + se_m * vrq;
                    v(r, q) = -se_p * vrp + c * vrq;
                }
            }
        }
    }
    if (detail::offdiag_norm(a) > scale * 1e-12)
        throw NoConvergence("Jacobi sweeps did not reduce the off-diagonal norm", sweep);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigResult res;
    res.sweeps = sweep;
    res.values.resize(n);
    res.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) res.vectors(r, k) = v(r, order[k]);
    }
    return res;
}

// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to zero
// before rooting; anything below -1e-9 is rejected.
inline CMatrix psd_sqrt(const CMatrix& h) {
    const EigResult eig = herm_eig(h);
    const std::size_t n = h.rows();
    CMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.values[k];
        if (lam < -1e-9)
            throw NotPSD("eigenvalue " + std::to_string(lam) + " below -1e-9");
        if (lam < 0.0) lam = 0.0;
        if (lam == 0.0) continue;
        const double s = std::sqrt(lam);
        const CVector vk = eig.vectors.col(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) += s * vk[i] * std::conj(vk[j]);
    }
    // symmetrize away rounding residue
    return 0.5 * (r + r.dagger());
}

}  // namespace zc

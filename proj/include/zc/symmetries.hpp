// Conjugations Theta|psi> = M conj(|psi>) built as tensor products of
// skew-conjugations: M = J_2 (x) T J_4 T^T for T in SU(4), together with the
// reduced (A, b, t) parametrization and its closed form
//   M = J_2 (x) ( cos(eta t) J_4 + (sin(eta t)/eta) H ),   H = 2 G J_4,
// where G = [[A, b J_2], [conj(b) J_2, A^T]] with A skew-Hermitian and b complex.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "zc/cmatrix.hpp"
#include "zc/eig.hpp"
#include "zc/errors.hpp"
#include "zc/rng.hpp"

namespace zc {

// Antiunitary conjugation, Theta^2 = +1. M is symmetric unitary; for the
// 2x4 family M additionally has the tensor form J_2 (x) W with W = -W^T unitary.
class Conjugation {
public:
    explicit Conjugation(CMatrix m) : m_(std::move(m)) {
        if (!m_.square() || (m_.rows() != 8 && m_.rows() != 4))
            throw DimensionMismatch("conjugation matrix must be 4x4 or 8x8");
        if (!is_unitary(m_, 1e-9)) throw InvalidInput("conjugation matrix not unitary");
        if (max_abs_diff(m_, m_.transpose()) > 1e-9)
            throw InvalidInput("conjugation matrix not symmetric");
        // tensor form J_2 (x) W: zero diagonal A-blocks, off-blocks +W / -W
        const std::size_t half = m_.rows() / 2;
        CMatrix w(half, half);
        double diag_resid = 0.0, skew_resid = 0.0;
        for (std::size_t i = 0; i < half; ++i)
            for (std::size_t j = 0; j < half; ++j) {
                diag_resid = std::max({diag_resid, std::abs(m_(i, j)),
                                       std::abs(m_(half + i, half + j))});
                skew_resid = std::max(skew_resid,
                                      std::abs(m_(i, half + j) + m_(half + i, j)));
                w(i, j) = m_(i, half + j);
            }
        if (diag_resid > 1e-9 || skew_resid > 1e-9)
            throw InvalidInput("conjugation matrix is not of the form J_2 (x) W");
        if (max_abs_diff(w, cplx(-1.0, 0.0) * w.transpose()) > 1e-9)
            throw InvalidInput("B-side factor W is not antisymmetric");
        bside_ = std::move(w);
    }

    const CMatrix& matrix() const { return m_; }
    const CMatrix& bside() const { return bside_; }  // W in M = J_2 (x) W
    std::size_t dim() const { return m_.rows(); }

private:
    CMatrix m_;
    CMatrix bside_;
};

// Antiunitary skew-conjugation T J T^T, Theta^2 = -1: antisymmetric unitary.
class SkewConjugation {
public:
    explicit SkewConjugation(CMatrix m) : m_(std::move(m)) {
        if (!m_.square() || m_.rows() % 2 != 0)
            throw DimensionMismatch("skew-conjugation needs even dimension");
        if (!is_unitary(m_, 1e-9)) throw InvalidInput("skew-conjugation not unitary");
        if (max_abs_diff(m_, cplx(-1.0, 0.0) * m_.transpose()) > 1e-9)
            throw InvalidInput("skew-conjugation not antisymmetric");
    }
    const CMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }

private:
    CMatrix m_;
};

// Reduced parameter set (A, b, t): A 2x2 skew-Hermitian, b complex, t real.
class CartanParams {
public:
    CartanParams(CMatrix a, cplx b, double t) : a_(std::move(a)), b_(b), t_(t) {
        if (a_.rows() != 2 || a_.cols() != 2) throw DimensionMismatch("A must be 2x2");
        if (max_abs_diff(a_, cplx(-1.0, 0.0) * a_.dagger()) > 1e-12)
            throw InvalidInput("A must be skew-Hermitian within 1e-12");
    }

    const CMatrix& a() const { return a_; }
    cplx b() const { return b_; }
    double t() const { return t_; }

    // Trace of A is purely imaginary; it enters M only as the global phase
    // e^{Tr(A) t} on the B-side factor. The closed form below works with the
    // traceless part and reinstates that phase exactly.
    cplx a_trace() const { return a_(0, 0) + a_(1, 1); }

    CMatrix a_traceless() const {
        CMatrix a0 = a_;
        const cplx half = 0.5 * a_trace();
        a0(0, 0) -= half;
        a0(1, 1) -= half;
        return a0;
    }

    CartanParams traceless() const { return CartanParams(a_traceless(), b_, t_); }

    // G = [[A, b J_2], [conj(b) J_2, A^T]], an element of sp(2)-perp.
    CMatrix g() const {
        CMatrix g(4, 4);
        const CMatrix at = a_.transpose();
        const CMatrix j2 = j_matrix(1);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                g(i, j) = a_(i, j);
                g(i, 2 + j) = b_ * j2(i, j);
                g(2 + i, j) = std::conj(b_) * j2(i, j);
                g(2 + i, 2 + j) = at(i, j);
            }
        return g;
    }

    CMatrix h() const { return 2.0 * (g() * j_matrix(2)); }

    double eta() const {
        const CMatrix hh = h();
        return 0.5 * std::sqrt((hh * hh.dagger()).trace().real());
    }

private:
    CMatrix a_;
    cplx b_;
    double t_;
};

// M = J_2 (x) T J_4 T^T for T special unitary.
inline Conjugation conjugation_from_su4(const CMatrix& t) {
    if (t.rows() != 4 || t.cols() != 4) throw DimensionMismatch("T must be 4x4");
    if (!is_unitary(t, 1e-9)) throw NotSpecialUnitary("T is not unitary within 1e-9");
    if (std::abs(determinant(t) - cplx(1.0, 0.0)) > 1e-9)
        throw NotSpecialUnitary("det T differs from 1 beyond 1e-9");
    return Conjugation(kron(j_matrix(1), t * j_matrix(2) * t.transpose()));
}

// Skew-conjugation matrix T J T^T for T special unitary of even dimension.
inline SkewConjugation skew_conjugation_from_su(const CMatrix& t) {
    if (!t.square() || t.rows() % 2 != 0)
        throw DimensionMismatch("T must be square of even dimension");
    if (!is_unitary(t, 1e-9)) throw NotSpecialUnitary("T is not unitary within 1e-9");
    if (std::abs(determinant(t) - cplx(1.0, 0.0)) > 1e-9)
        throw NotSpecialUnitary("det T differs from 1 beyond 1e-9");
    return SkewConjugation(t * j_matrix(t.rows() / 2) * t.transpose());
}

// Closed form of the conjugation generated by (A, b, t):
//   W0 = cos(eta0 t) J_4 + (sin(eta0 t)/eta0) H0,   W = e^{Tr(A) t} W0,
// with (H0, eta0) derived from the traceless part of A. For traceless A this
// is the plain closed form; the eta -> 0 limit is exactly J_2 (x) J_4
// (removable singularity of sin(eta t)/eta). Equals J_2 (x) e^{Gt} J_4 e^{G^T t}
// for every skew-Hermitian A.
inline Conjugation conjugation_from_params(const CartanParams& p) {
    const cplx tra = p.a_trace();
    const CartanParams p0 = std::abs(tra) > 0.0 ? p.traceless() : p;
    const double eta0 = p0.eta();
    CMatrix w(4, 4);
    if (eta0 <= 1e-12) {
        w = j_matrix(2);
    } else {
        const double c = std::cos(eta0 * p.t());
        const double s = std::sin(eta0 * p.t()) / eta0;
        w = c * j_matrix(2) + s * p0.h();
    }
    if (std::abs(tra) > 0.0) w = std::exp(tra * p.t()) * w;
    return Conjugation(kron(j_matrix(1), w));
}

// Haar-like special unitary: orthonormalized seeded complex-Gaussian columns,
// overall phase normalized so the determinant is 1. Deterministic per seed.
inline CMatrix random_special_unitary(std::size_t n, std::uint64_t seed) {
    if (n != 2 && n != 4) throw OutOfRange("random_special_unitary supports n in {2, 4}");
    Rng rng(seed);
    CMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) q(i, j) = rng.cgaussian();
    // modified Gram-Schmidt with one re-orthogonalization pass
    for (std::size_t j = 0; j < n; ++j) {
        CVector v = q.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const CVector u = q.col(k);
                const cplx proj = vdot(u, v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
            }
        const double nv = vnorm(v);
        for (auto& z : v) z /= nv;
        q.set_col(j, v);
    }
    const cplx det = determinant(q);
    const double delta = std::arg(det);
    const cplx w = std::polar(1.0, -delta / static_cast<double>(n));
    return w * q;
}

// Seeded draw over the reduced parameter space: Gaussian A and b, t uniform in
// (-2, 2). With traceless = true the diagonal of A carries +ia / -ia, matching
// the su(4) Cartan family; otherwise both imaginary diagonal entries are free.
inline CartanParams random_cartan(std::uint64_t seed, bool traceless = false) {
    Rng rng(seed);
    CMatrix a(2, 2);
    const double d1 = rng.gaussian();
    const double d2 = traceless ? -d1 : rng.gaussian();
    a(0, 0) = cplx(0.0, d1);
    a(1, 1) = cplx(0.0, d2);
    const cplx z(rng.gaussian(), rng.gaussian());
    a(0, 1) = z;
    a(1, 0) = -std::conj(z);
    const cplx b(rng.gaussian(), rng.gaussian());
    const double t = rng.uniform(-2.0, 2.0);
    return CartanParams(a, b, t);
}

// Theta(|psi>) = M conj(|psi>)
inline CVector apply_conjugation(const Conjugation& m, const CVector& psi) {
    if (psi.size() != m.dim()) throw DimensionMismatch("conjugation/state dimension");
    return matvec(m.matrix(), vconj(psi));
}

// theta(rho) = Theta rho Theta^{-1}, realized as M conj(rho) M^dagger.
// Spectrum-preserving; the returned matrix is symmetrized.
inline CMatrix superoperator_apply(const Conjugation& m, const CMatrix& rho) {
    if (rho.rows() != m.dim() || rho.cols() != m.dim())
        throw DimensionMismatch("conjugation/state dimension");
    if (!is_hermitian(rho, 1e-9)) throw NonHermitian("superoperator input must be Hermitian");
    const CMatrix out = m.matrix() * rho.conj() * m.matrix().dagger();
    return 0.5 * (out + out.dagger());
}

}  // namespace zc

// Bipartite density matrices, rank-2 states, Schmidt decomposition, the
// canonical form of 2x4 rank-2 states under local unitaries, and generators
// for the state families used in detection (separable, ZCE, block-embedded).
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zc/cmatrix.hpp"
#include "zc/eig.hpp"
#include "zc/errors.hpp"
#include "zc/rng.hpp"

namespace zc {

// Hermitian, PSD, unit-trace matrix tagged with the bipartite split (n_A, n_B).
class DensityMatrix {
public:
    DensityMatrix(std::size_t n_a, std::size_t n_b, CMatrix mat)
        : n_a_(n_a), n_b_(n_b), mat_(std::move(mat)) {
        const std::size_t n = n_a_ * n_b_;
        if (n == 0 || mat_.rows() != n || mat_.cols() != n)
            throw DimensionMismatch("density matrix must be (n_A*n_B) square");
        if (!is_hermitian(mat_, 1e-9)) throw NonHermitian("density matrix not Hermitian");
        if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > 1e-9)
            throw InvalidInput("density matrix trace differs from 1");
        const EigResult eig = herm_eig(mat_);
        if (eig.values.back() < -1e-9)
            throw NotPSD("density matrix has eigenvalue " + std::to_string(eig.values.back()));
    }

    std::size_t n_a() const { return n_a_; }
    std::size_t n_b() const { return n_b_; }
    std::size_t dim() const { return n_a_ * n_b_; }
    const CMatrix& mat() const { return mat_; }

private:
    std::size_t n_a_, n_b_;
    CMatrix mat_;
};

// rho = lambda |psi1><psi1| + (1-lambda) |psi2><psi2| with orthonormal psi1, psi2.
class RankTwoState {
public:
    RankTwoState(std::size_t n_a, std::size_t n_b, double lambda, CVector psi1, CVector psi2)
        : n_a_(n_a), n_b_(n_b), lambda_(lambda), psi1_(std::move(psi1)), psi2_(std::move(psi2)) {
        const std::size_t n = n_a_ * n_b_;
        if (psi1_.size() != n || psi2_.size() != n)
            throw DimensionMismatch("rank-2 state vectors must have dimension n_A*n_B");
        if (!(lambda_ > 0.0 && lambda_ < 1.0)) throw OutOfRange("lambda must lie in (0, 1)");
        if (std::abs(vnorm(psi1_) - 1.0) > 1e-10 || std::abs(vnorm(psi2_) - 1.0) > 1e-10)
            throw InvalidInput("rank-2 state vectors must be unit norm");
        if (std::abs(vdot(psi1_, psi2_)) > 1e-9)
            throw RankDeficient("rank-2 eigenvectors not orthogonal");
    }

    std::size_t n_a() const { return n_a_; }
    std::size_t n_b() const { return n_b_; }
    double lambda() const { return lambda_; }
    const CVector& psi1() const { return psi1_; }
    const CVector& psi2() const { return psi2_; }

    DensityMatrix assemble() const {
        const CMatrix rho = lambda_ * outer(psi1_, psi1_) + (1.0 - lambda_) * outer(psi2_, psi2_);
        return DensityMatrix(n_a_, n_b_, rho);
    }

private:
    std::size_t n_a_, n_b_;
    double lambda_;
    CVector psi1_, psi2_;
};

struct SchmidtResult {
    std::vector<double> coeffs;  // nonnegative, descending, sum of squares = 1
    CMatrix basis_a;             // n_A x n_A unitary, column k = |a_k>
    CMatrix basis_b;             // n_B x n_B unitary, column k = |b_k>
};

namespace detail {

// Phase-fix a unit vector so its first component of magnitude > 1e-12 is real
// positive. Keeps eigenvector and Schmidt bases deterministic.
inline void phase_normalize(CVector& v) {
    for (const cplx& z : v) {
        const double m = std::abs(z);
        if (m > 1e-12) {
            const cplx w = std::conj(z) / m;
            for (cplx& x : v) x *= w;
            return;
        }
    }
}

// Orthonormalize v against the first `count` columns of q (two passes).
inline void mgs_against(CVector& v, const CMatrix& q, std::size_t count) {
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < count; ++k) {
            const CVector u = q.col(k);
            const cplx proj = vdot(u, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
        }
}

}  // namespace detail

// psi = sum_k coeffs[k] |a_k> (x) |b_k|, coefficients descending. Computed from
// the Hermitian eigendecomposition of the A-side Gram matrix; B-side vectors
// for negligible coefficients are completed deterministically from the
// standard basis.
inline SchmidtResult schmidt_decompose(const CVector& psi, std::size_t n_a = 2,
                                       std::size_t n_b = 4) {
    if (psi.size() != n_a * n_b) throw DimensionMismatch("schmidt_decompose dimensions");
    if (n_a > n_b) throw DimensionMismatch("schmidt_decompose expects n_A <= n_B");
    if (std::abs(vnorm(psi) - 1.0) > 1e-10) throw InvalidInput("state must be unit norm");

    CMatrix coeff(n_a, n_b);  // psi as matrix: psi_{(i,j)} = coeff(i, j)
    for (std::size_t i = 0; i < n_a; ++i)
        for (std::size_t j = 0; j < n_b; ++j) coeff(i, j) = psi[i * n_b + j];

    const EigResult eig = herm_eig(coeff * coeff.dagger());

    SchmidtResult res;
    res.coeffs.resize(n_a);
    res.basis_a = CMatrix(n_a, n_a);
    res.basis_b = CMatrix(n_b, n_b);

    const CMatrix coeff_t = coeff.transpose();
    std::size_t filled = 0;
    for (std::size_t k = 0; k < n_a; ++k) {
        const double c = std::sqrt(std::max(eig.values[k], 0.0));
        res.coeffs[k] = c;
        CVector u = eig.vectors.col(k);
        detail::phase_normalize(u);
        res.basis_a.set_col(k, u);
        if (c > 1e-12) {
            CVector b = matvec(coeff_t, vconj(u));
            for (cplx& z : b) z /= c;
            detail::mgs_against(b, res.basis_b, filled);
            const double nb = vnorm(b);
            for (cplx& z : b) z /= nb;
            res.basis_b.set_col(filled++, b);
        }
    }
    // For n_A = 2 the eigenvalue route loses the small coefficient to sqrt of
    // roundoff (sqrt(1e-17) ~ 3e-9, above the product-detection threshold).
    // Recompute it as the norm of psi minus the projection onto the dominant
    // A-vector, which equals the second coefficient exactly.
    if (n_a == 2 && res.coeffs[0] > 1e-12) {
        const CVector a1 = res.basis_a.col(0);
        const CVector b1_raw = matvec(coeff_t, vconj(a1));  // = c1 * b1
        CVector resid = psi;
        const CVector proj = tensor(a1, b1_raw);
        for (std::size_t i = 0; i < resid.size(); ++i) resid[i] -= proj[i];
        res.coeffs[1] = std::min(vnorm(resid), res.coeffs[0]);
    }
    // complete the B basis from standard vectors (also covers tiny coefficients)
    for (std::size_t e = 0; e < n_b && filled < n_b; ++e) {
        CVector cand(n_b, cplx(0.0, 0.0));
        cand[e] = cplx(1.0, 0.0);
        detail::mgs_against(cand, res.basis_b, filled);
        const double nc = vnorm(cand);
        if (nc < 0.5) continue;
        for (cplx& z : cand) z /= nc;
        res.basis_b.set_col(filled++, cand);
    }
    if (filled != n_b) throw Error("Schmidt basis completion failed");
    return res;
}

// ---- canonical form of a 2x4 rank-2 state ----

// (lambda, q1, q6, p1..p8, X1, X2): psi1 = (q1,0,0,0,0,q6,0,0)^T and psi2 = p,
// with q1, q6 > 0, p4 = 0, p1 real >= 0, p6 real <= 0, p1 q1 + p6 q6 = 0.
// X1 (x) X2 maps the original state onto the canonical one.
struct CanonicalForm {
    double lambda = 0.0;
    double q1 = 0.0, q6 = 0.0;
    std::array<cplx, 8> p{};
    CMatrix x1, x2;

    CVector psi1() const {
        CVector v(8, cplx(0.0, 0.0));
        v[0] = cplx(q1, 0.0);
        v[5] = cplx(q6, 0.0);
        return v;
    }
    CVector psi2() const { return CVector(p.begin(), p.end()); }

    // w_j = (p_{2j-1}, p_{2j}) pairs of the partition psi2 = (w1, w2, w3, w4)
    std::array<cplx, 2> w(int j) const {
        return {p[2 * (j - 1)], p[2 * (j - 1) + 1]};
    }

    DensityMatrix assemble() const {
        const CVector v1 = psi1(), v2 = psi2();
        return DensityMatrix(2, 4, lambda * outer(v1, v1) + (1.0 - lambda) * outer(v2, v2));
    }

    void validate() const {
        if (!(q1 > 0.0 && q6 > 0.0)) throw NotCanonical("q1, q6 must be strictly positive");
        if (std::abs(q1 * q1 + q6 * q6 - 1.0) > 1e-9) throw NotCanonical("q1^2 + q6^2 != 1");
        if (std::abs(p[3]) > 1e-9) throw NotCanonical("p4 != 0");
        if (std::abs(p[0].imag()) > 1e-9 || p[0].real() < -1e-9)
            throw NotCanonical("p1 must be real nonnegative");
        if (std::abs(p[5].imag()) > 1e-9 || p[5].real() > 1e-9)
            throw NotCanonical("p6 must be real nonpositive");
        if (std::abs(p[0] * q1 + p[5] * q6) > 1e-9) throw NotCanonical("p1 q1 + p6 q6 != 0");
        double norm2 = 0.0;
        for (const cplx& z : p) norm2 += std::norm(z);
        if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) throw NotCanonical("psi2 not unit norm");
    }
};

struct CanonicalizeResult {
    bool both_separable = false;
    std::optional<CanonicalForm> form;  // engaged iff !both_separable
};

namespace detail {

// Normalize a unitary to determinant one by an n-th root of the phase.
inline CMatrix su_normalize(const CMatrix& u) {
    const double delta = std::arg(determinant(u));
    return std::polar(1.0, -delta / static_cast<double>(u.rows())) * u;
}

}  // namespace detail

// Reduce a 2x4 rank-2 state to canonical form by local unitaries, or report
// that both eigenvectors are product states (the state is then separable).
// Procedure: Schmidt-align psi1 (swapping roles if only psi2 is entangled),
// rotate span{b3, b4} to zero p4 without touching psi1, then fix the free
// phase of psi2 so its first significant component is real positive.
inline CanonicalizeResult canonicalize(const RankTwoState& s) {
    if (s.n_a() != 2 || s.n_b() != 4) throw DimensionMismatch("canonicalize expects a 2x4 state");
    if (std::abs(vdot(s.psi1(), s.psi2())) > 1e-9)
        throw RankDeficient("eigenvectors not orthogonal within tolerance");

    const SchmidtResult sch1 = schmidt_decompose(s.psi1(), 2, 4);
    const SchmidtResult sch2 = schmidt_decompose(s.psi2(), 2, 4);
    const bool ent1 = sch1.coeffs[1] >= 1e-9;
    const bool ent2 = sch2.coeffs[1] >= 1e-9;
    if (!ent1 && !ent2) return CanonicalizeResult{true, std::nullopt};

    CVector psi1 = s.psi1(), psi2 = s.psi2();
    double lambda = s.lambda();
    const SchmidtResult* sch = &sch1;
    if (!ent1) {  // only psi2 entangled: swap roles
        std::swap(psi1, psi2);
        lambda = 1.0 - lambda;
        sch = &sch2;
    }

    CMatrix x1 = detail::su_normalize(sch->basis_a.dagger());
    CMatrix x2 = detail::su_normalize(sch->basis_b.dagger());

    CVector v1 = matvec(kron(x1, x2), psi1);
    const double q1 = std::abs(v1[0]);
    const double q6 = std::abs(v1[5]);

    CVector v2 = matvec(kron(x1, x2), psi2);

    // rotate within span{b3, b4} (identity on b1, b2) to zero the p4 slot;
    // nothing to do when p4 is already at roundoff level
    const cplx r13 = v2[2], r14 = v2[3];
    const double snorm = std::sqrt(std::norm(r13) + std::norm(r14));
    if (snorm > 1e-15 && std::abs(r14) > 1e-15) {
        CMatrix vrot = CMatrix::identity(4);
        vrot(2, 2) = std::conj(r13) / snorm;
        vrot(2, 3) = std::conj(r14) / snorm;
        vrot(3, 2) = -r14 / snorm;
        vrot(3, 3) = r13 / snorm;
        x2 = vrot * x2;
        const cplx a = v2[2], b = v2[3], c = v2[6], d = v2[7];
        v2[2] = vrot(2, 2) * a + vrot(2, 3) * b;
        v2[3] = vrot(3, 2) * a + vrot(3, 3) * b;
        v2[6] = vrot(2, 2) * c + vrot(2, 3) * d;
        v2[7] = vrot(3, 2) * c + vrot(3, 3) * d;
    }

    // overall phase of psi2: first significant component real positive
    for (const cplx& z : v2) {
        const double m = std::abs(z);
        if (m > 1e-12) {
            const cplx w = std::conj(z) / m;
            for (cplx& x : v2) x *= w;
            break;
        }
    }

    CanonicalForm cf;
    cf.lambda = lambda;
    cf.q1 = q1;
    cf.q6 = q6;
    for (int i = 0; i < 8; ++i) cf.p[i] = v2[static_cast<std::size_t>(i)];
    cf.x1 = x1;
    cf.x2 = x2;
    cf.validate();
    return CanonicalizeResult{false, cf};
}

// ---- generators ----

// ZCE state: lambda = 1/2, psi1 = q1|a1 b1> + q6|a2 b2>,
// psi2 = q1|a1 b3> + q6 e^{i phi}|a2 b4>, q6 = sqrt(1 - q1^2).
inline RankTwoState make_zce(double q1, double phi) {
    if (!(q1 > 0.0 && q1 < 1.0)) throw OutOfRange("make_zce requires q1 in (0, 1)");
    const double q6 = std::sqrt(1.0 - q1 * q1);
    CVector psi1(8, cplx(0.0, 0.0)), psi2(8, cplx(0.0, 0.0));
    psi1[0] = cplx(q1, 0.0);
    psi1[5] = cplx(q6, 0.0);
    psi2[2] = cplx(q1, 0.0);
    psi2[7] = q6 * std::polar(1.0, phi);
    return RankTwoState(2, 4, 0.5, std::move(psi1), std::move(psi2));
}

// Same family expressed in rotated local bases a_k = X1 e_k, b_k = X2 e_k.
inline RankTwoState make_zce(double q1, double phi, const CMatrix& x1, const CMatrix& x2) {
    if (x1.rows() != 2 || x1.cols() != 2 || x2.rows() != 4 || x2.cols() != 4)
        throw DimensionMismatch("make_zce basis matrices must be 2x2 and 4x4");
    if (!is_unitary(x1, 1e-9) || !is_unitary(x2, 1e-9))
        throw InvalidInput("make_zce basis matrices must be unitary");
    const RankTwoState base = make_zce(q1, phi);
    const CMatrix u = kron(x1, x2);
    return RankTwoState(2, 4, 0.5, matvec(u, base.psi1()), matvec(u, base.psi2()));
}

// Embed a two-qubit state into the 8x8 block pattern: two-qubit index (a, b)
// with b in {1, 2} maps onto the 2x4 basis vector |a, b>, so the support sits
// on rows/columns {1, 2, 5, 6}. PPT status is inherited from rho_tilde.
inline DensityMatrix make_ppt_form(const DensityMatrix& rho_tilde) {
    if (rho_tilde.n_a() != 2 || rho_tilde.n_b() != 2 || rho_tilde.dim() != 4)
        throw InvalidInput("make_ppt_form expects a two-qubit density matrix");
    static const std::size_t slot[4] = {0, 1, 4, 5};
    CMatrix rho(8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(slot[i], slot[j]) = rho_tilde.mat()(i, j);
    return DensityMatrix(2, 4, rho);
}

struct ProductTerm {
    double weight;
    CVector state_a;
    CVector state_b;
};

// rho = sum_j mu_j |psi_Aj><psi_Aj| (x) |psi_Bj><psi_Bj|
inline DensityMatrix make_separable(const std::vector<ProductTerm>& terms, std::size_t n_a = 2,
                                    std::size_t n_b = 4) {
    if (terms.empty()) throw WeightError("at least one product term required");
    double wsum = 0.0;
    for (const ProductTerm& t : terms) {
        if (!(t.weight > 0.0)) throw WeightError("weights must be strictly positive");
        wsum += t.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-12) throw WeightError("weights must sum to 1 within 1e-12");
    CMatrix rho(n_a * n_b, n_a * n_b);
    for (const ProductTerm& t : terms) {
        if (t.state_a.size() != n_a || t.state_b.size() != n_b)
            throw DimensionMismatch("product term factor dimensions");
        if (std::abs(vnorm(t.state_a) - 1.0) > 1e-10 || std::abs(vnorm(t.state_b) - 1.0) > 1e-10)
            throw InvalidInput("product term factors must be unit norm");
        const CVector v = tensor(t.state_a, t.state_b);
        rho = rho + t.weight * outer(v, v);
    }
    return DensityMatrix(n_a, n_b, rho);
}

// Convex decomposition rho = sum_j mu_j |psi_j><psi_j| (vectors not necessarily
// orthogonal).
struct Decomposition {
    std::vector<double> weights;
    std::vector<CVector> vectors;

    CMatrix reconstruct() const {
        if (weights.empty() || weights.size() != vectors.size())
            throw InvalidInput("decomposition weights/vectors mismatch");
        CMatrix rho(vectors[0].size(), vectors[0].size());
        for (std::size_t j = 0; j < weights.size(); ++j)
            rho = rho + weights[j] * outer(vectors[j], vectors[j]);
        return rho;
    }
};

// The three 2x2 blocks of the embedded form; rho_tilde = [[rho11, rho12],
// [rho12^dagger, rho22]] must itself be a valid two-qubit density matrix.
struct PptBlockForm {
    CMatrix rho11, rho12, rho22;

    static PptBlockForm from_tilde(const DensityMatrix& rho_tilde) {
        PptBlockForm f;
        f.rho11 = CMatrix(2, 2);
        f.rho12 = CMatrix(2, 2);
        f.rho22 = CMatrix(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                f.rho11(i, j) = rho_tilde.mat()(i, j);
                f.rho12(i, j) = rho_tilde.mat()(i, 2 + j);
                f.rho22(i, j) = rho_tilde.mat()(2 + i, 2 + j);
            }
        return f;
    }

    DensityMatrix tilde() const {
        CMatrix m(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                m(i, j) = rho11(i, j);
                m(i, 2 + j) = rho12(i, j);
                m(2 + i, j) = std::conj(rho12(j, i));
                m(2 + i, 2 + j) = rho22(i, j);
            }
        return DensityMatrix(2, 2, m);
    }

    DensityMatrix assemble() const { return make_ppt_form(tilde()); }
};

// Lift a product decomposition of rho_tilde to the embedded 2x4 state:
// each two-qubit product term a (x) b becomes a (x) (b1, b2, 0, 0), realizing
// rho = sum_j mu_j rho^(1)_j (x) (diag(1,0) (x) rho^(2)_j). The result
// certifies separability of the embedded state.
inline Decomposition lift_separable_decomposition(const PptBlockForm& blocks,
                                                  const Decomposition& tilde_decomp) {
    const DensityMatrix tilde = blocks.tilde();
    if (tilde_decomp.weights.size() != tilde_decomp.vectors.size() || tilde_decomp.weights.empty())
        throw InvalidInput("decomposition weights/vectors mismatch");
    if (max_abs_diff(tilde_decomp.reconstruct(), tilde.mat()) > 1e-9)
        throw DecompositionMismatch("decomposition does not reproduce rho_tilde within 1e-9");

    Decomposition lifted;
    for (std::size_t j = 0; j < tilde_decomp.weights.size(); ++j) {
        const CVector& v = tilde_decomp.vectors[j];
        if (v.size() != 4) throw DimensionMismatch("tilde decomposition vectors must be 4-dim");
        const SchmidtResult sch = schmidt_decompose(v, 2, 2);
        if (sch.coeffs[1] > 1e-9)
            throw DecompositionMismatch("decomposition term is not a product state");
        const CVector a = sch.basis_a.col(0);
        CVector b = sch.basis_b.col(0);
        // absorb the coefficient phase so a (x) b reproduces v
        const cplx overlap = vdot(tensor(a, b), v);
        const cplx phase = overlap / std::abs(overlap);
        for (cplx& z : b) z *= phase;
        CVector b_lift(4, cplx(0.0, 0.0));
        b_lift[0] = b[0];
        b_lift[1] = b[1];
        lifted.weights.push_back(tilde_decomp.weights[j]);
        lifted.vectors.push_back(tensor(a, b_lift));
    }
    return lifted;
}

// Seeded generic rank-2 state: two orthonormalized complex-Gaussian vectors,
// lambda uniform in (0.05, 0.95).
inline RankTwoState random_rank_two(std::size_t n_a, std::size_t n_b, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = n_a * n_b;
    CVector v1 = rng.gaussian_vector(n);
    CVector v2 = rng.gaussian_vector(n);
    const double n1 = vnorm(v1);
    for (cplx& z : v1) z /= n1;
    for (int pass = 0; pass < 2; ++pass) {
        const cplx proj = vdot(v1, v2);
        for (std::size_t i = 0; i < n; ++i) v2[i] -= proj * v1[i];
    }
    const double n2 = vnorm(v2);
    for (cplx& z : v2) z /= n2;
    const double lambda = rng.uniform(0.05, 0.95);
    return RankTwoState(n_a, n_b, lambda, std::move(v1), std::move(v2));
}

}  // namespace zc

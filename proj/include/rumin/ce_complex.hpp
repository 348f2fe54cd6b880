#pragma once

#include <vector>

#include "rumin/exterior.hpp"
#include "rumin/inner_product.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/matrix.hpp"
#include "rumin/subspace.hpp"

namespace rumin {

// Chevalley-Eilenberg differential on constant-coefficient forms,
// Lambda^k -> Lambda^{k+1}, in the lexicographic monomial bases.
// On covectors d theta_m = -sum_{i<j} c_{ij}^m theta_i ^ theta_j; on higher
// monomials by the Leibniz rule (2-forms slide past 1-forms freely).
inline RatMatrix dg_matrix(const LieAlgebra& g, std::size_t k) {
    const std::size_t n = g.dim();
    RatMatrix out(lambda_dim(n, k + 1), lambda_dim(n, k));
    if (k >= n) return out;
    // d on covectors first
    std::vector<KForm> d1(n, KForm::zero(n, 2));
    for (const auto& [ij, terms] : g.brackets()) {
        const auto [i, j] = ij;
        for (const auto& [m, c] : terms)
            d1[static_cast<std::size_t>(m - 1)].coeffs[lambda_index(n, {i, j})] -= c;
    }
    if (k == 0) return out; // constants are closed
    if (k == 1) {
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t r = 0; r < d1[m].coeffs.size(); ++r)
                out(r, m) = d1[m].coeffs[r];
        return out;
    }
    const std::vector<MultiIndex> basis = lambda_basis(n, k);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const MultiIndex& idx = basis[col];
        KForm acc = KForm::zero(n, k + 1);
        for (std::size_t t = 0; t < k; ++t) {
            MultiIndex rest;
            for (std::size_t u = 0; u < k; ++u)
                if (u != t) rest.push_back(idx[u]);
            const Rat sign = (t % 2 == 0) ? 1 : -1;
            acc = acc + wedge_forms(sign * d1[static_cast<std::size_t>(idx[t] - 1)],
                                    KForm::monomial(n, rest));
        }
        for (std::size_t r = 0; r < acc.coeffs.size(); ++r) out(r, col) = acc.coeffs[r];
    }
    return out;
}

// The algebraic skeleton of the Rumin construction: d_g, its pseudo-inverse
// d_g^{-1}, the orthogonal projector Pi_E0 onto ker d_g cap (im d_g)^perp,
// and that space E_0^k itself, all w.r.t. the inner products induced on
// Lambda^k by a chosen inner product on Lambda^1. Everything is computed
// eagerly; dimensions stay tiny (n <= 7).
class CeComplex {
public:
    explicit CeComplex(const LieAlgebra& g)
        : CeComplex(g, InnerProduct::identity(g.dim())) {}

    CeComplex(const LieAlgebra& g, const InnerProduct& g1) : g_(g) {
        const std::size_t n = g.dim();
        for (std::size_t k = 0; k <= n + 1; ++k)
            gram_.push_back(induced_gram(n, k, g1));
        for (std::size_t k = 0; k <= n; ++k) dg_.push_back(dg_matrix(g, k));
        // d_g^{-1}(k) : Lambda^k -> Lambda^{k-1} is the pseudo-inverse of
        // d_g(k-1). Index 0 gets the empty map out of Lambda^{-1}.
        dginv_.push_back(RatMatrix(0, 1));
        for (std::size_t k = 1; k <= n; ++k)
            dginv_.push_back(pseudo_inverse(dg_[k - 1], gram_[k - 1], gram_[k]));
        dginv_.push_back(pseudo_inverse(dg_[n], gram_[n], gram_[n + 1]));
        for (std::size_t k = 0; k <= n; ++k) {
            RatMatrix p = RatMatrix::identity(lambda_dim(n, k)) - dginv_[k + 1] * dg_[k];
            if (k > 0) p = p - dg_[k - 1] * dginv_[k];
            pi_e0_.push_back(std::move(p));
            const Subspace closed = right_kernel(dg_[k]);
            const Subspace coexact =
                k == 0 ? Subspace::full(lambda_dim(n, 0))
                       : complement(kernel_image(dg_[k - 1]).image, gram_[k]);
            e0_.push_back(intersect(closed, coexact));
        }
    }

    const LieAlgebra& algebra() const { return g_; }
    std::size_t dim() const { return g_.dim(); }

    const InnerProduct& gram(std::size_t k) const { return gram_.at(k); }

    // Lambda^k -> Lambda^{k+1}, defined for k = 0..n.
    const RatMatrix& dg(std::size_t k) const { return dg_.at(k); }

    // Lambda^k -> Lambda^{k-1}, defined for k = 0..n+1.
    const RatMatrix& dginv(std::size_t k) const { return dginv_.at(k); }

    // Orthogonal projector Lambda^k -> Lambda^k onto E_0^k.
    const RatMatrix& pi_e0(std::size_t k) const { return pi_e0_.at(k); }

    // E_0^k = ker d_g cap (im d_g)^perp as a canonical subspace.
    const Subspace& e0(std::size_t k) const { return e0_.at(k); }

private:
    LieAlgebra g_; // by value: a CeComplex owns its algebra snapshot
    std::vector<InnerProduct> gram_;
    std::vector<RatMatrix> dg_;
    std::vector<RatMatrix> dginv_;
    std::vector<RatMatrix> pi_e0_;
    std::vector<Subspace> e0_;
};

} // namespace rumin

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rumin/ce_complex.hpp"
#include "rumin/errors.hpp"
#include "rumin/exterior.hpp"
#include "rumin/inner_product.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/subspace.hpp"

namespace rumin {

// Increasing filtration 0 = F_0 < F_1 < ... < F_s = g* of the covector
// space, F_i = {theta : d_g theta in Lambda^2 F_{i-1}}.
struct Filtration {
    std::vector<Subspace> F;
    std::size_t step() const { return F.size() - 1; }
};

// Lambda^2 S inside Lambda^2 g*: span of pairwise wedges of a row basis.
inline Subspace lambda2_of(const Subspace& s) {
    const std::size_t n = s.ambient();
    std::vector<KForm> gens;
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b) {
            KForm u = KForm::zero(n, 1), v = KForm::zero(n, 1);
            u.coeffs = s.basis().row_vec(a);
            v.coeffs = s.basis().row_vec(b);
            gens.push_back(wedge_forms(u, v));
        }
    RatMatrix rows(gens.size(), lambda_dim(n, 2));
    for (std::size_t r = 0; r < gens.size(); ++r) rows.set_row(r, gens[r].coeffs);
    return Subspace::from_rows(lambda_dim(n, 2), rows);
}

// The filtration is computed twice, from its differential characterization
// and as the annihilators of the lower central series, and the two must
// agree; a mismatch means a bug, not bad input.
inline Filtration build_filtration(const LieAlgebra& g, const RatMatrix& dg1) {
    const std::size_t n = g.dim();
    if (dg1.rows() != lambda_dim(n, 2) || dg1.cols() != n)
        throw DimensionMismatch("build_filtration: dg1 has the wrong shape for " + g.name());
    const CentralSeries series = lower_central_series(g);
    if (!series.nilpotent())
        throw NotNilpotent("filtration requires a nilpotent algebra: " + g.name());

    Filtration f;
    f.F.push_back(Subspace::zero(n));
    while (f.F.back() != Subspace::full(n)) {
        const Subspace ann_l2 = annihilator(lambda2_of(f.F.back()));
        // theta is in F_i iff every functional vanishing on Lambda^2 F_{i-1}
        // kills d_g theta.
        const Subspace next = right_kernel(ann_l2.basis() * dg1);
        if (next == f.F.back())
            throw InternalDisagreement("filtration stalled before filling g* in " + g.name());
        f.F.push_back(next);
        if (f.F.size() > n + 1)
            throw InternalDisagreement("filtration exceeded the dimension bound in " + g.name());
    }

    if (f.step() != static_cast<std::size_t>(series.step()))
        throw InternalDisagreement("filtration length disagrees with the central series in " +
                                   g.name());
    for (std::size_t i = 0; i < f.F.size(); ++i) {
        const Subspace from_series =
            i < series.terms.size() ? annihilator(series.terms[i]) : Subspace::full(n);
        if (f.F[i] != from_series)
            throw InternalDisagreement("filtration term " + std::to_string(i) +
                                       " disagrees with the annihilator of the central series "
                                       "in " + g.name());
    }
    return f;
}

inline Filtration build_filtration(const LieAlgebra& g) {
    return build_filtration(g, dg_matrix(g, 1));
}

// Weight decomposition of g*: either the asymptotic one W_i = F_i cap
// F_{i-1}^perp, or the diagonal decomposition of a named grading.
struct WeightTable {
    enum class Kind { asymptotic, grading };

    Kind kind = Kind::asymptotic;
    std::string grading_name;      // set when kind == grading
    std::map<Rat, Subspace> spaces;
    bool pure = false;              // every basis covector lies in one space
    std::vector<Rat> covector_weight; // filled iff pure

    Rat weight_of_covector(int i) const {
        if (!pure)
            throw NotPureBasis("covector weights are only defined in a weight-pure basis");
        if (i < 1 || static_cast<std::size_t>(i) > covector_weight.size())
            throw IndexOutOfRange("covector index " + std::to_string(i));
        return covector_weight[static_cast<std::size_t>(i - 1)];
    }

    // Weights add across a wedge monomial.
    Rat monomial_weight(const MultiIndex& idx) const {
        Rat w = 0;
        for (int i : idx) w += weight_of_covector(i);
        return w;
    }
};

namespace detail {
inline void fill_purity(WeightTable& wt, std::size_t n) {
    wt.pure = true;
    wt.covector_weight.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        bool found = false;
        for (const auto& [w, space] : wt.spaces)
            if (space.contains(e)) {
                wt.covector_weight[i] = w;
                found = true;
                break;
            }
        if (!found) {
            wt.pure = false;
            wt.covector_weight.clear();
            return;
        }
    }
}
} // namespace detail

inline WeightTable weight_spaces(const Filtration& f, const InnerProduct& g) {
    WeightTable wt;
    wt.kind = WeightTable::Kind::asymptotic;
    for (std::size_t i = 1; i < f.F.size(); ++i) {
        const Subspace w = intersect(f.F[i], complement(f.F[i - 1], g));
        if (w.dim() > 0) wt.spaces.emplace(Rat(static_cast<int>(i)), w);
    }
    detail::fill_purity(wt, f.F.front().ambient());
    return wt;
}

inline WeightTable asymptotic_weight_table(const LieAlgebra& g, const InnerProduct& g1) {
    return weight_spaces(build_filtration(g), g1);
}

inline WeightTable asymptotic_weight_table(const LieAlgebra& g) {
    return asymptotic_weight_table(g, InnerProduct::identity(g.dim()));
}

inline WeightTable grading_weight_table(const LieAlgebra& g, const Grading& gr) {
    validate_grading(g, gr);
    WeightTable wt;
    wt.kind = WeightTable::Kind::grading;
    wt.grading_name = gr.name;
    wt.spaces = gr.layers();
    wt.pure = true;
    wt.covector_weight = gr.weights;
    return wt;
}

// A covector basis in which the asymptotic weight spaces are spanned by
// disjoint blocks of basis vectors and the inner product is diagonal.
// `change` holds the adapted basis as rows in the original coordinates.
struct AdaptedBasis {
    RatMatrix change;
    InnerProduct gnew;
    bool pure; // whether the original basis was already weight-pure
};

inline AdaptedBasis adapt_basis(const Filtration& f, const InnerProduct& g1) {
    const WeightTable wt = weight_spaces(f, g1);
    const std::size_t n = f.F.front().ambient();
    if (wt.pure && g1.is_diagonal())
        return {RatMatrix::identity(n), g1, true};
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> norms;
    for (const auto& [w, space] : wt.spaces) {
        (void)w;
        // Gram-Schmidt inside the weight space, without normalization so
        // everything stays rational. Blocks for different weights are
        // orthogonal already.
        std::vector<std::vector<Rat>> block;
        for (std::size_t r = 0; r < space.dim(); ++r) {
            std::vector<Rat> v = space.basis().row_vec(r);
            for (const auto& u : block) {
                const Rat f = g1.pair(v, u) / g1.pair(u, u);
                if (f == 0) continue;
                for (std::size_t t = 0; t < n; ++t) v[t] -= f * u[t];
            }
            block.push_back(v);
        }
        for (auto& v : block) {
            norms.push_back(g1.pair(v, v));
            rows.push_back(std::move(v));
        }
    }
    RatMatrix change(n, n);
    for (std::size_t r = 0; r < rows.size(); ++r) change.set_row(r, rows[r]);
    return {std::move(change), InnerProduct::diagonal(norms), wt.pure};
}

inline AdaptedBasis adapt_basis(const LieAlgebra& g, const InnerProduct& g1) {
    return adapt_basis(build_filtration(g), g1);
}

inline AdaptedBasis adapt_basis(const LieAlgebra& g) {
    return adapt_basis(g, InnerProduct::identity(g.dim()));
}

// For a stratification, the asymptotic weight spaces must be exactly the
// duals of the grading layers: W_j = V_j^*.
inline bool carnot_duality_check(const LieAlgebra& g, const Grading& gr,
                                 const InnerProduct& g1) {
    if (!is_stratification(g, gr))
        throw RuminError("carnot_duality_check requires a stratification grading");
    const WeightTable asym = asymptotic_weight_table(g, g1);
    const std::map<Rat, Subspace> layers = gr.layers();
    if (asym.spaces.size() != layers.size()) return false;
    for (const auto& [w, space] : layers) {
        const auto it = asym.spaces.find(w);
        if (it == asym.spaces.end() || it->second != space) return false;
    }
    return true;
}

inline bool carnot_duality_check(const LieAlgebra& g, const Grading& gr) {
    return carnot_duality_check(g, gr, InnerProduct::identity(g.dim()));
}

// Weights of the monomials supporting a form; singleton means the form is
// weight-homogeneous under the table.
inline std::set<Rat> form_weight_set(const KForm& f, const WeightTable& wt) {
    const std::vector<MultiIndex> basis = lambda_basis(f.n, f.k);
    std::set<Rat> out;
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (f.coeffs[t] != 0) out.insert(wt.monomial_weight(basis[t]));
    return out;
}

} // namespace rumin

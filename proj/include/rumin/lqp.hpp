#pragma once

#include <set>
#include <string>
#include <vector>

#include "rumin/lie_algebra.hpp"
#include "rumin/rumin_complex.hpp"

namespace rumin {

// Weight-gap data for one degree: the weights of the E_0^k basis forms
// under a positive grading, the minimal and maximal gap against degree
// k-1, and the non-vanishing threshold delta_min / T. The threshold is
// only defined when every basis form of degrees k and k-1 is
// weight-homogeneous; a mixed form clears has_threshold instead of
// guessing.
struct LqpRow {
    std::size_t degree = 0;
    std::set<Rat> weights;
    Rat delta_min = 0;
    Rat delta_max = 0;
    bool homogeneous = false;
    bool has_threshold = false;
    Rat threshold = 0;

    bool operator==(const LqpRow&) const = default;
};

// ell^{q,p}-cohomology does not vanish in degree k whenever
// 1/p - 1/q < delta_min(k) / T. The dual bound through delta_max is only
// established for stratified gradings; `stratification` records whether it
// applies.
struct LqpReport {
    std::string algebra;
    std::string grading;
    std::vector<Rat> covector_weights;
    Rat homogeneous_dim = 0; // T
    bool stratification = false;
    std::vector<LqpRow> rows; // degrees 1..n

    bool operator==(const LqpReport&) const = default;
};

namespace detail {

// Union of the monomial weights over the rows of an E_0 basis; clears
// `pure` when a single row mixes weights. Rumin 0-forms carry weight 0.
inline std::set<Rat> e0_weight_set(const E0Basis& basis, std::size_t n, std::size_t k,
                                   const Grading& gr, bool& pure) {
    std::set<Rat> out;
    if (k == 0) {
        out.insert(Rat(0));
        return out;
    }
    const std::vector<MultiIndex> monos = lambda_basis(n, k);
    for (std::size_t r = 0; r < basis.rows.rows(); ++r) {
        std::set<Rat> row_weights;
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (basis.rows(r, c) == 0) continue;
            Rat w = 0;
            for (int i : monos[c]) w += gr.weight_of_basis_vector(i);
            row_weights.insert(w);
        }
        if (row_weights.size() > 1) pure = false;
        out.insert(row_weights.begin(), row_weights.end());
    }
    return out;
}

} // namespace detail

inline LqpReport interval_report(const RuminComplex& rc, const Grading& gr) {
    if (rc.adapted())
        throw RuminError("gradings refer to input coordinates and need a weight-pure "
                         "presentation");
    const LieAlgebra& g = rc.ce().algebra();
    validate_grading(g, gr);
    LqpReport rep;
    rep.algebra = g.name();
    rep.grading = gr.name;
    rep.covector_weights = gr.weights;
    rep.homogeneous_dim = homogeneous_dimension(gr);
    rep.stratification = is_stratification(g, gr);
    const std::size_t n = rc.dim();
    bool prev_pure = true;
    std::set<Rat> prev = {Rat(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        bool pure = true;
        const std::set<Rat> cur = detail::e0_weight_set(rc.e0_basis(k), n, k, gr, pure);
        LqpRow row;
        row.degree = k;
        row.weights = cur;
        row.delta_min = *cur.begin() - *prev.rbegin();
        row.delta_max = *cur.rbegin() - *prev.begin();
        row.homogeneous = pure;
        row.has_threshold = pure && prev_pure;
        if (row.has_threshold) row.threshold = row.delta_min / rep.homogeneous_dim;
        rep.rows.push_back(row);
        prev = cur;
        prev_pure = pure;
    }
    return rep;
}

} // namespace rumin

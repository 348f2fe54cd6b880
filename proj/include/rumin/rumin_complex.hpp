#pragma once

#include <map>
#include <string>
#include <vector>

#include "rumin/ce_complex.hpp"
#include "rumin/errors.hpp"
#include "rumin/exterior.hpp"
#include "rumin/op_algebra.hpp"
#include "rumin/render.hpp"
#include "rumin/weights.hpp"

namespace rumin {

// A basis of E_0^k kept both as display term lists (order preserved for
// output) and as coordinate rows over the Lambda^k monomial basis.
struct E0Basis {
    std::vector<std::vector<FormTerm>> elements;
    RatMatrix rows;
    std::vector<std::string> labels; // text rendering of the elements
};

struct IdentityReport {
    std::string name;
    std::size_t degree;
    bool ok;
    std::string witness; // row/column labels of the first failing entry

    bool operator==(const IdentityReport&) const = default;
};

struct HodgeDuality {
    std::size_t degree;
    bool ok;

    bool operator==(const HodgeDuality&) const = default;
};

struct Stabilization {
    OpMatrix limit;
    std::size_t iterations; // power at which two consecutive iterates agree
};

// The Rumin complex of a nilpotent Lie algebra in symbolic form: the full
// exterior differential d as a matrix of operator polynomials, the
// weight-raising part D = d_g^{-1}(d - d_g), its Neumann-type inverse
// P = sum (-D)^m, the homotopy Q = P d_g^{-1}, the projection
// Pi_E = Id - Qd - dQ onto the Rumin subcomplex, and the Rumin
// differential d_c = Pi_E0 d Pi_E expressed in explicit bases of E_0.
// Everything is exact; all operator identities are decidable by PBW
// normalization.
//
// The construction needs the inner product to be adapted to the table:
// weight spaces must be spanned by coordinate covectors (inputs failing
// only this are silently re-expressed in the Gram-Schmidt frame, same
// bracket and inner product; basis_change() reports the working covector
// rows in input coordinates), and d_g images of covectors from different
// weight layers must be orthogonal. The second condition is what makes D
// nilpotent; it holds for tables presented in graded coordinates, for any
// two-step table, and for the catalog presentations, but re-expression
// cannot manufacture it for an arbitrary table, in which case the degree
// loop below reports the metric as non-adapted.
class RuminComplex {
public:
    explicit RuminComplex(const LieAlgebra& g)
        : RuminComplex(g, InnerProduct::identity(g.dim())) {}

    RuminComplex(const LieAlgebra& g, const InnerProduct& g1,
                 const std::map<std::size_t, std::vector<std::vector<FormTerm>>>&
                     display_bases = {})
        : RuminComplex(make_working(g, g1), display_bases) {}

private:
    struct Working {
        LieAlgebra g;
        InnerProduct g1;
        RatMatrix change;
        bool adapted;
    };

    // Re-express the input in a weight-pure frame when necessary. The rows
    // of `change` are the working covector basis in input coordinates, so
    // the dual vector basis sits in the columns of its inverse.
    static Working make_working(const LieAlgebra& g, const InnerProduct& g1) {
        ensure_valid(g);
        const Filtration f = build_filtration(g);
        const WeightTable wt = weight_spaces(f, g1);
        if (wt.pure && g1.is_diagonal())
            return {g, g1, RatMatrix::identity(g.dim()), false};
        AdaptedBasis ab = adapt_basis(f, g1);
        LieAlgebra gnew = change_basis(g, inverse(ab.change), g.name() + " (adapted)");
        return {std::move(gnew), std::move(ab.gnew), std::move(ab.change), true};
    }

    RuminComplex(Working w,
                 const std::map<std::size_t, std::vector<std::vector<FormTerm>>>&
                     display_bases)
        : ce_(w.g, w.g1), pbw_(ce_.algebra()), change_(std::move(w.change)),
          adapted_(w.adapted) {
        if (adapted_ && !display_bases.empty())
            throw RuminError("display bases require a weight-pure presentation");
        const std::size_t n = ce_.dim();

        for (std::size_t k = 0; k <= n + 1; ++k) {
            std::vector<std::string> ls;
            for (const auto& idx : lambda_basis(n, k)) ls.push_back(monomial_text(idx));
            lambda_labels_.push_back(std::move(ls));
        }

        // Covector weight multiset, read off the filtration dimensions; it
        // bounds how often D can raise the weight of a k-form.
        const Filtration filt = build_filtration(ce_.algebra());
        std::vector<int> wmult;
        for (std::size_t i = 1; i < filt.F.size(); ++i)
            for (std::size_t t = filt.F[i - 1].dim(); t < filt.F[i].dim(); ++t)
                wmult.push_back(static_cast<int>(i));

        for (std::size_t k = 0; k <= n; ++k) {
            d_.push_back(build_full_d(k));
            dg_op_.push_back(
                OpMatrix::from_rat(ce_.dg(k), lambda_labels_[k + 1], lambda_labels_[k]));
            pi_e0_op_.push_back(
                OpMatrix::from_rat(ce_.pi_e0(k), lambda_labels_[k], lambda_labels_[k]));
        }
        for (std::size_t k = 0; k <= n + 1; ++k)
            dginv_op_.push_back(OpMatrix::from_rat(
                ce_.dginv(k), k == 0 ? std::vector<std::string>{} : lambda_labels_[k - 1],
                k <= n ? lambda_labels_[k] : std::vector<std::string>{}));

        for (std::size_t k = 0; k <= n; ++k) {
            // weight spread of Lambda^k monomials caps the nilpotency index
            int spread = 0;
            if (k >= 1 && k <= wmult.size()) {
                int lo = 0, hi = 0;
                for (std::size_t t = 0; t < k; ++t) lo += wmult[t];
                for (std::size_t t = wmult.size() - k; t < wmult.size(); ++t) hi += wmult[t];
                spread = hi - lo;
            }
            const std::size_t cap = static_cast<std::size_t>(spread) + 2;

            const OpMatrix big = compose(dginv_op_[k + 1], d_[k] - dg_op_[k], pbw_);
            OpMatrix power = OpMatrix::identity(lambda_labels_[k]);
            OpMatrix psum = power;
            Rat sign = -1;
            std::size_t m = 0;
            while (!power.is_zero()) {
                if (m > cap)
                    throw NilpotencyCapExceeded(
                        "D failed to vanish within its weight bound at degree " +
                        std::to_string(k) + " in " + ce_.algebra().name() +
                        ": the inner product is not adapted to this table (d_g images "
                        "of different weight layers are not orthogonal)");
                power = compose(big, power, pbw_);
                psum = psum + sign * power;
                sign = -sign;
                ++m;
            }
            big_d_.push_back(big);
            big_n_.push_back(m);
            p_.push_back(std::move(psum));
        }

        q_.push_back(OpMatrix::from_rat(RatMatrix(0, 1), {}, lambda_labels_[0]));
        for (std::size_t k = 1; k <= n + 1; ++k)
            q_.push_back(compose(p_[k - 1], dginv_op_[k], pbw_));

        // d out of the empty degree below 0, so the generic formula for
        // Pi_E works at k = 0 as well
        const OpMatrix d_below(lambda_labels_[0], std::vector<std::string>{});
        for (std::size_t k = 0; k <= n; ++k) {
            const OpMatrix& dprev = k == 0 ? d_below : d_[k - 1];
            pi_e_.push_back(OpMatrix::identity(lambda_labels_[k]) -
                            compose(q_[k + 1], d_[k], pbw_) - compose(dprev, q_[k], pbw_));
        }

        for (std::size_t k = 0; k <= n; ++k) {
            const auto it = display_bases.find(k);
            e0_.push_back(it == display_bases.end() ? canonical_e0_basis(k)
                                                    : make_e0_basis(k, it->second));
        }

        for (std::size_t k = 0; k <= n; ++k) {
            const OpMatrix inc = OpMatrix::from_rat(e0_[k].rows.transpose(), lambda_labels_[k],
                                                    e0_[k].labels);
            const OpMatrix ext = extraction(k + 1);
            dc_.push_back(compose(ext, compose(d_[k], compose(pi_e_[k], inc, pbw_), pbw_), pbw_));
        }
    }

public:
    // heavyweight; pass by reference instead of copying
    RuminComplex(const RuminComplex&) = delete;
    RuminComplex& operator=(const RuminComplex&) = delete;

    const CeComplex& ce() const { return ce_; }
    const LieAlgebra& algebra() const { return ce_.algebra(); }
    std::size_t dim() const { return ce_.dim(); }
    PbwContext& pbw() { return pbw_; }

    // Identity unless the input needed re-expressing; rows are the working
    // covector basis written in the coordinates the caller supplied.
    const RatMatrix& basis_change() const { return change_; }
    bool adapted() const { return adapted_; }

    const std::vector<std::string>& lambda_labels(std::size_t k) const {
        return lambda_labels_.at(k);
    }

    // Full exterior differential on Lambda^k, k = 0..n.
    const OpMatrix& d(std::size_t k) const { return d_.at(k); }
    // Scalar d_g and d_g^{-1} lifted to operator matrices.
    const OpMatrix& dg_op(std::size_t k) const { return dg_op_.at(k); }
    const OpMatrix& dginv_op(std::size_t k) const { return dginv_op_.at(k); }
    const OpMatrix& pi_e0_op(std::size_t k) const { return pi_e0_op_.at(k); }
    // D = d_g^{-1}(d - d_g) on Lambda^k, its nilpotency index, and P.
    const OpMatrix& big_d(std::size_t k) const { return big_d_.at(k); }
    std::size_t big_n(std::size_t k) const { return big_n_.at(k); }
    std::size_t global_n() const {
        std::size_t m = 0;
        for (std::size_t v : big_n_) m = std::max(m, v);
        return m;
    }
    const OpMatrix& p(std::size_t k) const { return p_.at(k); }
    // Homotopy Q : Lambda^k -> Lambda^{k-1}, k = 0..n+1.
    const OpMatrix& q(std::size_t k) const { return q_.at(k); }
    const OpMatrix& pi_e(std::size_t k) const { return pi_e_.at(k); }
    const E0Basis& e0_basis(std::size_t k) const { return e0_.at(k); }
    // Rumin differential E_0^k -> E_0^{k+1} in the chosen bases, k = 0..n.
    const OpMatrix& dc(std::size_t k) const { return dc_.at(k); }

    // Split of d by the weight each part adds: key 0 is the scalar d_g
    // part, key t >= 1 collects the X_j-derivative terms with w(theta_j)=t.
    // Requires the basis covectors to be weight-pure.
    std::map<Rat, OpMatrix> split_d(std::size_t k) const {
        const WeightTable wt = asymptotic_weight_table(ce_.algebra(), ce_.gram(1));
        if (!wt.pure)
            throw NotPureBasis("split_d needs a weight-pure covector basis in " +
                               ce_.algebra().name());
        std::map<Rat, OpMatrix> out;
        if (!ce_.dg(k).is_zero()) out.emplace(Rat(0), dg_op_[k]);
        const std::vector<MultiIndex> dom = lambda_basis(dim(), k);
        for (std::size_t col = 0; col < dom.size(); ++col)
            for (int j = 1; j <= static_cast<int>(dim()); ++j) {
                const auto w = wedge({j}, dom[col]);
                if (!w) continue;
                const Rat key = wt.weight_of_covector(j);
                auto it = out.find(key);
                if (it == out.end())
                    it = out.emplace(key, OpMatrix(lambda_labels_[k + 1], lambda_labels_[k]))
                             .first;
                it->second.at(lambda_index(dim(), w->indices), col)
                    .add_term(OpWord{j}, Rat(w->sign));
            }
        return out;
    }

    // Iterates of the retraction r = Id - d d_g^{-1} - d_g^{-1} d until two
    // consecutive powers agree; the limit is Pi_E.
    Stabilization r_stabilization(std::size_t k) {
        const OpMatrix d_below(lambda_labels_[0], std::vector<std::string>{});
        const OpMatrix& dprev = k == 0 ? d_below : d_[k - 1];
        const OpMatrix r = OpMatrix::identity(lambda_labels_[k]) -
                           compose(dprev, dginv_op_[k], pbw_) -
                           compose(dginv_op_[k + 1], d_[k], pbw_);
        OpMatrix cur = r;
        for (std::size_t it = 1; it <= global_n() + 2; ++it) {
            OpMatrix next = compose(r, cur, pbw_);
            if (next == cur) return {std::move(cur), it};
            cur = std::move(next);
        }
        throw NilpotencyCapExceeded("retraction failed to stabilize within its bound in " +
                                    ce_.algebra().name());
    }

    std::vector<IdentityReport> verify_identities() {
        std::vector<IdentityReport> out;
        const std::size_t n = dim();
        for (std::size_t k = 0; k <= n; ++k) {
            if (k + 1 <= n)
                push_zero_check(out, "d.d = 0", k, compose(d_[k + 1], d_[k], pbw_));
            if (k + 1 <= n)
                push_zero_check(out, "dc.dc = 0", k, compose(dc_[k + 1], dc_[k], pbw_));
            push_zero_check(out, "dginv.dginv = 0", k,
                            compose(dginv_op_[k], dginv_op_[k + 1], pbw_));
            push_zero_check(out, "piE idempotent", k,
                            compose(pi_e_[k], pi_e_[k], pbw_) - pi_e_[k]);
            if (k + 1 <= n)
                push_zero_check(out, "piE chain map", k,
                                compose(pi_e_[k + 1], d_[k], pbw_) -
                                    compose(d_[k], pi_e_[k], pbw_));
            const OpMatrix pif = OpMatrix::identity(lambda_labels_[k]) - pi_e_[k];
            push_zero_check(out, "piF idempotent", k, compose(pif, pif, pbw_) - pif);
            push_zero_check(out, "piE0.piE.piE0 = piE0", k,
                            compose(pi_e0_op_[k], compose(pi_e_[k], pi_e0_op_[k], pbw_), pbw_) -
                                pi_e0_op_[k]);
            push_zero_check(out, "piE.piE0.piE = piE", k,
                            compose(pi_e_[k], compose(pi_e0_op_[k], pi_e_[k], pbw_), pbw_) -
                                pi_e_[k]);
            const OpMatrix d_below(lambda_labels_[0], std::vector<std::string>{});
            const OpMatrix& dprev = k == 0 ? d_below : d_[k - 1];
            push_zero_check(out, "Qd + dQ + piE = Id", k,
                            compose(q_[k + 1], d_[k], pbw_) + compose(dprev, q_[k], pbw_) +
                                pi_e_[k] - OpMatrix::identity(lambda_labels_[k]));
            push_zero_check(out, "degree-0 part of piE is piE0", k,
                            OpMatrix::from_rat(pi_e_[k].degree0() - ce_.pi_e0(k),
                                               lambda_labels_[k], lambda_labels_[k]));
            push_zero_check(out, "dc has no scalar part", k,
                            OpMatrix::from_rat(dc_[k].degree0(), dc_[k].codomain(),
                                               dc_[k].domain()));
            {
                Stabilization st = r_stabilization(k);
                const bool ok = st.limit == pi_e_[k];
                out.push_back({"r stabilizes to piE", k, ok,
                               ok ? "" : "limit differs from piE"});
            }
        }
        return out;
    }

    // *E_0^h must be E_0^{n-h} as a subspace for every degree.
    std::vector<HodgeDuality> hodge_duality_check() const {
        const std::size_t n = dim();
        std::vector<HodgeDuality> out;
        for (std::size_t h = 0; h <= n; ++h) {
            const RatMatrix star = g_star_matrix(n, h, ce_.gram(1));
            const RatMatrix image = (star * ce_.e0(h).basis().transpose()).transpose();
            const Subspace mapped = Subspace::from_rows(lambda_dim(n, n - h), image);
            out.push_back({h, mapped == ce_.e0(n - h)});
        }
        return out;
    }

private:
    OpMatrix build_full_d(std::size_t k) {
        const std::size_t n = dim();
        OpMatrix m(lambda_labels_[k + 1], lambda_labels_[k]);
        const std::vector<MultiIndex> dom = lambda_basis(n, k);
        for (std::size_t col = 0; col < dom.size(); ++col)
            for (int j = 1; j <= static_cast<int>(n); ++j) {
                const auto w = wedge({j}, dom[col]);
                if (!w) continue;
                m.at(lambda_index(n, w->indices), col).add_term(OpWord{j}, Rat(w->sign));
            }
        const RatMatrix& dg = ce_.dg(k);
        for (std::size_t r = 0; r < dg.rows(); ++r)
            for (std::size_t c = 0; c < dg.cols(); ++c)
                if (dg(r, c) != 0) m.at(r, c).add_term(OpWord{}, dg(r, c));
        return m;
    }

    E0Basis canonical_e0_basis(std::size_t k) const {
        const Subspace& s = ce_.e0(k);
        E0Basis b;
        b.rows = s.basis();
        for (std::size_t r = 0; r < s.dim(); ++r) {
            KForm f{dim(), k, s.basis().row_vec(r)};
            b.elements.push_back(form_terms_lex(f));
            b.labels.push_back(form_terms_to_text(b.elements.back()));
        }
        return b;
    }

    E0Basis make_e0_basis(std::size_t k,
                          const std::vector<std::vector<FormTerm>>& elements) const {
        const std::size_t n = dim();
        E0Basis b;
        b.elements = elements;
        b.rows = RatMatrix(elements.size(), lambda_dim(n, k));
        for (std::size_t r = 0; r < elements.size(); ++r) {
            for (const auto& t : elements[r]) {
                if (t.monomial.size() != k)
                    throw DimensionMismatch("display basis monomial of wrong degree");
                b.rows(r, lambda_index(n, t.monomial)) += t.coeff;
            }
            b.labels.push_back(form_terms_to_text(elements[r]));
        }
        if (elements.size() != ce_.e0(k).dim() ||
            Subspace::from_rows(lambda_dim(n, k), b.rows) != ce_.e0(k))
            throw RuminError("display basis does not span E_0^" + std::to_string(k) + " of " +
                             ce_.algebra().name());
        return b;
    }

    // Coordinates in the chosen E_0^k basis of the orthogonal projection
    // onto E_0^k; on E_0^k itself this is plain coordinate extraction.
    OpMatrix extraction(std::size_t k) const {
        const std::size_t n = dim();
        if (k > n) return OpMatrix::from_rat(RatMatrix(0, 0), {}, lambda_labels_[k]);
        const RatMatrix& b = e0_[k].rows;
        const RatMatrix bg = b * ce_.gram(k).gram();
        const RatMatrix coords = inverse(bg * b.transpose()) * bg;
        return OpMatrix::from_rat(coords, e0_[k].labels, lambda_labels_[k]);
    }

    void push_zero_check(std::vector<IdentityReport>& out, const std::string& name,
                         std::size_t degree, const OpMatrix& m) {
        std::string witness;
        bool ok = true;
        for (std::size_t i = 0; i < m.rows() && ok; ++i)
            for (std::size_t j = 0; j < m.cols() && ok; ++j)
                if (!m.at(i, j).is_zero()) {
                    ok = false;
                    witness = "entry (" + m.codomain()[i] + ", " + m.domain()[j] + ")";
                }
        out.push_back({name, degree, ok, witness});
    }

    CeComplex ce_;
    PbwContext pbw_;
    RatMatrix change_;
    bool adapted_;
    std::vector<std::vector<std::string>> lambda_labels_;
    std::vector<OpMatrix> d_, dg_op_, dginv_op_, pi_e0_op_, big_d_, p_, q_, pi_e_, dc_;
    std::vector<std::size_t> big_n_;
    std::vector<E0Basis> e0_;
};

} // namespace rumin

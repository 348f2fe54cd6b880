#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/inner_product.hpp"
#include "rumin/matrix.hpp"

namespace rumin {

// A linear subspace of Q^n, stored as the reduced row echelon basis of its
// row space with zero rows dropped. That form is canonical, so equality of
// subspaces is plain equality of the stored data.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace from_rows(std::size_t ambient, const RatMatrix& rows) {
        if (rows.cols() != ambient && rows.rows() > 0)
            throw DimensionMismatch("subspace rows have wrong width");
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = rref(rows.rows() > 0 ? rows : RatMatrix(0, ambient)).reduced;
        if (s.basis_.cols() != ambient) s.basis_ = RatMatrix(0, ambient);
        return s;
    }

    static Subspace zero(std::size_t ambient) {
        return from_rows(ambient, RatMatrix(0, ambient));
    }

    static Subspace full(std::size_t ambient) {
        return from_rows(ambient, RatMatrix::identity(ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    bool operator==(const Subspace& o) const = default;

    // Reduce v against the echelon basis; membership means it reduces to 0.
    bool contains(const std::vector<Rat>& v) const {
        if (v.size() != ambient_)
            throw DimensionMismatch("contains: vector has wrong dimension");
        std::vector<Rat> w = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = 0; // pivot column: first nonzero entry of echelon row i
            while (p < ambient_ && basis_(i, p) == 0) ++p;
            const Rat f = w[p];
            if (f == 0) continue;
            for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_(i, j);
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw DimensionMismatch("contains: ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row_vec(i))) return false;
        return true;
    }

private:
    std::size_t ambient_;
    RatMatrix basis_; // canonical reduced row echelon, no zero rows
};

// Solution space of M x = 0, a subspace of Q^{cols(M)}.
inline Subspace right_kernel(const RatMatrix& m) {
    const std::size_t n = m.cols();
    const Rref red = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    RatMatrix basis(n - red.pivots.size(), n);
    std::size_t r = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(r, f) = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            basis(r, red.pivots[i]) = -red.reduced(i, f);
        ++r;
    }
    return Subspace::from_rows(n, basis);
}

// Vectors pairing to zero with every element of S under the standard dot
// product. With row-vector bases this is just the kernel of the basis.
inline Subspace annihilator(const Subspace& s) { return right_kernel(s.basis()); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw DimensionMismatch("sum: ambient mismatch");
    RatMatrix stacked(u.dim() + v.dim(), u.ambient());
    for (std::size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row_vec(i));
    for (std::size_t i = 0; i < v.dim(); ++i) stacked.set_row(u.dim() + i, v.basis().row_vec(i));
    return Subspace::from_rows(u.ambient(), stacked);
}

// U cap V as the joint kernel of both annihilators. Exact and basis-free.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient())
        throw DimensionMismatch("intersect: ambient mismatch");
    const Subspace au = annihilator(u);
    const Subspace av = annihilator(v);
    RatMatrix stacked(au.dim() + av.dim(), u.ambient());
    for (std::size_t i = 0; i < au.dim(); ++i) stacked.set_row(i, au.basis().row_vec(i));
    for (std::size_t i = 0; i < av.dim(); ++i) stacked.set_row(au.dim() + i, av.basis().row_vec(i));
    return right_kernel(stacked);
}

struct KernelImage {
    Subspace kernel; // subspace of the domain
    Subspace image;  // subspace of the codomain
};

// M acts on column vectors; its image is the span of its columns.
inline KernelImage kernel_image(const RatMatrix& m) {
    return {right_kernel(m), Subspace::from_rows(m.rows(), m.transpose())};
}

// G-orthogonal complement of S inside its ambient space.
inline Subspace complement(const Subspace& s, const InnerProduct& g) {
    if (g.dim() != s.ambient())
        throw DimensionMismatch("complement: Gram dimension mismatch");
    if (s.dim() == 0) return Subspace::full(s.ambient());
    return right_kernel(s.basis() * g.gram());
}

inline Subspace complement(const Subspace& s) {
    return complement(s, InnerProduct::identity(s.ambient()));
}

// G-orthogonal projector onto S, acting on column vectors.
inline RatMatrix projector(const Subspace& s, const InnerProduct& g) {
    if (g.dim() != s.ambient())
        throw DimensionMismatch("projector: Gram dimension mismatch");
    if (s.dim() == 0) return RatMatrix(s.ambient(), s.ambient());
    const RatMatrix b = s.basis();
    const RatMatrix bt = b.transpose();
    return bt * inverse(b * g.gram() * bt) * (b * g.gram());
}

inline RatMatrix projector(const Subspace& s) {
    return projector(s, InnerProduct::identity(s.ambient()));
}

// Moore-Penrose pseudo-inverse of M : (dom, Gdom) -> (cod, Gcod), built by
// orthogonal decomposition: restrict M to the orthogonal complement of its
// kernel, invert onto the image, and precompose with orthogonal projection
// onto the image. Normal equations are deliberately avoided.
inline RatMatrix pseudo_inverse(const RatMatrix& m, const InnerProduct& gdom,
                                const InnerProduct& gcod) {
    if (gdom.dim() != m.cols() || gcod.dim() != m.rows())
        throw DimensionMismatch("pseudo_inverse: Gram dimensions mismatch");
    const KernelImage ki = kernel_image(m);
    const RatMatrix bk = complement(ki.kernel, gdom).basis(); // rows span (ker M)^perp
    const RatMatrix bi = ki.image.basis();                    // rows span im M
    const RatMatrix bkt = bk.transpose();
    const RatMatrix bit = bi.transpose();
    // M maps (ker M)^perp isomorphically onto im M; express that square map
    // in the two bases and invert it.
    const RatMatrix c = solve_consistent(bit, m * bkt);
    // Coordinates (in the bi basis) of the Gcod-orthogonal projection.
    const RatMatrix e = inverse(bi * gcod.gram() * bit) * (bi * gcod.gram());
    const RatMatrix plus = bkt * inverse(c) * e;
#ifndef NDEBUG
    assert(m * plus * m == m);
    assert(plus * m * plus == plus);
    assert(gcod.gram() * (m * plus) == (m * plus).transpose() * gcod.gram());
    assert(gdom.gram() * (plus * m) == (plus * m).transpose() * gdom.gram());
#endif
    return plus;
}

inline RatMatrix pseudo_inverse(const RatMatrix& m) {
    return pseudo_inverse(m, InnerProduct::identity(m.cols()),
                          InnerProduct::identity(m.rows()));
}

} // namespace rumin

#pragma once

#include <optional>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/inner_product.hpp"
#include "rumin/matrix.hpp"

namespace rumin {

// Strictly increasing 1-based index tuple naming a wedge monomial
// theta_{i1} ^ ... ^ theta_{ik}.
using MultiIndex = std::vector<int>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int acc = 1;
    for (std::size_t t = 1; t <= k; ++t) {
        acc *= static_cast<unsigned long>(n - k + t);
        acc /= static_cast<unsigned long>(t);
    }
    return static_cast<std::size_t>(acc);
}

inline std::size_t lambda_dim(std::size_t n, std::size_t k) { return binomial(n, k); }

// All C(n,k) strictly increasing tuples in lexicographic order.
inline std::vector<MultiIndex> lambda_basis(std::size_t n, std::size_t k) {
    std::vector<MultiIndex> out;
    if (k > n) return out;
    MultiIndex cur(k);
    for (std::size_t t = 0; t < k; ++t) cur[t] = static_cast<int>(t + 1);
    while (true) {
        out.push_back(cur);
        // advance to the next increasing tuple
        std::size_t t = k;
        while (t > 0 && cur[t - 1] == static_cast<int>(n - k + t)) --t;
        if (t == 0) break;
        ++cur[t - 1];
        for (std::size_t u = t; u < k; ++u) cur[u] = cur[u - 1] + 1;
    }
    return out;
}

// Lexicographic rank of a tuple within lambda_basis(n, |I|).
inline std::size_t lambda_index(std::size_t n, const MultiIndex& idx) {
    const std::size_t k = idx.size();
    std::size_t rank = 0;
    int prev = 0;
    for (std::size_t t = 0; t < k; ++t) {
        for (int v = prev + 1; v < idx[t]; ++v)
            rank += binomial(n - static_cast<std::size_t>(v), k - t - 1);
        prev = idx[t];
    }
    return rank;
}

struct WedgeMonomial {
    int sign; // +1 or -1
    MultiIndex indices;
};

// Merge two monomials; nullopt when they share an index. The sign is the
// parity of the merge permutation of the concatenation (I, J).
inline std::optional<WedgeMonomial> wedge(const MultiIndex& i, const MultiIndex& j) {
    MultiIndex merged;
    merged.reserve(i.size() + j.size());
    int sign = 1;
    std::size_t a = 0, b = 0;
    while (a < i.size() && b < j.size()) {
        if (i[a] == j[b]) return std::nullopt;
        if (i[a] < j[b]) {
            merged.push_back(i[a++]);
        } else {
            // j[b] jumps over the remaining entries of i
            if ((i.size() - a) % 2 == 1) sign = -sign;
            merged.push_back(j[b++]);
        }
    }
    while (a < i.size()) merged.push_back(i[a++]);
    while (b < j.size()) merged.push_back(j[b++]);
    return WedgeMonomial{sign, std::move(merged)};
}

inline MultiIndex complement_index(std::size_t n, const MultiIndex& idx) {
    MultiIndex out;
    std::size_t t = 0;
    for (int v = 1; v <= static_cast<int>(n); ++v) {
        if (t < idx.size() && idx[t] == v) {
            ++t;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

// Sign eps with theta_I ^ theta_{I^c} = eps * theta_{1..n}.
inline int eps_complement(std::size_t n, const MultiIndex& idx) {
    const auto w = wedge(idx, complement_index(n, idx));
    return w ? w->sign : 0; // idx strictly increasing, so always defined
}

// Inner product on Lambda^k induced by G on Lambda^1:
// <theta_I, theta_J> = det of the (I, J) submatrix of G. Diagonal G gives
// the diagonal matrix with entries prod_{i in I} G_ii.
inline InnerProduct induced_gram(std::size_t n, std::size_t k, const InnerProduct& g) {
    if (g.dim() != n) throw DimensionMismatch("induced_gram: Gram is not n x n");
    const std::vector<MultiIndex> basis = lambda_basis(n, k);
    RatMatrix out(basis.size(), basis.size());
    if (g.is_diagonal()) {
        for (std::size_t p = 0; p < basis.size(); ++p) {
            Rat d = 1;
            for (int v : basis[p]) d *= g.gram()(static_cast<std::size_t>(v - 1),
                                                 static_cast<std::size_t>(v - 1));
            out(p, p) = d;
        }
        return InnerProduct(std::move(out));
    }
    for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t q = 0; q < basis.size(); ++q) {
            RatMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    sub(a, b) = g.gram()(static_cast<std::size_t>(basis[p][a] - 1),
                                         static_cast<std::size_t>(basis[q][b] - 1));
            // determinant by echelon form with row-swap sign tracking
            Rat det = 1;
            RatMatrix w = sub;
            for (std::size_t c = 0; c < k; ++c) {
                std::size_t piv = c;
                while (piv < k && w(piv, c) == 0) ++piv;
                if (piv == k) {
                    det = 0;
                    break;
                }
                if (piv != c) {
                    for (std::size_t col = 0; col < k; ++col) std::swap(w(c, col), w(piv, col));
                    det = -det;
                }
                det *= w(c, c);
                for (std::size_t r2 = c + 1; r2 < k; ++r2) {
                    const Rat f = w(r2, c) / w(c, c);
                    if (f == 0) continue;
                    for (std::size_t col = c; col < k; ++col) w(r2, col) -= f * w(c, col);
                }
            }
            out(p, q) = det;
        }
    return InnerProduct(std::move(out));
}

// Scale-normalized Hodge star for a diagonal G:
// g_star(theta_I) = <theta_I, theta_I> * eps(I, I^c) * theta_{I^c}.
// Differs from the metric star by a positive constant when basis covectors
// are not unit norm, which keeps everything rational; subspace images are
// unaffected by that scale.
inline RatMatrix g_star_matrix(std::size_t n, std::size_t k, const InnerProduct& g) {
    if (g.dim() != n) throw DimensionMismatch("g_star_matrix: Gram is not n x n");
    if (!g.is_diagonal())
        throw NonDiagonalGram("g_star is only defined for diagonal inner products");
    const std::vector<MultiIndex> basis = lambda_basis(n, k);
    RatMatrix out(lambda_dim(n, n - k), basis.size());
    for (std::size_t p = 0; p < basis.size(); ++p) {
        Rat norm = 1;
        for (int v : basis[p]) norm *= g.gram()(static_cast<std::size_t>(v - 1),
                                                static_cast<std::size_t>(v - 1));
        const MultiIndex comp = complement_index(n, basis[p]);
        out(lambda_index(n, comp), p) = norm * eps_complement(n, basis[p]);
    }
    return out;
}

// A k-form as a coordinate vector over the lexicographic monomial basis.
struct KForm {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Rat> coeffs; // length C(n,k)

    static KForm zero(std::size_t n, std::size_t k) {
        return {n, k, std::vector<Rat>(lambda_dim(n, k), Rat(0))};
    }

    static KForm monomial(std::size_t n, const MultiIndex& idx, const Rat& c = Rat(1)) {
        KForm f = zero(n, idx.size());
        f.coeffs[lambda_index(n, idx)] = c;
        return f;
    }

    bool operator==(const KForm& o) const = default;
};

inline KForm operator+(const KForm& a, const KForm& b) {
    if (a.n != b.n || a.k != b.k) throw DimensionMismatch("k-form sum shape mismatch");
    KForm out = a;
    for (std::size_t t = 0; t < out.coeffs.size(); ++t) out.coeffs[t] += b.coeffs[t];
    return out;
}

inline KForm operator*(const Rat& s, const KForm& a) {
    KForm out = a;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

inline KForm wedge_forms(const KForm& a, const KForm& b) {
    if (a.n != b.n) throw DimensionMismatch("wedge of forms over different spaces");
    KForm out = KForm::zero(a.n, a.k + b.k);
    if (a.k + b.k > a.n) return out;
    const std::vector<MultiIndex> ba = lambda_basis(a.n, a.k);
    const std::vector<MultiIndex> bb = lambda_basis(b.n, b.k);
    for (std::size_t p = 0; p < ba.size(); ++p) {
        if (a.coeffs[p] == 0) continue;
        for (std::size_t q = 0; q < bb.size(); ++q) {
            if (b.coeffs[q] == 0) continue;
            const auto w = wedge(ba[p], bb[q]);
            if (!w) continue;
            out.coeffs[lambda_index(a.n, w->indices)] += a.coeffs[p] * b.coeffs[q] * w->sign;
        }
    }
    return out;
}

} // namespace rumin

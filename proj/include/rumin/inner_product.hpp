#pragma once

#include <vector>

#include "rumin/errors.hpp"
#include "rumin/matrix.hpp"

namespace rumin {

// A symmetric positive definite Gram matrix. Validity is checked on
// construction: symmetry entrywise, positive definiteness by exact
// symmetric elimination (all pivots positive; no row swaps needed for a
// definite matrix).
class InnerProduct {
public:
    explicit InnerProduct(RatMatrix gram) : gram_(std::move(gram)) {
        if (gram_.rows() != gram_.cols())
            throw DimensionMismatch("Gram matrix must be square");
        const std::size_t n = gram_.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (gram_(i, j) != gram_(j, i))
                    throw DimensionMismatch("Gram matrix must be symmetric");
        RatMatrix w = gram_;
        for (std::size_t k = 0; k < n; ++k) {
            if (w(k, k) <= 0)
                throw DimensionMismatch("Gram matrix must be positive definite");
            for (std::size_t i = k + 1; i < n; ++i) {
                const Rat f = w(i, k) / w(k, k);
                if (f == 0) continue;
                for (std::size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
            }
        }
    }

    static InnerProduct identity(std::size_t n) { return InnerProduct(RatMatrix::identity(n)); }

    static InnerProduct diagonal(const std::vector<Rat>& d) {
        RatMatrix g(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
        return InnerProduct(std::move(g));
    }

    std::size_t dim() const { return gram_.rows(); }
    const RatMatrix& gram() const { return gram_; }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            for (std::size_t j = 0; j < gram_.cols(); ++j)
                if (i != j && gram_(i, j) != 0) return false;
        return true;
    }

    // <u, v> for coordinate (column) vectors given as flat arrays.
    Rat pair(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
        if (u.size() != dim() || v.size() != dim())
            throw DimensionMismatch("inner product of wrong-sized vectors");
        Rat s = 0;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (gram_(i, j) == 0 || v[j] == 0) continue;
                s += u[i] * gram_(i, j) * v[j];
            }
        }
        return s;
    }

private:
    RatMatrix gram_;
};

} // namespace rumin

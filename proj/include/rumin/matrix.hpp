#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/rational.hpp"

namespace rumin {

// Dense matrix over Rat, row-major. Zero-row and zero-column shapes are
// legal everywhere; they show up constantly at the ends of the complexes.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> init)
        : rows_(init.size()), cols_(0) {
        for (const auto& row : init) cols_ = std::max(cols_, row.size());
        a_.assign(rows_ * cols_, Rat(0));
        std::size_t i = 0;
        for (const auto& row : init) {
            if (row.size() != cols_ && !(rows_ == 0))
                throw DimensionMismatch("ragged initializer for RatMatrix");
            std::size_t j = 0;
            for (const auto& v : row) a_[i * cols_ + j++] = v;
            ++i;
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix row(std::size_t i) const {
        RatMatrix r(1, cols_);
        for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }

    std::vector<Rat> row_vec(std::size_t i) const {
        return std::vector<Rat>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void set_row(std::size_t i, const std::vector<Rat>& v) {
        if (v.size() != cols_) throw DimensionMismatch("set_row width mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product " + shape(a) + " * " + shape(b));
        RatMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    c(i, j) += aik * b(k, j);
                }
            }
        return c;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum " + shape(a) + " + " + shape(b));
        RatMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference " + shape(a) + " - " + shape(b));
        RatMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    friend RatMatrix operator*(const Rat& s, const RatMatrix& a) {
        RatMatrix c = a;
        for (auto& v : c.a_) v *= s;
        return c;
    }

private:
    static std::string shape(const RatMatrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

struct Rref {
    RatMatrix reduced;        // zero rows dropped, pivot entries 1
    std::vector<std::size_t> pivots; // strictly increasing column indices
};

// Gauss-Jordan over the rationals. The result is the canonical reduced
// row echelon form of the row space: zero rows are dropped, each pivot is
// 1 and is the only nonzero entry in its column.
inline Rref rref(const RatMatrix& m) {
    RatMatrix w = m;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w(r, j), w(p, j));
        const Rat inv = Rat(1) / w(r, c);
        for (std::size_t j = 0; j < cols; ++j) w(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w(i, c) == 0) continue;
            const Rat f = w(i, c);
            for (std::size_t j = 0; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RatMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = w(i, j);
    return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

// Inverse of a square nonsingular matrix, by reducing [A | I].
inline RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const Rref red = rref(aug);
    if (red.pivots.size() != n || (n > 0 && red.pivots[n - 1] != n - 1))
        throw DimensionMismatch("inverse of singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
    return inv;
}

// Solve A X = B where A has full column rank and the system is known to be
// consistent (both facts are checked). Returns the unique X.
inline RatMatrix solve_consistent(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve_consistent row count mismatch");
    const std::size_t n = a.cols(), k = b.cols();
    RatMatrix aug(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    const Rref red = rref(aug);
    std::size_t lead = 0;
    while (lead < red.pivots.size() && red.pivots[lead] < n) ++lead;
    if (lead != n)
        throw DimensionMismatch("solve_consistent: matrix lacks full column rank");
    if (lead != red.pivots.size())
        throw DimensionMismatch("solve_consistent: inconsistent system");
    RatMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = red.reduced(i, n + j);
    return x;
}

} // namespace rumin

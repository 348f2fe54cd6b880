#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/matrix.hpp"
#include "rumin/rational.hpp"
#include "rumin/subspace.hpp"

namespace rumin {

// A finite dimensional Lie algebra over Q, presented by structure constants
// [X_i, X_j] = sum_k c_{ij}^k X_k. Generator indices are 1-based throughout;
// constants are stored for i < j only and read back with the sign flip.
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim) {
        for (std::size_t i = 1; i <= dim_; ++i)
            labels_.push_back("X" + std::to_string(i));
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    void set_labels(std::vector<std::string> labels) {
        if (labels.size() != dim_)
            throw DimensionMismatch("label count must equal the dimension");
        labels_ = std::move(labels);
    }

    void set_bracket(int i, int j, std::map<int, Rat> result) {
        check_index(i);
        check_index(j);
        if (i == j)
            throw RuminError("bracket of a generator with itself is identically zero");
        Rat sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -1;
        }
        for (auto& [k, c] : result) {
            check_index(k);
            c *= sign;
        }
        std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
        if (result.empty()) return;
        if (c_.count({i, j}))
            throw DuplicateBracket("bracket [" + labels_[i - 1] + "," + labels_[j - 1] +
                                   "] is defined twice");
        c_[{i, j}] = std::move(result);
    }

    // [X_i, X_j] as coordinates, for any order of i and j.
    std::map<int, Rat> bracket(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i == j) return {};
        Rat sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -1;
        }
        const auto it = c_.find({i, j});
        if (it == c_.end()) return {};
        std::map<int, Rat> out = it->second;
        for (auto& [k, c] : out) c *= sign;
        return out;
    }

    const std::map<std::pair<int, int>, std::map<int, Rat>>& brackets() const { return c_; }

    // [u, v] for coordinate vectors, by bilinearity.
    std::vector<Rat> bracket_vec(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
        if (u.size() != dim_ || v.size() != dim_)
            throw DimensionMismatch("bracket_vec: vectors must match the dimension");
        std::vector<Rat> out(dim_, Rat(0));
        for (const auto& [ij, terms] : c_) {
            const auto [i, j] = ij;
            const Rat f = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
            if (f == 0) continue;
            for (const auto& [k, c] : terms) out[k - 1] += f * c;
        }
        return out;
    }

    // Matrix of ad_{X_i} on column vectors: column j holds [X_i, X_{j+1}].
    RatMatrix ad(int i) const {
        check_index(i);
        RatMatrix m(dim_, dim_);
        for (std::size_t j = 1; j <= dim_; ++j)
            for (const auto& [k, c] : bracket(i, static_cast<int>(j)))
                m(static_cast<std::size_t>(k - 1), j - 1) = c;
        return m;
    }

private:
    void check_index(int i) const {
        if (i < 1 || static_cast<std::size_t>(i) > dim_)
            throw IndexOutOfRange("generator index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(dim_));
    }

    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, std::map<int, Rat>> c_;
};

// Descending series g = g^(0) > g^(1) > ... with g^(i) = [g, g^(i-1)].
struct CentralSeries {
    std::vector<Subspace> terms;

    bool nilpotent() const { return !terms.empty() && terms.back().dim() == 0; }

    // Least s with g^(s) = 0; -1 when the series stabilizes above zero.
    int step() const {
        return nilpotent() ? static_cast<int>(terms.size()) - 1 : -1;
    }
};

// Span of [g, W]. Brackets of basis elements against a row basis of W.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& w) {
    const std::size_t n = g.dim();
    RatMatrix rows(n * w.dim(), n);
    std::size_t r = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i - 1] = 1;
        for (std::size_t t = 0; t < w.dim(); ++t)
            rows.set_row(r++, g.bracket_vec(e, w.basis().row_vec(t)));
    }
    return Subspace::from_rows(n, rows);
}

// Iterate until zero or stabilization; a nilpotent algebra of dimension n
// reaches zero within n steps.
inline CentralSeries lower_central_series(const LieAlgebra& g) {
    CentralSeries s;
    s.terms.push_back(Subspace::full(g.dim()));
    for (std::size_t it = 0; it <= g.dim() + 1; ++it) {
        const Subspace next = bracket_span(g, s.terms.back());
        if (next == s.terms.back()) break;
        s.terms.push_back(next);
        if (next.dim() == 0) break;
    }
    return s;
}

struct JacobiWitness {
    int i, j, k;            // the offending triple
    std::vector<Rat> value; // coordinates of the nonzero Jacobiator
};

struct AlgebraValidation {
    bool jacobi_ok = true;
    std::vector<JacobiWitness> jacobi_failures;
    bool nilpotent = false;
    int step = -1;
    std::vector<std::size_t> series_dims;

    bool ok() const { return jacobi_ok && nilpotent; }
};

inline std::vector<Rat> jacobiator(const LieAlgebra& g, int i, int j, int k) {
    const std::size_t n = g.dim();
    const auto unit = [n](int t) {
        std::vector<Rat> e(n, Rat(0));
        e[static_cast<std::size_t>(t - 1)] = 1;
        return e;
    };
    std::vector<Rat> out(n, Rat(0));
    const auto acc = [&](int a, int b, int c) {
        const std::vector<Rat> inner = g.bracket_vec(unit(a), unit(b));
        const std::vector<Rat> full = g.bracket_vec(inner, unit(c));
        for (std::size_t t = 0; t < n; ++t) out[t] += full[t];
    };
    acc(i, j, k);
    acc(j, k, i);
    acc(k, i, j);
    return out;
}

inline AlgebraValidation validate_algebra(const LieAlgebra& g) {
    AlgebraValidation v;
    const int n = static_cast<int>(g.dim());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                std::vector<Rat> jac = jacobiator(g, i, j, k);
                bool zero = true;
                for (const auto& x : jac)
                    if (x != 0) zero = false;
                if (!zero) {
                    v.jacobi_ok = false;
                    v.jacobi_failures.push_back({i, j, k, std::move(jac)});
                }
            }
    const CentralSeries s = lower_central_series(g);
    v.nilpotent = s.nilpotent();
    v.step = s.step();
    for (const auto& t : s.terms) v.series_dims.push_back(t.dim());
    return v;
}

inline void ensure_valid(const LieAlgebra& g) {
    const AlgebraValidation v = validate_algebra(g);
    if (!v.jacobi_ok) {
        const auto& w = v.jacobi_failures.front();
        throw JacobiViolation("Jacobi identity fails for (" + std::to_string(w.i) + "," +
                              std::to_string(w.j) + "," + std::to_string(w.k) + ") in " +
                              g.name());
    }
    if (!v.nilpotent)
        throw NotNilpotent("lower central series of " + g.name() + " does not reach zero");
}

// Diagonal grading: each basis vector carries a positive weight and the
// bracket adds weights.
struct Grading {
    std::string name;
    std::vector<Rat> weights; // weight of X_{i+1} at position i

    Rat weight_of_basis_vector(int i) const {
        if (i < 1 || static_cast<std::size_t>(i) > weights.size())
            throw IndexOutOfRange("basis index " + std::to_string(i));
        return weights[static_cast<std::size_t>(i - 1)];
    }

    std::map<Rat, Subspace> layers() const {
        const std::size_t n = weights.size();
        std::map<Rat, std::vector<std::size_t>> by_weight;
        for (std::size_t i = 0; i < n; ++i) by_weight[weights[i]].push_back(i);
        std::map<Rat, Subspace> out;
        for (const auto& [w, idx] : by_weight) {
            RatMatrix rows(idx.size(), n);
            for (std::size_t r = 0; r < idx.size(); ++r) rows(r, idx[r]) = 1;
            out.emplace(w, Subspace::from_rows(n, rows));
        }
        return out;
    }
};

// Throws GradingViolation at the first bracket [X_i, X_j] with a component
// on X_k whose weight is not w_i + w_j.
inline void validate_grading(const LieAlgebra& g, const Grading& gr) {
    if (gr.weights.size() != g.dim())
        throw DimensionMismatch("grading size must equal the algebra dimension");
    for (const auto& w : gr.weights)
        if (w <= 0) throw RuminError("grading weights must be positive in " + gr.name);
    for (const auto& [ij, terms] : g.brackets()) {
        const auto [i, j] = ij;
        const Rat want = gr.weight_of_basis_vector(i) + gr.weight_of_basis_vector(j);
        for (const auto& [k, c] : terms) {
            (void)c;
            if (gr.weight_of_basis_vector(k) != want)
                throw GradingViolation(i, j, k,
                                       "bracket [" + std::to_string(i) + "," +
                                           std::to_string(j) + "] hits X" + std::to_string(k) +
                                           " of weight " +
                                           rat_to_string(gr.weight_of_basis_vector(k)) +
                                           ", expected " + rat_to_string(want));
        }
    }
}

// A grading is a stratification when the occupied weights are exactly
// 1..s and the first layer bracket-generates: [V_1, V_j] = V_{j+1}.
inline bool is_stratification(const LieAlgebra& g, const Grading& gr) {
    validate_grading(g, gr);
    const std::map<Rat, Subspace> layers = gr.layers();
    Rat s = 0;
    for (const auto& [w, space] : layers) {
        (void)space;
        if (denominator(w) != 1) return false;
        if (w > s) s = w;
    }
    for (Rat t = 1; t <= s; ++t)
        if (!layers.count(t)) return false;
    const std::size_t n = g.dim();
    const auto layer = [&](const Rat& t) {
        const auto it = layers.find(t);
        return it == layers.end() ? Subspace::zero(n) : it->second;
    };
    const Subspace v1 = layer(1);
    for (Rat j = 1; j <= s; ++j) {
        // span of [V_1, V_j], from brackets of the two row bases
        RatMatrix rows(v1.dim() * layer(j).dim(), n);
        std::size_t r = 0;
        for (std::size_t a = 0; a < v1.dim(); ++a)
            for (std::size_t b = 0; b < layer(j).dim(); ++b)
                rows.set_row(r++, g.bracket_vec(v1.basis().row_vec(a),
                                                layer(j).basis().row_vec(b)));
        if (Subspace::from_rows(n, rows) != layer(j + 1)) return false;
    }
    return true;
}

// Sum of the weights of all basis vectors; for a stratification this is
// the homogeneous dimension of the associated graded group.
inline Rat homogeneous_dimension(const Grading& gr) {
    Rat t = 0;
    for (const auto& w : gr.weights) t += w;
    return t;
}

// Basis change: columns of t give the new basis in old coordinates. The
// returned algebra carries the structure constants of the same bracket in
// the new basis. Preserves Jacobi and nilpotency exactly.
inline LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& t, const std::string& name) {
    const std::size_t n = g.dim();
    if (t.rows() != n || t.cols() != n)
        throw DimensionMismatch("change_basis: matrix must be n x n");
    const RatMatrix tinv = inverse(t);
    LieAlgebra out(name, n);
    const auto col = [&](std::size_t a) {
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = t(i, a);
        return v;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::vector<Rat> w = g.bracket_vec(col(a), col(b));
            std::map<int, Rat> terms;
            for (std::size_t c = 0; c < n; ++c) {
                Rat x = 0;
                for (std::size_t k = 0; k < n; ++k) x += tinv(c, k) * w[k];
                if (x != 0) terms[static_cast<int>(c + 1)] = x;
            }
            if (!terms.empty())
                out.set_bracket(static_cast<int>(a + 1), static_cast<int>(b + 1),
                                std::move(terms));
        }
    return out;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    LieAlgebra out(a.name() + "+" + b.name(), a.dim() + b.dim());
    for (const auto& [ij, terms] : a.brackets())
        out.set_bracket(ij.first, ij.second, terms);
    const int off = static_cast<int>(a.dim());
    for (const auto& [ij, terms] : b.brackets()) {
        std::map<int, Rat> shifted;
        for (const auto& [k, c] : terms) shifted[k + off] = c;
        out.set_bracket(ij.first + off, ij.second + off, std::move(shifted));
    }
    return out;
}

} // namespace rumin

#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/matrix.hpp"
#include "rumin/rational.hpp"

namespace rumin {

// A word X_{a1} X_{a2} ... X_{ak} of left-invariant derivatives, applied
// left to right to whatever function follows. Empty word = identity.
using OpWord = std::vector<int>;

// Degree first, then lexicographic. Total order on normal-form words.
struct WordLess {
    bool operator()(const OpWord& a, const OpWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Polynomial in the X_i with rational coefficients; zero coefficients are
// never stored, so structural equality is operator equality once all words
// are normal-ordered.
class OpPoly {
public:
    OpPoly() = default;
    explicit OpPoly(const Rat& scalar) {
        if (scalar != 0) terms_[OpWord{}] = scalar;
    }
    static OpPoly word(OpWord w, const Rat& c = Rat(1)) {
        OpPoly p;
        if (c != 0) p.terms_[std::move(w)] = c;
        return p;
    }

    const std::map<OpWord, Rat, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const OpWord& w, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    OpPoly& operator+=(const OpPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    OpPoly& operator-=(const OpPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
    friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }

    friend OpPoly operator*(const Rat& s, const OpPoly& p) {
        OpPoly out;
        if (s == 0) return out;
        for (const auto& [w, c] : p.terms_) out.terms_[w] = s * c;
        return out;
    }

    // Raw concatenation product, not normal-ordered.
    friend OpPoly operator*(const OpPoly& a, const OpPoly& b) {
        OpPoly out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                OpWord w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add_term(w, ca * cb);
            }
        return out;
    }

    bool operator==(const OpPoly& o) const = default;

    // Coefficient of the empty word.
    Rat scalar_part() const {
        const auto it = terms_.find(OpWord{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

private:
    std::map<OpWord, Rat, WordLess> terms_;
};

// PBW straightening with a per-algebra memo. The rewrite moves the first
// descent: ... X_a X_b ... with a > b becomes the swapped word plus the
// shorter words from [X_a, X_b]. Each step shortens a word or lowers its
// inversion count, so the recursion terminates.
class PbwContext {
public:
    explicit PbwContext(LieAlgebra g) : g_(std::move(g)) {}

    const LieAlgebra& algebra() const { return g_; }

    const OpPoly& normalize_word(const OpWord& w) {
        const auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        std::size_t d = 0;
        while (d + 1 < w.size() && w[d] <= w[d + 1]) ++d;
        OpPoly result;
        if (d + 1 >= w.size()) {
            result = OpPoly::word(w);
        } else {
            result = rewrite_at(w, d);
        }
        return cache_.emplace(w, std::move(result)).first->second;
    }

    OpPoly normalize(const OpPoly& p) {
        OpPoly out;
        for (const auto& [w, c] : p.terms()) out += c * normalize_word(w);
        return out;
    }

    // Straighten by choosing a random descent each step, with no memo.
    // Exists so tests can compare independent rewrite orders (confluence).
    OpPoly normalize_random(const OpPoly& p, std::mt19937_64& rng) {
        OpPoly out;
        for (const auto& [w, c] : p.terms()) out += c * random_word(w, rng);
        return out;
    }

private:
    OpPoly rewrite_at(const OpWord& w, std::size_t d) {
        OpWord swapped = w;
        std::swap(swapped[d], swapped[d + 1]);
        OpPoly result = normalize_word(swapped);
        for (const auto& [k, c] : g_.bracket(w[d], w[d + 1])) {
            OpWord shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(d) + 2, w.end());
            result += c * normalize_word(shorter);
        }
        return result;
    }

    OpPoly random_word(const OpWord& w, std::mt19937_64& rng) {
        std::vector<std::size_t> descents;
        for (std::size_t d = 0; d + 1 < w.size(); ++d)
            if (w[d] > w[d + 1]) descents.push_back(d);
        if (descents.empty()) return OpPoly::word(w);
        std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
        const std::size_t d = descents[pick(rng)];
        OpWord swapped = w;
        std::swap(swapped[d], swapped[d + 1]);
        OpPoly result = random_word(swapped, rng);
        for (const auto& [k, c] : g_.bracket(w[d], w[d + 1])) {
            OpWord shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
            shorter.push_back(k);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(d) + 2, w.end());
            result += c * random_word(shorter, rng);
        }
        return result;
    }

    LieAlgebra g_;
    std::map<OpWord, OpPoly> cache_;
};

inline OpPoly pbw_normalize(const OpPoly& p, const LieAlgebra& g) {
    PbwContext ctx(g);
    return ctx.normalize(p);
}

// Matrix of operator polynomials between two labeled bases. Rows are
// indexed by the codomain labels, columns by the domain labels. All sums
// and compositions keep entries normal-ordered as long as the inputs are.
class OpMatrix {
public:
    OpMatrix() = default;
    OpMatrix(std::vector<std::string> cod, std::vector<std::string> dom)
        : cod_(std::move(cod)), dom_(std::move(dom)),
          entries_(cod_.size() * dom_.size()) {}

    static OpMatrix identity(const std::vector<std::string>& labels) {
        OpMatrix m(labels, labels);
        for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = OpPoly(Rat(1));
        return m;
    }

    // Lift a rational matrix: every entry becomes a multiple of the
    // identity word.
    static OpMatrix from_rat(const RatMatrix& m, std::vector<std::string> cod,
                             std::vector<std::string> dom) {
        if (m.rows() != cod.size() || m.cols() != dom.size())
            throw DimensionMismatch("from_rat: labels do not match the matrix shape");
        OpMatrix out(std::move(cod), std::move(dom));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = OpPoly(m(i, j));
        return out;
    }

    const std::vector<std::string>& codomain() const { return cod_; }
    const std::vector<std::string>& domain() const { return dom_; }
    std::size_t rows() const { return cod_.size(); }
    std::size_t cols() const { return dom_.size(); }

    OpPoly& at(std::size_t i, std::size_t j) { return entries_[i * dom_.size() + j]; }
    const OpPoly& at(std::size_t i, std::size_t j) const {
        return entries_[i * dom_.size() + j];
    }

    bool operator==(const OpMatrix& o) const = default;

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    // Coefficients of the empty word, as a plain rational matrix.
    RatMatrix degree0() const {
        RatMatrix m(rows(), cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) m(i, j) = at(i, j).scalar_part();
        return m;
    }

    friend OpMatrix operator+(const OpMatrix& a, const OpMatrix& b) {
        a.require_same_shape(b, "sum");
        OpMatrix out = a;
        for (std::size_t t = 0; t < out.entries_.size(); ++t) out.entries_[t] += b.entries_[t];
        return out;
    }

    friend OpMatrix operator-(const OpMatrix& a, const OpMatrix& b) {
        a.require_same_shape(b, "difference");
        OpMatrix out = a;
        for (std::size_t t = 0; t < out.entries_.size(); ++t) out.entries_[t] -= b.entries_[t];
        return out;
    }

    friend OpMatrix operator*(const Rat& s, const OpMatrix& a) {
        OpMatrix out = a;
        for (auto& e : out.entries_) e = s * e;
        return out;
    }

private:
    void require_same_shape(const OpMatrix& o, const std::string& op) const {
        if (cod_ != o.cod_ || dom_ != o.dom_)
            throw DimensionMismatch("operator matrix " + op + ": labeled bases differ");
    }

    std::vector<std::string> cod_, dom_;
    std::vector<OpPoly> entries_;
};

// a after b: requires the domain of a to be the codomain of b, label for
// label. Entry products concatenate words and are then normal-ordered.
inline OpMatrix compose(const OpMatrix& a, const OpMatrix& b, PbwContext& ctx) {
    if (a.domain() != b.codomain())
        throw DimensionMismatch("compose: domain of the left factor must equal the "
                                "codomain of the right factor");
    OpMatrix out(a.codomain(), b.domain());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            OpPoly acc;
            for (std::size_t m = 0; m < a.cols(); ++m) {
                if (a.at(i, m).is_zero() || b.at(m, j).is_zero()) continue;
                acc += ctx.normalize(a.at(i, m) * b.at(m, j));
            }
            out.at(i, j) = std::move(acc);
        }
    return out;
}

inline OpMatrix compose(const OpMatrix& a, const OpMatrix& b, const LieAlgebra& g) {
    PbwContext ctx(g);
    return compose(a, b, ctx);
}

inline bool op_equal(const OpMatrix& a, const OpMatrix& b, PbwContext& ctx) {
    if (a.codomain() != b.codomain() || a.domain() != b.domain()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ctx.normalize(a.at(i, j)) != ctx.normalize(b.at(i, j))) return false;
    return true;
}

inline bool op_equal(const OpMatrix& a, const OpMatrix& b, const LieAlgebra& g) {
    PbwContext ctx(g);
    return op_equal(a, b, ctx);
}

} // namespace rumin

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rumin/exterior.hpp"
#include "rumin/op_algebra.hpp"
#include "rumin/rational.hpp"

namespace rumin {

// Text output uses the actual glyphs (theta, wedge, minus sign); LaTeX
// output is pure ASCII macros.
inline constexpr const char* kThetaUtf8 = "\xce\xb8";
inline constexpr const char* kWedgeUtf8 = "\xe2\x88\xa7";
inline constexpr const char* kMinusUtf8 = "\xe2\x88\x92";

inline std::string monomial_text(const MultiIndex& idx) {
    if (idx.empty()) return "1";
    std::string out;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t) out += kWedgeUtf8;
        out += kThetaUtf8 + std::to_string(idx[t]);
    }
    return out;
}

inline std::string monomial_latex(const MultiIndex& idx) {
    if (idx.empty()) return "1";
    std::string out;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t) out += "\\wedge";
        out += "\\theta_" + std::to_string(idx[t]);
    }
    return out;
}

// One monomial with a rational coefficient; a display form is an ordered
// list of these. Order is preserved so the catalog can show elements the
// way the source presents them (e.g. "theta5^theta6 - theta1^theta3").
struct FormTerm {
    Rat coeff;
    MultiIndex monomial;

    bool operator==(const FormTerm& o) const = default;
};

inline std::vector<FormTerm> form_terms_lex(const KForm& f) {
    const std::vector<MultiIndex> basis = lambda_basis(f.n, f.k);
    std::vector<FormTerm> out;
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (f.coeffs[t] != 0) out.push_back({f.coeffs[t], basis[t]});
    return out;
}

namespace detail {

// Join pre-rendered term bodies with sign separators. `bodies` carry the
// magnitude already; signs come from the coefficients.
inline std::string join_signed(const std::vector<std::pair<Rat, std::string>>& terms,
                               bool latex) {
    if (terms.empty()) return "0";
    const std::string minus = latex ? "-" : kMinusUtf8;
    std::string out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const bool neg = terms[t].first < 0;
        if (t == 0) {
            if (neg) out += minus;
        } else {
            out += neg ? " " + minus + " " : " + ";
        }
        out += terms[t].second;
    }
    return out;
}

inline std::string magnitude_prefix(const Rat& c, bool latex) {
    const Rat a = c < 0 ? Rat(-c) : c;
    if (a == 1) return "";
    if (latex) {
        if (denominator(a) == 1) return numerator(a).str();
        return "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
    }
    return rat_to_string(a) + " ";
}

} // namespace detail

inline std::string form_terms_to_text(const std::vector<FormTerm>& terms) {
    std::vector<std::pair<Rat, std::string>> parts;
    for (const auto& t : terms)
        parts.emplace_back(t.coeff,
                           detail::magnitude_prefix(t.coeff, false) + monomial_text(t.monomial));
    return detail::join_signed(parts, false);
}

inline std::string form_terms_to_latex(const std::vector<FormTerm>& terms) {
    std::vector<std::pair<Rat, std::string>> parts;
    for (const auto& t : terms)
        parts.emplace_back(t.coeff,
                           detail::magnitude_prefix(t.coeff, true) + monomial_latex(t.monomial));
    return detail::join_signed(parts, true);
}

inline std::string word_text(const OpWord& w, const std::vector<std::string>& labels) {
    std::string out;
    for (int a : w) out += labels[static_cast<std::size_t>(a - 1)];
    return out;
}

inline std::string word_latex(const OpWord& w) {
    std::string out;
    for (int a : w) out += "X_" + std::to_string(a);
    return out;
}

// Coefficient-function symbols per source degree, matching common usage:
// functions f, then g, h, u, v, w for higher degrees.
inline std::string degree_symbol(std::size_t k) {
    static const char* symbols[] = {"f", "f", "g", "h", "u", "v", "w"};
    return k < std::size(symbols) ? symbols[k] : "c";
}

inline std::string source_symbol_text(const std::string& sym, std::size_t index,
                                      std::size_t source_count) {
    return source_count == 1 ? sym : sym + std::to_string(index + 1);
}

inline std::string source_symbol_latex(const std::string& sym, std::size_t index,
                                       std::size_t source_count) {
    return source_count == 1 ? sym : sym + "_" + std::to_string(index + 1);
}

// One operator-word application to a named source function, used when a
// whole row of an operator matrix is rendered as a single sum.
struct OpTerm {
    Rat coeff;
    OpWord word;
    std::size_t source; // column index

    bool operator==(const OpTerm& o) const = default;
};

// Display order: higher-order words first, then lexicographic word, then
// source index.
inline void sort_op_terms(std::vector<OpTerm>& terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const OpTerm& a, const OpTerm& b) {
        if (a.word.size() != b.word.size()) return a.word.size() > b.word.size();
        if (a.word != b.word) return a.word < b.word;
        return a.source < b.source;
    });
}

inline std::vector<OpTerm> row_op_terms(const OpMatrix& m, std::size_t row) {
    std::vector<OpTerm> terms;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [w, c] : m.at(row, j).terms()) terms.push_back({c, w, j});
    sort_op_terms(terms);
    return terms;
}

inline std::string op_terms_to_text(const std::vector<OpTerm>& terms,
                                    const std::vector<std::string>& gen_labels,
                                    const std::string& sym, std::size_t source_count) {
    std::vector<std::pair<Rat, std::string>> parts;
    for (const auto& t : terms) {
        std::string body = detail::magnitude_prefix(t.coeff, false);
        if (!t.word.empty()) body += word_text(t.word, gen_labels) + " ";
        body += source_symbol_text(sym, t.source, source_count);
        parts.emplace_back(t.coeff, body);
    }
    return detail::join_signed(parts, false);
}

inline std::string op_terms_to_latex(const std::vector<OpTerm>& terms, const std::string& sym,
                                     std::size_t source_count) {
    std::vector<std::pair<Rat, std::string>> parts;
    for (const auto& t : terms) {
        std::string body = detail::magnitude_prefix(t.coeff, true);
        if (!t.word.empty()) body += word_latex(t.word) + " ";
        body += source_symbol_latex(sym, t.source, source_count);
        parts.emplace_back(t.coeff, body);
    }
    return detail::join_signed(parts, true);
}

} // namespace rumin

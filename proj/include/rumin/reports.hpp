#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rumin/algebra_file.hpp"
#include "rumin/lqp.hpp"
#include "rumin/render.hpp"
#include "rumin/rumin_complex.hpp"

namespace rumin {

inline constexpr const char* kReportSchema = "rumin-report/1";
inline constexpr const char* kEllUtf8 = "\xe2\x84\x93";   // script ell
inline constexpr const char* kNeqUtf8 = "\xe2\x89\xa0";   // not-equal sign

enum class EmitFormat { text, latex, json };

inline EmitFormat emit_format_from_string(const std::string& s) {
    if (s == "text") return EmitFormat::text;
    if (s == "latex") return EmitFormat::latex;
    if (s == "json") return EmitFormat::json;
    throw RuminError("unknown emit format \"" + s + "\" (want text, latex or json)");
}

// ---------------------------------------------------------------- reports

struct ValidationReport {
    std::string algebra;
    std::size_t dim = 0;
    std::size_t bracket_count = 0;
    std::size_t step = 0;

    bool operator==(const ValidationReport&) const = default;
};

struct AnalyzeDegree {
    std::size_t degree = 0;
    std::size_t e0_dim = 0;
    std::vector<std::vector<FormTerm>> e0_elements;

    bool operator==(const AnalyzeDegree&) const = default;
};

struct AnalyzeReport {
    std::string algebra;
    std::size_t dim = 0;
    std::size_t step = 0;
    bool adapted = false;
    std::vector<std::size_t> filtration_dims; // dims of F_1..F_s
    std::vector<Rat> covector_weights;        // asymptotic weights of the working frame
    std::vector<AnalyzeDegree> degrees;

    bool operator==(const AnalyzeReport&) const = default;
};

struct DcReport {
    std::string algebra;
    std::size_t degree = 0;
    std::vector<std::string> generator_labels;
    std::vector<std::vector<FormTerm>> sources; // E_0^k basis
    std::vector<std::vector<FormTerm>> targets; // E_0^{k+1} basis
    std::vector<std::vector<OpTerm>> rows;      // one per target element

    bool operator==(const DcReport&) const = default;
};

struct VerifyReport {
    std::string algebra;
    std::vector<IdentityReport> identities;
    std::vector<HodgeDuality> hodge;
    bool all_ok = false;

    bool operator==(const VerifyReport&) const = default;
};

// ---------------------------------------------------------------- builders

inline ValidationReport validation_report(const LieAlgebra& g) {
    ensure_valid(g);
    ValidationReport r;
    r.algebra = g.name();
    r.dim = g.dim();
    r.bracket_count = g.brackets().size();
    r.step = static_cast<std::size_t>(lower_central_series(g).step());
    return r;
}

inline AnalyzeReport analyze_report(const RuminComplex& rc,
                                    std::optional<std::size_t> degree = {}) {
    const LieAlgebra& g = rc.ce().algebra();
    AnalyzeReport r;
    r.algebra = g.name();
    r.dim = rc.dim();
    r.adapted = rc.adapted();
    const Filtration f = build_filtration(g);
    r.step = f.step();
    for (std::size_t i = 1; i <= f.step(); ++i) r.filtration_dims.push_back(f.F[i].dim());
    const WeightTable wt = asymptotic_weight_table(g, rc.ce().gram(1));
    for (std::size_t i = 1; i <= r.dim; ++i)
        r.covector_weights.push_back(wt.weight_of_covector(static_cast<int>(i)));
    if (degree && *degree > r.dim)
        throw IndexOutOfRange("degree " + std::to_string(*degree) + " outside 0.." +
                              std::to_string(r.dim));
    for (std::size_t k = 0; k <= r.dim; ++k) {
        if (degree && *degree != k) continue;
        const E0Basis& b = rc.e0_basis(k);
        r.degrees.push_back({k, b.rows.rows(), b.elements});
    }
    return r;
}

inline DcReport dc_report(const RuminComplex& rc, std::size_t degree) {
    if (degree > rc.dim())
        throw IndexOutOfRange("degree " + std::to_string(degree) + " outside 0.." +
                              std::to_string(rc.dim()));
    DcReport r;
    r.algebra = rc.ce().algebra().name();
    r.degree = degree;
    r.generator_labels = rc.ce().algebra().labels();
    r.sources = rc.e0_basis(degree).elements;
    if (degree + 1 <= rc.dim()) r.targets = rc.e0_basis(degree + 1).elements;
    const OpMatrix& m = rc.dc(degree);
    for (std::size_t row = 0; row < m.rows(); ++row) r.rows.push_back(row_op_terms(m, row));
    return r;
}

inline VerifyReport verify_report(RuminComplex& rc) {
    VerifyReport r;
    r.algebra = rc.ce().algebra().name();
    r.identities = rc.verify_identities();
    r.hodge = rc.hodge_duality_check();
    r.all_ok = true;
    for (const auto& i : r.identities) r.all_ok = r.all_ok && i.ok;
    for (const auto& h : r.hodge) r.all_ok = r.all_ok && h.ok;
    return r;
}

// ------------------------------------------------------------ json codecs

namespace detail {

inline nlohmann::ordered_json form_terms_json(const std::vector<FormTerm>& terms) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& t : terms)
        out.push_back({{"coeff", rat_to_string(t.coeff)}, {"monomial", t.monomial}});
    return out;
}

inline std::vector<FormTerm> form_terms_from_json(const nlohmann::json& j) {
    std::vector<FormTerm> out;
    for (const auto& t : j)
        out.push_back({rat_from_string(t.at("coeff").get<std::string>()),
                       t.at("monomial").get<MultiIndex>()});
    return out;
}

inline nlohmann::ordered_json op_terms_json(const std::vector<OpTerm>& terms) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& t : terms)
        out.push_back({{"coeff", rat_to_string(t.coeff)},
                       {"word", t.word},
                       {"source", t.source}});
    return out;
}

inline std::vector<OpTerm> op_terms_from_json(const nlohmann::json& j) {
    std::vector<OpTerm> out;
    for (const auto& t : j)
        out.push_back({rat_from_string(t.at("coeff").get<std::string>()),
                       t.at("word").get<OpWord>(), t.at("source").get<std::size_t>()});
    return out;
}

inline nlohmann::ordered_json rat_vec_json(const std::vector<Rat>& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : v) out.push_back(rat_to_string(r));
    return out;
}

inline std::vector<Rat> rat_vec_from_json(const nlohmann::json& j) {
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(rat_from_string(v.get<std::string>()));
    return out;
}

inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace detail

inline nlohmann::ordered_json to_json(const ValidationReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "validate";
    j["algebra"] = r.algebra;
    j["dim"] = r.dim;
    j["brackets"] = r.bracket_count;
    j["step"] = r.step;
    return j;
}

inline ValidationReport validation_from_json(const nlohmann::json& j) {
    ValidationReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.dim = j.at("dim").get<std::size_t>();
    r.bracket_count = j.at("brackets").get<std::size_t>();
    r.step = j.at("step").get<std::size_t>();
    return r;
}

inline nlohmann::ordered_json to_json(const AnalyzeReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "analyze";
    j["algebra"] = r.algebra;
    j["dim"] = r.dim;
    j["step"] = r.step;
    j["adapted"] = r.adapted;
    j["filtration_dims"] = r.filtration_dims;
    j["covector_weights"] = detail::rat_vec_json(r.covector_weights);
    j["degrees"] = nlohmann::ordered_json::array();
    for (const auto& d : r.degrees) {
        nlohmann::ordered_json e;
        e["degree"] = d.degree;
        e["dim"] = d.e0_dim;
        e["elements"] = nlohmann::ordered_json::array();
        for (const auto& el : d.e0_elements) e["elements"].push_back(detail::form_terms_json(el));
        j["degrees"].push_back(std::move(e));
    }
    return j;
}

inline AnalyzeReport analyze_from_json(const nlohmann::json& j) {
    AnalyzeReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.dim = j.at("dim").get<std::size_t>();
    r.step = j.at("step").get<std::size_t>();
    r.adapted = j.at("adapted").get<bool>();
    r.filtration_dims = j.at("filtration_dims").get<std::vector<std::size_t>>();
    r.covector_weights = detail::rat_vec_from_json(j.at("covector_weights"));
    for (const auto& d : j.at("degrees")) {
        AnalyzeDegree a;
        a.degree = d.at("degree").get<std::size_t>();
        a.e0_dim = d.at("dim").get<std::size_t>();
        for (const auto& el : d.at("elements"))
            a.e0_elements.push_back(detail::form_terms_from_json(el));
        r.degrees.push_back(std::move(a));
    }
    return r;
}

inline nlohmann::ordered_json to_json(const DcReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "dc";
    j["algebra"] = r.algebra;
    j["degree"] = r.degree;
    j["generators"] = r.generator_labels;
    j["sources"] = nlohmann::ordered_json::array();
    for (const auto& s : r.sources) j["sources"].push_back(detail::form_terms_json(s));
    j["targets"] = nlohmann::ordered_json::array();
    for (const auto& t : r.targets) j["targets"].push_back(detail::form_terms_json(t));
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) j["rows"].push_back(detail::op_terms_json(row));
    return j;
}

inline DcReport dc_from_json(const nlohmann::json& j) {
    DcReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.degree = j.at("degree").get<std::size_t>();
    r.generator_labels = j.at("generators").get<std::vector<std::string>>();
    for (const auto& s : j.at("sources")) r.sources.push_back(detail::form_terms_from_json(s));
    for (const auto& t : j.at("targets")) r.targets.push_back(detail::form_terms_from_json(t));
    for (const auto& row : j.at("rows")) r.rows.push_back(detail::op_terms_from_json(row));
    return r;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "verify";
    j["algebra"] = r.algebra;
    j["identities"] = nlohmann::ordered_json::array();
    for (const auto& i : r.identities)
        j["identities"].push_back({{"name", i.name},
                                   {"degree", i.degree},
                                   {"ok", i.ok},
                                   {"witness", i.witness}});
    j["hodge"] = nlohmann::ordered_json::array();
    for (const auto& h : r.hodge) j["hodge"].push_back({{"degree", h.degree}, {"ok", h.ok}});
    j["all_ok"] = r.all_ok;
    return j;
}

inline VerifyReport verify_from_json(const nlohmann::json& j) {
    VerifyReport r;
    r.algebra = j.at("algebra").get<std::string>();
    for (const auto& i : j.at("identities"))
        r.identities.push_back({i.at("name").get<std::string>(),
                                i.at("degree").get<std::size_t>(), i.at("ok").get<bool>(),
                                i.at("witness").get<std::string>()});
    for (const auto& h : j.at("hodge"))
        r.hodge.push_back({h.at("degree").get<std::size_t>(), h.at("ok").get<bool>()});
    r.all_ok = j.at("all_ok").get<bool>();
    return r;
}

inline nlohmann::ordered_json to_json(const LqpReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "lqp";
    j["algebra"] = r.algebra;
    j["grading"] = r.grading;
    j["covector_weights"] = detail::rat_vec_json(r.covector_weights);
    j["T"] = rat_to_string(r.homogeneous_dim);
    j["stratification"] = r.stratification;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json e;
        e["degree"] = row.degree;
        e["weights"] = nlohmann::ordered_json::array();
        for (const auto& w : row.weights) e["weights"].push_back(rat_to_string(w));
        e["delta_min"] = rat_to_string(row.delta_min);
        e["delta_max"] = rat_to_string(row.delta_max);
        e["homogeneous"] = row.homogeneous;
        if (row.has_threshold) e["threshold"] = rat_to_string(row.threshold);
        j["rows"].push_back(std::move(e));
    }
    return j;
}

inline LqpReport lqp_from_json(const nlohmann::json& j) {
    LqpReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.grading = j.at("grading").get<std::string>();
    r.covector_weights = detail::rat_vec_from_json(j.at("covector_weights"));
    r.homogeneous_dim = rat_from_string(j.at("T").get<std::string>());
    r.stratification = j.at("stratification").get<bool>();
    for (const auto& e : j.at("rows")) {
        LqpRow row;
        row.degree = e.at("degree").get<std::size_t>();
        for (const auto& w : e.at("weights")) row.weights.insert(rat_from_string(w.get<std::string>()));
        row.delta_min = rat_from_string(e.at("delta_min").get<std::string>());
        row.delta_max = rat_from_string(e.at("delta_max").get<std::string>());
        row.homogeneous = e.at("homogeneous").get<bool>();
        row.has_threshold = e.contains("threshold");
        if (row.has_threshold) row.threshold = rat_from_string(e.at("threshold").get<std::string>());
        r.rows.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------- text and latex

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string rat_latex(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    const Rat a = r < 0 ? Rat(-r) : r;
    const std::string frac =
        "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
    return r < 0 ? "-" + frac : frac;
}

inline std::string weight_set_text(const std::set<Rat>& w) {
    std::vector<std::string> parts;
    for (const auto& v : w) parts.push_back(rat_to_string(v));
    return "{" + join(parts, ", ") + "}";
}

} // namespace detail

inline std::string emit(const ValidationReport& r, EmitFormat fmt) {
    if (fmt == EmitFormat::json) return detail::dump(to_json(r));
    std::ostringstream out;
    if (fmt == EmitFormat::latex) {
        out << "% valid nilpotent structure-constant table\n";
        out << "\\mathfrak{g} = \\text{" << r.algebra << "},\\quad \\dim \\mathfrak{g} = "
            << r.dim << ",\\quad \\text{step } " << r.step << "\n";
        return out.str();
    }
    out << "algebra: " << r.algebra << "\n";
    out << "dim: " << r.dim << "\n";
    out << "brackets: " << r.bracket_count << "\n";
    out << "step: " << r.step << "\n";
    out << "valid: yes\n";
    return out.str();
}

inline std::string emit(const AnalyzeReport& r, EmitFormat fmt) {
    if (fmt == EmitFormat::json) return detail::dump(to_json(r));
    std::ostringstream out;
    if (fmt == EmitFormat::latex) {
        out << "% algebra " << r.algebra << ", dim " << r.dim << ", step " << r.step << "\n";
        std::vector<std::string> ws;
        for (const auto& w : r.covector_weights) ws.push_back(rat_to_string(w));
        out << "% covector weights " << detail::join(ws, " ") << "\n";
        for (const auto& d : r.degrees) {
            std::vector<std::string> els;
            for (const auto& el : d.e0_elements) els.push_back(form_terms_to_latex(el));
            out << "E_0^{" << d.degree << "} = \\langle " << detail::join(els, ",\\; ")
                << " \\rangle\n";
        }
        return out.str();
    }
    out << "algebra: " << r.algebra << "\n";
    out << "dim: " << r.dim << "\n";
    out << "step: " << r.step << "\n";
    if (r.adapted) out << "frame: re-expressed in the adapted basis\n";
    std::vector<std::string> fd;
    for (const auto& d : r.filtration_dims) fd.push_back(std::to_string(d));
    out << "filtration dims: " << detail::join(fd, " ") << "\n";
    std::vector<std::string> ws;
    for (const auto& w : r.covector_weights) ws.push_back(rat_to_string(w));
    out << "covector weights: " << detail::join(ws, " ") << "\n";
    for (const auto& d : r.degrees) {
        std::vector<std::string> els;
        for (const auto& el : d.e0_elements) els.push_back(form_terms_to_text(el));
        out << "E_0^" << d.degree << " (dim " << d.e0_dim << "): " << detail::join(els, ", ")
            << "\n";
    }
    return out.str();
}

inline std::string emit(const DcReport& r, EmitFormat fmt) {
    if (fmt == EmitFormat::json) return detail::dump(to_json(r));
    const std::string sym = degree_symbol(r.degree);
    std::ostringstream out;
    if (fmt == EmitFormat::latex) {
        out << "% d_c in degree " << r.degree << " of " << r.algebra << "\n";
        std::vector<std::string> parts;
        for (std::size_t row = 0; row < r.rows.size(); ++row) {
            if (r.rows[row].empty()) continue;
            std::string coeff = op_terms_to_latex(r.rows[row], sym, r.sources.size());
            if (r.rows[row].size() > 1) coeff = "(" + coeff + ")";
            std::string target = form_terms_to_latex(r.targets[row]);
            if (r.targets[row].size() > 1) target = "(" + target + ")";
            parts.push_back(coeff + "\\," + target);
        }
        out << detail::join(parts, " + ") << "\n";
        return out.str();
    }
    out << "algebra: " << r.algebra << "\n";
    out << "degree: " << r.degree << "\n";
    std::vector<std::string> srcs;
    for (std::size_t i = 0; i < r.sources.size(); ++i)
        srcs.push_back(source_symbol_text(sym, i, r.sources.size()) + " = " +
                       form_terms_to_text(r.sources[i]));
    out << "sources: " << detail::join(srcs, ", ") << "\n";
    for (std::size_t row = 0; row < r.rows.size(); ++row)
        out << form_terms_to_text(r.targets[row]) << " : "
            << op_terms_to_text(r.rows[row], r.generator_labels, sym, r.sources.size())
            << "\n";
    return out.str();
}

inline std::string emit(const VerifyReport& r, EmitFormat fmt) {
    if (fmt == EmitFormat::json) return detail::dump(to_json(r));
    std::ostringstream out;
    if (fmt == EmitFormat::latex) out << "% identity suite for " << r.algebra << "\n";
    else out << "algebra: " << r.algebra << "\n";
    for (const auto& i : r.identities) {
        out << (fmt == EmitFormat::latex ? "% " : "") << i.name << " [degree " << i.degree
            << "]: " << (i.ok ? "ok" : "FAIL " + i.witness) << "\n";
    }
    for (const auto& h : r.hodge)
        out << (fmt == EmitFormat::latex ? "% " : "") << "hodge duality [degree " << h.degree
            << "]: " << (h.ok ? "ok" : "FAIL") << "\n";
    out << (fmt == EmitFormat::latex ? "% " : "") << "all: " << (r.all_ok ? "ok" : "FAIL")
        << "\n";
    return out.str();
}

inline std::string emit(const LqpReport& r, EmitFormat fmt) {
    if (fmt == EmitFormat::json) return detail::dump(to_json(r));
    std::ostringstream out;
    if (fmt == EmitFormat::latex) {
        out << "% lqp report for " << r.algebra << ", grading " << r.grading << ", T = "
            << rat_to_string(r.homogeneous_dim) << "\n";
        if (!r.stratification)
            out << "% grading is not a stratification: \\delta_{\\max} is a Carnot-only "
                   "bound\n";
        for (const auto& row : r.rows) {
            if (row.has_threshold)
                out << "\\ell^{q,p}H^{" << row.degree << "}(G) \\neq 0 \\text{ for } 1/p - "
                       "1/q < "
                    << detail::rat_latex(row.threshold) << " \\quad (\\delta_{\\min} = "
                    << detail::rat_latex(row.delta_min) << ",\\; \\delta_{\\max} = "
                    << detail::rat_latex(row.delta_max) << ")\n";
            else
                out << "% degree " << row.degree << ": mixed weights, threshold omitted "
                       "(\\delta_{\\min} = "
                    << detail::rat_latex(row.delta_min) << ",\\; \\delta_{\\max} = "
                    << detail::rat_latex(row.delta_max) << ")\n";
        }
        return out.str();
    }
    out << "algebra: " << r.algebra << "\n";
    out << "grading: " << r.grading << "\n";
    out << "homogeneous dimension T: " << rat_to_string(r.homogeneous_dim) << "\n";
    std::vector<std::string> ws;
    for (const auto& w : r.covector_weights) ws.push_back(rat_to_string(w));
    out << "covector weights: " << detail::join(ws, " ") << "\n";
    out << "vanishing bound: "
        << (r.stratification ? "stratified (delta_max applies)"
                             : "Carnot-only (grading is not a stratification)")
        << "\n";
    for (const auto& row : r.rows) {
        out << "degree " << row.degree << ": weights " << detail::weight_set_text(row.weights)
            << ", delta_min " << rat_to_string(row.delta_min) << ", delta_max "
            << rat_to_string(row.delta_max);
        if (row.has_threshold)
            out << "; " << kEllUtf8 << "^{q,p}H^" << row.degree << " " << kNeqUtf8
                << " 0 for 1/p " << kMinusUtf8 << " 1/q < " << rat_to_string(row.threshold);
        else
            out << "; mixed weights, threshold omitted";
        out << "\n";
    }
    return out.str();
}

// Catalog/show rendering of an algebra document. The json form is itself a
// valid input file.
inline std::string emit(const AlgebraFile& f, EmitFormat fmt) {
    if (fmt == EmitFormat::json) return detail::dump(algebra_to_json(f));
    std::ostringstream out;
    const auto label = [&](int i) {
        return f.basis.empty() ? "X" + std::to_string(i) : f.basis[static_cast<std::size_t>(i - 1)];
    };
    if (fmt == EmitFormat::latex) {
        out << "% " << f.name << ", dim " << f.dim << "\n";
        for (const auto& b : f.brackets) {
            std::vector<std::pair<Rat, std::string>> parts;
            for (const auto& [k, c] : b.result)
                parts.emplace_back(c, detail::magnitude_prefix(c, true) + "X_{" +
                                          std::to_string(k) + "}");
            out << "[X_{" << b.left << "}, X_{" << b.right << "}] = "
                << detail::join_signed(parts, true) << "\n";
        }
        for (const auto& [name, weights] : f.gradings) {
            std::vector<std::string> ws;
            for (const auto& w : weights) ws.push_back(rat_to_string(w));
            out << "% grading " << name << ": " << detail::join(ws, " ") << "\n";
        }
        return out.str();
    }
    out << "name: " << f.name << "\n";
    out << "dim: " << f.dim << "\n";
    std::vector<std::string> ls;
    for (int i = 1; i <= static_cast<int>(f.dim); ++i) ls.push_back(label(i));
    out << "basis: " << detail::join(ls, " ") << "\n";
    for (const auto& b : f.brackets) {
        std::vector<std::pair<Rat, std::string>> parts;
        for (const auto& [k, c] : b.result)
            parts.emplace_back(c, detail::magnitude_prefix(c, false) + label(k));
        out << "[" << label(b.left) << ", " << label(b.right) << "] = "
            << detail::join_signed(parts, false) << "\n";
    }
    for (const auto& [name, weights] : f.gradings) {
        std::vector<std::string> ws;
        for (const auto& w : weights) ws.push_back(rat_to_string(w));
        out << "grading " << name << ": " << detail::join(ws, " ") << "\n";
    }
    return out.str();
}

} // namespace rumin

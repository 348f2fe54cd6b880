#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rumin/catalog.hpp"
#include "rumin/reports.hpp"

namespace rumin {

namespace detail {

// A positional input names either a readable file or a catalog entry.
// Files win, so a local "n632.json" shadows nothing by accident.
inline CatalogEntry resolve_input(const std::string& spec) {
    if (std::filesystem::exists(spec)) return {parse_algebra_path(spec), {}};
    if (is_catalog_entry(spec)) return catalog_entry(spec);
    throw ParseError(0, "no readable file or catalog entry named \"" + spec + "\"");
}

inline std::vector<Rat> rat_csv(const std::string& csv) {
    std::vector<Rat> out;
    std::istringstream in(csv);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(rat_from_string(part));
    return out;
}

inline RuminComplex make_complex(const CatalogEntry& e, const std::string& gram_csv) {
    LieAlgebra g = to_lie_algebra(e.file);
    InnerProduct g1 = InnerProduct::identity(g.dim());
    if (!gram_csv.empty()) {
        const std::vector<Rat> d = rat_csv(gram_csv);
        if (d.size() != g.dim())
            throw DimensionMismatch("--gram needs one entry per basis vector");
        g1 = InnerProduct::diagonal(d);
    }
    return RuminComplex(g, g1, e.display_bases);
}

inline Grading pick_grading(const AlgebraFile& f, const std::string& name,
                            const std::string& weights_csv) {
    if (!weights_csv.empty()) {
        const std::vector<Rat> w = rat_csv(weights_csv);
        return Grading{"cli", w};
    }
    if (!name.empty()) return grading_of(f, name);
    if (f.gradings.size() == 1) return grading_of(f, f.gradings.begin()->first);
    throw RuminError(f.gradings.empty()
                         ? "the input declares no gradings: pass --weights"
                         : "the input declares several gradings: pick one with --grading");
}

} // namespace detail

// Runs the command-line driver on already-split arguments (no program name).
// Returns 0 on success, 1 when the input is rejected as a nilpotent table or
// an identity check fails, 2 on usage or parse errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rumin complex toolkit for nilpotent Lie groups, in exact arithmetic"};
    app.require_subcommand(1);

    std::string input, format = "text", gram_csv, grading_name, weights_csv, show_name;
    long long degree_opt = -1;
    std::size_t dc_degree = 0;

    const std::string format_help = "output format: text, latex or json";
    const std::string input_help = "input file (json) or catalog entry name";
    const std::string gram_help = "diagonal inner product entries, comma separated";

    CLI::App* validate = app.add_subcommand("validate", "parse a table and check it is nilpotent Lie");
    validate->add_option("input", input, input_help)->required();
    validate->add_option("-f,--format", format, format_help);

    CLI::App* analyze = app.add_subcommand("analyze", "weights, filtration and the retracted form spaces");
    analyze->add_option("input", input, input_help)->required();
    analyze->add_option("-d,--degree", degree_opt, "restrict the listing to one degree");
    analyze->add_option("-f,--format", format, format_help);
    analyze->add_option("--gram", gram_csv, gram_help);

    CLI::App* dc = app.add_subcommand("dc", "the intrinsic differential in one degree");
    dc->add_option("input", input, input_help)->required();
    dc->add_option("-d,--degree", dc_degree, "source degree")->required();
    dc->add_option("-f,--format", format, format_help);
    dc->add_option("--gram", gram_csv, gram_help);

    CLI::App* verify = app.add_subcommand("verify", "run the full operator identity suite");
    verify->add_option("input", input, input_help)->required();
    verify->add_option("-f,--format", format, format_help);
    verify->add_option("--gram", gram_csv, gram_help);

    CLI::App* lqp = app.add_subcommand("lqp", "non-vanishing intervals from a positive grading");
    lqp->add_option("input", input, input_help)->required();
    lqp->add_option("-g,--grading", grading_name, "grading name declared by the input");
    lqp->add_option("--weights", weights_csv, "inline grading weights, comma separated");
    lqp->add_option("-f,--format", format, format_help);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in and user catalog entries");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "list catalog entry names");
    CLI::App* cat_show = catalog->add_subcommand("show", "print one catalog entry");
    cat_show->add_option("name", show_name, "catalog entry name")->required();
    cat_show->add_option("-f,--format", format, format_help);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const EmitFormat fmt = emit_format_from_string(format);

        if (cat_list->parsed()) {
            for (const auto& name : catalog_list()) out << name << "\n";
            return 0;
        }
        if (cat_show->parsed()) {
            out << emit(catalog_entry(show_name).file, fmt);
            return 0;
        }

        const CatalogEntry entry = detail::resolve_input(input);

        if (validate->parsed()) {
            out << emit(validation_report(to_lie_algebra(entry.file)), fmt);
            return 0;
        }
        if (analyze->parsed()) {
            RuminComplex rc = detail::make_complex(entry, gram_csv);
            std::optional<std::size_t> deg;
            if (degree_opt >= 0) deg = static_cast<std::size_t>(degree_opt);
            out << emit(analyze_report(rc, deg), fmt);
            return 0;
        }
        if (dc->parsed()) {
            RuminComplex rc = detail::make_complex(entry, gram_csv);
            out << emit(dc_report(rc, dc_degree), fmt);
            return 0;
        }
        if (verify->parsed()) {
            RuminComplex rc = detail::make_complex(entry, gram_csv);
            const VerifyReport r = verify_report(rc);
            out << emit(r, fmt);
            return r.all_ok ? 0 : 1;
        }
        if (lqp->parsed()) {
            RuminComplex rc = detail::make_complex(entry, gram_csv);
            const Grading gr = detail::pick_grading(entry.file, grading_name, weights_csv);
            out << emit(interval_report(rc, gr), fmt);
            return 0;
        }
    } catch (const JacobiViolation& e) {
        err << "invalid table: " << e.what() << "\n";
        return 1;
    } catch (const NotNilpotent& e) {
        err << "invalid table: " << e.what() << "\n";
        return 1;
    } catch (const RuminError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable: require_subcommand(1) guarantees a branch above
}

} // namespace rumin

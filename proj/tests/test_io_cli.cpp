#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rumin/catalog.hpp"
#include "rumin/cli.hpp"

#include "algebras.hpp"
#include "fixtures.hpp"

using namespace rumin;

namespace {

std::string data_path(const std::string& file) {
    const char* dir = std::getenv("RUMIN_DATA_DIR");
    EXPECT_NE(dir, nullptr) << "RUMIN_DATA_DIR must point at the test data directory";
    return std::string(dir) + "/" + file;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Parse, AcceptsIntegerAndStringRationals) {
    const AlgebraFile f = parse_algebra(R"({
        "name": "t",
        "dim": 3,
        "brackets": [{"left": 1, "right": 2, "result": {"3": "-2/3"}}]
    })");
    EXPECT_EQ(f.dim, 3u);
    ASSERT_EQ(f.brackets.size(), 1u);
    EXPECT_EQ(f.brackets[0].result.at(3), Rat(-2, 3));

    const AlgebraFile i = parse_algebra(
        R"({"name": "t", "dim": 3, "brackets": [{"left": 1, "right": 2, "result": {"3": 2}}]})");
    EXPECT_EQ(i.brackets[0].result.at(3), Rat(2));
}

TEST(Parse, DropsZeroCoefficients) {
    const AlgebraFile f = parse_algebra(R"({
        "name": "t",
        "dim": 3,
        "brackets": [{"left": 1, "right": 2, "result": {"2": "0", "3": "1"}}]
    })");
    ASSERT_EQ(f.brackets.size(), 1u);
    EXPECT_EQ(f.brackets[0].result.size(), 1u);
    EXPECT_TRUE(f.brackets[0].result.contains(3));
}

TEST(Parse, RejectsBadDocuments) {
    EXPECT_THROW(parse_algebra("["), ParseError);
    EXPECT_THROW(parse_algebra("[]"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"dim": 3})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"name": "t", "dim": 0})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"name": "t", "dim": -2})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"name": "t", "dim": 2, "basis": ["a"]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"name": "t", "dim": 2, "gradings": {"w": ["1"]}})"),
                 ParseError);
}

TEST(Parse, MalformedJsonReportsAnOffset) {
    try {
        parse_algebra(R"({"name": "t", "dim": 3, )");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_GT(e.byte_offset, 0u);
    }
}

TEST(Parse, RejectsBadBrackets) {
    const std::string head = R"({"name": "t", "dim": 3, "brackets": [)";
    EXPECT_THROW(parse_algebra(head + R"({"left": 1, "right": 7, "result": {"3": "1"}}]})"),
                 IndexOutOfRange);
    EXPECT_THROW(parse_algebra(head + R"({"left": 1, "right": 2, "result": {"7": "1"}}]})"),
                 IndexOutOfRange);
    EXPECT_THROW(parse_algebra(head + R"({"left": 2, "right": 2, "result": {"3": "1"}}]})"),
                 ParseError);
    EXPECT_THROW(parse_algebra(head + R"({"left": 1, "right": 2, "result": {"3": "1/0"}}]})"),
                 BadRational);
    EXPECT_THROW(parse_algebra(head + R"({"left": 1, "right": 2, "result": {"3": "x"}}]})"),
                 BadRational);
    EXPECT_THROW(
        parse_algebra(head + R"({"left": 1, "right": 2, "result": {"3": "1"}},
                                 {"left": 2, "right": 1, "result": {"3": "2"}}]})"),
        DuplicateBracket);
}

TEST(Parse, JsonEmissionRoundTripsEveryCatalogEntry) {
    for (const auto& name : builtin_names()) {
        const CatalogEntry e = catalog_entry(name);
        EXPECT_EQ(parse_algebra(emit(e.file, EmitFormat::json)), e.file) << name;
    }
}

TEST(Catalog, MatchesTheHandWrittenTables) {
    const std::vector<LieAlgebra> builders = testalg::catalog_algebras();
    ASSERT_EQ(builders.size(), builtin_names().size());
    for (const auto& g : builders) {
        CatalogEntry e = catalog_entry(g.name());
        const LieAlgebra h = to_lie_algebra(e.file);
        EXPECT_EQ(h.name(), g.name());
        EXPECT_EQ(h.dim(), g.dim());
        EXPECT_EQ(h.brackets(), g.brackets());
    }
    EXPECT_EQ(catalog_entry("n42_r2").display_bases, fixtures::n42_r2_display());
    EXPECT_EQ(catalog_entry("n632").display_bases, fixtures::n632_display());
}

TEST(Catalog, UserDirectoryExtendsButNeverShadows) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rumin_cat_test";
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "usertable.json");
        f << R"({"name": "usertable", "dim": 3,
                 "brackets": [{"left": 1, "right": 2, "result": {"3": "1"}}]})";
    }
    {
        // same stem as a builtin entry: the builtin must win
        std::ofstream f(dir / "n632.json");
        f << R"({"name": "impostor", "dim": 2, "brackets": []})";
    }
    ::setenv("RUMIN_CATALOG_DIR", dir.c_str(), 1);
    const std::vector<std::string> names = catalog_list();
    EXPECT_EQ(std::count(names.begin(), names.end(), "usertable"), 1);
    EXPECT_EQ(std::count(names.begin(), names.end(), "n632"), 1);
    EXPECT_TRUE(is_catalog_entry("usertable"));
    EXPECT_EQ(catalog_entry("usertable").file.dim, 3u);
    EXPECT_EQ(catalog_entry("n632").file.name, "n632");
    ::unsetenv("RUMIN_CATALOG_DIR");
    EXPECT_FALSE(is_catalog_entry("usertable"));
    fs::remove_all(dir);
}

TEST(Reports, JsonRoundTripsEveryKind) {
    CatalogEntry e = catalog_entry("n632");
    LieAlgebra g = to_lie_algebra(e.file);
    RuminComplex rc(g, InnerProduct::identity(6), e.display_bases);

    const ValidationReport vr = validation_report(g);
    EXPECT_EQ(validation_from_json(nlohmann::json::parse(emit(vr, EmitFormat::json))), vr);

    const AnalyzeReport ar = analyze_report(rc);
    EXPECT_EQ(analyze_from_json(nlohmann::json::parse(emit(ar, EmitFormat::json))), ar);

    const DcReport dr = dc_report(rc, 1);
    EXPECT_EQ(dc_from_json(nlohmann::json::parse(emit(dr, EmitFormat::json))), dr);

    VerifyReport wr = verify_report(rc);
    EXPECT_EQ(verify_from_json(nlohmann::json::parse(emit(wr, EmitFormat::json))), wr);

    const LqpReport lr = interval_report(rc, grading_of(e.file, "V1"));
    EXPECT_EQ(lqp_from_json(nlohmann::json::parse(emit(lr, EmitFormat::json))), lr);
}

TEST(Reports, DegreeZeroLatexMatchesTheDisplayedFormula) {
    CatalogEntry e = catalog_entry("n42_r2");
    RuminComplex rc(to_lie_algebra(e.file), InnerProduct::identity(6), e.display_bases);
    const std::string s = emit(dc_report(rc, 0), EmitFormat::latex);
    EXPECT_EQ(s,
              "% d_c in degree 0 of n42_r2\n"
              "X_1 f\\,\\theta_1 + X_2 f\\,\\theta_2 + X_5 f\\,\\theta_5 + X_6 f\\,\\theta_6\n");
}

TEST(Reports, TextRenderingUsesProperGlyphs) {
    CatalogEntry e = catalog_entry("n632");
    RuminComplex rc(to_lie_algebra(e.file), InnerProduct::identity(6), e.display_bases);
    const AnalyzeReport ar = analyze_report(rc, 2);
    const std::string s = emit(ar, EmitFormat::text);
    EXPECT_NE(s.find("θ5∧θ6 − θ1∧θ3"), std::string::npos) << s;
}

TEST(Cli, MissingInputFailsWithUsageCode) {
    const CliRun r = cli({"analyze", "missing.json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("missing.json"), std::string::npos);
}

TEST(Cli, BrokenTableFailsValidation) {
    const CliRun r = cli({"verify", data_path("broken_jacobi.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("invalid table"), std::string::npos);

    const CliRun v = cli({"validate", data_path("broken_jacobi.json")});
    EXPECT_EQ(v.code, 1);
}

TEST(Cli, BadIndexFileIsAParseFailure) {
    const CliRun r = cli({"validate", data_path("bad_index.json")});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, VerifyCleanInputSucceeds) {
    const CliRun r = cli({"verify", "n42_r2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all: ok"), std::string::npos);
}

TEST(Cli, FileInputCarriesItsGradings) {
    const CliRun r = cli({"lqp", data_path("n632.json"), "--grading", "V2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1/p − 1/q < 1/10"), std::string::npos);

    // two declared gradings and no choice made
    const CliRun a = cli({"lqp", data_path("n632.json")});
    EXPECT_EQ(a.code, 2);
    EXPECT_NE(a.err.find("--grading"), std::string::npos);

    // a single declared grading is picked up automatically
    const CliRun b = cli({"lqp", "abelian4"});
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("1/p − 1/q < 1/4"), std::string::npos);

    const CliRun w = cli({"lqp", "heisenberg3", "--weights", "1,1,2"});
    EXPECT_EQ(w.code, 0);
    EXPECT_NE(w.out.find("1/p − 1/q < 1/2"), std::string::npos);
}

TEST(Cli, OptionValidation) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
    EXPECT_EQ(cli({"dc", "n42_r2"}).code, 2);              // --degree is required
    EXPECT_EQ(cli({"dc", "n42_r2", "-d", "9"}).code, 2);   // out of range
    EXPECT_EQ(cli({"verify", "n42_r2", "-f", "rtf"}).code, 2);
    EXPECT_EQ(cli({"verify", "n42_r2", "--gram", "1,2"}).code, 2);
    EXPECT_EQ(cli({"verify", "n42_r2", "--gram", "1,2,0x,4,5,6"}).code, 2);
    EXPECT_EQ(cli({"catalog", "show", "nosuch"}).code, 2);
}

TEST(Cli, GramChangesTheOperatorsNotTheChecks) {
    const CliRun r = cli({"verify", "heisenberg5", "--gram", "1,2,3,4,5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all: ok"), std::string::npos);
}

TEST(Cli, CatalogRoundTrip) {
    const CliRun names = cli({"catalog", "list"});
    EXPECT_EQ(names.code, 0);
    EXPECT_NE(names.out.find("n632\n"), std::string::npos);

    const CliRun shown = cli({"catalog", "show", "filiform6_2", "--format", "json"});
    EXPECT_EQ(shown.code, 0);
    EXPECT_EQ(parse_algebra(shown.out), catalog_entry("filiform6_2").file);
}

TEST(Cli, OutputIsByteDeterministic) {
    const std::vector<std::vector<std::string>> cmds = {
        {"analyze", "n632", "--format", "json"},
        {"dc", "filiform6_2", "-d", "2", "--format", "latex"},
        {"lqp", "n632", "--grading", "V1"},
    };
    for (const auto& c : cmds) {
        const CliRun a = cli(c);
        const CliRun b = cli(c);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
}

#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "rumin/algebra_file.hpp"
#include "rumin/render.hpp"

namespace rumin {

using DisplayBases = std::map<std::size_t, std::vector<std::vector<FormTerm>>>;

// A shipped algebra: its structure constants, named gradings, and (for the
// two six-dimensional benchmark entries) the display bases of the
// intrinsic form spaces, so reports show the elements in their familiar
// shape instead of reduced row echelon vectors.
struct CatalogEntry {
    AlgebraFile file;
    DisplayBases display_bases;
};

namespace detail {

inline std::vector<FormTerm> cmono(MultiIndex idx) { return {{Rat(1), std::move(idx)}}; }

inline AlgebraFile abelian_file(std::size_t n) {
    AlgebraFile f;
    f.name = "abelian" + std::to_string(n);
    f.dim = n;
    f.gradings["std"] = std::vector<Rat>(n, Rat(1));
    return f;
}

inline AlgebraFile heisenberg_file(std::size_t dim) {
    AlgebraFile f;
    f.name = "heisenberg" + std::to_string(dim);
    f.dim = dim;
    const int last = static_cast<int>(dim);
    for (int i = 1; i + 1 < last; i += 2) f.brackets.push_back({i, i + 1, {{last, Rat(1)}}});
    std::vector<Rat> w(dim, Rat(1));
    w.back() = 2;
    f.gradings["std"] = std::move(w);
    return f;
}

inline AlgebraFile n42_r2_file() {
    AlgebraFile f;
    f.name = "n42_r2";
    f.dim = 6;
    f.brackets = {{1, 2, {{3, Rat(1)}}}, {1, 3, {{4, Rat(1)}}}};
    f.gradings["strat"] = {1, 1, 2, 3, 1, 1};
    return f;
}

inline AlgebraFile n632_file() {
    AlgebraFile f;
    f.name = "n632";
    f.dim = 6;
    f.brackets = {{1, 2, {{3, Rat(1)}}}, {1, 3, {{4, Rat(1)}}}, {5, 6, {{4, Rat(1)}}}};
    f.gradings["V1"] = {1, 2, 3, 4, 2, 2};
    f.gradings["V2"] = {1, 1, 2, 3, 1, 2};
    return f;
}

inline AlgebraFile filiform6_2_file() {
    AlgebraFile f;
    f.name = "filiform6_2";
    f.dim = 6;
    f.brackets = {{1, 2, {{3, Rat(1)}}},
                  {1, 3, {{4, Rat(1)}}},
                  {1, 4, {{5, Rat(1)}}},
                  {2, 5, {{6, Rat(1)}}},
                  {3, 4, {{6, Rat(-1)}}}};
    f.gradings["strat"] = {1, 1, 2, 3, 4, 5};
    return f;
}

inline DisplayBases n42_r2_bases() {
    DisplayBases b;
    b[1] = {cmono({1}), cmono({2}), cmono({5}), cmono({6})};
    b[2] = {cmono({1, 5}), cmono({1, 6}), cmono({2, 5}), cmono({2, 6}),
            cmono({5, 6}), cmono({2, 3}), cmono({1, 4})};
    b[3] = {cmono({1, 3, 4}), cmono({1, 4, 5}), cmono({1, 4, 6}), cmono({1, 5, 6}),
            cmono({2, 3, 4}), cmono({2, 3, 5}), cmono({2, 3, 6}), cmono({2, 5, 6})};
    b[4] = {cmono({1, 2, 3, 4}), cmono({1, 3, 4, 5}), cmono({1, 3, 4, 6}),
            cmono({1, 4, 5, 6}), cmono({2, 3, 4, 5}), cmono({2, 3, 4, 6}),
            cmono({2, 3, 5, 6})};
    b[5] = {cmono({1, 2, 3, 4, 5}), cmono({1, 2, 3, 4, 6}), cmono({1, 3, 4, 5, 6}),
            cmono({2, 3, 4, 5, 6})};
    return b;
}

inline DisplayBases n632_bases() {
    DisplayBases b;
    b[1] = {cmono({1}), cmono({2}), cmono({5}), cmono({6})};
    b[2] = {{{Rat(1), {5, 6}}, {Rat(-1), {1, 3}}},
            cmono({1, 5}), cmono({1, 6}), cmono({2, 3}), cmono({2, 5}), cmono({2, 6})};
    b[3] = {{{Rat(1), {1, 2, 3}}, {Rat(1), {2, 5, 6}}},
            cmono({1, 4, 5}), cmono({1, 4, 6}), cmono({2, 3, 5}), cmono({2, 3, 6}),
            {{Rat(1), {1, 3, 4}}, {Rat(-1), {4, 5, 6}}}};
    b[4] = {{{Rat(1), {1, 2, 3, 4}}, {Rat(1), {2, 4, 5, 6}}},
            cmono({1, 3, 4, 5}), cmono({1, 3, 4, 6}), cmono({1, 4, 5, 6}),
            cmono({2, 3, 4, 5}), cmono({2, 3, 4, 6})};
    b[5] = {cmono({1, 2, 3, 4, 5}), cmono({1, 2, 3, 4, 6}), cmono({1, 3, 4, 5, 6}),
            cmono({2, 3, 4, 5, 6})};
    return b;
}

inline bool builtin_entry(const std::string& name, CatalogEntry& out) {
    for (std::size_t n = 1; n <= 7; ++n)
        if (name == "abelian" + std::to_string(n)) {
            out = {abelian_file(n), {}};
            return true;
        }
    for (std::size_t d : {3, 5, 7})
        if (name == "heisenberg" + std::to_string(d)) {
            out = {heisenberg_file(d), {}};
            return true;
        }
    if (name == "n42_r2") {
        out = {n42_r2_file(), n42_r2_bases()};
        return true;
    }
    if (name == "n632") {
        out = {n632_file(), n632_bases()};
        return true;
    }
    if (name == "filiform6_2") {
        out = {filiform6_2_file(), {}};
        return true;
    }
    return false;
}

inline std::vector<std::string> user_catalog_names() {
    std::vector<std::string> names;
    const char* dir = std::getenv("RUMIN_CATALOG_DIR");
    if (!dir) return names;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(dir, ec)) {
        if (!e.is_regular_file()) continue;
        if (e.path().extension() != ".json") continue;
        names.push_back(e.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace detail

inline std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (std::size_t n = 1; n <= 7; ++n) names.push_back("abelian" + std::to_string(n));
    names.insert(names.end(),
                 {"heisenberg3", "heisenberg5", "heisenberg7", "n42_r2", "n632",
                  "filiform6_2"});
    return names;
}

// Builtin names first, then user entries from RUMIN_CATALOG_DIR (*.json,
// named by file stem); a user file never shadows a builtin name.
inline std::vector<std::string> catalog_list() {
    std::vector<std::string> names = builtin_names();
    for (const auto& u : detail::user_catalog_names())
        if (std::find(names.begin(), names.end(), u) == names.end()) names.push_back(u);
    return names;
}

inline bool is_catalog_entry(const std::string& name) {
    CatalogEntry tmp;
    if (detail::builtin_entry(name, tmp)) return true;
    const auto user = detail::user_catalog_names();
    return std::find(user.begin(), user.end(), name) != user.end();
}

inline CatalogEntry catalog_entry(const std::string& name) {
    CatalogEntry out;
    if (detail::builtin_entry(name, out)) return out;
    const char* dir = std::getenv("RUMIN_CATALOG_DIR");
    if (dir) {
        const std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
        std::error_code ec;
        if (std::filesystem::is_regular_file(p, ec)) return {parse_algebra_path(p.string()), {}};
    }
    throw RuminError("no catalog entry named \"" + name + "\"");
}

} // namespace rumin

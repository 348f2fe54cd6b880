#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rumin/errors.hpp"
#include "rumin/lie_algebra.hpp"
#include "rumin/rational.hpp"

namespace rumin {

struct BracketEntry {
    int left = 0;
    int right = 0;
    std::map<int, Rat> result;

    bool operator==(const BracketEntry&) const = default;
};

// Parsed algebra document: structure constants plus optional basis labels
// and named positive gradings. Unlisted brackets are zero.
struct AlgebraFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<BracketEntry> brackets;
    std::map<std::string, std::vector<Rat>> gradings;

    bool operator==(const AlgebraFile&) const = default;
};

namespace detail {

inline Rat rat_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw BadRational("bad rational " + v.dump() + ": expected an integer or \"p/q\" string");
}

inline int index_from_json(const nlohmann::json& v, std::size_t dim, const std::string& where) {
    if (!v.is_number_integer())
        throw ParseError(0, where + " must be an integer index, got " + v.dump());
    const long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw IndexOutOfRange(where + " index " + std::to_string(i) + " outside 1.." +
                              std::to_string(dim));
    return static_cast<int>(i);
}

// Result keys arrive as object keys, i.e. strings of digits.
inline int index_from_key(const std::string& key, std::size_t dim) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(0, "result key \"" + key + "\" is not an index");
    const long long i = std::stoll(key);
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw IndexOutOfRange("result index " + key + " outside 1.." + std::to_string(dim));
    return static_cast<int>(i);
}

} // namespace detail

inline AlgebraFile parse_algebra(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, e.what());
    }
    if (!j.is_object()) throw ParseError(0, "top level must be an object");

    AlgebraFile f;
    if (!j.contains("name") || !j["name"].is_string())
        throw ParseError(0, "missing string field \"name\"");
    f.name = j["name"].get<std::string>();
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError(0, "\"dim\" must be a positive integer");
    f.dim = j["dim"].get<std::size_t>();

    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != f.dim)
            throw ParseError(0, "\"basis\" must list exactly dim labels");
        for (const auto& l : j["basis"]) {
            if (!l.is_string()) throw ParseError(0, "basis labels must be strings");
            f.basis.push_back(l.get<std::string>());
        }
    }

    std::set<std::pair<int, int>> seen;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw ParseError(0, "\"brackets\" must be an array");
        for (const auto& b : j["brackets"]) {
            if (!b.is_object() || !b.contains("left") || !b.contains("right") ||
                !b.contains("result") || !b["result"].is_object())
                throw ParseError(0, "each bracket needs left, right and a result object");
            BracketEntry e;
            e.left = detail::index_from_json(b["left"], f.dim, "bracket left");
            e.right = detail::index_from_json(b["right"], f.dim, "bracket right");
            for (const auto& [key, val] : b["result"].items()) {
                (void)val;
                detail::index_from_key(key, f.dim);
            }
            if (e.left == e.right)
                throw ParseError(0, "bracket of generator " + std::to_string(e.left) +
                                        " with itself");
            const auto pair = std::minmax(e.left, e.right);
            if (!seen.insert({pair.first, pair.second}).second)
                throw DuplicateBracket("bracket (" + std::to_string(e.left) + "," +
                                       std::to_string(e.right) + ") listed twice");
            for (const auto& [key, val] : b["result"].items()) {
                const Rat c = detail::rat_from_json(val);
                if (c != 0) e.result[detail::index_from_key(key, f.dim)] = c;
            }
            f.brackets.push_back(std::move(e));
        }
    }

    if (j.contains("gradings")) {
        if (!j["gradings"].is_object()) throw ParseError(0, "\"gradings\" must be an object");
        for (const auto& [gname, weights] : j["gradings"].items()) {
            if (!weights.is_array() || weights.size() != f.dim)
                throw ParseError(0, "grading \"" + gname + "\" must list exactly dim weights");
            std::vector<Rat> w;
            for (const auto& v : weights) w.push_back(detail::rat_from_json(v));
            f.gradings[gname] = std::move(w);
        }
    }
    return f;
}

inline AlgebraFile parse_algebra_path(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

inline LieAlgebra to_lie_algebra(const AlgebraFile& f) {
    LieAlgebra g(f.name, f.dim);
    if (!f.basis.empty()) g.set_labels(f.basis);
    for (const auto& b : f.brackets) g.set_bracket(b.left, b.right, b.result);
    return g;
}

inline Grading grading_of(const AlgebraFile& f, const std::string& name) {
    const auto it = f.gradings.find(name);
    if (it == f.gradings.end())
        throw RuminError("no grading named \"" + name + "\" in " + f.name);
    return Grading{name, it->second};
}

inline nlohmann::ordered_json algebra_to_json(const AlgebraFile& f) {
    nlohmann::ordered_json j;
    j["name"] = f.name;
    j["dim"] = f.dim;
    if (!f.basis.empty()) j["basis"] = f.basis;
    j["brackets"] = nlohmann::ordered_json::array();
    for (const auto& b : f.brackets) {
        nlohmann::ordered_json e;
        e["left"] = b.left;
        e["right"] = b.right;
        e["result"] = nlohmann::ordered_json::object();
        for (const auto& [k, c] : b.result) e["result"][std::to_string(k)] = rat_to_string(c);
        j["brackets"].push_back(std::move(e));
    }
    if (!f.gradings.empty()) {
        j["gradings"] = nlohmann::ordered_json::object();
        for (const auto& [name, weights] : f.gradings) {
            nlohmann::ordered_json w = nlohmann::ordered_json::array();
            for (const auto& v : weights) w.push_back(rat_to_string(v));
            j["gradings"][name] = std::move(w);
        }
    }
    return j;
}

} // namespace rumin

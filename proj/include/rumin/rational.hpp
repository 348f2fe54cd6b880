#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "rumin/errors.hpp"

namespace rumin {

// All scalar arithmetic is exact. cpp_rational keeps values in lowest terms
// with a positive denominator, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Strict format: -?digits(/digits)?  with a nonzero denominator.
// Anything else (whitespace, '+', empty fields, "1/0") is rejected.
inline Rat rat_from_string(const std::string& s) {
    const auto bad = [&](const std::string& why) -> BadRational {
        return BadRational("bad rational \"" + s + "\": " + why);
    };
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == num_begin) throw bad("missing numerator digits");
    Int num(s.substr(num_begin, pos - num_begin));
    Int den = 1;
    if (pos < s.size()) {
        if (s[pos] != '/') throw bad("unexpected character");
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == den_begin || pos != s.size()) throw bad("malformed denominator");
        den = Int(s.substr(den_begin, pos - den_begin));
        if (den == 0) throw bad("zero denominator");
    }
    if (neg) num = -num;
    return Rat(num, den);
}

} // namespace rumin

#pragma once

// Hand-checked expected values for the two six-dimensional benchmark
// algebras: the display bases of the intrinsic form spaces and the full
// coefficient operators of the low-degree intrinsic differentials. These
// duplicate what the shipped catalog provides on purpose; the tests compare
// the two sources against each other and against the computed complexes.

#include <map>
#include <tuple>
#include <vector>

#include "rumin/op_algebra.hpp"
#include "rumin/render.hpp"

namespace fixtures {

using rumin::FormTerm;
using rumin::OpPoly;
using rumin::Rat;

using DisplayBases = std::map<std::size_t, std::vector<std::vector<FormTerm>>>;

// (row, column, operator) triples of one differential in display bases;
// operators are written exactly as displayed, not normal-ordered.
struct DcFixture {
    std::size_t degree;
    std::vector<std::tuple<std::size_t, std::size_t, OpPoly>> entries;
};

inline OpPoly W(rumin::OpWord w, const Rat& c = Rat(1)) {
    return OpPoly::word(std::move(w), c);
}

inline std::vector<FormTerm> mono(rumin::MultiIndex idx) {
    return {{Rat(1), std::move(idx)}};
}

// N_{4,2} x R^2: intrinsic forms are spanned by monomials in every degree.
inline DisplayBases n42_r2_display() {
    DisplayBases b;
    b[1] = {mono({1}), mono({2}), mono({5}), mono({6})};
    b[2] = {mono({1, 5}), mono({1, 6}), mono({2, 5}), mono({2, 6}),
            mono({5, 6}), mono({2, 3}), mono({1, 4})};
    b[3] = {mono({1, 3, 4}), mono({1, 4, 5}), mono({1, 4, 6}), mono({1, 5, 6}),
            mono({2, 3, 4}), mono({2, 3, 5}), mono({2, 3, 6}), mono({2, 5, 6})};
    b[4] = {mono({1, 2, 3, 4}), mono({1, 3, 4, 5}), mono({1, 3, 4, 6}), mono({1, 4, 5, 6}),
            mono({2, 3, 4, 5}), mono({2, 3, 4, 6}), mono({2, 3, 5, 6})};
    b[5] = {mono({1, 2, 3, 4, 5}), mono({1, 2, 3, 4, 6}), mono({1, 3, 4, 5, 6}),
            mono({2, 3, 4, 5, 6})};
    return b;
}

// Degree 0: d_c f = X1 f theta1 + X2 f theta2 + X5 f theta5 + X6 f theta6,
// identical for both benchmark algebras in their degree-1 display bases.
inline DcFixture benchmark_dc0() {
    return {0, {{0, 0, W({1})}, {1, 0, W({2})}, {2, 0, W({5})}, {3, 0, W({6})}}};
}

// Degree 1 of N_{4,2} x R^2; columns f1..f4 follow the degree-1 display
// basis (theta1, theta2, theta5, theta6), rows the degree-2 one.
inline DcFixture n42_r2_dc1() {
    DcFixture fx{1, {}};
    auto put = [&](std::size_t r, std::size_t c, OpPoly p) {
        fx.entries.emplace_back(r, c, std::move(p));
    };
    put(0, 2, W({1}));                                // theta15 <- f3
    put(0, 0, W({5}, Rat(-1)));
    put(1, 3, W({1}));                                // theta16
    put(1, 0, W({6}, Rat(-1)));
    put(2, 2, W({2}));                                // theta25
    put(2, 1, W({5}, Rat(-1)));
    put(3, 3, W({2}));                                // theta26
    put(3, 1, W({6}, Rat(-1)));
    put(4, 3, W({5}));                                // theta56
    put(4, 2, W({6}, Rat(-1)));
    put(5, 1, W({2, 1}) + W({3}, Rat(-1)));           // theta23
    put(5, 0, W({2, 2}, Rat(-1)));
    put(6, 1, W({1, 1, 1}));                          // theta14
    put(6, 0, W({1, 1, 2}, Rat(-1)) + W({1, 3}, Rat(-1)) + W({4}, Rat(-1)));
    return fx;
}

// Degree 2 of N_{4,2} x R^2; columns g1..g7 follow the degree-2 display
// basis, rows the degree-3 one.
inline DcFixture n42_r2_dc2() {
    DcFixture fx{2, {}};
    auto put = [&](std::size_t r, std::size_t c, OpPoly p) {
        fx.entries.emplace_back(r, c, std::move(p));
    };
    // theta134: X1^3 g6 - X1X2 g7 - X3 g7
    put(0, 5, W({1, 1, 1}));
    put(0, 6, W({1, 2}, Rat(-1)) + W({3}, Rat(-1)));
    // theta145: X5 g7 + X1^3 g3 - X1^2X2 g1 - X1X3 g1 - X4 g1
    put(1, 6, W({5}));
    put(1, 2, W({1, 1, 1}));
    put(1, 0, W({1, 1, 2}, Rat(-1)) + W({1, 3}, Rat(-1)) + W({4}, Rat(-1)));
    // theta146
    put(2, 6, W({6}));
    put(2, 3, W({1, 1, 1}));
    put(2, 1, W({1, 1, 2}, Rat(-1)) + W({1, 3}, Rat(-1)) + W({4}, Rat(-1)));
    // theta156: X6 g1 - X5 g2 + X1 g5
    put(3, 0, W({6}));
    put(3, 1, W({5}, Rat(-1)));
    put(3, 4, W({1}));
    // theta234: X4 g6 + X2X1X1 g6 - X2X2 g7 - X3X1 g6
    put(4, 5, W({4}) + W({2, 1, 1}) + W({3, 1}, Rat(-1)));
    put(4, 6, W({2, 2}, Rat(-1)));
    // theta235: X5 g6 + X2X1 g3 - X2X2 g1 - X3 g3
    put(5, 5, W({5}));
    put(5, 2, W({2, 1}) + W({3}, Rat(-1)));
    put(5, 0, W({2, 2}, Rat(-1)));
    // theta236
    put(6, 5, W({6}));
    put(6, 3, W({2, 1}) + W({3}, Rat(-1)));
    put(6, 1, W({2, 2}, Rat(-1)));
    // theta256: X6 g3 - X5 g4 + X2 g5
    put(7, 2, W({6}));
    put(7, 3, W({5}, Rat(-1)));
    put(7, 4, W({2}));
    return fx;
}

// N_{6,3,2}: the first degree-2 and two degree-3/4 elements mix monomials.
inline DisplayBases n632_display() {
    DisplayBases b;
    b[1] = {mono({1}), mono({2}), mono({5}), mono({6})};
    b[2] = {{{Rat(1), {5, 6}}, {Rat(-1), {1, 3}}},
            mono({1, 5}), mono({1, 6}), mono({2, 3}), mono({2, 5}), mono({2, 6})};
    b[3] = {{{Rat(1), {1, 2, 3}}, {Rat(1), {2, 5, 6}}},
            mono({1, 4, 5}), mono({1, 4, 6}), mono({2, 3, 5}), mono({2, 3, 6}),
            {{Rat(1), {1, 3, 4}}, {Rat(-1), {4, 5, 6}}}};
    b[4] = {{{Rat(1), {1, 2, 3, 4}}, {Rat(1), {2, 4, 5, 6}}},
            mono({1, 3, 4, 5}), mono({1, 3, 4, 6}), mono({1, 4, 5, 6}),
            mono({2, 3, 4, 5}), mono({2, 3, 4, 6})};
    b[5] = {mono({1, 2, 3, 4, 5}), mono({1, 2, 3, 4, 6}), mono({1, 3, 4, 5, 6}),
            mono({2, 3, 4, 5, 6})};
    return b;
}

// Degree 1 of N_{6,3,2}; row 0 is the mixed element theta56 - theta13.
inline DcFixture n632_dc1() {
    DcFixture fx{1, {}};
    auto put = [&](std::size_t r, std::size_t c, OpPoly p) {
        fx.entries.emplace_back(r, c, std::move(p));
    };
    put(0, 3, W({5}, Rat(1, 2)));
    put(0, 2, W({6}, Rat(-1, 2)));
    put(0, 1, W({1, 1}, Rat(-1, 2)));
    put(0, 0, W({1, 2}, Rat(1, 2)) + W({3}, Rat(1, 2)));
    put(1, 2, W({1}));
    put(1, 0, W({5}, Rat(-1)));
    put(2, 3, W({1}));
    put(2, 0, W({6}, Rat(-1)));
    put(3, 1, W({2, 1}) + W({3}, Rat(-1)));
    put(3, 0, W({2, 2}, Rat(-1)));
    put(4, 2, W({2}));
    put(4, 1, W({5}, Rat(-1)));
    put(5, 3, W({2}));
    put(5, 1, W({6}, Rat(-1)));
    return fx;
}

} // namespace fixtures

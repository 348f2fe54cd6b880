#include <gtest/gtest.h>

#include "rumin/catalog.hpp"
#include "rumin/lqp.hpp"

#include "algebras.hpp"
#include "fixtures.hpp"

using namespace rumin;

namespace {

LqpReport catalog_lqp(const std::string& name, const std::string& grading) {
    const CatalogEntry e = catalog_entry(name);
    LieAlgebra g = to_lie_algebra(e.file);
    RuminComplex rc(g, InnerProduct::identity(g.dim()), e.display_bases);
    return interval_report(rc, grading_of(e.file, grading));
}

void expect_row(const LqpRow& row, std::size_t degree, std::set<Rat> weights, Rat dmin,
                Rat dmax, bool threshold, Rat value = 0) {
    EXPECT_EQ(row.degree, degree);
    EXPECT_EQ(row.weights, weights);
    EXPECT_EQ(row.delta_min, dmin);
    EXPECT_EQ(row.delta_max, dmax);
    EXPECT_EQ(row.has_threshold, threshold);
    if (threshold) {
        EXPECT_TRUE(row.homogeneous);
        EXPECT_EQ(row.threshold, value);
    }
}

} // namespace

TEST(Lqp, SixDimThreeStepGradingV1) {
    const LqpReport r = catalog_lqp("n632", "V1");
    EXPECT_EQ(r.homogeneous_dim, Rat(14));
    EXPECT_FALSE(r.stratification);
    EXPECT_EQ(r.covector_weights, (std::vector<Rat>{1, 2, 3, 4, 2, 2}));
    ASSERT_EQ(r.rows.size(), 6u);
    const Rat t(1, 14);
    expect_row(r.rows[0], 1, {1, 2}, 1, 2, true, t);
    expect_row(r.rows[1], 2, {3, 4, 5}, 1, 4, true, t);
    expect_row(r.rows[2], 3, {6, 7, 8}, 1, 5, true, t);
    expect_row(r.rows[3], 4, {9, 10, 11}, 1, 5, true, t);
    expect_row(r.rows[4], 5, {12, 13}, 1, 4, true, t);
    expect_row(r.rows[5], 6, {14}, 1, 2, true, t);
}

TEST(Lqp, SixDimThreeStepGradingV2) {
    const LqpReport r = catalog_lqp("n632", "V2");
    EXPECT_EQ(r.homogeneous_dim, Rat(10));
    EXPECT_FALSE(r.stratification);
    ASSERT_EQ(r.rows.size(), 6u);
    const Rat t(1, 10);
    expect_row(r.rows[0], 1, {1, 2}, 1, 2, true, t);
    // zero gap: the non-vanishing interval for p > q only
    expect_row(r.rows[1], 2, {2, 3}, 0, 2, true, 0);
    expect_row(r.rows[2], 3, {4, 5, 6}, 1, 4, true, t);
    expect_row(r.rows[3], 4, {7, 8}, 1, 4, true, t);
    expect_row(r.rows[4], 5, {8, 9}, 0, 2, true, 0);
    expect_row(r.rows[5], 6, {10}, 1, 2, true, t);
}

TEST(Lqp, AbelianAllDegreesShareTheShift) {
    const LqpReport r = catalog_lqp("abelian4", "std");
    EXPECT_EQ(r.homogeneous_dim, Rat(4));
    EXPECT_TRUE(r.stratification);
    ASSERT_EQ(r.rows.size(), 4u);
    for (std::size_t k = 1; k <= 4; ++k)
        expect_row(r.rows[k - 1], k, {Rat(k)}, 1, 1, true, Rat(1, 4));
}

TEST(Lqp, HeisenbergMiddleDegreeGapIsTwo) {
    LieAlgebra g = testalg::heisenberg(3);
    RuminComplex rc(g);
    const LqpReport r = interval_report(rc, Grading{"std", {1, 1, 2}});
    EXPECT_EQ(r.homogeneous_dim, Rat(4));
    EXPECT_TRUE(r.stratification);
    ASSERT_EQ(r.rows.size(), 3u);
    expect_row(r.rows[0], 1, {1}, 1, 1, true, Rat(1, 4));
    expect_row(r.rows[1], 2, {3}, 2, 2, true, Rat(1, 2));
    expect_row(r.rows[2], 3, {4}, 1, 1, true, Rat(1, 4));
}

TEST(Lqp, MixedWeightRowsCarryNoThreshold) {
    LieAlgebra g = testalg::abelian(2);
    // both degree-1 elements mix the weight-1 and weight-2 covectors
    const fixtures::DisplayBases disp = {
        {1, {{{Rat(1), {1}}, {Rat(1), {2}}}, {{Rat(1), {1}}, {Rat(-1), {2}}}}}};
    RuminComplex rc(g, InnerProduct::identity(2), disp);
    const LqpReport r = interval_report(rc, Grading{"w", {1, 2}});
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0].weights, (std::set<Rat>{1, 2}));
    EXPECT_FALSE(r.rows[0].homogeneous);
    EXPECT_FALSE(r.rows[0].has_threshold);
    EXPECT_EQ(r.rows[0].delta_min, Rat(1));
    EXPECT_EQ(r.rows[0].delta_max, Rat(2));
    // the top form is pure, but its predecessor was not
    EXPECT_TRUE(r.rows[1].homogeneous);
    EXPECT_FALSE(r.rows[1].has_threshold);
    EXPECT_EQ(r.rows[1].delta_min, Rat(1));
    EXPECT_EQ(r.rows[1].delta_max, Rat(2));
}

TEST(Lqp, IntervalsDoNotDependOnTheChosenBasis) {
    // canonical echelon bases against the hand-picked display bases
    const CatalogEntry e = catalog_entry("n632");
    LieAlgebra g = to_lie_algebra(e.file);
    RuminComplex canonical(g);
    RuminComplex displayed(g, InnerProduct::identity(6), e.display_bases);
    const Grading gr = grading_of(e.file, "V1");
    const LqpReport a = interval_report(canonical, gr);
    const LqpReport b = interval_report(displayed, gr);
    EXPECT_EQ(a, b);
}

TEST(Lqp, ReexpressedFramesAreRejected) {
    // brackets force a frame switch, so input-coordinate weights are ambiguous
    LieAlgebra h("h3user", 3);
    h.set_bracket(1, 3, {{1, Rat(-1)}, {2, Rat(1)}});
    h.set_bracket(2, 3, {{1, Rat(-1)}, {2, Rat(1)}});
    RuminComplex rc(h);
    ASSERT_TRUE(rc.adapted());
    EXPECT_THROW(interval_report(rc, Grading{"w", {1, 1, 2}}), RuminError);
}

TEST(Lqp, InvalidGradingsPropagate) {
    LieAlgebra g = testalg::heisenberg(3);
    RuminComplex rc(g);
    EXPECT_THROW(interval_report(rc, Grading{"flat", {1, 1, 1}}), GradingViolation);
    EXPECT_THROW(interval_report(rc, Grading{"short", {1, 1}}), DimensionMismatch);
    EXPECT_THROW(interval_report(rc, Grading{"nonpos", {1, 1, 0}}), RuminError);
}

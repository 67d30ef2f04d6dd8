#include "ganz/probe.hpp"

#include <gtest/gtest.h>

#include "ganz/parse.hpp"

namespace ganz {
namespace {

SetDescription interval() {
    return SetDescription(1, {parse_ratfunc("x1", 1).num(), parse_ratfunc("1 - x1", 1).num()});
}
SetDescription halfline() { return SetDescription(1, {parse_ratfunc("x1", 1).num()}); }

TEST(SampleSet, GridFiltersBySign) {
    SampleResult r = sample_set(interval(), SampleStrategy::grid(rat(1, 4), Rat(2)));
    std::vector<Point> expect = {Point({KElem(rat(1, 4))}), Point({KElem(rat(1, 2))}),
                                 Point({KElem(rat(3, 4))})};
    EXPECT_EQ(r.points, expect);
    EXPECT_FALSE(r.nonemptiness_unknown);
}

TEST(SampleSet, EmptySetFlagsNonemptinessUnknown) {
    SetDescription empty(1, {parse_ratfunc("-1 - x1^2", 1).num()});
    SampleResult r = sample_set(empty, SampleStrategy::grid(rat(1, 2), Rat(3), {1, 2}));
    EXPECT_TRUE(r.points.empty());
    EXPECT_TRUE(r.nonemptiness_unknown);
}

TEST(SampleSet, EpsOrdersJoinTheCoordinatePool) {
    SampleResult r = sample_set(halfline(), SampleStrategy::grid(Rat(1), Rat(1), {1}));
    Point eps_point({KElem::eps()});
    bool found = false;
    for (const auto& b : r.points)
        if (b == eps_point) found = true;
    EXPECT_TRUE(found);
}

TEST(SampleSet, ValuationConditionsAreExact) {
    // g = 1/x1 demands val(x1) <= 0: infinitesimal coordinates are excluded
    SetDescription s(1, {parse_ratfunc("x1", 1).num()}, {parse_ratfunc("1/x1", 1)});
    SampleResult r = sample_set(s, SampleStrategy::grid(Rat(1), Rat(1), {1}));
    for (const auto& b : r.points) {
        KElem g = eval(parse_ratfunc("1/x1", 1), b);
        EXPECT_TRUE(g.val().inf || g.val().v >= 0);
    }
    Point eps_point({KElem::eps()});
    for (const auto& b : r.points) EXPECT_FALSE(b == eps_point);
}

TEST(IntegralityProbe, ReciprocalRefutedAtAnInfinitesimal) {
    ProbeReport rep = integrality_probe(parse_ratfunc("1/x1", 1), halfline(),
                                        SampleStrategy::grid(Rat(1), Rat(1), {1}));
    ASSERT_TRUE(rep.violation);
    EXPECT_EQ(rep.witness, Point({KElem::eps()}));
    EXPECT_EQ(rep.val, KVal(-1));
}

TEST(IntegralityProbe, BoundedAwayFromThePoleSurvives) {
    ProbeReport rep = integrality_probe(parse_ratfunc("1/(1 + x1)", 1), halfline(),
                                        SampleStrategy::pseudorandom(77, 400, {1, 2, -1}));
    EXPECT_FALSE(rep.violation);
    EXPECT_GT(rep.tested, 0);
}

TEST(IntegralityProbe, ConeGeneratorInstance) {
    ProbeReport rep = integrality_probe(parse_ratfunc("1/(1 + x1*(1 - x1))", 1), interval(),
                                        SampleStrategy::pseudorandom(78, 400, {1, 2}));
    EXPECT_FALSE(rep.violation);
    EXPECT_GT(rep.tested, 0);
}

TEST(IntegralityProbe, UndefinedPointsAreSkippedAndCounted) {
    // h undefined exactly at x1 = 1, which the grid hits
    ProbeReport rep = integrality_probe(parse_ratfunc("1/(1 - x1)", 1),
                                        SetDescription(1, {}), SampleStrategy::grid(Rat(1), Rat(1)));
    EXPECT_EQ(rep.skipped_undefined, 1);

    // 0/0 counts as undefined too
    ProbeReport rep2 = integrality_probe(parse_ratfunc("x1/x1", 1), SetDescription(1, {}),
                                         SampleStrategy::grid(Rat(1), Rat(1)));
    EXPECT_EQ(rep2.skipped_undefined, 1);
    EXPECT_FALSE(rep2.violation);
}

TEST(BoundednessProbe, Examples) {
    // h = x1 with bound 1 on {x1 > 0}: the coordinate 1/eps breaks the ball
    ProbeReport rep = boundedness_probe(parse_ratfunc("x1", 1), KElem(1), halfline(),
                                        SampleStrategy::grid(Rat(1), Rat(1), {-1}));
    ASSERT_TRUE(rep.violation);
    EXPECT_EQ(rep.witness, Point({KElem(1) / KElem::eps()}));
    EXPECT_EQ(rep.val, KVal(-1));

    // constants stay inside every ball of nonpositive radius
    ProbeReport rep2 = boundedness_probe(RatFunc::constant(1, KElem(5)), KElem(1) / KElem::eps(),
                                         halfline(), SampleStrategy::grid(Rat(1), Rat(2), {1, -1}));
    EXPECT_FALSE(rep2.violation);

    // h = 1/x1 bounded by 1/eps on {x1 > eps}: 2*eps is a member and stays inside
    SetDescription above_eps(1, {(parse_ratfunc("x1 - eps", 1)).num()});
    ProbeReport rep3 = boundedness_probe(parse_ratfunc("1/x1", 1), KElem(1) / KElem::eps(),
                                         above_eps, SampleStrategy::grid(Rat(1), Rat(2), {1}));
    EXPECT_FALSE(rep3.violation);
    EXPECT_GT(rep3.tested, 0);

    EXPECT_THROW(boundedness_probe(parse_ratfunc("x1", 1), KElem(0), halfline(),
                                   SampleStrategy::grid(Rat(1), Rat(1))),
                 std::invalid_argument);
}

TEST(ConvexHullZCheck, Examples) {
    EXPECT_FALSE(convex_hull_Z_check(KElem(1) / KElem::eps()));
    EXPECT_TRUE(convex_hull_Z_check(KElem(1000000)));
    EXPECT_FALSE(convex_hull_Z_check((KElem(1) + KElem::eps()) / KElem::eps(2)));
    EXPECT_TRUE(convex_hull_Z_check(KElem(0)));
}

TEST(Probe, DeterministicGivenTheStrategy) {
    SampleStrategy st = SampleStrategy::pseudorandom(123, 150, {1, 2});
    ProbeReport a = integrality_probe(parse_ratfunc("1/x1", 1), halfline(), st);
    ProbeReport b = integrality_probe(parse_ratfunc("1/x1", 1), halfline(), st);
    EXPECT_EQ(a.violation, b.violation);
    EXPECT_EQ(a.tested, b.tested);
    EXPECT_EQ(a.skipped_undefined, b.skipped_undefined);
    if (a.violation) {
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(Probe, ViolationsSelfVerify) {
    RatFunc h = parse_ratfunc("1/x1", 1);
    ProbeReport rep =
        integrality_probe(h, halfline(), SampleStrategy::pseudorandom(7, 200, {1, 2, -1}));
    ASSERT_TRUE(rep.violation);
    EXPECT_TRUE(point_in_set(halfline(), rep.witness));
    KElem again = eval(h, rep.witness);
    EXPECT_EQ(again, rep.value);
    EXPECT_EQ(again.val(), rep.val);
    EXPECT_LT(again.val().v, 0);
}

TEST(RetryDirections, DocumentedSequence) {
    EXPECT_EQ(retry_direction(2, 0), Point({KElem(1), KElem(1)}));
    EXPECT_EQ(retry_direction(2, 1), Point({KElem(1), KElem(0)}));
    EXPECT_EQ(retry_direction(2, 2), Point({KElem(0), KElem(1)}));
    Point p3 = retry_direction(2, 3);
    bool nz = false;
    for (const auto& c : p3.coords)
        if (!c.is_zero()) nz = true;
    EXPECT_TRUE(nz);
    EXPECT_EQ(p3, retry_direction(2, 3));
}

} // namespace
} // namespace ganz

#include "ganz/ratfunc.hpp"

#include <gtest/gtest.h>

#include "ganz/parse.hpp"
#include "ganz/random_values.hpp"

namespace ganz {
namespace {

TEST(RatFunc, FieldIdentities) {
    RatFunc x1 = RatFunc::variable(1, 0);
    EXPECT_EQ(x1 / x1, RatFunc::constant(1, KElem(1)));
    EXPECT_TRUE((x1 + (-x1)).zero());
    // no gcd is taken, but cross-multiplication equality sees through it
    RatFunc q = parse_ratfunc("(x1^2 - 1)/(x1 - 1)", 1);
    EXPECT_EQ(q, parse_ratfunc("x1 + 1", 1));
    EXPECT_THROW(x1 / (x1 - x1), DivisionByZero);
}

TEST(RatFunc, FieldAxiomsOnSamples) {
    SplitMix64 rng(21);
    auto sample = [&rng] {
        // rational coefficients with a sprinkle of eps keep the exact
        // cross-multiplication checks snappy
        RatFunc f(rand_mpoly(rng, 2, 1, false, true), rand_mpoly(rng, 2, 1, true, true));
        if (rng.below(3) == 0) f *= RatFunc::constant(2, KElem::eps());
        return f;
    };
    for (int i = 0; i < 60; ++i) {
        RatFunc a = sample(), b = sample(), c = sample();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(RatFunc, Eval) {
    RatFunc f = parse_ratfunc("x1*(1 - x1)", 1);
    EXPECT_EQ(eval(f, Point({KElem(rat(1, 2))})), KElem(rat(1, 4)));

    RatFunc g = parse_ratfunc("1/x1", 1);
    EXPECT_THROW(eval(g, Point({KElem(0)})), NotDefinedAt);
    EXPECT_EQ(try_eval(g, Point({KElem(0)})).status, EvalStatus::NotDefined);

    RatFunc h = parse_ratfunc("x1", 1) / parse_ratfunc("x1", 1);
    EXPECT_THROW(eval(h, Point({KElem(0)})), Indeterminate);
    EXPECT_EQ(try_eval(h, Point({KElem(0)})).status, EvalStatus::Indet);
}

TEST(RatFunc, EvalIsAHomomorphismWhereDefined) {
    SplitMix64 rng(22);
    for (int i = 0; i < 80; ++i) {
        RatFunc f = rand_ratfunc(rng, 2, 1);
        RatFunc g = rand_ratfunc(rng, 2, 1);
        Point b = rand_rational_point(rng, 2);
        EvalOutcome rf = try_eval(f, b), rg = try_eval(g, b), rfg = try_eval(f * g, b);
        if (rf.defined() && rg.defined() && rfg.defined()) {
            EXPECT_EQ(rfg.value, rf.value * rg.value);
        }
    }
}

TEST(SubstLine, DirectSubstitution) {
    RatFunc f = parse_ratfunc("x1^2 + eps", 1);
    LineRestriction lr = subst_line(f, Point({KElem(0)}), Point({KElem(1)}));
    EXPECT_EQ(lr.num.coeff(0), KElem::eps());
    EXPECT_EQ(lr.num.coeff(1), KElem(0));
    EXPECT_EQ(lr.num.coeff(2), KElem(1));
    EXPECT_EQ(lr.den.coeff(0), KElem(1));
    EXPECT_EQ(lr.den.deg(), 0);
}

TEST(SubstLine, ReciprocalAndDegenerate) {
    RatFunc g = parse_ratfunc("1/x1", 1);
    LineRestriction lr = subst_line(g, Point({KElem(0)}), Point({KElem(1)}));
    EXPECT_EQ(lr.num.deg(), 0);
    EXPECT_EQ(lr.den.ord(), 1);

    RatFunc h = parse_ratfunc("1/(x1 - x2)", 2);
    EXPECT_THROW(subst_line(h, Point({KElem(0), KElem(0)}), Point({KElem(1), KElem(1)})),
                 LineInDenominatorLocus);
    EXPECT_THROW(subst_line(g, Point({KElem(0)}), Point({KElem(0)})), std::invalid_argument);
}

TEST(SubstLine, CommutesWithMultiplication) {
    SplitMix64 rng(23);
    Point b({KElem(rat(1, 3)), KElem(rat(-1, 2))});
    Point d({KElem(1), KElem(2)});
    for (int i = 0; i < 40; ++i) {
        RatFunc f(rand_mpoly(rng, 2, 2, true));
        RatFunc g(rand_mpoly(rng, 2, 2, true));
        LineRestriction a = subst_line(f, b, d);
        LineRestriction bb = subst_line(g, b, d);
        LineRestriction ab = subst_line(f * g, b, d);
        // compare as fractions: num_ab/den_ab == (num_a*num_b)/(den_a*den_b)
        EXPECT_EQ(ab.num * (a.den * bb.den), a.num * bb.num * ab.den);
    }
}

TEST(MPolyBasics, GradedLexLeadingTermAndDegree) {
    MPoly<KElem> p = parse_ratfunc("x1*x2 + x1^3 + 1", 2).num();
    EXPECT_EQ(p.degree(), 3);
    ExpVec lead = p.terms().begin()->first;
    EXPECT_EQ(lead, (ExpVec{3, 0}));
    EXPECT_EQ(p.term_count(), 3u);
}

} // namespace
} // namespace ganz

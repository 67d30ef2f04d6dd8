#include "ganz/valuation.hpp"

#include <gtest/gtest.h>

#include "ganz/probe.hpp"
#include "ganz/random_values.hpp"

namespace ganz {
namespace {

Valuation np01() { return Valuation::near_point(Point({KElem(0)}), Point({KElem(1)})); }

TEST(NearPointValuation, Examples) {
    EXPECT_EQ(np01().val_of(parse_ratfunc("x1", 1)), ValOrInf(ValGroupElem({1, 0})));
    // expansion eps + t^2: lowest t-order 0, leading coefficient eps
    EXPECT_EQ(np01().val_of(parse_ratfunc("x1^2 + eps", 1)), ValOrInf(ValGroupElem({0, 1})));
    EXPECT_TRUE(np01().val_of(RatFunc(1)).inf);
}

TEST(WeightedGaussValuation, Examples) {
    Valuation wg = Valuation::weighted_gauss({1});
    // min over the support of val(coeff) + exponent * weight: min(2, 3)
    EXPECT_EQ(wg.val_of(parse_ratfunc("x1^2 + eps^3", 1)), ValOrInf(ValGroupElem({2})));
    EXPECT_EQ(wg.val_of(parse_ratfunc("1/x1", 1)), ValOrInf(ValGroupElem({-1})));
}

TEST(Valuations, ExtendTheBaseValuation) {
    SplitMix64 rng(41);
    Valuation wg = Valuation::weighted_gauss({1, -2});
    Valuation np = Valuation::near_point(Point({KElem(rat(1, 2)), KElem(-1)}),
                                         Point({KElem(1), KElem(2)}));
    for (int i = 0; i < 100; ++i) {
        KElem a = rand_kelem(rng, 3, true);
        RatFunc ca = RatFunc::constant(2, a);
        EXPECT_EQ(wg.val_of(ca), ValOrInf(wg.embed_k(a.val().v)));
        EXPECT_EQ(np.val_of(ca), ValOrInf(np.embed_k(a.val().v)));
    }
}

TEST(Valuations, MultiplicativeAndUltrametricOnSamples) {
    SplitMix64 rng(42);
    std::vector<Valuation> vs = {Valuation::weighted_gauss({1, 0}),
                                 Valuation::near_point(Point({KElem(0), KElem(1)}),
                                                       Point({KElem(1), KElem(1)}))};
    for (const auto& v : vs) {
        for (int i = 0; i < 60; ++i) {
            RatFunc f = rand_ratfunc(rng, 2, 1, true);
            RatFunc g = rand_ratfunc(rng, 2, 1, true);
            EXPECT_EQ(v.val_of(f * g), ValOrInf(v.val_of(f).v + v.val_of(g).v));
            if (!(f + g).zero()) {
                EXPECT_TRUE(v.val_of(f + g) >= min(v.val_of(f), v.val_of(g)));
            }
        }
    }
}

TEST(NearPointValuation, NearnessOnVanishingFunctions) {
    SplitMix64 rng(43);
    Valuation v = np01();
    RatFunc x1 = RatFunc::variable(1, 0);
    for (int i = 0; i < 100; ++i) {
        RatFunc f = x1 * RatFunc(rand_mpoly(rng, 1, 2, true));
        EXPECT_TRUE(check_near_property(v, f));
        ValOrInf val = v.val_of(f);
        // beyond every embedded element of the value group of K
        EXPECT_TRUE(val.inf || ValOrInf(v.embed_k(rng.range(-50, 50))) < val);
    }
}

TEST(NearPointValuation, CheckNearPropertyExamples) {
    EXPECT_TRUE(check_near_property(np01(), parse_ratfunc("x1^2", 1)));
    EXPECT_TRUE(check_near_property(np01(), parse_ratfunc("x1 + eps", 1)));  // vacuous
    // expansion t*(1 - eps): value (1, 0)
    RatFunc f = parse_ratfunc("x1 - eps*x1", 1);
    EXPECT_TRUE(check_near_property(np01(), f));
    EXPECT_EQ(np01().val_of(f), ValOrInf(ValGroupElem({1, 0})));
}

// integrality at the point matches integrality of the valuation for
// functions defined and nonzero at the base point
TEST(NearPointValuation, PointwiseIntegralityAgreement) {
    SplitMix64 rng(44);
    Valuation v = np01();
    Point b({KElem(0)});
    for (int i = 0; i < 100; ++i) {
        RatFunc h = rand_ratfunc(rng, 1, 2, true);
        EvalOutcome hb = try_eval(h, b);
        if (!hb.defined() || hb.value.is_zero()) continue;
        ValOrInf val = v.val_of(h);
        EXPECT_EQ(val.v >= v.zero_value(), hb.value.val().v >= 0);
        EXPECT_EQ(val, ValOrInf(ValGroupElem({0, hb.value.val().v})));
    }
}

TEST(Residue, Examples) {
    Valuation wg = Valuation::weighted_gauss({1});
    ResidueElem r = wg.residue_of(parse_ratfunc("(x1^2 + eps^3)/eps^2", 1));
    QFunc y1sq(MPoly<Rat>::variable(1, 0).pow(2));
    EXPECT_EQ(r, ResidueElem(y1sq));

    ResidueElem r2 = np01().residue_of(parse_ratfunc("(x1 + 2)/(x1 + 1)", 1));
    EXPECT_EQ(r2, ResidueElem(Rat(2)));

    EXPECT_EQ(wg.residue_of(RatFunc::constant(1, KElem(1))), ResidueElem(QFunc::constant(1, Rat(1))));
    EXPECT_THROW(wg.residue_of(parse_ratfunc("x1", 1)), NonzeroValuation);
}

TEST(Residue, MultiplicativeOnSamples) {
    SplitMix64 rng(45);
    Valuation wg = Valuation::weighted_gauss({1});
    auto unit_part = [&wg](const RatFunc& f) {
        long long v = wg.val_of(f).v.c[0];
        return f * RatFunc::constant(1, KElem::eps(static_cast<int>(-v)));
    };
    for (int i = 0; i < 60; ++i) {
        RatFunc f0 = unit_part(rand_ratfunc(rng, 1, 2, true));
        RatFunc g0 = unit_part(rand_ratfunc(rng, 1, 2, true));
        EXPECT_EQ(wg.residue_of(f0 * g0), wg.residue_of(f0) * wg.residue_of(g0));
    }
}

TEST(SubstitutionOrderSign, Examples) {
    Point b({KElem(0)}), d({KElem(1)}), dneg({KElem(-1)});
    EXPECT_EQ(substitution_order_sign(b, d, parse_ratfunc("1 - x1^2", 1)), 1);
    EXPECT_EQ(substitution_order_sign(b, d, parse_ratfunc("x1", 1)), 1);
    EXPECT_EQ(substitution_order_sign(b, dneg, parse_ratfunc("x1", 1)), -1);
    EXPECT_EQ(substitution_order_sign(b, d, RatFunc::constant(1, -KElem::eps())), -1);
    EXPECT_EQ(substitution_order_sign(b, d, RatFunc(1)), 0);
}

TEST(SubstitutionOrderSign, IsAFieldOrderCompatibleWithTheValuation) {
    SplitMix64 rng(46);
    Point b({KElem(rat(1, 2)), KElem(0)});
    Point d({KElem(1), KElem(-1)});
    Valuation v = Valuation::near_point(b, d);
    for (int i = 0; i < 150; ++i) {
        RatFunc f = rand_ratfunc(rng, 2, 1, true);
        RatFunc g = rand_ratfunc(rng, 2, 1, true);
        int sf = substitution_order_sign(b, d, f);
        int sg = substitution_order_sign(b, d, g);
        EXPECT_EQ(substitution_order_sign(b, d, f * g), sf * sg);
        if (sf > 0 && sg > 0) {
            EXPECT_EQ(substitution_order_sign(b, d, f + g), 1);
            if (substitution_order_sign(b, d, g - f) > 0) {
                EXPECT_TRUE(v.val_of(f) >= v.val_of(g));
            }
        }
    }
}

TEST(SubstitutionOrderSign, PositiveAtThePointForcesPositive) {
    SplitMix64 rng(47);
    for (int i = 0; i < 150; ++i) {
        Point b = rand_rational_point(rng, 2);
        MPoly<KElem> p = rand_mpoly(rng, 2, 2, true);
        if (eval(p, b).sgn() <= 0) p = p * p + MPoly<KElem>::constant(2, KElem(1));
        int sign = 0;
        for (int attempt = 0; attempt < 24; ++attempt) {
            try {
                sign = substitution_order_sign(b, retry_direction(2, attempt), RatFunc(p));
                break;
            } catch (const DegenerateDirection&) {
            }
        }
        EXPECT_EQ(sign, 1);
    }
}

TEST(NearPointValuation, DegenerateDirectionReported) {
    Valuation v = Valuation::near_point(Point({KElem(0), KElem(0)}), Point({KElem(1), KElem(1)}));
    EXPECT_THROW(v.val_of(parse_ratfunc("1/(x1 - x2)", 2)), DegenerateDirection);
    EXPECT_THROW(v.val_of(parse_ratfunc("x1 - x2", 2)), DegenerateDirection);
}

} // namespace
} // namespace ganz

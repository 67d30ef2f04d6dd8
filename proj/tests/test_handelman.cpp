#include "ganz/handelman.hpp"

#include <gtest/gtest.h>

#include "ganz/parse.hpp"
#include "ganz/random_values.hpp"

namespace ganz {
namespace {

TEST(Simplex, FeasibleAndInfeasibleSystems) {
    // x + y = 1, x - y = 0  ->  x = y = 1/2
    auto sol = solve_nonneg({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(1), Rat(0)});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ((*sol)[0], Rat(1, 2));
    EXPECT_EQ((*sol)[1], Rat(1, 2));

    // x = -1 has no nonnegative solution
    EXPECT_FALSE(solve_nonneg({{Rat(1)}}, {Rat(-1)}).has_value());

    // x + y = 1, x + y = 2 inconsistent
    EXPECT_FALSE(solve_nonneg({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(1), Rat(2)}).has_value());

    // redundant rows stay feasible
    auto sol2 = solve_nonneg({{Rat(2), Rat(0)}, {Rat(4), Rat(0)}}, {Rat(3), Rat(6)});
    ASSERT_TRUE(sol2.has_value());
    EXPECT_EQ((*sol2)[0], Rat(3, 2));
}

TEST(Simplex, SolutionsSatisfyTheSystemExactly) {
    SplitMix64 rng(51);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = 1 + rng.below(3), n = 1 + rng.below(4);
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
        for (auto& row : a)
            for (auto& v : row) v = rand_rat(rng, 4, 3);
        // feasible by construction: rhs = A * (known nonnegative x)
        std::vector<Rat> x0(n);
        for (auto& v : x0) v = rat(static_cast<long>(rng.below(5)), 1 + static_cast<long>(rng.below(3)));
        std::vector<Rat> b(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
        auto sol = solve_nonneg(a, b);
        ASSERT_TRUE(sol.has_value());
        for (std::size_t i = 0; i < m; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * (*sol)[j];
            EXPECT_EQ(acc, b[i]);
        }
        for (const auto& v : *sol) EXPECT_GE(sgn(v), 0);
    }
}

TEST(FourSquares, SmallValuesAndRandomOnes) {
    auto s = four_squares(mpz_class(7));
    EXPECT_EQ(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3], mpz_class(7));
    EXPECT_EQ(four_squares(mpz_class(0))[0], mpz_class(0));
    SplitMix64 rng(52);
    for (int i = 0; i < 40; ++i) {
        mpz_class n(static_cast<long>(rng.below(5000)));
        auto q = four_squares(n);
        EXPECT_EQ(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3], n);
    }
}

TEST(FourSquares, RationalSquareParts) {
    auto parts = rational_square_parts(rat(9, 4));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0], rat(3, 2));

    SplitMix64 rng(53);
    for (int i = 0; i < 60; ++i) {
        Rat q = rat(static_cast<long>(rng.below(40)), 1 + static_cast<long>(rng.below(12)));
        Rat sum(0);
        for (const Rat& c : rational_square_parts(q)) sum += c * c;
        EXPECT_EQ(sum, q);
    }
}

TEST(Handelman, FindsTheProductRepresentation) {
    SetDescription s(1, {parse_ratfunc("x1", 1).num(), parse_ratfunc("1 - x1", 1).num()});
    MPoly<KElem> target = parse_ratfunc("x1 - x1^2", 1).num();
    auto cert = handelman_search(s, target, 2);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cone_value(*cert, s), RatFunc(target));
    // the feasible set is a single point here: lambda_{1,2} = 1
    ASSERT_EQ(cert->terms.size(), 1u);
    EXPECT_EQ(cert->terms.begin()->first, (std::vector<int>{0, 1}));
}

TEST(Handelman, UnknownIsNotARefutationButNegativesStayUnknown) {
    SetDescription s(1, {parse_ratfunc("x1", 1).num()});
    EXPECT_FALSE(handelman_search(s, parse_ratfunc("-x1", 1).num(), 4).has_value());
}

TEST(Handelman, ConstantBlocksCannotReachEveryPositive) {
    // over no constraints the only product is 1; x1^2 + 1 needs a (free)
    // square, which the constant-lambda subcone does not contain
    SetDescription s(1, {});
    EXPECT_FALSE(handelman_search(s, parse_ratfunc("x1^2 + 1", 1).num(), 2).has_value());
}

TEST(Handelman, WeightsNeedingFourSquaresStillVerify) {
    // target = 7*x1 forces lambda = 7, not a rational square
    SetDescription s(1, {parse_ratfunc("x1", 1).num()});
    MPoly<KElem> target = parse_ratfunc("7*x1", 1).num();
    auto cert = handelman_search(s, target, 1);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cone_value(*cert, s), RatFunc(target));
    const SOS& sos = cert->terms.at({0});
    EXPECT_GT(sos.parts.size(), 1u);
}

TEST(Handelman, EvenMultiplicitiesFoldIntoTheSquares) {
    // x1^2 * (1 - x1) uses the multiset {1,1,2}: even part x1 goes into the square
    SetDescription s(1, {parse_ratfunc("x1", 1).num(), parse_ratfunc("1 - x1", 1).num()});
    MPoly<KElem> target = parse_ratfunc("x1^2*(1 - x1)", 1).num();
    auto cert = handelman_search(s, target, 3);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cone_value(*cert, s), RatFunc(target));
}

TEST(Handelman, DegreeBoundBelowTargetRejected) {
    SetDescription s(1, {parse_ratfunc("x1", 1).num()});
    EXPECT_THROW(handelman_search(s, parse_ratfunc("x1^3", 1).num(), 2), std::invalid_argument);
}

TEST(Handelman, ColumnBudget) {
    // six degree-1 constraints at bound 6 exceed the product cap
    std::vector<MPoly<KElem>> ps;
    for (int i = 0; i < 6; ++i) ps.push_back(parse_ratfunc("x" + std::to_string(i + 1), 6).num());
    SetDescription s(6, ps);
    EXPECT_THROW(handelman_search(s, parse_ratfunc("x1", 6).num(), 6), BudgetExceeded);
}

} // namespace
} // namespace ganz

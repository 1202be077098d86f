#include "imzv/numeric.hpp"

#include <gtest/gtest.h>

#include <numbers>

using imzv::Index;
using imzv::IndexSum;
using imzv::RatPoly;

namespace {

constexpr long double zeta3 = 1.2020569031595942853997L;

} // namespace

TEST(Numeric, SingleZeta)
{
    const auto z2 = imzv::mzv_numeric(Index{2}, 1000000);
    const long double pi2_6 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
    EXPECT_LE(std::fabs(z2.value - pi2_6), z2.err);
    const auto z3 = imzv::mzv_numeric(Index{3}, 1000000);
    EXPECT_LE(std::fabs(z3.value - zeta3), z3.err);
    EXPECT_NEAR(static_cast<double>(z3.value), 1.202056, 1e-6);
}

TEST(Numeric, EulerDuality)
{
    const auto z12 = imzv::mzv_numeric(Index{1, 2}, 1000000);
    const auto z3 = imzv::mzv_numeric(Index{3}, 1000000);
    EXPECT_TRUE(imzv::within(z12, z3, 0));
    EXPECT_LT(std::fabs(z12.value - zeta3), 1e-4L);
}

TEST(Numeric, TailEstimateShrinksAndCoversRefinement)
{
    for (const auto& k : imzv::indices_up_to_weight(5, true)) {
        const auto coarse = imzv::mzv_numeric(k, 10000);
        const auto fine = imzv::mzv_numeric(k, 1000000);
        EXPECT_LT(fine.err, coarse.err);
        // the truncation only adds positive terms
        EXPECT_LE(coarse.value, fine.value);
        EXPECT_LE(fine.value - coarse.value, coarse.err) << k.str();
    }
}

TEST(Numeric, CompensatedAgrees)
{
    for (const auto& k : imzv::indices_up_to_weight(5, true)) {
        const auto plain = imzv::mzv_numeric(k, 100000);
        const auto kahan = imzv::mzv_numeric(k, 100000, true);
        EXPECT_LT(std::fabs(plain.value - kahan.value), 1e-12L) << k.str();
    }
}

TEST(Numeric, StarDirectMatchesInterpolation)
{
    // zeta*(2,2) = sum over weak chains; zeta(2,2) + zeta(4) via I^1
    const auto star = imzv::mzsv_numeric(Index{2, 2}, 200000);
    const auto via = imzv::eval_indexsum_numeric(imzv::interpolate(Index{2, 2}), 1, 200000);
    EXPECT_TRUE(imzv::within(star, via, 1e-9L));
    // zeta*(2,2) = 7/4 zeta(4) = 7 pi^4 / 360
    const long double pi = std::numbers::pi_v<long double>;
    EXPECT_LE(std::fabs(star.value - 7 * pi * pi * pi * pi / 360), star.err);
}

TEST(Numeric, EvalIndexSum)
{
    const RatPoly t = RatPoly::t();
    const auto s = imzv::eval_indexsum_numeric(IndexSum(Index{1, 2}) + IndexSum(Index{3}, t), 1, 1000000);
    EXPECT_NEAR(static_cast<double>(s.value), 2 * static_cast<double>(zeta3), 1e-4);
    const auto zero = imzv::eval_indexsum_numeric(IndexSum(), 0, 1000);
    EXPECT_EQ(zero.value, 0);
    EXPECT_EQ(zero.err, 0);
    const auto c = imzv::eval_indexsum_numeric(IndexSum(Index{3}, RatPoly(1) + t), 0, 1000000);
    EXPECT_NEAR(static_cast<double>(c.value), static_cast<double>(zeta3), 1e-6);
    EXPECT_EQ(imzv::eval_indexsum_numeric(IndexSum(Index{}), 0, 1000).value, 1);
}

TEST(Numeric, Errors)
{
    EXPECT_THROW(imzv::mzv_numeric(Index{2, 1}, 1000), std::invalid_argument);
    EXPECT_THROW(imzv::mzv_numeric(Index{}, 1000), std::invalid_argument);
    EXPECT_THROW(imzv::mzv_numeric(Index{2}, 5), std::invalid_argument);
}

TEST(Numeric, OhnoAndSumFormulaInstances)
{
    EXPECT_TRUE(imzv::check_ohno_numeric(Index{2}, 1, 0, 1000000, 1e-2L).pass);
    EXPECT_TRUE(imzv::check_ohno_numeric(Index{2}, 0, imzv::Rat(1, 3), 100000, 0).pass);
    EXPECT_TRUE(imzv::check_ohno_numeric(Index{3}, 1, imzv::Rat(1, 2), 1000000, 1e-3L).pass);
    EXPECT_TRUE(imzv::check_sum_formula_numeric(2, 1, 1, 1000000, 0).pass);
    for (int t2 = 0; t2 <= 2; ++t2)
        EXPECT_TRUE(imzv::check_sum_formula_numeric(3, 2, imzv::Rat(t2, 2), 1000000, 1e-3L).pass);
    EXPECT_TRUE(imzv::check_sum_formula_numeric(5, 2, 1, 1000000, 1e-3L).pass);
    // a deliberately false claim must fail: zeta(2) vs zeta(3)
    const auto bad = imzv::detail::compare_numeric("demo", imzv::mzv_numeric(Index{2}, 100000),
                                                   imzv::mzv_numeric(Index{3}, 100000), 1e-2L);
    EXPECT_FALSE(bad.pass);
    EXPECT_TRUE(bad.counterexample.contains("lhs"));
}

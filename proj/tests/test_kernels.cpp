#include "imzv/kernels.hpp"

#include <gtest/gtest.h>

using imzv::Index;
using imzv::IndexSum;
using imzv::Rat;
using imzv::RatPoly;

namespace {

const RatPoly t = RatPoly::t();
const RatPoly omt = imzv::one_minus_t();

// a (a-1) ... (a-b+1) / b!, zero for b < 0.
Rat binom_oracle(long a, long b)
{
    if (b < 0)
        return 0;
    Rat r = 1;
    for (long i = 0; i < b; ++i)
        r = r * Rat(a - i) / Rat(i + 1);
    return r;
}

Rat pow_rat(const Rat& x, long n)
{
    Rat r = 1;
    for (long i = 0; i < n; ++i)
        r *= x;
    return r;
}

Rat f_at(int i, int k, int e, const Rat& v)
{
    if (e == -1)
        return 0;
    Rat s = 0;
    for (int j = 0; j <= e; ++j) {
        const Rat c = binom_oracle(e - j, i) * binom_oracle(k + e - i - 2, j);
        if (c != 0)
            s += c * pow_rat(v, j) * pow_rat(1 - v, e - i - j);
    }
    return s;
}

// g_m(k; v) straight from the defining triple sum, enumerating cut positions by
// bitmask and shifts by odometer.
std::map<Index, Rat> g_at(int m, const Index& k, const Rat& v)
{
    std::map<Index, Rat> out;
    const int r = k.depth();
    for (unsigned cuts = 0; cuts < (1u << (r - 1)); ++cuts) {
        std::vector<int> starts{0};
        for (int g = 0; g < r - 1; ++g)
            if (cuts & (1u << g))
                starts.push_back(g + 1);
        const int l = static_cast<int>(starts.size());
        starts.push_back(r);
        std::vector<int> e(static_cast<std::size_t>(l), 0);
        while (true) {
            int sum = 0;
            for (int x : e)
                sum += x;
            if (sum == m) {
                Rat c = pow_rat(-v * (1 - v), r - l);
                std::vector<int> parts;
                for (int b = 0; b < l; ++b) {
                    int wt = 0;
                    for (int q = starts[b]; q < starts[b + 1]; ++q)
                        wt += k[q];
                    const int wt_primed = wt + (b == 0 ? 1 : 0);
                    c *= f_at(starts[b + 1] - starts[b] - 1, wt_primed, e[b], v);
                    parts.push_back(wt + e[b]);
                }
                if (c != 0)
                    out[Index(parts)] += c;
            }
            int pos = 0;
            while (pos < l && ++e[pos] > m)
                e[pos++] = 0;
            if (pos == l)
                break;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<Index, Rat> as_map(const IndexSum& s)
{
    std::map<Index, Rat> out;
    for (const auto& [k, c] : s) {
        EXPECT_EQ(c.degree(), 0) << "expected constant coefficient";
        out[k] = c.coeff(0);
    }
    return out;
}

} // namespace

TEST(Kernels, FExamples)
{
    for (int e = 0; e <= 6; ++e)
        EXPECT_EQ(imzv::f_coeff(0, 2, e), RatPoly(1));
    EXPECT_EQ(imzv::f_coeff(0, 1, 0), RatPoly(1));
    for (int e = 1; e <= 5; ++e)
        EXPECT_EQ(imzv::f_coeff(0, 1, e), omt);
    for (int i = 0; i <= 3; ++i)
        for (int k = 1; k <= 5; ++k)
            EXPECT_EQ(imzv::f_coeff(i, k, 0), RatPoly(i == 0 ? 1 : 0));
    EXPECT_EQ(imzv::f_coeff(0, 3, 1), RatPoly(1) + t);
    EXPECT_TRUE(imzv::f_coeff(2, 4, -1).is_zero());
    EXPECT_THROW(imzv::f_coeff(0, 0, 1), std::invalid_argument);
}

TEST(Kernels, FMatchesDirectEvaluation)
{
    for (int i = 0; i <= 4; ++i)
        for (int k = 1; k <= 9; ++k)
            for (int e = 0; e <= 6; ++e) {
                const RatPoly f = imzv::f_coeff(i, k, e);
                ASSERT_LE(f.degree(), e);
                for (int v = -2; v <= e + 1; ++v)
                    EXPECT_EQ(f(v), f_at(i, k, e, v)) << i << "," << k << "," << e;
            }
}

TEST(Kernels, C1C2)
{
    const std::vector<int> one{1};
    EXPECT_EQ(imzv::c1_coeff(Index{2}, one), Rat(2));
    const std::vector<int> zeros{0, 0, 0};
    EXPECT_EQ(imzv::c1_coeff(Index{1, 2, 3}, zeros), Rat(1));
    const std::vector<int> e01{0, 1};
    EXPECT_EQ(imzv::c2_coeff(Index{2, 1}, e01), Rat(1));
    EXPECT_EQ(imzv::c1_coeff(Index{}, std::vector<int>{}), Rat(1));
    EXPECT_THROW(imzv::c1_coeff(Index{2}, zeros), std::invalid_argument);
}

TEST(Kernels, GExamples)
{
    for (int m = 0; m <= 5; ++m)
        EXPECT_EQ(imzv::g_poly(m, Index{1}), IndexSum(Index{1 + m}));
    EXPECT_EQ(imzv::g_poly(1, Index{2}), IndexSum(Index{3}, RatPoly(1) + t));
    for (const auto& k : imzv::indices_up_to_weight(6, false))
        EXPECT_EQ(imzv::g_poly(0, k), IndexSum(k)) << k.str();
    EXPECT_EQ(imzv::g_poly(0, Index{}), IndexSum(Index{}));
    EXPECT_EQ(imzv::g_poly(2, Index{}), IndexSum());
    EXPECT_EQ(imzv::g_poly(-1, Index{2}), IndexSum());
}

TEST(Kernels, GMatchesDirectEvaluation)
{
    for (const auto& k : imzv::indices_up_to_weight(6, false))
        for (int m = 0; m <= 3; ++m) {
            const IndexSum g = imzv::g_poly(m, k);
            // coefficient degree is at most 2(r-1) + m, so this many points pin it down
            const int points = 2 * (k.depth() - 1) + m + 1;
            for (int v = 0; v < points; ++v)
                EXPECT_EQ(as_map(imzv::specialize(g, v)), g_at(m, k, v)) << k.str() << " m=" << m << " t=" << v;
        }
}

TEST(Kernels, HAndGExamples)
{
    for (int m = 0; m <= 4; ++m) {
        EXPECT_EQ(imzv::h_poly(m, Index{1}), IndexSum(Index{1 + m}));
        EXPECT_EQ(imzv::G_poly(m, Index{1}), IndexSum(Index{1 + m}));
    }
    for (const auto& k : imzv::indices_up_to_weight(5, false)) {
        EXPECT_EQ(imzv::h_poly(0, k), imzv::interpolate(k));
        EXPECT_EQ(imzv::G_poly(0, k), imzv::interpolate(k));
    }
    EXPECT_EQ(imzv::h_poly(1, Index{2}), IndexSum(Index{3}, RatPoly(1) + t));
    EXPECT_EQ(imzv::G_poly(1, Index{2}), IndexSum(Index{3}, RatPoly(1) + t));
    EXPECT_THROW(imzv::h_poly(1, Index{}), std::invalid_argument);
}

TEST(Kernels, OhnoRhs)
{
    EXPECT_EQ(imzv::ohno_rhs(Index{2}, 1, false), IndexSum(Index{1, 2}));
    EXPECT_EQ(imzv::ohno_rhs(Index{2}, 1, true), IndexSum(Index{1, 2}) + IndexSum(Index{3}, t));
    EXPECT_EQ(imzv::ohno_rhs(Index{2}, 0, false), IndexSum(Index{2}));
    EXPECT_THROW(imzv::ohno_rhs(Index{2, 1}, 1, false), std::invalid_argument);
}

TEST(Kernels, SmallOhnoInstanceByHand)
{
    // (1,2)^dagger = (3), (3) + (1) = (4), (4)^dagger = (1,1,2)
    EXPECT_EQ(imzv::ohno_rhs(Index{1, 2}, 1, false), IndexSum(Index{1, 1, 2}));
    EXPECT_EQ(imzv::specialize(imzv::g_poly(1, Index{1, 2}), 0), IndexSum(Index{2, 2}) + IndexSum(Index{1, 3}));
}

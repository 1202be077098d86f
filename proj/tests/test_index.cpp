#include "imzv/index.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <string>

using imzv::ExpVector;
using imzv::Index;

namespace {

// Index as a binary string: y x^{k_1-1} ... y x^{k_r-1}.
std::string letters(const Index& k)
{
    std::string s;
    for (int p : k)
        s += "y" + std::string(static_cast<std::size_t>(p - 1), 'x');
    return s;
}

Index from_letters(const std::string& s)
{
    std::vector<int> parts;
    for (char c : s) {
        if (c == 'y')
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Index(parts);
}

// Dual by reversing the letter string and swapping x <-> y.
Index dual_oracle(const Index& k)
{
    std::string s = letters(k);
    std::reverse(s.begin(), s.end());
    for (char& c : s)
        c = c == 'x' ? 'y' : 'x';
    return from_letters(s);
}

// Hoffman dual: write k as 1 _ 1 _ ... _ 1 with '+' inside entries and ',' between
// them, then swap the two symbols.
Index hoffman_oracle(const Index& k)
{
    std::vector<char> gaps;
    for (std::size_t i = 0; i < k.parts().size(); ++i) {
        if (i > 0)
            gaps.push_back(',');
        for (int j = 1; j < k[i]; ++j)
            gaps.push_back('+');
    }
    std::vector<int> parts{1};
    for (char g : gaps) {
        if (g == '+')
            parts.push_back(1); // swapped: former '+' is now ','
        else
            ++parts.back();
    }
    return Index(parts);
}

std::vector<Index> all_indices_brute(int weight)
{
    std::vector<Index> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 1; v <= left; ++v) {
            cur.push_back(v);
            rec(left - v);
            cur.pop_back();
        }
    };
    rec(weight);
    return out;
}

} // namespace

TEST(Index, BasicShape)
{
    const Index k{2, 1, 3};
    EXPECT_EQ(k.depth(), 3);
    EXPECT_EQ(k.weight(), 6);
    EXPECT_TRUE(k.admissible());
    EXPECT_FALSE((Index{3, 1}).admissible());
    EXPECT_TRUE(Index{}.admissible());
    EXPECT_EQ(k.str(), "(2,1,3)");
    EXPECT_THROW(Index({0, 2}), std::invalid_argument);
}

TEST(Index, Oplus)
{
    const std::vector<int> zero{0, 0, 0};
    EXPECT_EQ(imzv::oplus(Index{2, 1, 3}, zero), (Index{2, 1, 3}));
    const std::vector<int> one{1};
    EXPECT_EQ(imzv::oplus(Index{2}, one), Index{3});
    EXPECT_EQ(imzv::oplus(Index{}, std::vector<int>{}), Index{});
    EXPECT_THROW(imzv::oplus(Index{2}, zero), std::invalid_argument);
}

TEST(Index, DualExamples)
{
    EXPECT_EQ(imzv::dual(Index{2, 1, 3}), (Index{1, 3, 2}));
    EXPECT_EQ(imzv::dual(Index{}), Index{});
    EXPECT_EQ(imzv::dual(Index{2}), Index{2});
    EXPECT_EQ(imzv::dual(Index{3}), (Index{1, 2}));
    EXPECT_THROW(imzv::dual(Index{2, 1}), std::invalid_argument);
}

TEST(Index, DualMatchesWordReversalAndIsInvolution)
{
    for (int w = 2; w <= 10; ++w)
        for (const auto& k : imzv::indices_of_weight(w)) {
            if (!k.admissible())
                continue;
            const Index d = imzv::dual(k);
            EXPECT_EQ(d, dual_oracle(k)) << k.str();
            EXPECT_EQ(imzv::dual(d), k);
            EXPECT_EQ(d.weight(), k.weight());
            EXPECT_EQ(d.depth() + k.depth(), k.weight());
        }
}

TEST(Index, HoffmanDual)
{
    EXPECT_EQ(imzv::hoffman_dual(Index{2, 1, 3}), (Index{1, 3, 1, 1}));
    EXPECT_EQ(imzv::hoffman_dual(Index{1, 3, 1, 1}), (Index{2, 1, 3}));
    EXPECT_EQ(imzv::hoffman_dual(Index{4}), (Index{1, 1, 1, 1}));
    EXPECT_THROW(imzv::hoffman_dual(Index{}), std::invalid_argument);
    for (int w = 1; w <= 10; ++w)
        for (const auto& k : imzv::indices_of_weight(w)) {
            const Index v = imzv::hoffman_dual(k);
            EXPECT_EQ(v, hoffman_oracle(k)) << k.str();
            EXPECT_EQ(imzv::hoffman_dual(v), k);
            EXPECT_EQ(v.depth() + k.depth(), k.weight() + 1);
        }
}

TEST(Index, Arrows)
{
    EXPECT_EQ(imzv::arrow_up(Index{1, 2}), (Index{1, 3}));
    EXPECT_EQ(imzv::arrow_right(Index{2}), (Index{2, 1}));
    EXPECT_EQ(imzv::arrow_down(Index{1, 3}), (Index{1, 2}));
    EXPECT_THROW(imzv::arrow_down(Index{2, 1}), std::invalid_argument);
    EXPECT_THROW(imzv::arrow_down(Index{}), std::invalid_argument);
}

TEST(Index, Compositions)
{
    EXPECT_EQ(imzv::compositions(2, 2), (std::vector<ExpVector>{{0, 2}, {1, 1}, {2, 0}}));
    EXPECT_EQ(imzv::compositions(0, 3), (std::vector<ExpVector>{{0, 0, 0}}));
    EXPECT_EQ(imzv::compositions(3, 2).size(), 4u);
    EXPECT_EQ(imzv::compositions(0, 0), (std::vector<ExpVector>{{}}));
    EXPECT_TRUE(imzv::compositions(2, 0).empty());
    // stars and bars: C(m+r-1, r-1), counted with a product formula
    for (int m = 0; m <= 7; ++m)
        for (int r = 1; r <= 5; ++r) {
            long long c = 1;
            for (int i = 1; i <= r - 1; ++i)
                c = c * (m + i) / i;
            const auto all = imzv::compositions(m, r);
            EXPECT_EQ(static_cast<long long>(all.size()), c);
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
            for (const auto& e : all)
                EXPECT_EQ(imzv::weight(e), m);
        }
}

TEST(Index, AdmissibleIndices)
{
    EXPECT_EQ(imzv::admissible_indices(3, 2), (std::vector<Index>{{1, 2}}));
    EXPECT_EQ(imzv::admissible_indices(4, 2), (std::vector<Index>{{1, 3}, {2, 2}}));
    EXPECT_EQ(imzv::admissible_indices(5, 3), (std::vector<Index>{{1, 1, 3}, {1, 2, 2}, {2, 1, 2}}));
    EXPECT_TRUE(imzv::admissible_indices(3, 3).empty());
    for (int w = 2; w <= 9; ++w)
        for (int r = 1; r < w; ++r) {
            std::vector<Index> brute;
            for (const auto& k : all_indices_brute(w))
                if (k.depth() == r && k.admissible())
                    brute.push_back(k);
            std::sort(brute.begin(), brute.end());
            EXPECT_EQ(imzv::admissible_indices(w, r), brute) << w << "," << r;
        }
}

TEST(Index, EnumerationCounts)
{
    for (int w = 1; w <= 10; ++w) {
        EXPECT_EQ(imzv::indices_of_weight(w).size(), std::size_t{1} << (w - 1));
        EXPECT_EQ(imzv::indices_of_weight(w).size(), all_indices_brute(w).size());
    }
    // non-empty indices of weight <= 5: 1 + 2 + 4 + 8 + 16
    EXPECT_EQ(imzv::indices_up_to_weight(5, false).size(), 31u);
    // admissible of weight w >= 2: 2^{w-2}
    EXPECT_EQ(imzv::indices_up_to_weight(5, true).size(), 1u + 2u + 4u + 8u);
}

TEST(Index, Splittings)
{
    std::vector<std::vector<int>> seen;
    imzv::for_each_splitting(4, 2, [&](const std::vector<int>& s) { seen.push_back(s); });
    EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}}));
    int count = 0;
    imzv::for_each_splitting(6, 3, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, 10); // C(5, 2)
}

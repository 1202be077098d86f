#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace imzv {

/// Tuple of non-negative integers added entrywise to an index.
using ExpVector = std::vector<int>;

/// Finite sequence of positive integers (k_1, ..., k_r), stored left to right.
/// The empty index is a regular value: weight 0, depth 0, admissible.
class Index
{
public:
    Index() = default;

    Index(std::initializer_list<int> parts)
        : Index(std::vector<int>(parts))
    {
    }

    explicit Index(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("index entries must be positive");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int back() const { return parts_.back(); }

    bool admissible() const noexcept { return parts_.empty() || parts_.back() >= 2; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Index&, const Index&) = default;
    friend auto operator<=>(const Index&, const Index&) = default;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline int weight(std::span<const int> e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Entrywise sum k + e.
inline Index oplus(const Index& k, std::span<const int> e)
{
    if (static_cast<std::size_t>(k.depth()) != e.size())
        throw std::invalid_argument("depth mismatch");
    std::vector<int> out(k.parts());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (e[i] < 0)
            throw std::invalid_argument("exponent vector entries must be non-negative");
        out[i] += e[i];
    }
    return Index(std::move(out));
}

namespace detail {

// Splits an admissible index into its blocks (1^{a-1}, b+1) and returns the (a, b) pairs.
inline std::vector<std::pair<int, int>> dual_blocks(const Index& k)
{
    std::vector<std::pair<int, int>> blocks;
    int ones = 0;
    for (int p : k) {
        if (p == 1) {
            ++ones;
        } else {
            blocks.emplace_back(ones + 1, p - 1);
            ones = 0;
        }
    }
    return blocks;
}

// Encodes a non-empty index as its separator string over the all-ones expansion:
// true means '+', false means ','.
inline std::vector<bool> separators(const Index& k)
{
    std::vector<bool> seps;
    for (int i = 0; i < k.depth(); ++i) {
        if (i)
            seps.push_back(false);
        for (int j = 1; j < k[i]; ++j)
            seps.push_back(true);
    }
    return seps;
}

inline Index from_separators(const std::vector<bool>& seps)
{
    std::vector<int> parts{1};
    for (bool plus : seps) {
        if (plus)
            ++parts.back();
        else
            parts.push_back(1);
    }
    return Index(std::move(parts));
}

} // namespace detail

/// Dual index of an admissible index: (1^{a_1-1}, b_1+1, ..., 1^{a_s-1}, b_s+1)
/// maps to (1^{b_s-1}, a_s+1, ..., 1^{b_1-1}, a_1+1).
inline Index dual(const Index& k)
{
    if (!k.admissible())
        throw std::invalid_argument("dual requires an admissible index, got " + k.str());
    auto blocks = detail::dual_blocks(k);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k.weight() - k.depth()));
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        const auto [a, b] = *it;
        out.insert(out.end(), static_cast<std::size_t>(b - 1), 1);
        out.push_back(a + 1);
    }
    return Index(std::move(out));
}

/// Hoffman dual: write k as sums of ones and swap every ',' with '+'.
inline Index hoffman_dual(const Index& k)
{
    if (k.empty())
        throw std::invalid_argument("Hoffman dual of the empty index is undefined");
    auto seps = detail::separators(k);
    seps.flip();
    return detail::from_separators(seps);
}

inline Index arrow_up(const Index& k)
{
    if (k.empty())
        throw std::invalid_argument("arrow_up of the empty index");
    std::vector<int> p(k.parts());
    ++p.back();
    return Index(std::move(p));
}

inline Index arrow_right(const Index& k)
{
    if (k.empty())
        throw std::invalid_argument("arrow_right of the empty index");
    std::vector<int> p(k.parts());
    p.push_back(1);
    return Index(std::move(p));
}

inline Index arrow_down(const Index& k)
{
    if (k.empty())
        throw std::invalid_argument("arrow_down of the empty index");
    if (k.back() < 2)
        throw std::invalid_argument("arrow_down needs last entry >= 2, got " + k.str());
    std::vector<int> p(k.parts());
    --p.back();
    return Index(std::move(p));
}

namespace detail {

template <typename Visit>
void composition_step(int m, int r, std::vector<int>& cur, int pos, Visit& visit)
{
    if (pos == r - 1) {
        cur[pos] = m;
        visit(static_cast<const std::vector<int>&>(cur));
        return;
    }
    for (int v = 0; v <= m; ++v) {
        cur[pos] = v;
        composition_step(m - v, r, cur, pos + 1, visit);
    }
}

} // namespace detail

/// Calls visit(e) for every e in Z_{>=0}^r with weight m, lexicographically.
template <typename Visit>
void for_each_composition(int m, int r, Visit&& visit)
{
    if (m < 0 || r < 0)
        return;
    if (r == 0) {
        if (m == 0)
            visit(std::vector<int>{});
        return;
    }
    std::vector<int> cur(static_cast<std::size_t>(r));
    detail::composition_step(m, r, cur, 0, visit);
}

inline std::vector<ExpVector> compositions(int m, int r)
{
    std::vector<ExpVector> out;
    for_each_composition(m, r, [&](const std::vector<int>& e) { out.push_back(e); });
    return out;
}

/// Calls visit(block_sizes) for every way to cut a sequence of length r into l
/// consecutive non-empty blocks (block sizes in order).
template <typename Visit>
void for_each_splitting(int r, int l, Visit&& visit)
{
    if (l < 1 || l > r)
        return;
    // positive compositions of r into l parts = non-negative compositions of r - l
    for_each_composition(r - l, l, [&](const std::vector<int>& e) {
        std::vector<int> sizes(e);
        for (int& s : sizes)
            ++s;
        visit(static_cast<const std::vector<int>&>(sizes));
    });
}

/// All admissible indices of the given weight and depth, in lexicographic order.
inline std::vector<Index> admissible_indices(int weight, int depth)
{
    std::vector<Index> out;
    if (depth == 0) {
        if (weight == 0)
            out.emplace_back();
        return out;
    }
    if (depth < 0 || weight <= depth)
        return out;
    for_each_composition(weight - depth - 1, depth, [&](const std::vector<int>& e) {
        std::vector<int> p(e);
        for (int& v : p)
            ++v;
        ++p.back();
        out.emplace_back(std::move(p));
    });
    return out;
}

/// All indices (admissible or not) of the given weight, in lexicographic order.
inline std::vector<Index> indices_of_weight(int weight)
{
    std::vector<Index> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    for (int r = 1; r <= weight; ++r)
        for_each_composition(weight - r, r, [&](const std::vector<int>& e) {
            std::vector<int> p(e);
            for (int& v : p)
                ++v;
            out.emplace_back(std::move(p));
        });
    std::sort(out.begin(), out.end());
    return out;
}

/// Non-empty indices with weight in [1, max_weight]; admissible_only restricts to k_r >= 2.
inline std::vector<Index> indices_up_to_weight(int max_weight, bool admissible_only)
{
    std::vector<Index> out;
    for (int w = 1; w <= max_weight; ++w)
        for (auto& k : indices_of_weight(w))
            if (!admissible_only || k.admissible())
                out.push_back(std::move(k));
    return out;
}

} // namespace imzv

#pragma once

#include "imzv/index.hpp"
#include "imzv/index_sum.hpp"
#include "imzv/polynomial.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace imzv {

namespace detail {

inline const RatPoly& power_cached(std::vector<RatPoly>& table, const RatPoly& base, int n)
{
    if (table.empty())
        table.emplace_back(1);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * base);
    return table[static_cast<std::size_t>(n)];
}

inline const RatPoly& t_pow(int n)
{
    thread_local std::vector<RatPoly> table;
    return power_cached(table, RatPoly::t(), n);
}

inline const RatPoly& one_minus_t_pow(int n)
{
    thread_local std::vector<RatPoly> table;
    return power_cached(table, one_minus_t(), n);
}

// (-t(1-t))^n
inline const RatPoly& merge_weight_pow(int n)
{
    thread_local std::vector<RatPoly> table;
    return power_cached(table, -(RatPoly::t() * one_minus_t()), n);
}

// Cuts k into consecutive blocks of the given sizes; returns (weight, depth) per block.
inline std::vector<std::pair<int, int>> block_shapes(const Index& k, const std::vector<int>& sizes)
{
    std::vector<std::pair<int, int>> out;
    out.reserve(sizes.size());
    std::size_t pos = 0;
    for (int s : sizes) {
        int w = 0;
        for (int j = 0; j < s; ++j)
            w += k[pos++];
        out.emplace_back(w, s);
    }
    return out;
}

} // namespace detail

/// f_i(k, e) = sum_{j=0}^{e} binom(e-j, i) binom(k+e-i-2, j) t^j (1-t)^{e-i-j}, with f_i(k, -1) = 0.
inline RatPoly f_coeff(int i, int k, int e)
{
    if (i < 0 || k < 1 || e < -1)
        throw std::invalid_argument("f_coeff: need i >= 0, k >= 1, e >= -1");
    if (e == -1)
        return {};
    thread_local std::map<std::tuple<int, int, int>, RatPoly> memo;
    auto key = std::make_tuple(i, k, e);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    RatPoly out;
    for (int j = 0; j <= e; ++j) {
        const std::int64_t c = binom(e - j, i) * binom(k + e - i - 2, j);
        if (c == 0)
            continue;
        // binom(e-j, i) != 0 forces e-i-j >= 0
        out += RatPoly(Rat(c)) * detail::t_pow(j) * detail::one_minus_t_pow(e - i - j);
    }
    memo.emplace(key, out);
    return out;
}

/// prod_i binom(k_i + e_i + [i == 1] - 2, e_i); equals 1 on the empty index.
inline Rat c1_coeff(const Index& k, std::span<const int> e)
{
    if (static_cast<std::size_t>(k.depth()) != e.size())
        throw std::invalid_argument("depth mismatch");
    BigInt c = 1;
    for (int i = 0; i < k.depth(); ++i)
        c *= binom(k[i] + e[i] + (i == 0 ? 1 : 0) - 2, e[i]);
    return Rat(c);
}

/// prod_i binom(k_i + e_i + [i == 1] + [i == r] - 2, e_i).
inline Rat c2_coeff(const Index& k, std::span<const int> e)
{
    if (static_cast<std::size_t>(k.depth()) != e.size())
        throw std::invalid_argument("depth mismatch");
    const int r = k.depth();
    BigInt c = 1;
    for (int i = 0; i < r; ++i)
        c *= binom(k[i] + e[i] + (i == 0 ? 1 : 0) + (i == r - 1 ? 1 : 0) - 2, e[i]);
    return Rat(c);
}

namespace detail {

// Read-mostly memo of a kernel keyed by (m, k).
class KernelCache
{
public:
    template <typename Compute>
    IndexSum get(int m, const Index& k, Compute&& compute)
    {
        const auto key = std::make_pair(m, k);
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(key); it != values_.end())
                return it->second;
        }
        IndexSum v = compute();
        std::unique_lock lock(mutex_);
        return values_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<int, Index>, IndexSum> values_;
};

/// g_m(k; t): sum over cuts of k into l blocks and e in Z_{>=0}^l of weight m of
/// (-t(1-t))^{r-l} prod f_{dep(block)-1}(wt(block) + [first], e_block) * (wt(blocks) + e).
inline IndexSum g_poly_uncached(int m, const Index& k)
{
    IndexSum out;
    if (m < 0)
        return out;
    if (k.empty()) {
        if (m == 0)
            out.add(Index{}, RatPoly(1));
        return out;
    }
    const int r = k.depth();
    for (int l = 1; l <= r; ++l) {
        const RatPoly& sign = detail::merge_weight_pow(r - l);
        for_each_splitting(r, l, [&](const std::vector<int>& sizes) {
            const auto shapes = detail::block_shapes(k, sizes);
            for_each_composition(m, l, [&](const std::vector<int>& e) {
                RatPoly c = sign;
                std::vector<int> parts(static_cast<std::size_t>(l));
                for (int b = 0; b < l && !c.is_zero(); ++b) {
                    const auto [w, d] = shapes[static_cast<std::size_t>(b)];
                    c *= f_coeff(d - 1, w + (b == 0 ? 1 : 0), e[b]);
                    parts[static_cast<std::size_t>(b)] = w + e[b];
                }
                if (!c.is_zero())
                    out.add(Index(std::move(parts)), c);
            });
        });
    }
    return out;
}


/// h_m(k; t): sum over cuts into l blocks and e, e' in Z_{>=0}^l with |e| + |e'| = m of
/// t^{r-l+|e|} prod binom(wt - dep + e + [first] - 2, e) * (wt(blocks) + e + e').
inline IndexSum h_poly_uncached(int m, const Index& k)
{
    IndexSum out;
    if (m < 0)
        return out;
    const int r = k.depth();
    for (int l = 1; l <= r; ++l) {
        for_each_splitting(r, l, [&](const std::vector<int>& sizes) {
            const auto shapes = detail::block_shapes(k, sizes);
            for (int s = 0; s <= m; ++s) {
                const RatPoly& tp = detail::t_pow(r - l + s);
                for_each_composition(s, l, [&](const std::vector<int>& e) {
                    std::int64_t c = 1;
                    for (int b = 0; b < l && c != 0; ++b) {
                        const auto [w, d] = shapes[static_cast<std::size_t>(b)];
                        c *= binom(w - d + e[b] + (b == 0 ? 1 : 0) - 2, e[b]);
                    }
                    if (c == 0)
                        return;
                    const RatPoly coeff = RatPoly(Rat(c)) * tp;
                    for_each_composition(m - s, l, [&](const std::vector<int>& e2) {
                        std::vector<int> parts(static_cast<std::size_t>(l));
                        for (int b = 0; b < l; ++b)
                            parts[static_cast<std::size_t>(b)] = shapes[static_cast<std::size_t>(b)].first + e[b] + e2[b];
                        out.add(Index(std::move(parts)), coeff);
                    });
                });
            }
        });
    }
    return out;
}

} // namespace detail

/// g_m(k; t), memoized.
inline IndexSum g_poly(int m, const Index& k)
{
    static detail::KernelCache cache;
    return cache.get(m, k, [&] { return detail::g_poly_uncached(m, k); });
}

/// G_m(k; t) = I^t(g_m(k; t)), memoized.
inline IndexSum G_poly(int m, const Index& k)
{
    static detail::KernelCache cache;
    return cache.get(m, k, [&] { return interpolate(g_poly(m, k)); });
}

/// h_m(k; t), memoized.
inline IndexSum h_poly(int m, const Index& k)
{
    if (k.empty())
        throw std::invalid_argument("h_poly needs a non-empty index");
    static detail::KernelCache cache;
    return cache.get(m, k, [&] { return detail::h_poly_uncached(m, k); });
}

/// sum_{wt(e) = m, dep(e) = dep(k^dagger)} (k^dagger + e)^dagger, optionally pushed through I^t.
inline IndexSum ohno_rhs(const Index& k, int m, bool interpolated)
{
    if (!k.admissible())
        throw std::invalid_argument("ohno_rhs needs an admissible index, got " + k.str());
    const Index kd = dual(k);
    IndexSum out;
    for_each_composition(m, kd.depth(), [&](const std::vector<int>& e) { out.add(dual(oplus(kd, e)), RatPoly(1)); });
    return interpolated ? interpolate(out) : out;
}

/// sum_{wt(e) = m, dep(e) = dep(k)} coeff(k, e) * (k + e) for a rational weight function.
template <typename Weight>
IndexSum weighted_shift_sum(const Index& k, int m, Weight&& weight)
{
    IndexSum out;
    for_each_composition(m, k.depth(), [&](const std::vector<int>& e) { out.add(oplus(k, e), RatPoly(weight(k, e))); });
    return out;
}

} // namespace imzv

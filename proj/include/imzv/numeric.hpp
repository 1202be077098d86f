#pragma once

// Truncated real multiple zeta values. The truncation tail is estimated by the
// heuristic C (ln N)^{r-1} / N^{k_r - 1} with C = 2; it sizes tolerances, it is
// not a rigorous bound.

#include "imzv/index.hpp"
#include "imzv/index_sum.hpp"
#include "imzv/kernels.hpp"
#include "imzv/verdict.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace imzv {

struct NumericValue
{
    long double value = 0;
    long double err = 0;
};

inline constexpr long double tail_constant = 2.0L;

inline long double tail_estimate(const Index& k, std::int64_t n)
{
    const long double ln = std::log(static_cast<long double>(n));
    return tail_constant * std::pow(ln, k.depth() - 1) / std::pow(static_cast<long double>(n), k.back() - 1);
}

namespace detail {

// Running sum with optional Kahan compensation.
class Accumulator
{
public:
    explicit Accumulator(bool compensated)
        : compensated_(compensated)
    {
    }

    void add(long double v)
    {
        if (!compensated_) {
            sum_ += v;
            return;
        }
        const long double y = v - carry_;
        const long double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }

    long double value() const noexcept { return sum_; }

private:
    bool compensated_;
    long double sum_ = 0;
    long double carry_ = 0;
};

inline long double inv_pow(long double inv_n, int k)
{
    long double r = 1;
    for (int i = 0; i < k; ++i)
        r *= inv_n;
    return r;
}

// Nested sum over 1 <= n_1 < ... < n_r <= N (weak inequalities when star).
inline long double truncated_sum(const Index& k, std::int64_t n_max, bool star, bool compensated)
{
    const auto n = static_cast<std::size_t>(n_max);
    std::vector<long double> chain(n + 1, 0.0L);
    for (std::size_t i = 1; i <= n; ++i)
        chain[i] = inv_pow(1.0L / static_cast<long double>(i), k[0]);
    for (int j = 1; j < k.depth(); ++j) {
        Accumulator prefix(compensated);
        for (std::size_t i = 1; i <= n; ++i) {
            const long double below = chain[i];
            if (star)
                prefix.add(below);
            chain[i] = inv_pow(1.0L / static_cast<long double>(i), k[j]) * prefix.value();
            if (!star)
                prefix.add(below);
        }
    }
    Accumulator total(compensated);
    for (std::size_t i = n; i >= 1; --i)
        total.add(chain[i]);
    return total.value();
}

class MzvCache
{
public:
    NumericValue get(const Index& k, std::int64_t n, bool compensated)
    {
        const auto key = std::make_tuple(k, n, compensated);
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(key); it != values_.end())
                return it->second;
        }
        const NumericValue v{truncated_sum(k, n, false, compensated), tail_estimate(k, n)};
        std::unique_lock lock(mutex_);
        values_.emplace(key, v);
        return v;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::tuple<Index, std::int64_t, bool>, NumericValue> values_;
};

inline MzvCache& mzv_cache()
{
    static MzvCache cache;
    return cache;
}

inline void require_admissible(const Index& k, const char* what)
{
    if (k.empty() || !k.admissible())
        throw std::invalid_argument(std::string(what) + ": divergent or empty index " + k.str());
}

} // namespace detail

/// zeta(k) truncated at n_r <= n_max, memoized per (k, n_max).
inline NumericValue mzv_numeric(const Index& k, std::int64_t n_max, bool compensated = false)
{
    detail::require_admissible(k, "mzv_numeric");
    if (n_max < 10)
        throw std::invalid_argument("mzv_numeric needs N >= 10");
    return detail::mzv_cache().get(k, n_max, compensated);
}

/// zeta*(k) truncated at n_r <= n_max, summed directly over weak chains.
inline NumericValue mzsv_numeric(const Index& k, std::int64_t n_max, bool compensated = false)
{
    detail::require_admissible(k, "mzsv_numeric");
    if (n_max < 10)
        throw std::invalid_argument("mzsv_numeric needs N >= 10");
    // the star tail is dominated by the depth-r strict tail times 2^{r-1} merge patterns
    return {detail::truncated_sum(k, n_max, true, compensated),
            std::ldexp(tail_estimate(k, n_max), k.depth() - 1)};
}

/// sum coeff(t_value) * zeta(index); the empty index counts as 1.
inline NumericValue eval_indexsum_numeric(const IndexSum& s, const Rat& t_value, std::int64_t n_max)
{
    NumericValue out;
    for (const auto& [k, c] : s) {
        const long double w = c(t_value).convert_to<long double>();
        if (w == 0)
            continue;
        if (k.empty()) {
            out.value += w;
            continue;
        }
        const NumericValue z = mzv_numeric(k, n_max);
        out.value += w * z.value;
        out.err += std::fabs(w) * z.err;
    }
    return out;
}

inline bool within(const NumericValue& a, const NumericValue& b, long double tol)
{
    return std::fabs(a.value - b.value) <= tol + a.err + b.err;
}

namespace detail {

inline Json numeric_json(const NumericValue& v) { return Json{{"value", static_cast<double>(v.value)}, {"err", static_cast<double>(v.err)}}; }

inline Verdict compare_numeric(std::string claim, const NumericValue& lhs, const NumericValue& rhs, long double tol)
{
    Verdict v{std::move(claim), within(lhs, rhs, tol), nullptr};
    if (!v.pass)
        v.counterexample = Json{{"lhs", numeric_json(lhs)}, {"rhs", numeric_json(rhs)}, {"tol", static_cast<double>(tol)}};
    return v;
}

} // namespace detail

/// zeta(I^t(g_m(k; t))) against zeta(I^t(dual-side sum)) at t = t_value.
inline Verdict check_ohno_numeric(const Index& k, int m, const Rat& t_value, std::int64_t n_max, long double tol)
{
    detail::require_admissible(k, "check_ohno_numeric");
    return detail::compare_numeric("ohno-numeric", eval_indexsum_numeric(G_poly(m, k), t_value, n_max),
                                   eval_indexsum_numeric(ohno_rhs(k, m, true), t_value, n_max), tol);
}

/// sum over admissible weight-k depth-r indices of zeta^t against
/// {sum_{j<r} binom(k-1, j) t^j (1-t)^{r-1-j}} zeta(k).
inline Verdict check_sum_formula_numeric(int k, int r, const Rat& t_value, std::int64_t n_max, long double tol)
{
    if (!(k > r && r >= 1))
        throw std::invalid_argument("sum formula needs k > r >= 1");
    IndexSum lhs;
    for (const auto& idx : admissible_indices(k, r))
        lhs += interpolate(idx);
    RatPoly coeff;
    for (int j = 0; j <= r - 1; ++j)
        coeff += RatPoly(Rat(binom(k - 1, j))) * detail::t_pow(j) * detail::one_minus_t_pow(r - 1 - j);
    return detail::compare_numeric("sum-formula-numeric", eval_indexsum_numeric(lhs, t_value, n_max),
                                   eval_indexsum_numeric(IndexSum(Index{k}, coeff), t_value, n_max), tol);
}

/// zeta(I^1(k)) against the directly truncated star sum.
inline Verdict star_oracle_numeric(const Index& k, std::int64_t n_max, long double tol)
{
    detail::require_admissible(k, "star_oracle_numeric");
    return detail::compare_numeric("star-oracle-numeric", eval_indexsum_numeric(interpolate(k), 1, n_max),
                                   mzsv_numeric(k, n_max), tol);
}

} // namespace imzv

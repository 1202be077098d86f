#pragma once

#include "imzv/index.hpp"
#include "imzv/polynomial.hpp"

#include <map>
#include <ostream>
#include <string>

namespace imzv {

/// Finite Q[t]-linear combination of indices. Zero coefficients are never stored,
/// so equality of two sums is plain map equality.
class IndexSum
{
public:
    using Map = std::map<Index, RatPoly>;

    IndexSum() = default;

    /// coeff * k
    IndexSum(Index k, RatPoly coeff = RatPoly(1)) // NOLINT(google-explicit-constructor)
    {
        add(std::move(k), std::move(coeff));
    }

    void add(const Index& k, const RatPoly& coeff)
    {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    RatPoly coeff(const Index& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? RatPoly() : it->second;
    }

    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    IndexSum& operator+=(const IndexSum& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }

    IndexSum& operator-=(const IndexSum& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }

    friend IndexSum operator+(IndexSum a, const IndexSum& b) { return a += b; }
    friend IndexSum operator-(IndexSum a, const IndexSum& b) { return a -= b; }

    friend IndexSum operator*(const RatPoly& c, const IndexSum& s)
    {
        IndexSum out;
        if (c.is_zero())
            return out;
        for (const auto& [k, v] : s.terms_)
            out.add(k, c * v);
        return out;
    }

    friend bool operator==(const IndexSum&, const IndexSum&) = default;

    /// Applies an index map linearly.
    template <typename F>
    IndexSum map_indices(F&& f) const
    {
        IndexSum out;
        for (const auto& [k, c] : terms_)
            out.add(f(k), c);
        return out;
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty())
                s += " + ";
            s += "[" + c.str() + "]" + k.str();
        }
        return s;
    }

private:
    Map terms_;
};

inline std::ostream& operator<<(std::ostream& os, const IndexSum& s) { return os << s.str(); }

inline IndexSum up(const IndexSum& s) { return s.map_indices([](const Index& k) { return arrow_up(k); }); }
inline IndexSum right(const IndexSum& s) { return s.map_indices([](const Index& k) { return arrow_right(k); }); }
inline IndexSum down(const IndexSum& s) { return s.map_indices([](const Index& k) { return arrow_down(k); }); }

/// Substitutes t = v in every coefficient.
inline IndexSum specialize(const IndexSum& s, const Rat& v)
{
    IndexSum out;
    for (const auto& [k, c] : s)
        out.add(k, RatPoly(c(v)));
    return out;
}

namespace detail {

// Calls visit(index, number of '+') for every comma/plus pattern of k.
template <typename Visit>
void for_each_merge(const Index& k, Visit&& visit)
{
    if (k.depth() <= 1) {
        visit(k, 0);
        return;
    }
    const int gaps = k.depth() - 1;
    std::vector<int> parts;
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        parts.assign(1, k[0]);
        int plus = 0;
        for (int g = 0; g < gaps; ++g) {
            if (mask & (1u << g)) {
                parts.back() += k[static_cast<std::size_t>(g) + 1];
                ++plus;
            } else {
                parts.push_back(k[static_cast<std::size_t>(g) + 1]);
            }
        }
        visit(Index(parts), plus);
    }
}

inline RatPoly times_t_pow(const RatPoly& c, int n)
{
    if (n == 0 || c.is_zero())
        return c;
    std::vector<Rat> v(static_cast<std::size_t>(n));
    v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
    return RatPoly(std::move(v));
}

} // namespace detail

/// I^t on a single index: every choice of ',' or '+' between neighbours,
/// weighted by t^(number of '+').
inline IndexSum interpolate(const Index& k)
{
    IndexSum out;
    detail::for_each_merge(k, [&](const Index& l, int plus) { out.add(l, RatPoly::monomial(1, plus)); });
    return out;
}

/// I^t extended Q[t]-linearly.
inline IndexSum interpolate(const IndexSum& s)
{
    IndexSum out;
    for (const auto& [k, c] : s)
        detail::for_each_merge(k, [&](const Index& l, int plus) { out.add(l, detail::times_t_pow(c, plus)); });
    return out;
}

} // namespace imzv

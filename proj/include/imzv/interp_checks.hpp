#pragma once

// Exact cross-checks of the interpolation kernels: the up/right recurrences of
// g, G and h, the four-term f identity, G = h, the t = 0 / t = 1 specializations
// and the closed forms in depth one and two.

#include "imzv/index_sum.hpp"
#include "imzv/kernels.hpp"
#include "imzv/verdict.hpp"

#include <functional>
#include <vector>

namespace imzv {

namespace detail {

using Kernel = std::function<IndexSum(int, const Index&)>;

inline void append_recurrences(std::vector<Verdict>& out, const std::string& name, const Kernel& f,
                               bool interpolated, const Index& k, int m)
{
    const RatPoly t = RatPoly::t();
    const RatPoly omt = one_minus_t();
    const Index ku = arrow_up(k);
    const Index kr = arrow_right(k);

    if (k == Index{1})
        out.push_back(compare(name + "-unit", f(m, k), IndexSum(Index{1 + m})));

    if (m >= 1)
        out.push_back(compare(name + "-up", f(m, ku), up(f(m, k)) + t * up(f(m - 1, ku))));

    // Under I^t the (1-t) in front of the up-term becomes 1, since I^t(w_right) = I^t(w)_right + t I^t(w)_up.
    const RatPoly up_coeff = interpolated ? RatPoly(1) : omt;
    const IndexSum fk = f(m, k);
    out.push_back(compare(name + "-right", f(m, kr),
                          up_coeff * up(fk) + right(fk) - omt * f(m, ku) + omt * f(m - 1, arrow_up(kr))));
}

} // namespace detail

/// Up/right recurrences for g, G and h at (k, m); the unit recurrence is included
/// when k = (1). The up recurrence needs m >= 1 and is skipped otherwise.
inline std::vector<Verdict> recurrence_checks(const Index& k, int m)
{
    if (k.empty() || m < 0)
        throw std::invalid_argument("recurrence_checks needs a non-empty index and m >= 0");
    std::vector<Verdict> out;
    detail::append_recurrences(out, "g", g_poly, false, k, m);
    detail::append_recurrences(out, "G", G_poly, true, k, m);
    detail::append_recurrences(out, "h", h_poly, true, k, m);
    return out;
}

/// f_{i+1}(k+1, e) - (1-t) f_{i+1}(k+2, e) + f_i(k, e) - f_i(k+1, e) == 0
inline Verdict f_four_term_check(int k, int e, int i)
{
    const RatPoly lhs = f_coeff(i + 1, k + 1, e) - one_minus_t() * f_coeff(i + 1, k + 2, e) + f_coeff(i, k, e) -
                        f_coeff(i, k + 1, e);
    return compare("f-four-term", lhs, RatPoly());
}

inline Verdict gh_equality_check(const Index& k, int m)
{
    return compare("G-equals-h", G_poly(m, k), h_poly(m, k));
}

/// Every index in g_m(k) has weight wt(k)+m and depth <= dep(k); every index of the
/// dual-side sum has weight wt(k)+m.
inline Verdict support_shape_check(const Index& k, int m)
{
    Verdict v{"support-shape", true, nullptr};
    Json bad = Json::array();
    for (const auto& [l, c] : g_poly(m, k))
        if (l.weight() != k.weight() + m || l.depth() > k.depth())
            bad.push_back(to_json(l));
    if (k.admissible())
        for (const auto& [l, c] : ohno_rhs(k, m, false))
            if (l.weight() != k.weight() + m)
                bad.push_back(to_json(l));
    if (!bad.empty()) {
        v.pass = false;
        v.counterexample = Json{{"bad_support", bad}};
    }
    return v;
}

/// g_m(k; 0) is the plain shift sum and g_m(k; 1) the c1-weighted one.
inline std::vector<Verdict> g_specialize_checks(const Index& k, int m)
{
    auto plain = weighted_shift_sum(k, m, [](const Index&, std::span<const int>) { return Rat(1); });
    auto star = weighted_shift_sum(k, m, [](const Index& kk, std::span<const int> e) { return c1_coeff(kk, e); });
    const IndexSum g = g_poly(m, k);
    return {compare("specialize-t0", specialize(g, 0), plain), compare("specialize-t1", specialize(g, 1), star)};
}

/// G_m((k)) = f_0(k+1, m) (k+m).
inline Verdict dep1_closed_form_check(int k, int m)
{
    return compare("dep1-closed-form", G_poly(m, Index{k}), IndexSum(Index{k + m}, f_coeff(0, k + 1, m)));
}

/// G_m((k1,k2)) = -t(1-t) f_1(k1+k2+1, m)(k1+k2+m)
///              + sum_{e1+e2=m} f_0(k1+1, e1) f_0(k2, e2) {(k1+e1, k2+e2) + t (k1+k2+m)}.
inline Verdict dep2_closed_form_check(int k1, int k2, int m)
{
    const RatPoly t = RatPoly::t();
    IndexSum rhs(Index{k1 + k2 + m}, -(t * one_minus_t()) * f_coeff(1, k1 + k2 + 1, m));
    for (int e1 = 0; e1 <= m; ++e1) {
        const int e2 = m - e1;
        const RatPoly c = f_coeff(0, k1 + 1, e1) * f_coeff(0, k2, e2);
        rhs.add(Index{k1 + e1, k2 + e2}, c);
        rhs.add(Index{k1 + k2 + m}, c * t);
    }
    return compare("dep2-closed-form", G_poly(m, Index{k1, k2}), rhs);
}

} // namespace imzv
